// Copyright 2026 The qtomo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qtomo/pauli.h"

namespace qtomo {

struct MeasurementRecord {
    PauliString op;
    /// Averaged expectation value. Noise may push it outside [-1, 1]; never clipped.
    double mean;
    std::uint64_t shots;
};

/// An informationally complete set of Pauli expectation values: every one of the
/// 4^n strings exactly once, with the all-identity mean fixed to 1.
///
/// Records are stored in `PauliString::index()` order regardless of the order
/// they were supplied in.
class MeasurementSet {
   public:
    /// Validates completeness, uniqueness, shots >= 1, identity mean == 1 and v > 0.
    /// Throws DataError naming the first missing or duplicated label.
    MeasurementSet(std::size_t num_qubits, double variance, std::vector<MeasurementRecord> records);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return std::size_t{1} << num_qubits_; }
    double variance() const { return variance_; }
    const std::vector<MeasurementRecord> &records() const { return records_; }
    const MeasurementRecord &record(std::uint64_t index) const { return records_[index]; }

   private:
    std::size_t num_qubits_;
    double variance_;
    std::vector<MeasurementRecord> records_;
};

inline constexpr std::size_t kMaxQubits = 12;

/// Reads the line-oriented measurement format:
///
///     qubits <n> variance <v>
///     <label> <mean> <shots>
///     ...
///
/// Lines starting with '#' and blank lines are ignored. Malformed lines raise
/// DataError with the 1-based line number.
MeasurementSet read_measurements(std::istream &in);
MeasurementSet read_measurements_file(const std::string &path);

/// Writes records in index order with 17 significant digits.
void write_measurements(std::ostream &out, const MeasurementSet &m);
void write_measurements_file(const std::string &path, const MeasurementSet &m);

}  // namespace qtomo
