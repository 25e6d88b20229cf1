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

#include "qtomo/measurements.h"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "qtomo/errors.h"
#include "text_format.h"

namespace qtomo {

MeasurementSet::MeasurementSet(std::size_t num_qubits, double variance, std::vector<MeasurementRecord> records)
    : num_qubits_(num_qubits), variance_(variance) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw DataError("qubit count must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                        std::to_string(num_qubits));
    }
    if (!(variance > 0.0) || !std::isfinite(variance)) {
        throw DataError("variance must be positive and finite");
    }
    const std::uint64_t count = std::uint64_t{1} << (2 * num_qubits);
    std::vector<std::optional<MeasurementRecord>> slots(count);
    for (auto &rec : records) {
        if (rec.op.num_qubits() != num_qubits) {
            throw DataError("record " + rec.op.str() + " acts on " + std::to_string(rec.op.num_qubits()) +
                            " qubits, expected " + std::to_string(num_qubits));
        }
        if (rec.shots < 1) {
            throw DataError("record " + rec.op.str() + " has zero shots");
        }
        if (!std::isfinite(rec.mean)) {
            throw DataError("record " + rec.op.str() + " has a non-finite mean");
        }
        auto &slot = slots[rec.op.index()];
        if (slot) {
            throw DataError("duplicate Pauli label " + rec.op.str());
        }
        slot = std::move(rec);
    }
    records_.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        if (!slots[idx]) {
            throw DataError("missing Pauli label " + PauliString::from_index(num_qubits, idx).str());
        }
        records_.push_back(std::move(*slots[idx]));
    }
    if (records_.front().mean != 1.0) {
        throw DataError("identity record " + records_.front().op.str() + " must have mean exactly 1, got " +
                        internal::format_double(records_.front().mean, 17));
    }
}

MeasurementSet read_measurements(std::istream &in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> qubits;
    double variance = 0.0;
    std::vector<MeasurementRecord> records;
    auto fail = [&](const std::string &why) -> DataError {
        return DataError("line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (internal::is_skippable(line)) {
            continue;
        }
        auto tok = internal::split_ws(line);
        if (!qubits) {
            if (tok.size() != 4 || tok[0] != "qubits" || tok[2] != "variance") {
                throw fail("expected header 'qubits <n> variance <v>'");
            }
            auto n = internal::parse_uint(tok[1]);
            auto v = internal::parse_double(tok[3]);
            if (!n || !v) {
                throw fail("malformed header values");
            }
            if (*n < 1 || *n > kMaxQubits) {
                throw fail("qubit count out of range [1, " + std::to_string(kMaxQubits) + "]");
            }
            qubits = static_cast<std::size_t>(*n);
            variance = *v;
            continue;
        }
        if (tok.size() != 3) {
            throw fail("expected '<label> <mean> <shots>'");
        }
        auto mean = internal::parse_double(tok[1]);
        auto shots = internal::parse_uint(tok[2]);
        if (!mean) {
            throw fail("malformed mean '" + std::string(tok[1]) + "'");
        }
        if (!shots || *shots < 1) {
            throw fail("shots must be a positive integer, got '" + std::string(tok[2]) + "'");
        }
        try {
            records.push_back({PauliString::parse(tok[0]), *mean, *shots});
        } catch (const DataError &e) {
            throw fail(e.what());
        }
    }
    if (!qubits) {
        throw DataError("measurement file has no header");
    }
    return MeasurementSet(*qubits, variance, std::move(records));
}

MeasurementSet read_measurements_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open measurement file '" + path + "'");
    }
    return read_measurements(in);
}

void write_measurements(std::ostream &out, const MeasurementSet &m) {
    out << "qubits " << m.num_qubits() << " variance " << internal::format_double(m.variance(), 17) << '\n';
    for (const auto &rec : m.records()) {
        out << rec.op.str() << ' ' << internal::format_double(rec.mean, 17) << ' ' << rec.shots << '\n';
    }
}

void write_measurements_file(const std::string &path, const MeasurementSet &m) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write measurement file '" + path + "'");
    }
    write_measurements(out, m);
    if (!out) {
        throw IoError("error while writing '" + path + "'");
    }
}

}  // namespace qtomo
