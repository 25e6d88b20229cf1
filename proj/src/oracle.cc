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

#include "qtomo/oracle.h"

#include <cmath>
#include <limits>

#include "qtomo/errors.h"

namespace qtomo {

ProjectionResult oracle_subset_search(std::span<const double> mu) {
    const std::size_t d = mu.size();
    if (d == 0) {
        throw DataError("cannot project an empty spectrum");
    }
    if (d > kOracleMaxDimension) {
        throw UsageError("subset oracle limited to d <= " + std::to_string(kOracleMaxDimension) + ", got " +
                         std::to_string(d));
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        if (j > 0 && mu[j] > mu[j - 1]) {
            throw DataError("spectrum is not sorted nonincreasing at index " + std::to_string(j));
        }
        sum += mu[j];
    }
    if (std::abs(sum - 1.0) > kStrictSumTolerance) {
        throw DataError("spectrum does not sum to 1");
    }

    double best = std::numeric_limits<double>::infinity();
    std::uint32_t best_mask = 0;
    double best_shift = 0.0;
    const std::uint32_t full = (std::uint32_t{1} << d) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        double in_sum = 0.0;
        int size = 0;
        for (std::size_t j = 0; j < d; ++j) {
            if (mask >> j & 1) {
                in_sum += mu[j];
                ++size;
            }
        }
        const double shift = (1.0 - in_sum) / size;
        bool feasible = true;
        double dist = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            if (mask >> j & 1) {
                if (mu[j] + shift < 0.0) {
                    feasible = false;
                    break;
                }
                dist += shift * shift;
            } else {
                dist += mu[j] * mu[j];
            }
        }
        if (feasible && dist < best) {
            best = dist;
            best_mask = mask;
            best_shift = shift;
        }
    }

    ProjectionResult r;
    r.lambdas.assign(d, 0.0);
    for (std::size_t j = 0; j < d; ++j) {
        if (best_mask >> j & 1) {
            r.lambdas[j] = mu[j] + best_shift;
            ++r.support;
        }
    }
    r.shift = best_shift;
    r.distance_sq = best;
    return r;
}

}  // namespace qtomo
