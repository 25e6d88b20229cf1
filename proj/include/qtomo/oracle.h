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

#include <span>

#include "qtomo/spectral.h"

namespace qtomo {

inline constexpr std::size_t kOracleMaxDimension = 20;

/// Exhaustive reference for project_to_simplex: tries every nonempty index
/// subset as the support, keeps feasible ones, and returns the closest.
/// Exponential cost; intended for tests and cross-checks only.
///
/// Same preconditions as project_to_simplex, plus d <= 20 (UsageError).
ProjectionResult oracle_subset_search(std::span<const double> mu);

}  // namespace qtomo
