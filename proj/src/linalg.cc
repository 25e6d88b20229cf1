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

#include "qtomo/linalg.h"

#include <algorithm>
#include <cmath>

namespace qtomo {

double max_hermitian_residual(const Matrix &m) {
    double worst = 0.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = j; i < m.rows(); ++i) {
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    return worst;
}

void symmetrize(Matrix &m) {
    Matrix adj = m.adjoint();
    m = (m + adj) * 0.5;
}

int qubits_for_dimension(Eigen::Index d) {
    if (d < 1 || (d & (d - 1)) != 0) {
        return -1;
    }
    int n = 0;
    while ((Eigen::Index{1} << n) < d) {
        ++n;
    }
    return n;
}

}  // namespace qtomo
