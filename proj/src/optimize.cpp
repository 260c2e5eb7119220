// Copyright 2026 The spatial-lgi Authors
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

#include "slgi/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "slgi/errors.hpp"

namespace slgi {

SymmetricEigen3 eigen_symmetric3(const Matrix3 &m) {
    Matrix3 a{};
    for (int p = 0; p < 3; p++) {
        for (int q = p; q < 3; q++) {
            a[p][q] = a[q][p] = m[p][q];
        }
    }
    Matrix3 v{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

    double scale = 0;
    for (const auto &row : a) {
        for (double x : row) {
            scale = std::max(scale, std::abs(x));
        }
    }
    for (int sweep = 0; sweep < 64 && scale > 0; sweep++) {
        double off = std::abs(a[0][1]) + std::abs(a[0][2]) + std::abs(a[1][2]);
        if (off <= 1e-300 || off <= 1e-17 * scale) {
            break;
        }
        for (int p = 0; p < 2; p++) {
            for (int q = p + 1; q < 3; q++) {
                if (a[p][q] == 0) {
                    continue;
                }
                // Rotation P with P_pp = P_qq = c, P_pq = s, P_qp = -s zeroes a[p][q] in P^T a P.
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (int k = 0; k < 3; k++) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < 3; k++) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = a[q][p] = 0;
                for (int k = 0; k < 3; k++) {
                    double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a[i][i] < a[j][j]; });
    SymmetricEigen3 out{};
    for (int k = 0; k < 3; k++) {
        out.values[k] = a[order[k]][order[k]];
        for (int r = 0; r < 3; r++) {
            out.vectors[k][r] = v[r][order[k]];
        }
    }
    return out;
}

MeasurementOptimum optimize_measurement(const KMatrix &kmat) {
    if (!kmat.symmetrized) {
        throw ConfigError("optimize_measurement needs a symmetrized K matrix");
    }
    auto eig = eigen_symmetric3(kmat.entries);
    const double top = eig.values[2];
    const bool degenerate = top - eig.values[1] <= 1e-10 * std::max(1.0, std::abs(top));

    auto vec = eig.vectors[2];
    for (double c : vec) {
        if (std::abs(c) > 1e-12) {
            if (c < 0) {
                for (double &x : vec) {
                    x = -x;
                }
            }
            break;
        }
    }
    return {top, PauliAxis(vec), degenerate};
}

}  // namespace slgi
