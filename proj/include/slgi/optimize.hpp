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

#pragma once

#include <array>

#include "slgi/correlator.hpp"
#include "slgi/pauli.hpp"

namespace slgi {

struct SymmetricEigen3 {
    /// Ascending.
    std::array<double, 3> values;
    /// vectors[k] is the unit eigenvector for values[k].
    std::array<std::array<double, 3>, 3> vectors;
};

/// Cyclic Jacobi eigensolver for a real symmetric 3x3 matrix. Only the upper
/// triangle is read.
SymmetricEigen3 eigen_symmetric3(const Matrix3 &m);

struct MeasurementOptimum {
    double lambda_max;
    PauliAxis axis;
    /// Top eigenvalue has multiplicity > 1; `axis` is then one deterministic
    /// member of the top eigenspace.
    bool degenerate;
};

/// Largest eigenvalue of the symmetrized K matrix and its eigenvector, with
/// the sign chosen so the first non-negligible component is positive.
/// ConfigError when kmat has not been symmetrized.
MeasurementOptimum optimize_measurement(const KMatrix &kmat);

}  // namespace slgi
