// Copyright 2026 The qregion developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>

#include "qregion/tolerances.hpp"

namespace qregion {

/// Spectral Moore-Penrose factorization of a real symmetric PSD matrix.
/// Satisfies the four Penrose identities; `range_projector` is the
/// orthogonal projector onto the column space.
struct PinvFactorization {
    int rank = 0;
    Eigen::VectorXd positive_eigenvalues;  // descending, length == rank
    Eigen::MatrixXd range_basis;           // orthonormal columns, n x rank
    Eigen::MatrixXd pinv;                  // n x n
    Eigen::MatrixXd range_projector;       // n x n, idempotent symmetric

    /// Applies the pseudo-inverse quadratic form x^T M^+ x.
    double quadratic_form(const Eigen::VectorXd& x) const;

    /// Norm of the component of x outside the range.
    double off_range_norm(const Eigen::VectorXd& x) const;
};

/// Pseudo-inverts a symmetric PSD (Gram) matrix by spectral truncation:
/// eigenvalues below rel_tol * lambda_max count as zero. Eigenvalues more
/// negative than -rel_tol * lambda_max signal a corrupted Gram matrix and
/// throw std::invalid_argument, as does an asymmetric input.
PinvFactorization pinv_gram(const Eigen::MatrixXd& m, double rel_tol,
                            double tol_sym = Tolerances{}.herm);

/// Symmetric square root of a PSD matrix. Eigenvalues in [-tol_psd, 0)
/// are clamped to zero; anything below -tol_psd throws.
Eigen::MatrixXd sqrt_psd(const Eigen::MatrixXd& m,
                         double tol_psd = Tolerances{}.psd);

}  // namespace qregion
