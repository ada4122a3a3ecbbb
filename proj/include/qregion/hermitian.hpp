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
#include <complex>

#include "qregion/tolerances.hpp"

namespace qregion {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;   // Hermitian operators live here.
using RealMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Residual ||a - a^dagger||_inf, zero for exactly Hermitian input.
double hermiticity_residual(const Matrix& a);

bool is_hermitian(const Matrix& a, double tol = Tolerances{}.herm);

/// Throws std::invalid_argument when `a` is not square and Hermitian within tol.
void require_hermitian(const Matrix& a, double tol = Tolerances{}.herm,
                       const char* what = "operator");

/// Hilbert-Schmidt inner product Tr[a b] of two Hermitian operators.
/// Symmetric in its arguments and real; throws on dimension mismatch.
double hs_inner(const Matrix& a, const Matrix& b);

/// Frobenius norm induced by hs_inner.
double hs_norm(const Matrix& a);

/// Eigen-decomposition of a Hermitian operator with eigenvalues sorted
/// in descending order. V * diag(lambda) * V^dagger reconstructs the input.
struct SpectralDecomposition {
    Vector eigenvalues;   // descending
    Matrix eigenvectors;  // unitary, columns aligned with eigenvalues

    Matrix reconstruct() const;
};

SpectralDecomposition eig_hermitian(const Matrix& a,
                                    double tol_herm = Tolerances{}.herm);

/// Smallest eigenvalue of a Hermitian operator.
double min_eigenvalue(const Matrix& a, double tol_herm = Tolerances{}.herm);

Matrix identity_operator(int d);

}  // namespace qregion
