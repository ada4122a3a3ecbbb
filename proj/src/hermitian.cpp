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

#include "qregion/hermitian.hpp"

#include <stdexcept>
#include <string>

namespace qregion {

double hermiticity_residual(const Matrix& a) {
    if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& a, double tol) {
    return a.rows() == a.cols() && hermiticity_residual(a) <= tol;
}

void require_hermitian(const Matrix& a, double tol, const char* what) {
    if (a.rows() != a.cols())
        throw std::invalid_argument(std::string(what) + " is not square");
    if (hermiticity_residual(a) > tol)
        throw std::invalid_argument(std::string(what) + " is not Hermitian within tolerance");
}

double hs_inner(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
        throw std::invalid_argument("hs_inner: dimension mismatch");
    // Tr[a b] = sum_ij a_ij b_ji; for Hermitian b this is the Frobenius product.
    return a.cwiseProduct(b.transpose()).sum().real();
}

double hs_norm(const Matrix& a) {
    double v = hs_inner(a, a);
    return v > 0.0 ? std::sqrt(v) : 0.0;
}

Matrix SpectralDecomposition::reconstruct() const {
    return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
}

SpectralDecomposition eig_hermitian(const Matrix& a, double tol_herm) {
    require_hermitian(a, tol_herm);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eig_hermitian: eigensolver failed to converge");
    const int d = static_cast<int>(a.rows());
    SpectralDecomposition out;
    out.eigenvalues = Vector(d);
    out.eigenvectors = Matrix(d, d);
    // Eigen sorts ascending; flip to descending.
    for (int i = 0; i < d; ++i) {
        out.eigenvalues(i) = solver.eigenvalues()(d - 1 - i);
        out.eigenvectors.col(i) = solver.eigenvectors().col(d - 1 - i);
    }
    return out;
}

double min_eigenvalue(const Matrix& a, double tol_herm) {
    auto dec = eig_hermitian(a, tol_herm);
    return dec.eigenvalues(dec.eigenvalues.size() - 1);
}

Matrix identity_operator(int d) { return Matrix::Identity(d, d); }

}  // namespace qregion
