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

#include "qregion/pinv.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qregion {

double PinvFactorization::quadratic_form(const Eigen::VectorXd& x) const {
    if (rank == 0) return 0.0;
    return x.dot(pinv * x);
}

double PinvFactorization::off_range_norm(const Eigen::VectorXd& x) const {
    if (rank == 0) return x.norm();
    return (x - range_projector * x).norm();
}

PinvFactorization pinv_gram(const Eigen::MatrixXd& m, double rel_tol,
                            double tol_sym) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("pinv_gram: matrix is not square");
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol_sym)
        throw std::invalid_argument("pinv_gram: matrix is not symmetric within tolerance");
    if (rel_tol <= 0.0)
        throw std::invalid_argument("pinv_gram: rel_tol must be positive");

    const int n = static_cast<int>(m.rows());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        0.5 * (m + m.transpose()));
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("pinv_gram: eigensolver failed to converge");

    const Eigen::VectorXd& evals = solver.eigenvalues();  // ascending
    const double lambda_max = evals.size() ? std::max(evals(n - 1), 0.0) : 0.0;
    const double cutoff = rel_tol * lambda_max;
    if (evals(0) < -std::max(cutoff, rel_tol))
        throw std::invalid_argument(
            "pinv_gram: significantly negative eigenvalue; Gram matrices must be PSD");

    PinvFactorization out;
    std::vector<int> keep;
    for (int i = n - 1; i >= 0; --i)
        if (evals(i) > cutoff && evals(i) > 0.0) keep.push_back(i);

    out.rank = static_cast<int>(keep.size());
    out.positive_eigenvalues = Eigen::VectorXd(out.rank);
    out.range_basis = Eigen::MatrixXd(n, out.rank);
    for (int j = 0; j < out.rank; ++j) {
        out.positive_eigenvalues(j) = evals(keep[j]);
        out.range_basis.col(j) = solver.eigenvectors().col(keep[j]);
    }
    out.pinv = Eigen::MatrixXd::Zero(n, n);
    out.range_projector = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < out.rank; ++j) {
        const Eigen::VectorXd v = out.range_basis.col(j);
        out.pinv.noalias() += (1.0 / out.positive_eigenvalues(j)) * v * v.transpose();
        out.range_projector.noalias() += v * v.transpose();
    }
    return out;
}

Eigen::MatrixXd sqrt_psd(const Eigen::MatrixXd& m, double tol_psd) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("sqrt_psd: matrix is not square");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        0.5 * (m + m.transpose()));
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("sqrt_psd: eigensolver failed to converge");
    Eigen::VectorXd evals = solver.eigenvalues();
    for (int i = 0; i < evals.size(); ++i) {
        if (evals(i) < -tol_psd)
            throw std::invalid_argument("sqrt_psd: matrix has a negative eigenvalue");
        evals(i) = evals(i) > 0.0 ? std::sqrt(evals(i)) : 0.0;
    }
    return solver.eigenvectors() * evals.asDiagonal() *
           solver.eigenvectors().transpose();
}

}  // namespace qregion
