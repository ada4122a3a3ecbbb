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

#include "qregion/sampling.hpp"

#include <stdexcept>

namespace qregion {

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over the combined word.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Matrix ginibre(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix g(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    return g;
}

Matrix sample_haar_unitary(int d, std::mt19937_64& rng) {
    if (d < 1) throw std::invalid_argument("sample_haar_unitary: d must be positive");
    Matrix g = ginibre(d, d, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phases so the distribution is exactly Haar.
    for (int j = 0; j < d; ++j) {
        Complex rj = r(j, j);
        Complex phase = std::abs(rj) > 0.0 ? rj / std::abs(rj) : Complex(1.0, 0.0);
        q.col(j) *= phase;
    }
    return q;
}

Matrix sample_haar_pure(int d, std::mt19937_64& rng) {
    if (d < 1) throw std::invalid_argument("sample_haar_pure: d must be positive");
    Eigen::VectorXcd psi = ginibre(d, 1, rng);
    const double nrm = psi.norm();
    if (nrm == 0.0) return sample_haar_pure(d, rng);
    psi /= nrm;
    return psi * psi.adjoint();
}

Matrix sample_mixed(int d, int rank, std::mt19937_64& rng) {
    if (rank < 1 || rank > d)
        throw std::invalid_argument("sample_mixed: rank must be in [1, d]");
    Matrix g = ginibre(d, rank, rng);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return 0.5 * (rho + rho.adjoint());
}

Matrix sample_projector(int d, int trace_k, std::mt19937_64& rng) {
    if (trace_k < 0 || trace_k > d)
        throw std::invalid_argument("sample_projector: trace must be in [0, d]");
    if (trace_k == 0) return Matrix::Zero(d, d);
    if (trace_k == d) return Matrix::Identity(d, d);
    Matrix u = sample_haar_unitary(d, rng);
    Matrix cols = u.leftCols(trace_k);
    return cols * cols.adjoint();
}

Matrix sample_random_effect(int d, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> trace_class(0, d);
    std::uniform_real_distribution<double> weight(0.0, 1.0);
    Matrix p1 = sample_projector(d, trace_class(rng), rng);
    Matrix p2 = sample_projector(d, trace_class(rng), rng);
    const double w = weight(rng);
    return w * p1 + (1.0 - w) * p2;
}

Vector gaussian_vector(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = normal(rng);
    return v;
}

Vector sample_direction(int n, std::mt19937_64& rng) {
    Vector v = gaussian_vector(n, rng);
    const double nrm = v.norm();
    if (nrm == 0.0) return sample_direction(n, rng);
    return v / nrm;
}

}  // namespace qregion
