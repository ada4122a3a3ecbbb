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

#include <doctest.h>

#include "qregion/ensemble.hpp"
#include "qregion/hermitian.hpp"
#include "qregion/pinv.hpp"
#include "qregion/sampling.hpp"

using namespace qregion;

namespace {

Matrix ket_bra(int d, int i) {
    Matrix m = Matrix::Zero(d, d);
    m(i, i) = 1.0;
    return m;
}

Eigen::MatrixXd random_psd(int n, int rank, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXd a(n, rank);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < rank; ++j) a(i, j) = normal(rng);
    return a * a.transpose();
}

// The trine covariance matrix, entered exactly as (1/9) I - (1/18)(J - I).
Eigen::MatrixXd trine_q() {
    Eigen::MatrixXd q = Eigen::MatrixXd::Constant(3, 3, -1.0 / 18.0);
    q.diagonal().setConstant(1.0 / 9.0);
    return q;
}

}  // namespace

TEST_CASE("hs_inner closed forms") {
    CHECK(hs_inner(identity_operator(2), identity_operator(2)) == doctest::Approx(2.0));
    CHECK(hs_inner(identity_operator(5), identity_operator(5)) == doctest::Approx(5.0));
    CHECK(hs_inner(ket_bra(2, 0), ket_bra(2, 1)) == doctest::Approx(0.0));

    // SIC condition at d = 2: Tr[pi_i pi_j] = (2 delta + 1)/12.
    Ensemble tetra = make_sic(2, EnsembleKind::Measurement);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const double expected = i == j ? 0.25 : 1.0 / 12.0;
            CHECK(hs_inner(tetra.elements[i], tetra.elements[j]) ==
                  doctest::Approx(expected).epsilon(1e-12));
        }

    // Symmetry on random Hermitian pairs.
    auto rng = make_rng(7);
    for (int it = 0; it < 10; ++it) {
        Matrix a = sample_mixed(4, 3, rng);
        Matrix b = sample_random_effect(4, rng);
        CHECK(hs_inner(a, b) == doctest::Approx(hs_inner(b, a)).epsilon(1e-13));
    }

    CHECK_THROWS_AS(hs_inner(identity_operator(2), identity_operator(3)),
                    std::invalid_argument);
}

TEST_CASE("eig_hermitian sorts descending and reconstructs") {
    auto id = eig_hermitian(identity_operator(2));
    CHECK(id.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(id.eigenvalues(1) == doctest::Approx(1.0));

    Matrix diag = Matrix::Zero(2, 2);
    diag(0, 0) = 3.0;
    diag(1, 1) = -1.0;
    auto dd = eig_hermitian(diag);
    CHECK(dd.eigenvalues(0) == doctest::Approx(3.0));
    CHECK(dd.eigenvalues(1) == doctest::Approx(-1.0));

    Matrix pauli_x(2, 2);
    pauli_x << 0.0, 1.0, 1.0, 0.0;
    auto px = eig_hermitian(pauli_x);
    CHECK(px.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(px.eigenvalues(1) == doctest::Approx(-1.0));

    auto rng = make_rng(11);
    for (int it = 0; it < 20; ++it) {
        Matrix a = sample_mixed(5, 4, rng);
        auto dec = eig_hermitian(a);
        CHECK((dec.reconstruct() - a).norm() <= 1e-9);
        CHECK((dec.eigenvectors.adjoint() * dec.eigenvectors -
               Matrix::Identity(5, 5))
                  .norm() <= 1e-9);
        for (int i = 0; i + 1 < 5; ++i)
            CHECK(dec.eigenvalues(i) >= dec.eigenvalues(i + 1));
    }

    Matrix bad(2, 2);
    bad << 0.0, 1.0, 2.0, 0.0;
    CHECK_THROWS_AS(eig_hermitian(bad), std::invalid_argument);
}

TEST_CASE("pinv_gram identity, zero, and trine") {
    const double rel = Tolerances{}.effective_rank_rel(3, 2);

    auto id = pinv_gram(Eigen::MatrixXd::Identity(4, 4), rel);
    CHECK(id.rank == 4);
    CHECK((id.pinv - Eigen::MatrixXd::Identity(4, 4)).norm() <= 1e-12);

    auto zero = pinv_gram(Eigen::MatrixXd::Zero(3, 3), rel);
    CHECK(zero.rank == 0);
    CHECK(zero.pinv.norm() == 0.0);

    auto trine = pinv_gram(trine_q(), rel);
    CHECK(trine.rank == 2);
    // Range is orthogonal to the all-ones vector.
    const Eigen::VectorXd u = Eigen::VectorXd::Ones(3);
    CHECK((trine.pinv * u).norm() <= 1e-12);
    CHECK((trine.range_projector * u).norm() <= 1e-12);
    // Spectral inversion: nonzero eigenvalue 1/6 inverts to 6.
    CHECK(trine.positive_eigenvalues(0) == doctest::Approx(1.0 / 6.0));
    CHECK((trine.pinv - 6.0 * trine.range_projector).norm() <= 1e-12);

    CHECK_THROWS_AS(pinv_gram(-Eigen::MatrixXd::Identity(3, 3), rel),
                    std::invalid_argument);
    Eigen::MatrixXd asym(2, 2);
    asym << 1.0, 0.5, -0.5, 1.0;
    CHECK_THROWS_AS(pinv_gram(asym, rel), std::invalid_argument);
}

TEST_CASE("pinv_gram Penrose identities and involution") {
    auto rng = make_rng(23);
    for (int it = 0; it < 25; ++it) {
        const int n = 2 + static_cast<int>(rng() % 11);  // up to 12
        const int rank = 1 + static_cast<int>(rng() % n);
        Eigen::MatrixXd m = random_psd(n, rank, rng);
        const double rel = Tolerances{}.effective_rank_rel(n, n);
        auto fac = pinv_gram(m, rel);

        const auto& mp = fac.pinv;
        CHECK((m * mp * m - m).norm() <= 1e-9 * std::max(m.norm(), 1.0));
        CHECK((mp * m * mp - mp).norm() <= 1e-9 * std::max(mp.norm(), 1.0));
        CHECK((m * mp - (m * mp).transpose()).norm() <= 1e-9);
        CHECK((mp * m - (mp * m).transpose()).norm() <= 1e-9);
        CHECK((fac.range_projector * fac.range_projector - fac.range_projector)
                  .norm() <= 1e-9);

        // (M^+)^+ = M on PSD input.
        auto fac2 = pinv_gram(mp, rel);
        CHECK((fac2.pinv - m).norm() <= 1e-8 * std::max(m.norm(), 1.0));
        CHECK(fac2.rank == fac.rank);
    }
}

TEST_CASE("sqrt_psd closed forms and squaring oracle") {
    CHECK((sqrt_psd(Eigen::MatrixXd::Identity(3, 3)) -
           Eigen::MatrixXd::Identity(3, 3))
              .norm() <= 1e-12);

    Eigen::MatrixXd d49(2, 2);
    d49 << 4.0, 0.0, 0.0, 9.0;
    Eigen::MatrixXd d23(2, 2);
    d23 << 2.0, 0.0, 0.0, 3.0;
    CHECK((sqrt_psd(d49) - d23).norm() <= 1e-12);

    // Trine Q = (1/6) P with P the projector orthogonal to the all-ones
    // vector, so its square root is P / sqrt(6).
    Eigen::MatrixXd p = Eigen::MatrixXd::Identity(3, 3) -
                        Eigen::MatrixXd::Constant(3, 3, 1.0 / 3.0);
    Eigen::MatrixXd root = sqrt_psd(trine_q());
    CHECK((root - p / std::sqrt(6.0)).norm() <= 1e-12);
    CHECK((root * root - trine_q()).norm() <= 1e-12);

    auto rng = make_rng(31);
    for (int it = 0; it < 100; ++it) {
        const int n = 2 + static_cast<int>(rng() % 11);
        Eigen::MatrixXd m = random_psd(n, 1 + static_cast<int>(rng() % n), rng);
        Eigen::MatrixXd r = sqrt_psd(m);
        CHECK((r * r - m).norm() <= 1e-9 * std::max(m.norm(), 1.0));
    }

    CHECK_THROWS_AS(sqrt_psd(-Eigen::MatrixXd::Identity(2, 2)),
                    std::invalid_argument);
}

TEST_CASE("samplers: projector edge cases and state laws") {
    auto rng = make_rng(41);
    CHECK(sample_projector(3, 0, rng).norm() == 0.0);
    CHECK((sample_projector(3, 3, rng) - identity_operator(3)).norm() == 0.0);
    CHECK_THROWS_AS(sample_projector(3, 4, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_mixed(3, 0, rng), std::invalid_argument);

    for (int it = 0; it < 100; ++it) {
        Matrix rho = sample_haar_pure(3, rng);
        CHECK(std::abs(rho.trace().real() - 1.0) <= 1e-9);
        CHECK(std::abs(hs_inner(rho, rho) - 1.0) <= 1e-9);
    }
    for (int it = 0; it < 100; ++it) {
        const int k = static_cast<int>(rng() % 4);
        Matrix proj = sample_projector(4, k, rng);
        CHECK(std::abs(proj.trace().real() - k) <= 1e-9);
        CHECK(std::abs(hs_inner(proj, proj) - k) <= 1e-9);
    }
    for (int it = 0; it < 200; ++it) {
        Matrix eff = sample_random_effect(3, rng);
        auto dec = eig_hermitian(eff);
        CHECK(dec.eigenvalues.minCoeff() >= -1e-10);
        CHECK(dec.eigenvalues.maxCoeff() <= 1.0 + 1e-10);
    }
}

TEST_CASE("haar_pure mean approaches the maximally mixed state") {
    auto rng = make_rng(2026);
    Matrix mean = Matrix::Zero(2, 2);
    const int n = 100000;
    for (int it = 0; it < n; ++it) mean += sample_haar_pure(2, rng);
    mean /= static_cast<double>(n);
    CHECK((mean - 0.5 * identity_operator(2)).norm() <= 0.01);
}

TEST_CASE("seed splitting and determinism") {
    CHECK(split_seed(1, 0) != split_seed(1, 1));
    CHECK(split_seed(1, 0) != split_seed(2, 0));
    auto r1 = make_rng(99);
    auto r2 = make_rng(99);
    Matrix a = sample_random_effect(4, r1);
    Matrix b = sample_random_effect(4, r2);
    CHECK((a - b).norm() == 0.0);
}
