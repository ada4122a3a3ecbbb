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

#include "qregion/region.hpp"
#include "qregion/sampling.hpp"

using namespace qregion;

namespace {

// Paper closed form for SIC measurements: ((d-1)/(d^2(d+1))) (I - u u^T / n).
Eigen::MatrixXd sic_covariance(int d) {
    const int n = d * d;
    const double scale = (d - 1.0) / (static_cast<double>(d) * d * (d + 1));
    return scale * (Eigen::MatrixXd::Identity(n, n) -
                    Eigen::MatrixXd::Constant(n, n, 1.0 / n));
}

// Paper closed form for MUB measurements:
// ((d-1)/(d(d+1)^2)) (I - direct sum of per-basis J/d blocks).
Eigen::MatrixXd mub_covariance(int d) {
    const int n = d * (d + 1);
    Eigen::MatrixXd block = Eigen::MatrixXd::Identity(n, n);
    for (int b = 0; b <= d; ++b)
        block.block(b * d, b * d, d, d) -=
            Eigen::MatrixXd::Constant(d, d, 1.0 / d);
    return ((d - 1.0) / (d * (d + 1.0) * (d + 1.0))) * block;
}

Matrix bloch(double x, double y, double z) {
    Matrix rho(2, 2);
    rho << Complex(1.0 + z, 0.0), Complex(x, -y), Complex(x, y),
        Complex(1.0 - z, 0.0);
    return 0.5 * rho;
}

}  // namespace

TEST_CASE("tetrahedron covariance matches the SIC closed form") {
    Ensemble tetra = builtin("tetrahedron");
    EllipsoidApprox a = approx_measurement(tetra, 1.0);
    REQUIRE(a.n == 4);
    CHECK(a.informationally_complete);
    CHECK(a.pinv.rank == 3);

    for (int i = 0; i < 4; ++i) {
        CHECK(a.center(i) == doctest::Approx(0.25).epsilon(1e-12));
        for (int j = 0; j < 4; ++j)
            CHECK(a.covariance(i, j) ==
                  doctest::Approx(i == j ? 1.0 / 16.0 : -1.0 / 48.0)
                      .epsilon(1e-11));
    }
    CHECK((a.covariance - sic_covariance(2)).norm() <= 1e-12);
    CHECK((approx_measurement(make_sic(3, EnsembleKind::Measurement), 1.0)
               .covariance -
           sic_covariance(3))
              .norm() <= 1e-12);
}

TEST_CASE("trine covariance from the Def. 1 hand evaluation") {
    EllipsoidApprox a = approx_measurement(builtin("trine"), 1.0);
    CHECK_FALSE(a.informationally_complete);
    CHECK(a.pinv.rank == 2);
    for (int i = 0; i < 3; ++i) {
        CHECK(a.center(i) == doctest::Approx(1.0 / 3.0));
        for (int j = 0; j < 3; ++j)
            CHECK(a.covariance(i, j) ==
                  doctest::Approx(i == j ? 1.0 / 9.0 : -1.0 / 18.0)
                      .epsilon(1e-11));
    }
}

TEST_CASE("MUB covariance matches the block closed form") {
    for (int d : {2, 3}) {
        EllipsoidApprox a =
            approx_measurement(make_mub(d, EnsembleKind::Measurement), 1.0);
        CHECK((a.covariance - mub_covariance(d)).norm() <= 1e-12);
        CHECK(a.pinv.rank == d * d - 1);
    }
}

TEST_CASE("covariance rows sum to zero for every valid measurement") {
    for (const char* name : {"trine", "tetrahedron", "computational(3)"}) {
        EllipsoidApprox a = approx_measurement(builtin(name), 1.0);
        CHECK((a.covariance * Eigen::VectorXd::Ones(a.n)).cwiseAbs().maxCoeff() <=
              1e-12);
        CHECK(a.center.sum() == doctest::Approx(1.0));
    }
    for (int d : {2, 3}) {
        EllipsoidApprox a =
            approx_measurement(make_sic(d, EnsembleKind::Measurement), 1.0);
        CHECK((a.covariance * Eigen::VectorXd::Ones(a.n)).cwiseAbs().maxCoeff() <=
              1e-12);
    }
}

TEST_CASE("approx_measurement rejects invalid input") {
    Ensemble bad;
    bad.kind = EnsembleKind::Measurement;
    bad.dim = 2;
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 2.0;  // does not sum to identity
    bad.elements = {m};
    CHECK_THROWS_AS(approx_measurement(bad, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(approx_measurement(builtin("trine"), 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(approx_measurement(builtin("pair"), 1.0),
                    std::invalid_argument);
}

TEST_CASE("membership: center, pure boundary, and a frozen outside point") {
    Ensemble tetra = builtin("tetrahedron");
    for (double r : {1.0, 2.0, 5.0}) {
        EllipsoidApprox a = approx_measurement(tetra, r);
        MembershipReport rep = membership(a, a.center);
        CHECK(rep.verdict == Verdict::Inside);
        CHECK(rep.form_value == doctest::Approx(0.0));
    }

    EllipsoidApprox a = approx_measurement(tetra, 1.0);
    auto rng = make_rng(17);
    for (int it = 0; it < 200; ++it) {
        Matrix rho = sample_haar_pure(2, rng);
        MembershipReport rep = membership(a, image(tetra, rho));
        CHECK(rep.form_value == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(rep.range_residual <= 1e-10);
        CHECK(rep.verdict == Verdict::Boundary);
        CHECK(rep.member());
    }

    // (1,0,0,0): in the affine range (coordinates sum to 1) but far outside;
    // the form evaluates to 12 * |p - t|^2 = 9.
    Eigen::VectorXd corner(4);
    corner << 1.0, 0.0, 0.0, 0.0;
    MembershipReport rep = membership(a, corner);
    CHECK(rep.verdict == Verdict::Outside);
    CHECK(rep.form_value == doctest::Approx(9.0).epsilon(1e-10));

    // Brute-force oracle: no state reaches first-outcome probability 1.
    double max_p1 = 0.0;
    for (int it = 0; it < 20000; ++it) {
        Matrix rho = sample_haar_pure(2, rng);
        max_p1 = std::max(max_p1, image(tetra, rho)(0));
    }
    CHECK(max_p1 < 0.51);  // analytic maximum is 1/2

    CHECK_THROWS_AS(membership(a, Eigen::VectorXd::Zero(3)),
                    std::invalid_argument);
}

TEST_CASE("membership form equals the purity identity for IC measurements") {
    auto rng = make_rng(29);
    struct Case {
        Ensemble e;
        int d;
    };
    std::vector<Case> cases;
    cases.push_back({builtin("tetrahedron"), 2});
    cases.push_back({make_sic(3, EnsembleKind::Measurement), 3});
    cases.push_back({make_mub(3, EnsembleKind::Measurement), 3});
    for (auto& c : cases) {
        EllipsoidApprox a = approx_measurement(c.e, 1.0);
        for (int it = 0; it < 100; ++it) {
            const int rank = 1 + static_cast<int>(rng() % c.d);
            Matrix rho = sample_mixed(c.d, rank, rng);
            const double purity = hs_inner(rho, rho);
            const double expected =
                (c.d / (c.d - 1.0)) * (purity - 1.0 / c.d);
            MembershipReport rep = membership(a, image(c.e, rho));
            CHECK(rep.form_value == doctest::Approx(expected).epsilon(1e-9));
        }
    }
}

TEST_CASE("inner-radius anchor: rank-(d-1) uniform mixtures") {
    auto rng = make_rng(37);
    Ensemble sic3 = make_sic(3, EnsembleKind::Measurement);
    EllipsoidApprox a = approx_measurement(sic3, 1.0);
    for (int it = 0; it < 50; ++it) {
        Matrix phi = sample_haar_pure(3, rng);
        Matrix rho = (identity_operator(3) - phi) / 2.0;
        MembershipReport rep = membership(a, image(sic3, rho));
        CHECK(rep.form_value == doctest::Approx(0.25).epsilon(1e-9));
    }
}

TEST_CASE("support function closed forms and Bloch brute force") {
    Ensemble trine = builtin("trine");
    EllipsoidApprox a = approx_measurement(trine, 1.0);
    const Eigen::VectorXd u = Eigen::VectorXd::Ones(3);
    CHECK(support(a, u) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(support(a, -u) == doctest::Approx(-1.0).epsilon(1e-12));

    Eigen::VectorXd e1 = Eigen::VectorXd::Zero(3);
    e1(0) = 1.0;
    CHECK(support(a, e1) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

    // Brute force over the Bloch sphere: the maximal first-outcome
    // probability must approach (and never exceed) the support value.
    auto rng = make_rng(43);
    double best = 0.0;
    for (int it = 0; it < 50000; ++it) {
        const double p1 = image(trine, sample_haar_pure(2, rng))(0);
        CHECK(p1 <= 2.0 / 3.0 + 1e-12);
        best = std::max(best, p1);
    }
    CHECK(best > 2.0 / 3.0 - 1e-3);
}

TEST_CASE("support dominates member points") {
    Ensemble tetra = builtin("tetrahedron");
    EllipsoidApprox a = approx_measurement(tetra, 1.0);
    auto rng = make_rng(47);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int it = 0; it < 200; ++it) {
        Eigen::VectorXd dir = sample_direction(4, rng);
        for (int jt = 0; jt < 20; ++jt) {
            Matrix rho = sample_mixed(2, 2, rng);
            Eigen::VectorXd p = image(tetra, rho);
            CHECK(dir.dot(p) <= support(a, dir) + 1e-9);
        }
    }
}

TEST_CASE("reconstruct_state inverts images and projects otherwise") {
    Ensemble tetra = builtin("tetrahedron");
    // Center maps back to the maximally mixed state.
    EllipsoidApprox a = approx_measurement(tetra, 1.0);
    CHECK((reconstruct_state(tetra, a.center) - 0.5 * identity_operator(2))
              .norm() <= 1e-12);

    Matrix zero_state = bloch(0, 0, 1);
    Eigen::VectorXd p = image(tetra, zero_state);
    CHECK((reconstruct_state(tetra, p) - zero_state).norm() <= 1e-10);

    auto rng = make_rng(53);
    for (int it = 0; it < 50; ++it) {
        Matrix rho = sample_mixed(2, 2, rng);
        CHECK((reconstruct_state(tetra, image(tetra, rho)) - rho).norm() <= 1e-9);
    }

    // The trine senses only the x-z Bloch plane: a y-polarized state
    // projects to the maximally mixed state, and the forward map is
    // consistent on the projection.
    Ensemble trine = builtin("trine");
    Matrix y_state = bloch(0, 1, 0);
    Matrix recon = reconstruct_state(trine, image(trine, y_state));
    CHECK((recon - 0.5 * identity_operator(2)).norm() <= 1e-10);
    CHECK((image(trine, recon) - image(trine, y_state)).norm() <= 1e-10);

    Matrix xz_state = bloch(std::sqrt(0.5), 0, std::sqrt(0.5));
    Matrix recon_xz = reconstruct_state(trine, image(trine, xz_state));
    CHECK((recon_xz - xz_state).norm() <= 1e-10);

    // Off-range points are rejected: u is orthogonal to the range.
    EllipsoidApprox trine_approx = approx_measurement(trine, 1.0);
    Eigen::VectorXd off = trine_approx.center + 1e-3 * Eigen::VectorXd::Ones(3);
    CHECK_THROWS_AS(reconstruct_state(trine, off), std::invalid_argument);
}

TEST_CASE("qubit degeneracy: boundary points reconstruct to pure states") {
    // At d = 2 the outer and inner scales coincide (r = 1 = d-1), and the
    // image of the state set fills the ellipsoid: every boundary point is
    // the image of a pure state.
    Ensemble tetra = builtin("tetrahedron");
    EllipsoidApprox a = approx_measurement(tetra, 1.0);
    auto rng = make_rng(59);
    for (int it = 0; it < 200; ++it) {
        Eigen::VectorXd g = gaussian_vector(4, rng);
        Eigen::VectorXd x = a.pinv.range_projector * g;
        const double form = a.pinv.quadratic_form(x);
        if (form <= 0.0) continue;
        Eigen::VectorXd p = a.center + x / std::sqrt(form);
        Matrix rho = reconstruct_state(tetra, p);
        CHECK(min_eigenvalue(rho) >= -1e-8);
        CHECK(hs_inner(rho, rho) == doctest::Approx(1.0).epsilon(1e-6));
        CHECK((image(tetra, rho) - p).norm() <= 1e-9);
    }
}
