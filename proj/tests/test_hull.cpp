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

#include <cmath>
#include <random>

#include "qregion/hull.hpp"

using namespace qregion;

namespace {

// Every input point must satisfy every facet up to eps.
void check_all_inside(const Eigen::MatrixXd& pts,
                      const std::vector<Halfspace>& facets, double eps) {
    for (const auto& f : facets) {
        const double worst = (pts * f.normal).maxCoeff() - f.offset;
        CHECK(worst <= eps);
    }
}

// Every facet must be supported by at least dim points (otherwise the
// H-representation is slack somewhere).
void check_facets_tight(const Eigen::MatrixXd& pts,
                        const std::vector<Halfspace>& facets, double eps) {
    const int m = static_cast<int>(pts.cols());
    for (const auto& f : facets) {
        int touching = 0;
        for (int i = 0; i < pts.rows(); ++i)
            if (std::abs(pts.row(i).dot(f.normal) - f.offset) <= eps) ++touching;
        CHECK(touching >= m);
    }
}

}  // namespace

TEST_CASE("affine hull detects dimension and complement") {
    Eigen::MatrixXd simplex(3, 3);
    simplex << 1, 0, 0, 0, 1, 0, 0, 0, 1;
    AffineHull hull = affine_hull(simplex);
    CHECK(hull.dim == 2);
    REQUIRE(hull.normals.cols() == 1);
    // The probability simplex is pinned by the all-ones normal.
    Eigen::VectorXd ones = Eigen::VectorXd::Ones(3) / std::sqrt(3.0);
    CHECK(std::abs(std::abs(hull.normals.col(0).dot(ones)) - 1.0) <= 1e-12);

    Eigen::MatrixXd point(1, 4);
    point << 0.1, 0.2, 0.3, 0.4;
    CHECK(affine_hull(point).dim == 0);
}

TEST_CASE("interval facets in one dimension") {
    Eigen::MatrixXd pts(5, 1);
    pts << 0.3, -1.0, 0.7, 0.2, 0.4;
    auto facets = facet_enumerate(pts);
    REQUIRE(facets.size() == 2);
    check_all_inside(pts, facets, 1e-12);
    // max and min are tight
    double hi = -1e9, lo = 1e9;
    for (const auto& f : facets) {
        if (f.normal(0) > 0) hi = f.offset;
        else lo = -f.offset;
    }
    CHECK(hi == doctest::Approx(0.7));
    CHECK(lo == doctest::Approx(-1.0));
}

TEST_CASE("triangle gives three facets") {
    Eigen::MatrixXd pts(3, 2);
    pts << 0, 0, 1, 0, 0, 1;
    auto facets = facet_enumerate(pts);
    CHECK(facets.size() == 3);
    check_all_inside(pts, facets, 1e-12);
    check_facets_tight(pts, facets, 1e-9);
}

TEST_CASE("dense circle cloud") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979);
    Eigen::MatrixXd pts(1000, 2);
    for (int i = 0; i < 1000; ++i) {
        const double t = angle(rng);
        pts.row(i) << std::cos(t), std::sin(t);
    }
    auto facets = facet_enumerate(pts);
    CHECK(facets.size() >= 3);
    check_all_inside(pts, facets, 1e-9);
    // The polygon inscribes the circle: the origin is deep inside.
    for (const auto& f : facets) CHECK(f.offset > 0.9);
}

TEST_CASE("tetrahedron in 3-d gives four facets") {
    Eigen::MatrixXd pts(4, 3);
    pts << 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1;
    auto facets = facet_enumerate(pts);
    CHECK(facets.size() == 4);
    check_all_inside(pts, facets, 1e-12);
    check_facets_tight(pts, facets, 1e-9);
}

TEST_CASE("cube corners: coplanar faces dedup to planes") {
    Eigen::MatrixXd pts(8, 3);
    int row = 0;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b)
            for (int c = 0; c <= 1; ++c) pts.row(row++) << a, b, c;
    auto facets = facet_enumerate(pts);
    check_all_inside(pts, facets, 1e-9);
    CHECK(facets.size() >= 6);
    CHECK(facets.size() <= 12);
    // The center is strictly inside every facet.
    Eigen::VectorXd center = Eigen::VectorXd::Constant(3, 0.5);
    for (const auto& f : facets) CHECK(f.normal.dot(center) < f.offset - 0.1);
}

TEST_CASE("random clouds in dimensions 2 to 4 are enclosed") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int m = 2; m <= 4; ++m) {
        const int npts = m == 4 ? 60 : 300;
        Eigen::MatrixXd pts(npts, m);
        for (int i = 0; i < npts; ++i)
            for (int j = 0; j < m; ++j) pts(i, j) = normal(rng);
        auto facets = facet_enumerate(pts);
        CHECK(facets.size() >= static_cast<size_t>(m + 1));
        check_all_inside(pts, facets, 1e-8);
        check_facets_tight(pts, facets, 1e-7);
        // The centroid is interior.
        Eigen::VectorXd centroid = pts.colwise().mean();
        for (const auto& f : facets) CHECK(f.normal.dot(centroid) < f.offset);
    }
}

TEST_CASE("4-d cross polytope has 16 facets") {
    Eigen::MatrixXd pts(8, 4);
    pts.setZero();
    for (int i = 0; i < 4; ++i) {
        pts(2 * i, i) = 1.0;
        pts(2 * i + 1, i) = -1.0;
    }
    auto facets = facet_enumerate(pts);
    CHECK(facets.size() == 16);
    check_all_inside(pts, facets, 1e-12);
    for (const auto& f : facets)
        CHECK(f.offset == doctest::Approx(1.0 / std::sqrt(4.0)).epsilon(1e-9));
}

TEST_CASE("degenerate inputs are rejected") {
    Eigen::MatrixXd flat(4, 2);
    flat << 0, 0, 1, 1, 2, 2, 3, 3;  // collinear
    CHECK_THROWS_AS(facet_enumerate(flat), std::invalid_argument);
    Eigen::MatrixXd tiny(2, 2);
    tiny << 0, 0, 1, 0;
    CHECK_THROWS_AS(facet_enumerate(tiny), std::invalid_argument);
    Eigen::MatrixXd high(6, 5);
    high.setRandom();
    CHECK_THROWS_AS(facet_enumerate(high), std::invalid_argument);
}
