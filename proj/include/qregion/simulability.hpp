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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qregion/hull.hpp"
#include "qregion/region.hpp"

namespace qregion {

/// Finite set of observed probability vectors. Measurement clouds are
/// normalized (coordinates sum to 1); state-family clouds are only
/// required to sit in [0, 1]^n.
struct ProbabilityCloud {
    Eigen::MatrixXd points;  // one vector per row
    bool normalized = true;

    int n() const { return static_cast<int>(points.cols()); }
    long size() const { return static_cast<long>(points.rows()); }
};

/// Throws std::invalid_argument when coordinates leave [-tol, 1+tol] or a
/// normalized cloud has a row sum off 1 by more than tol.
void validate_cloud(const ProbabilityCloud& cloud, double tol = 1e-6);

/// H-representation of conv(cloud): facets within the affine hull plus
/// equality constraints pinning the hull itself.
struct HullHRep {
    std::vector<Halfspace> facets;      // a.x <= b
    std::vector<Halfspace> equalities;  // c.x == b
    int affine_dim = 0;
};

/// Thrown when the cloud's affine dimension exceeds the facet limit; the
/// caller is expected to fall back to sampled directions.
struct DimensionLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

HullHRep hull_facets(const ProbabilityCloud& cloud, int facet_dim_limit = 4,
                     double tol = 1e-9);

enum class Containment { Contained, Violated, InconclusivePass };

std::string to_string(Containment c);

/// A direction along which containment was probed. `hull_support` is the
/// exact V-polytope support max over cloud points, `body_support` the
/// closed-form support of the conic body.
struct ContainmentWitness {
    Eigen::VectorXd direction;
    double hull_support = 0.0;
    double body_support = 0.0;
    double margin = 0.0;  // body - hull
};

struct ContainmentCertificate {
    Containment verdict = Containment::InconclusivePass;
    std::vector<ContainmentWitness> witnesses;  // violations, worst first
    std::string method;                         // "facets" or "sampled-directions"
    double slack = 0.0;
    std::string conclusion;  // the applicable corollary conclusion, quoted
};

struct ContainmentOptions {
    int facet_dim_limit = 4;
    int n_directions = 10000;
    std::uint64_t seed = 2026;
};

/// Decides E_1(pi_0) subseteq conv(cloud). Facets mode (affine dimension
/// within the limit) is exact and may return Contained; sampled mode only
/// falsifies, returning Violated or InconclusivePass.
ContainmentCertificate ellipsoid_in_hull(const EllipsoidApprox& body,
                                         const ProbabilityCloud& cloud,
                                         double slack,
                                         const ContainmentOptions& opts = {},
                                         const Tolerances& tol = {});

/// Same test for conv of the union of slice ellipsoids of a state family.
ContainmentCertificate dcone_in_hull(const DConeApprox& body,
                                     const ProbabilityCloud& cloud,
                                     double slack,
                                     const ContainmentOptions& opts = {},
                                     const Tolerances& tol = {});

}  // namespace qregion
