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

#include "qregion/simulability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qregion/sampling.hpp"

namespace qregion {

namespace {

constexpr const char* kMeasurementConclusion =
    "there exists a trace preserving map, positive on the support of the "
    "reference measurement, carrying it into the observed device "
    "(completely positive under the quoted side condition \"D = 2, n <= 3, "
    "and d <= 3\", which this tool reports but does not evaluate)";

constexpr const char* kStateConclusion =
    "there exists a (not necessarily trace preserving) map, positive on the "
    "support of the reference family, carrying it into the observed device "
    "(completely positive trace preserving under the quoted side condition "
    "\"D = 2, n = 2, and d = 2\", which this tool reports but does not "
    "evaluate)";

double hull_support_exact(const ProbabilityCloud& cloud,
                          const Eigen::VectorXd& a) {
    return (cloud.points * a).maxCoeff();
}

using SupportFn = std::function<double(const Eigen::VectorXd&)>;

ContainmentCertificate contain_impl(const SupportFn& body_support, int body_n,
                                    const ProbabilityCloud& cloud, double slack,
                                    const ContainmentOptions& opts,
                                    const Tolerances& tol,
                                    const char* conclusion) {
    if (cloud.n() != body_n)
        throw std::invalid_argument(
            "containment: cloud and body have different component counts");
    if (cloud.size() == 0)
        throw std::invalid_argument("containment: empty cloud");

    ContainmentCertificate cert;
    cert.slack = slack;

    const auto probe = [&](const Eigen::VectorXd& a) {
        ContainmentWitness w;
        w.direction = a;
        w.hull_support = hull_support_exact(cloud, a);
        w.body_support = body_support(a);
        w.margin = w.body_support - w.hull_support;
        return w;
    };

    try {
        HullHRep hrep = hull_facets(cloud, opts.facet_dim_limit, 1e-9);
        cert.method = "facets";
        bool ok = true;
        // Facet inequalities within the affine hull...
        for (const auto& f : hrep.facets) {
            ContainmentWitness w = probe(f.normal);
            if (w.body_support > f.offset + slack) {
                ok = false;
                cert.witnesses.push_back(std::move(w));
            }
        }
        // ...and the hull's own equality constraints, probed both ways.
        for (const auto& eq : hrep.equalities) {
            for (double sign : {1.0, -1.0}) {
                Eigen::VectorXd a = sign * eq.normal;
                ContainmentWitness w = probe(a);
                if (w.body_support > sign * eq.offset + slack) {
                    ok = false;
                    cert.witnesses.push_back(std::move(w));
                }
            }
        }
        cert.verdict = ok ? Containment::Contained : Containment::Violated;
    } catch (const DimensionLimitError&) {
        cert.method = "sampled-directions";
        auto rng = make_rng(opts.seed);
        std::uniform_int_distribution<long> pick(0, cloud.size() - 1);
        bool violated = false;
        for (int it = 0; it < opts.n_directions; ++it) {
            Eigen::VectorXd a;
            if (it % 4 == 3 && cloud.size() > 1) {
                // Differences of cloud points probe hull edges.
                a = (cloud.points.row(pick(rng)) - cloud.points.row(pick(rng)))
                        .transpose();
                if (a.norm() < 1e-12) continue;
                a /= a.norm();
            } else {
                a = sample_direction(cloud.n(), rng);
            }
            ContainmentWitness w = probe(a);
            if (w.margin > slack) {
                violated = true;
                cert.witnesses.push_back(std::move(w));
                if (cert.witnesses.size() >= 16) break;
            }
        }
        cert.verdict =
            violated ? Containment::Violated : Containment::InconclusivePass;
    }

    std::sort(cert.witnesses.begin(), cert.witnesses.end(),
              [](const auto& a, const auto& b) { return a.margin > b.margin; });
    if (cert.verdict == Containment::Contained)
        cert.conclusion = conclusion;
    else if (cert.verdict == Containment::Violated)
        cert.conclusion = "containment premise fails; no conclusion";
    else
        cert.conclusion =
            "no violation found by sampling; containment not certified "
            "(affine dimension above the facet limit)";
    (void)tol;
    return cert;
}

}  // namespace

void validate_cloud(const ProbabilityCloud& cloud, double tol) {
    if (cloud.size() == 0)
        throw std::invalid_argument("cloud: no points");
    if (cloud.points.minCoeff() < -tol || cloud.points.maxCoeff() > 1.0 + tol)
        throw std::invalid_argument("cloud: coordinate outside [0, 1]");
    if (cloud.normalized) {
        Eigen::VectorXd sums = cloud.points.rowwise().sum();
        if ((sums.array() - 1.0).abs().maxCoeff() > tol)
            throw std::invalid_argument(
                "cloud: normalized cloud has a row sum away from 1");
    }
}

std::string to_string(Containment c) {
    switch (c) {
        case Containment::Contained: return "contained";
        case Containment::Violated: return "violated";
        case Containment::InconclusivePass: return "inconclusive-pass";
    }
    return "unknown";
}

HullHRep hull_facets(const ProbabilityCloud& cloud, int facet_dim_limit,
                     double tol) {
    AffineHull aff = affine_hull(cloud.points, tol);
    if (aff.dim > facet_dim_limit)
        throw DimensionLimitError(
            "cloud affine dimension " + std::to_string(aff.dim) +
            " exceeds facet limit " + std::to_string(facet_dim_limit));

    HullHRep hrep;
    hrep.affine_dim = aff.dim;
    for (int j = 0; j < aff.normals.cols(); ++j) {
        Halfspace eq;
        eq.normal = aff.normals.col(j);
        eq.offset = eq.normal.dot(aff.origin);
        hrep.equalities.push_back(std::move(eq));
    }
    if (aff.dim == 0) return hrep;  // single point: equalities pin it fully

    Eigen::MatrixXd reduced(cloud.size(), aff.dim);
    for (long i = 0; i < cloud.size(); ++i)
        reduced.row(i) = aff.project(cloud.points.row(i).transpose()).transpose();

    for (const auto& f : facet_enumerate(reduced)) {
        Halfspace lifted;
        lifted.normal = aff.basis * f.normal;  // unit, since the basis is orthonormal
        lifted.offset = f.offset + lifted.normal.dot(aff.origin);
        hrep.facets.push_back(std::move(lifted));
    }
    return hrep;
}

ContainmentCertificate ellipsoid_in_hull(const EllipsoidApprox& body,
                                         const ProbabilityCloud& cloud,
                                         double slack,
                                         const ContainmentOptions& opts,
                                         const Tolerances& tol) {
    return contain_impl(
        [&](const Eigen::VectorXd& a) { return support(body, a); }, body.n,
        cloud, slack, opts, tol, kMeasurementConclusion);
}

ContainmentCertificate dcone_in_hull(const DConeApprox& body,
                                     const ProbabilityCloud& cloud,
                                     double slack,
                                     const ContainmentOptions& opts,
                                     const Tolerances& tol) {
    return contain_impl(
        [&](const Eigen::VectorXd& a) { return dcone_support(body, a); }, body.n,
        cloud, slack, opts, tol, kStateConclusion);
}

}  // namespace qregion
