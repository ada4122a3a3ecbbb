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

#include "qregion/verify.hpp"

#include <cmath>
#include <stdexcept>

#include "qregion/sampling.hpp"

namespace qregion {

namespace {

struct RunningStats {
    double max_v = std::numeric_limits<double>::quiet_NaN();
    double min_v = std::numeric_limits<double>::quiet_NaN();
    double sum = 0.0;
    long count = 0;

    void add(double v) {
        if (count == 0) {
            max_v = min_v = v;
        } else {
            max_v = std::max(max_v, v);
            min_v = std::min(min_v, v);
        }
        sum += v;
        ++count;
    }
    double mean() const { return count ? sum / count : 0.0; }
};

}  // namespace

VerificationStats verify_outer_measurement(const Ensemble& e, long samples,
                                           std::uint64_t seed,
                                           const Tolerances& tol) {
    VerificationStats stats;
    stats.seed = seed;
    if (samples <= 0) return stats;

    EllipsoidApprox outer = approx_measurement(e, 1.0, tol);
    auto rng = make_rng(seed);
    std::uniform_int_distribution<int> rank_dist(std::min(2, e.dim), e.dim);

    RunningStats pure, mixed;
    for (long i = 0; i < samples; ++i) {
        const bool draw_pure = (i % 2 == 0);
        Matrix rho = draw_pure ? sample_haar_pure(e.dim, rng)
                               : sample_mixed(e.dim, rank_dist(rng), rng);
        MembershipReport rep = membership(outer, image(e, rho), tol);
        (draw_pure ? pure : mixed).add(rep.form_value);
        if (rep.form_value > 1.0 + kViolationTol ||
            rep.range_residual > tol.range)
            ++stats.violations;
        ++stats.samples;
    }
    stats.max_form_pure = pure.max_v;
    stats.min_form_pure = pure.min_v;
    stats.mean_form_pure = pure.mean();
    stats.max_form_mixed = mixed.max_v;
    stats.min_form_mixed = mixed.min_v;
    stats.mean_form_mixed = mixed.mean();
    return stats;
}

Eigen::VectorXd sample_ellipsoid_boundary(const EllipsoidApprox& a,
                                          double target_form,
                                          std::mt19937_64& rng) {
    if (a.pinv.rank == 0)
        throw std::invalid_argument(
            "sample_ellipsoid_boundary: zero-rank covariance");
    for (int attempt = 0; attempt < 64; ++attempt) {
        Eigen::VectorXd g = gaussian_vector(a.n, rng);
        Eigen::VectorXd x = a.pinv.range_projector * g;
        const double form = a.pinv.quadratic_form(x);
        if (form <= 0.0) continue;
        x *= std::sqrt(target_form / form);
        return a.center + x;
    }
    throw std::runtime_error("sample_ellipsoid_boundary: sampling failed");
}

VerificationStats verify_inner_measurement(const Ensemble& e, long probes,
                                           std::uint64_t seed,
                                           const Tolerances& tol) {
    VerificationStats stats;
    stats.seed = seed;
    if (e.dim < 2)
        throw std::invalid_argument("verify_inner_measurement: need d >= 2");

    EllipsoidApprox approx = approx_measurement(e, 1.0, tol);
    if (!approx.informationally_complete) {
        stats.skipped = true;
        stats.note =
            "measurement is not informationally complete; inner ellipsoid "
            "claim not exercised";
        return stats;
    }
    if (probes <= 0) return stats;

    const double inner_form =
        1.0 / (static_cast<double>(e.dim - 1) * (e.dim - 1));
    auto rng = make_rng(seed);
    RunningStats form_stats;
    for (long i = 0; i < probes; ++i) {
        Eigen::VectorXd p = sample_ellipsoid_boundary(approx, inner_form, rng);
        form_stats.add(membership(approx, p, tol).form_value);
        Matrix rho = reconstruct_state(e, p, tol);
        const double lmin = min_eigenvalue(rho, tol.herm);
        if (std::isnan(stats.min_reconstruction_eigenvalue) ||
            lmin < stats.min_reconstruction_eigenvalue)
            stats.min_reconstruction_eigenvalue = lmin;
        stats.max_forward_residual = std::max(
            stats.max_forward_residual, (image(e, rho) - p).norm());
        stats.max_trace_residual = std::max(
            stats.max_trace_residual, std::abs(rho.trace().real() - 1.0));
        if (lmin < -kViolationTol) ++stats.violations;
        ++stats.samples;
    }
    stats.max_form_pure = form_stats.max_v;
    stats.min_form_pure = form_stats.min_v;
    stats.mean_form_pure = form_stats.mean();
    return stats;
}

VerificationStats verify_states_cone(const Ensemble& e, long samples,
                                     std::uint64_t seed,
                                     const Tolerances& tol) {
    VerificationStats stats;
    stats.seed = seed;
    if (samples <= 0) return stats;

    DConeApprox cone = approx_states(e, 1.0, tol);
    auto rng = make_rng(seed);
    std::uniform_int_distribution<int> trace_dist(0, e.dim);

    RunningStats slice_forms, margins;
    for (long i = 0; i < samples; ++i) {
        // Alternate Haar projectors over all trace classes with random
        // effects; projectors pin the slice boundaries.
        const bool projector_draw = (i % 2 == 0);
        const int k = trace_dist(rng);
        Matrix pi = projector_draw ? sample_projector(e.dim, k, rng)
                                   : sample_random_effect(e.dim, rng);
        const Eigen::VectorXd q = image(e, pi);

        MembershipReport rep = dcone_membership(cone, q, tol);
        margins.add(rep.margin());
        if (rep.margin() > kViolationTol || rep.range_residual > tol.range)
            ++stats.violations;

        if (projector_draw && k >= 1 && k <= e.dim - 1 &&
            cone.informationally_complete) {
            MembershipReport srep = slice_membership(cone, q, k, tol);
            slice_forms.add(srep.form_value);
            stats.max_slice_form_error = std::max(
                stats.max_slice_form_error, std::abs(srep.form_value - 1.0));
        }
        ++stats.samples;
    }
    stats.max_form_pure = slice_forms.max_v;
    stats.min_form_pure = slice_forms.min_v;
    stats.mean_form_pure = slice_forms.mean();
    stats.max_form_mixed = margins.max_v;
    stats.min_form_mixed = margins.min_v;
    stats.mean_form_mixed = margins.mean();
    return stats;
}

Eigen::VectorXd sample_dcone_member(const DConeApprox& c, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> slice(0, c.dim);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const Eigen::MatrixXd root = sqrt_psd(c.shape, 1e-9);
    const Eigen::VectorXd u = c.axis();

    const auto slice_point = [&](int k) {
        Eigen::VectorXd x = (static_cast<double>(k) / c.dim) * u;
        if (c.slice_coeff[k] > 0.0 && c.pinv.rank > 0) {
            Eigen::VectorXd v = c.pinv.range_projector * gaussian_vector(c.n, rng);
            const double nrm = v.norm();
            if (nrm > 0.0) {
                v *= unit(rng) / nrm;  // interior scaling
                x += (std::sqrt(c.slice_coeff[k]) / c.r) * (root * v);
            }
        }
        return x;
    };

    const double w = unit(rng);
    return w * slice_point(slice(rng)) + (1.0 - w) * slice_point(slice(rng));
}

DConeOracleResult dcone_oracle(const DConeApprox& c, const Eigen::VectorXd& query,
                               int trials, std::uint64_t seed) {
    DConeOracleResult out;
    const int d = c.dim;
    const Eigen::VectorXd u = c.axis();
    auto rng = make_rng(seed);

    const auto representable = [&](int j, int k, double w) {
        const double kappa = w * j + (1.0 - w) * k;
        const Eigen::VectorXd y = query - (kappa / d) * u;
        if (c.pinv.off_range_norm(y) > 1e-8) return false;
        const double reach =
            (w * std::sqrt(std::max(c.slice_coeff[j], 0.0)) +
             (1.0 - w) * std::sqrt(std::max(c.slice_coeff[k], 0.0))) /
            c.r;
        return std::sqrt(std::max(c.pinv.quadratic_form(y), 0.0)) <=
               reach + 1e-9;
    };

    // Member search: deterministic weight grid over all slice pairs,
    // then randomized refinement.
    constexpr int kGrid = 64;
    for (int j = 0; j <= d && out.kind == DConeOracleResult::Kind::Inconclusive; ++j)
        for (int k = j; k <= d; ++k)
            for (int g = 0; g <= kGrid; ++g) {
                const double w = static_cast<double>(g) / kGrid;
                if (representable(j, k, w)) {
                    out.kind = DConeOracleResult::Kind::Member;
                    out.slice_a = j;
                    out.slice_b = k;
                    out.weight_a = w;
                    j = k = d + 1;  // break all loops
                    break;
                }
            }
    std::uniform_int_distribution<int> slice(0, d);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int t = 0; t < trials && out.kind == DConeOracleResult::Kind::Inconclusive;
         ++t) {
        const int j = slice(rng), k = slice(rng);
        const double w = unit(rng);
        if (representable(j, k, w)) {
            out.kind = DConeOracleResult::Kind::Member;
            out.slice_a = j;
            out.slice_b = k;
            out.weight_a = w;
        }
    }
    if (out.kind == DConeOracleResult::Kind::Member) return out;

    // Nonmember search: support witnesses along gradient-style candidates
    // (G^+ applied to the residual at axial grid points, optionally tilted
    // along the axis) plus random directions.
    const auto try_witness = [&](Eigen::VectorXd a) {
        const double nrm = a.norm();
        if (nrm < 1e-14) return false;
        a /= nrm;
        const double body = dcone_support(c, a);
        const double val = a.dot(query);
        if (val > body + 1e-8) {
            out.kind = DConeOracleResult::Kind::NonMember;
            out.witness.direction = a;
            out.witness.body_support = body;
            out.witness.hull_support = val;  // value attained by the query
            out.witness.margin = val - body;
            return true;
        }
        return false;
    };

    constexpr int kAxialGrid = 32;
    for (int g = 0; g <= kAxialGrid; ++g) {
        const double kappa = d * static_cast<double>(g) / kAxialGrid;
        const Eigen::VectorXd grad =
            c.pinv.pinv * (query - (kappa / d) * u);
        const double gn = grad.norm();
        for (double tilt : {0.0, 0.5, -0.5, 2.0, -2.0}) {
            Eigen::VectorXd a = grad + tilt * std::max(gn, 1e-6) * u / u.norm();
            if (try_witness(std::move(a))) return out;
        }
    }
    if (try_witness(u)) return out;
    if (try_witness(-u)) return out;
    const Eigen::VectorXd u_perp = u - c.pinv.range_projector * u;
    if (u_perp.norm() > 1e-12) {
        const Eigen::VectorXd q_perp = query - c.pinv.range_projector * query;
        // Off-axis component outside the slice span separates directly.
        Eigen::VectorXd resid =
            q_perp - (q_perp.dot(u_perp) / u_perp.squaredNorm()) * u_perp;
        if (try_witness(std::move(resid))) return out;
    }
    for (int t = 0; t < trials; ++t)
        if (try_witness(sample_direction(c.n, rng))) return out;

    return out;
}

}  // namespace qregion
