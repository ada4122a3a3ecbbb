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

#include "qregion/region.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace qregion {

namespace {

Verdict classify(double form, double threshold_sq, double residual,
                 const Tolerances& tol) {
    if (residual > tol.range) return Verdict::OffRange;
    const double margin = form - threshold_sq;
    if (std::abs(margin) <= tol.member) return Verdict::Boundary;
    return margin < 0.0 ? Verdict::Inside : Verdict::Outside;
}

void require_valid(const Ensemble& e, const Tolerances& tol) {
    auto rep = validate(e, tol);
    if (!rep.valid)
        throw std::invalid_argument("ensemble '" + e.label +
                                    "' failed validation: " + rep.problems.front());
}

// Centered Gram matrix <a_i - Tr[a_i] 1/d, a_j - Tr[a_j] 1/d>.
Eigen::MatrixXd centered_gram(const GramMatrix& g, int d) {
    return g.products - g.traces * g.traces.transpose() / static_cast<double>(d);
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Inside: return "inside";
        case Verdict::Boundary: return "boundary";
        case Verdict::Outside: return "outside";
        case Verdict::OffRange: return "off-range";
    }
    return "unknown";
}

EllipsoidApprox approx_measurement(const Ensemble& e, double r,
                                   const Tolerances& tol) {
    if (e.kind != EnsembleKind::Measurement)
        throw std::invalid_argument("approx_measurement: ensemble is not a measurement");
    if (!(r > 0.0))
        throw std::invalid_argument("approx_measurement: r must be positive");
    require_valid(e, tol);

    const int n = e.n();
    const int d = e.dim;
    GramMatrix g = gram(e);

    EllipsoidApprox a;
    a.n = n;
    a.dim = d;
    a.r = r;
    a.center = g.traces / static_cast<double>(d);
    a.covariance =
        (static_cast<double>(d - 1) / d) * centered_gram(g, d);
    a.pinv = pinv_gram(a.covariance, tol.effective_rank_rel(n, d), tol.herm);
    a.informationally_complete = (a.pinv.rank == d * d - 1);
    return a;
}

MembershipReport membership(const EllipsoidApprox& a, const Eigen::VectorXd& p,
                            const Tolerances& tol) {
    if (p.size() != a.n)
        throw std::invalid_argument("membership: point has wrong length");
    const Eigen::VectorXd x = p - a.center;
    MembershipReport rep;
    rep.range_residual = a.pinv.off_range_norm(x);
    rep.form_value = a.pinv.quadratic_form(x);
    rep.threshold_sq = 1.0 / (a.r * a.r);
    rep.verdict = classify(rep.form_value, rep.threshold_sq, rep.range_residual, tol);
    return rep;
}

double support(const EllipsoidApprox& a, const Eigen::VectorXd& direction) {
    if (direction.size() != a.n)
        throw std::invalid_argument("support: direction has wrong length");
    const double variance =
        std::max(direction.dot(a.covariance * direction), 0.0);
    return direction.dot(a.center) + std::sqrt(variance) / a.r;
}

DConeApprox approx_states(const Ensemble& e, double r, const Tolerances& tol) {
    if (e.kind != EnsembleKind::StateFamily)
        throw std::invalid_argument("approx_states: ensemble is not a state family");
    if (!(r > 0.0))
        throw std::invalid_argument("approx_states: r must be positive");
    require_valid(e, tol);

    const int n = e.n();
    const int d = e.dim;
    GramMatrix g = gram(e);

    DConeApprox c;
    c.n = n;
    c.dim = d;
    c.r = r;
    c.shape = g.products -
              Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(d));
    c.pinv = pinv_gram(c.shape, tol.effective_rank_rel(n, d), tol.herm);
    c.slice_coeff.resize(d + 1);
    for (int k = 0; k <= d; ++k)
        c.slice_coeff[k] =
            static_cast<double>(k) - static_cast<double>(k) * k / d;
    c.informationally_complete = (c.pinv.rank == d * d - 1);
    return c;
}

MembershipReport slice_membership(const DConeApprox& c, const Eigen::VectorXd& q,
                                  int k, const Tolerances& tol) {
    if (q.size() != c.n)
        throw std::invalid_argument("slice_membership: point has wrong length");
    if (k < 0 || k > c.dim)
        throw std::invalid_argument("slice_membership: k must be in [0, d]");

    const Eigen::VectorXd x =
        q - (static_cast<double>(k) / c.dim) * c.axis();
    MembershipReport rep;
    rep.kappa_star = static_cast<double>(k);

    if (k == 0 || k == c.dim) {
        // Degenerate slices are single points; membership is equality.
        rep.range_residual = x.norm();
        rep.form_value = 0.0;
        rep.threshold_sq = 0.0;
        rep.verdict =
            rep.range_residual <= tol.range ? Verdict::Inside : Verdict::Outside;
        return rep;
    }

    rep.range_residual = c.pinv.off_range_norm(x);
    rep.form_value = c.pinv.quadratic_form(x) / c.slice_coeff[k];
    rep.threshold_sq = 1.0 / (c.r * c.r);
    rep.verdict = classify(rep.form_value, rep.threshold_sq, rep.range_residual, tol);
    return rep;
}

double envelope_radius(const DConeApprox& c, double kappa) {
    const int d = c.dim;
    if (kappa <= 0.0 || kappa >= static_cast<double>(d)) return 0.0;
    // sqrt(c_k) is concave in k, so the concave envelope is the chord
    // interpolation between adjacent integer nodes.
    const int k0 = static_cast<int>(std::floor(kappa));
    const int k1 = std::min(k0 + 1, d);
    const double w = kappa - k0;
    const double r0 = std::sqrt(std::max(c.slice_coeff[k0], 0.0)) / c.r;
    const double r1 = std::sqrt(std::max(c.slice_coeff[k1], 0.0)) / c.r;
    return (1.0 - w) * r0 + w * r1;
}

namespace {

// Golden-section minimization of a unimodal function on [lo, hi].
double golden_section(double lo, double hi, double tol_interval,
                      const std::function<double(double)>& f) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol_interval) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

MembershipReport dcone_membership(const DConeApprox& c, const Eigen::VectorXd& q,
                                  const Tolerances& tol) {
    if (q.size() != c.n)
        throw std::invalid_argument("dcone_membership: point has wrong length");
    const int d = c.dim;
    const Eigen::VectorXd u = c.axis();
    const Eigen::VectorXd u_perp = u - c.pinv.range_projector * u;

    const auto form_at = [&](double kappa) {
        const Eigen::VectorXd x = q - (kappa / d) * u;
        return c.pinv.quadratic_form(x);
    };

    MembershipReport rep;
    if (u_perp.norm() > tol.range) {
        // The off-range component of q fixes the axial coordinate.
        const Eigen::VectorXd q_perp = q - c.pinv.range_projector * q;
        double kappa = d * q_perp.dot(u_perp) / u_perp.squaredNorm();
        rep.range_residual = (q_perp - (kappa / d) * u_perp).norm();
        const double kappa_band = tol.member * d;
        if (kappa < -kappa_band || kappa > d + kappa_band) {
            rep.kappa_star = kappa;
            rep.form_value = form_at(std::clamp(kappa, 0.0, static_cast<double>(d)));
            rep.threshold_sq = 0.0;
            rep.verdict = rep.range_residual > tol.range ? Verdict::OffRange
                                                         : Verdict::Outside;
            return rep;
        }
        kappa = std::clamp(kappa, 0.0, static_cast<double>(d));
        rep.kappa_star = kappa;
        rep.form_value = form_at(kappa);
        const double env = envelope_radius(c, kappa);
        rep.threshold_sq = env * env;
        rep.verdict =
            classify(rep.form_value, rep.threshold_sq, rep.range_residual, tol);
        return rep;
    }

    // Axis inside range(G): minimize the convex gap sqrt(f) - R_env.
    const auto gap = [&](double kappa) {
        return std::sqrt(std::max(form_at(kappa), 0.0)) -
               envelope_radius(c, kappa);
    };
    const double kappa =
        golden_section(0.0, static_cast<double>(d), 1e-10, gap);
    rep.kappa_star = kappa;
    rep.form_value = form_at(kappa);
    const double env = envelope_radius(c, kappa);
    rep.threshold_sq = env * env;
    rep.range_residual = c.pinv.off_range_norm(q - (kappa / d) * u);
    rep.verdict =
        classify(rep.form_value, rep.threshold_sq, rep.range_residual, tol);
    return rep;
}

double dcone_support(const DConeApprox& c, const Eigen::VectorXd& direction) {
    if (direction.size() != c.n)
        throw std::invalid_argument("dcone_support: direction has wrong length");
    const double axial = direction.sum() / c.dim;  // a.u / d
    const double variance =
        std::max(direction.dot(c.shape * direction), 0.0);
    double best = -std::numeric_limits<double>::infinity();
    for (int k = 0; k <= c.dim; ++k) {
        const double radial =
            std::sqrt(std::max(c.slice_coeff[k], 0.0) * variance) / c.r;
        best = std::max(best, k * axial + radial);
    }
    return best;
}

Eigen::VectorXd image(const Ensemble& e, const Matrix& op) {
    Eigen::VectorXd p(e.n());
    for (int i = 0; i < e.n(); ++i) p(i) = hs_inner(e.elements[i], op);
    return p;
}

Matrix reconstruct_state(const Ensemble& e, const Eigen::VectorXd& p,
                         const Tolerances& tol) {
    if (e.kind != EnsembleKind::Measurement)
        throw std::invalid_argument("reconstruct_state: ensemble is not a measurement");
    if (p.size() != e.n())
        throw std::invalid_argument("reconstruct_state: point has wrong length");
    const int d = e.dim;
    GramMatrix g = gram(e);
    const Eigen::VectorXd t = g.traces / static_cast<double>(d);
    auto fac = pinv_gram(centered_gram(g, d), tol.effective_rank_rel(e.n(), d),
                         tol.herm);

    const Eigen::VectorXd x = p - t;
    if (fac.off_range_norm(x) > tol.range)
        throw std::invalid_argument(
            "reconstruct_state: point is outside the affine range of the measurement");

    const Eigen::VectorXd coeff = fac.pinv * x;
    Matrix rho = Matrix::Identity(d, d) / static_cast<double>(d);
    for (int i = 0; i < e.n(); ++i)
        rho += coeff(i) * (e.elements[i] -
                           g.traces(i) * Matrix::Identity(d, d) / static_cast<double>(d));
    return 0.5 * (rho + rho.adjoint());
}

Matrix reconstruct_effect(const Ensemble& e, const Eigen::VectorXd& q, int k,
                          const Tolerances& tol) {
    if (e.kind != EnsembleKind::StateFamily)
        throw std::invalid_argument("reconstruct_effect: ensemble is not a state family");
    if (q.size() != e.n())
        throw std::invalid_argument("reconstruct_effect: point has wrong length");
    if (k < 0 || k > e.dim)
        throw std::invalid_argument("reconstruct_effect: k must be in [0, d]");
    const int d = e.dim;
    GramMatrix g = gram(e);
    Eigen::MatrixXd shape =
        g.products - Eigen::MatrixXd::Constant(e.n(), e.n(), 1.0 / d);
    auto fac = pinv_gram(shape, tol.effective_rank_rel(e.n(), d), tol.herm);

    const Eigen::VectorXd x =
        q - (static_cast<double>(k) / d) * Eigen::VectorXd::Ones(e.n());
    if (fac.off_range_norm(x) > tol.range)
        throw std::invalid_argument(
            "reconstruct_effect: point is outside the slice's affine range");

    const Eigen::VectorXd coeff = fac.pinv * x;
    Matrix pi =
        (static_cast<double>(k) / d) * Matrix::Identity(d, d);
    for (int i = 0; i < e.n(); ++i)
        pi += coeff(i) * (e.elements[i] -
                          Matrix::Identity(d, d) / static_cast<double>(d));
    return 0.5 * (pi + pi.adjoint());
}

}  // namespace qregion
