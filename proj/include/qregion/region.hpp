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

#include <vector>

#include "qregion/ensemble.hpp"
#include "qregion/pinv.hpp"
#include "qregion/tolerances.hpp"

namespace qregion {

enum class Verdict { Inside, Boundary, Outside, OffRange };

std::string to_string(Verdict v);

/// Result of a membership query against an ellipsoid or d-cone.
/// `form_value` is the quadratic form in the pseudo-inverse metric,
/// `threshold_sq` what it is compared against (1/r^2 for ellipsoids and
/// slices, the squared envelope radius at kappa_star for cones), and
/// `range_residual` the distance from the affine range. For cones
/// `kappa_star` is the minimizing axial coordinate.
struct MembershipReport {
    double form_value = 0.0;
    double range_residual = 0.0;
    double threshold_sq = 1.0;
    double kappa_star = std::numeric_limits<double>::quiet_NaN();
    Verdict verdict = Verdict::Inside;

    /// Inside or on the boundary band.
    bool member() const {
        return verdict == Verdict::Inside || verdict == Verdict::Boundary;
    }
    double margin() const { return form_value - threshold_sq; }
};

/// The ellipsoid family E_r of a measurement: center t_i = Tr[pi_i]/d and
/// covariance Q_ij = ((d-1)/d) (Tr[pi_i pi_j] - Tr[pi_i] Tr[pi_j]/d).
/// r = 1 encloses the image of the state set; r = d-1 is enclosed by it.
struct EllipsoidApprox {
    int n = 0;
    int dim = 0;
    double r = 1.0;
    Eigen::VectorXd center;
    Eigen::MatrixXd covariance;
    PinvFactorization pinv;
    bool informationally_complete = false;
};

EllipsoidApprox approx_measurement(const Ensemble& e, double r,
                                   const Tolerances& tol = {});

MembershipReport membership(const EllipsoidApprox& a, const Eigen::VectorXd& p,
                            const Tolerances& tol = {});

/// Exact support function of E_r: a.t + sqrt(a^T Q a)/r.
double support(const EllipsoidApprox& a, const Eigen::VectorXd& direction);

/// The elliptical d-cone of a state family: common shape matrix
/// G_ij = Tr[rho_i rho_j] - 1/d, slice centers (k/d) u and slice
/// covariances Q_k = c_k G with c_k = k - k^2/d.
struct DConeApprox {
    int n = 0;
    int dim = 0;
    double r = 1.0;
    Eigen::MatrixXd shape;  // G
    PinvFactorization pinv;
    std::vector<double> slice_coeff;  // c_0 .. c_d
    bool informationally_complete = false;

    Eigen::VectorXd axis() const { return Eigen::VectorXd::Ones(n); }
};

DConeApprox approx_states(const Ensemble& e, double r,
                          const Tolerances& tol = {});

/// Membership in the single trace-k slice ellipsoid E_r^k. Slices k = 0
/// and k = d are points; those degenerate to an equality check against
/// the apex.
MembershipReport slice_membership(const DConeApprox& c, const Eigen::VectorXd& q,
                                  int k, const Tolerances& tol = {});

/// Membership in conv of the union of all slices. When the axis leaves
/// the range of G the axial coordinate is forced by the off-range
/// component; otherwise sqrt(f) - R_env is minimized over kappa in [0, d]
/// by golden-section search.
MembershipReport dcone_membership(const DConeApprox& c, const Eigen::VectorXd& q,
                                  const Tolerances& tol = {});

/// Support function of the cone: max_k [(k/d) a.u + sqrt(c_k a^T G a)/r].
double dcone_support(const DConeApprox& c, const Eigen::VectorXd& direction);

/// Piecewise-linear concave envelope of the points (k, sqrt(c_k)/r),
/// evaluated at kappa in [0, d].
double envelope_radius(const DConeApprox& c, double kappa);

/// Image of an operator through the ensemble: component i is
/// Tr[element_i * op] (outcome probabilities for measurements, effect
/// probabilities for state families).
Eigen::VectorXd image(const Ensemble& e, const Matrix& op);

/// Minimal-norm unit-trace preimage of a probability vector under a
/// measurement. Requires p - t within tol.range of the range of the
/// centered frame; informationally complete measurements invert their
/// images exactly.
Matrix reconstruct_state(const Ensemble& e, const Eigen::VectorXd& p,
                         const Tolerances& tol = {});

/// Minimal-norm trace-k preimage of an effect-probability vector under a
/// state family.
Matrix reconstruct_effect(const Ensemble& e, const Eigen::VectorXd& q, int k,
                          const Tolerances& tol = {});

}  // namespace qregion
