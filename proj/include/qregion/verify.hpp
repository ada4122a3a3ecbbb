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
#include <random>
#include <string>

#include "qregion/region.hpp"
#include "qregion/simulability.hpp"

namespace qregion {

/// Aggregate numbers from a Monte Carlo verification run. Which fields
/// are populated depends on the operation; reruns with the same seed
/// reproduce every field bit-for-bit. `violations` counts samples that
/// breach the checked inequality by more than 1e-8.
struct VerificationStats {
    long samples = 0;
    std::uint64_t seed = 0;
    long violations = 0;
    bool skipped = false;
    std::string note;

    double max_form_pure = std::numeric_limits<double>::quiet_NaN();
    double min_form_pure = std::numeric_limits<double>::quiet_NaN();
    double mean_form_pure = 0.0;
    double max_form_mixed = std::numeric_limits<double>::quiet_NaN();
    double min_form_mixed = std::numeric_limits<double>::quiet_NaN();
    double mean_form_mixed = 0.0;

    double min_reconstruction_eigenvalue =
        std::numeric_limits<double>::quiet_NaN();
    double max_forward_residual = 0.0;
    double max_trace_residual = 0.0;

    double max_slice_form_error = 0.0;
};

/// Violation threshold shared by all harness checks; the reporting
/// boundary band (1e-6) is wider on purpose.
inline constexpr double kViolationTol = 1e-8;

/// Outer inclusion of a measurement image in E_1: samples states (half
/// Haar pure, half mixed of random rank >= 2), maps them, and records
/// membership forms. Pure/mixed form statistics land in the
/// corresponding fields.
VerificationStats verify_outer_measurement(const Ensemble& e, long samples,
                                           std::uint64_t seed,
                                           const Tolerances& tol = {});

/// Inner inclusion: probes uniformly on the boundary of E_{d-1}
/// (form = 1/(d-1)^2) inside the affine range, reconstructs the minimal
/// norm preimage and checks it is a state. Requires an informationally
/// complete measurement; otherwise the stats carry skipped = true.
/// Probe forms land in the pure fields.
VerificationStats verify_inner_measurement(const Ensemble& e, long probes,
                                           std::uint64_t seed,
                                           const Tolerances& tol = {});

/// Outer inclusion of a state-family image in the r = 1 d-cone: maps
/// Haar rank-k projectors for every trace class plus random effects.
/// Slice forms of projector effects land in the pure fields (they must
/// equal 1 when the family is informationally complete; the largest
/// |form - 1| is max_slice_form_error); d-cone membership margins of
/// random effects land in the mixed fields.
VerificationStats verify_states_cone(const Ensemble& e, long samples,
                                     std::uint64_t seed,
                                     const Tolerances& tol = {});

/// Brute-force membership oracle for the d-cone, independent of
/// dcone_membership: tries to exhibit the query as a convex combination
/// of points on two slices (grid plus randomized search over slice pairs
/// and weights), and certifies nonmembership by a sampled direction whose
/// support is exceeded. Inconclusive is allowed near the boundary.
struct DConeOracleResult {
    enum class Kind { Member, NonMember, Inconclusive };
    Kind kind = Kind::Inconclusive;
    int slice_a = -1;
    int slice_b = -1;
    double weight_a = 0.0;          // member evidence: weight on slice_a
    ContainmentWitness witness;     // nonmember evidence
};

DConeOracleResult dcone_oracle(const DConeApprox& c, const Eigen::VectorXd& query,
                               int trials, std::uint64_t seed);

/// Uniform point on the form = target_form shell of the ellipsoid, drawn
/// in the sqrt(Q^+) metric inside the affine range.
Eigen::VectorXd sample_ellipsoid_boundary(const EllipsoidApprox& a,
                                          double target_form,
                                          std::mt19937_64& rng);

/// Random member of the d-cone: a convex combination of two random slice
/// points (boundary when `boundary` is set and the slices are picked
/// equal).
Eigen::VectorXd sample_dcone_member(const DConeApprox& c, std::mt19937_64& rng);

}  // namespace qregion
