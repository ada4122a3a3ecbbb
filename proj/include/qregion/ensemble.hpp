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
#include <string>
#include <vector>

#include "qregion/hermitian.hpp"
#include "qregion/tolerances.hpp"

namespace qregion {

enum class EnsembleKind { Measurement, StateFamily };

std::string to_string(EnsembleKind kind);
EnsembleKind ensemble_kind_from_string(const std::string& s);

/// An ordered family of Hermitian operators, either a POVM (elements PSD,
/// summing to the identity) or a family of states (elements PSD, unit
/// trace). Element order is part of the identity: probability vectors
/// are index-aligned with it.
struct Ensemble {
    EnsembleKind kind = EnsembleKind::Measurement;
    int dim = 0;
    std::vector<Matrix> elements;
    std::string label;

    int n() const { return static_cast<int>(elements.size()); }
};

struct ValidationReport {
    bool valid = true;
    bool informationally_complete = false;
    int centered_rank = 0;                    // rank of the centered Gram matrix
    std::vector<double> min_eigenvalues;      // per element
    std::vector<double> hermiticity_residuals;
    double completeness_residual = 0.0;       // ||sum pi - 1||_F, measurements
    std::vector<double> trace_residuals;      // |Tr rho - 1|, state families
    std::vector<std::string> problems;
};

ValidationReport validate(const Ensemble& e, const Tolerances& tol = {});

/// Pairwise Hilbert-Schmidt products plus the trace vector.
struct GramMatrix {
    Eigen::MatrixXd products;  // n x n, PSD
    Eigen::VectorXd traces;    // length n
};

GramMatrix gram(const Ensemble& e);

/// Symmetric informationally complete family with d^2 elements.
/// d = 2 is the tetrahedron; d = 3 the Weyl-Heisenberg orbit of the
/// Hesse fiducial (0, 1, -1)/sqrt(2). As a Measurement the projectors
/// are divided by d. Throws for other dimensions.
Ensemble make_sic(int d, EnsembleKind kind);

/// Complete set of d+1 mutually unbiased bases for prime d: the
/// computational basis plus the quadratic-phase Fourier bases (X/Y/Z
/// eigenbases at d = 2). As a Measurement each projector is divided
/// by d+1. Throws for non-prime d.
Ensemble make_mub(int d, EnsembleKind kind);

/// Named small ensembles: "trine", "tetrahedron", "bb84-states",
/// "pair" (|0>, |+>), "computational(d)".
Ensemble builtin(const std::string& name);

/// n Haar-random rank-1 projectors normalized by the inverse square root
/// of their sum: a valid measurement, almost surely informationally
/// complete once n >= d^2.
Ensemble random_ic_measurement(int d, int n, std::uint64_t seed);

}  // namespace qregion
