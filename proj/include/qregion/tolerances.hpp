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

#include <algorithm>
#include <limits>

namespace qregion {

/// Numerical tolerances shared across the library. All values are
/// overridable; the defaults are tuned for double precision at the
/// matrix sizes this library targets (n up to a few dozen outcomes).
struct Tolerances {
    double herm = 1e-10;    ///< Hermiticity / symmetry residual bound.
    double psd = 1e-10;     ///< How negative an eigenvalue may be before PSD fails.
    double recon = 1e-9;    ///< Reconstruction / completeness residual bound.
    double penrose = 1e-9;  ///< Penrose identity residual bound.
    double range = 1e-8;    ///< Distance from an affine range that still counts as on-range.
    double member = 1e-7;   ///< Half-width of the boundary band in quadratic-form value.

    /// Relative eigenvalue cutoff for rank decisions in pseudo-inverses.
    /// Zero means "auto": 64 * eps * max(n, d^2), which keeps the rank of
    /// informationally complete Gram matrices pinned at d^2 - 1.
    double rank_rel = 0.0;

    double effective_rank_rel(int n, int d) const {
        if (rank_rel > 0.0) return rank_rel;
        const double eps = std::numeric_limits<double>::epsilon();
        return 64.0 * eps * static_cast<double>(std::max(n, d * d));
    }
};

}  // namespace qregion
