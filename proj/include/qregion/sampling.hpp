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

#include "qregion/hermitian.hpp"

namespace qregion {

/// Derives an independent child seed from (seed, stream); used to hand
/// per-task RNG streams to parallel sample loops.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

inline std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

/// Standard complex Gaussian (Ginibre) matrix, entries re+im ~ N(0,1) each.
Matrix ginibre(int rows, int cols, std::mt19937_64& rng);

/// Haar-distributed unitary via QR of a Ginibre matrix with the phases of
/// the R diagonal absorbed into Q.
Matrix sample_haar_unitary(int d, std::mt19937_64& rng);

/// Rank-1 projector |psi><psi| with |psi> uniform on the unit sphere.
Matrix sample_haar_pure(int d, std::mt19937_64& rng);

/// Unit-trace PSD operator of the given rank (induced measure, G G^dagger
/// normalized). Requires 1 <= rank <= d.
Matrix sample_mixed(int d, int rank, std::mt19937_64& rng);

/// Haar-rotated projector of trace k. k = 0 gives the zero operator,
/// k = d the identity. Requires 0 <= k <= d.
Matrix sample_projector(int d, int trace_k, std::mt19937_64& rng);

/// Random effect (0 <= spectrum <= 1): a uniform mixture of two
/// Haar projectors with trace classes drawn uniformly from {0..d}.
/// A harness convention covering all extremal trace classes, not a claim
/// about any canonical measure on effects.
Matrix sample_random_effect(int d, std::mt19937_64& rng);

/// Gaussian vector in R^n.
Vector gaussian_vector(int n, std::mt19937_64& rng);

/// Uniform direction on the unit sphere in R^n.
Vector sample_direction(int n, std::mt19937_64& rng);

}  // namespace qregion
