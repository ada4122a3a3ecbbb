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

#include <Eigen/Dense>
#include <vector>

namespace qregion {

/// Halfspace normal . x <= offset. Also reused for equality constraints
/// (normal . x == offset) of affine hulls.
struct Halfspace {
    Eigen::VectorXd normal;
    double offset = 0.0;
};

/// Orthonormal frame of the affine hull of a point cloud.
struct AffineHull {
    Eigen::VectorXd origin;   // centroid
    Eigen::MatrixXd basis;    // n x m, orthonormal columns spanning the hull
    Eigen::MatrixXd normals;  // n x (n - m), orthonormal complement
    int dim = 0;              // m

    /// Coordinates of x in the hull frame.
    Eigen::VectorXd project(const Eigen::VectorXd& x) const {
        return basis.transpose() * (x - origin);
    }
};

/// Affine hull of the rows of `points`; directions with singular value
/// below tol * max(sigma_max, 1) are treated as degenerate.
AffineHull affine_hull(const Eigen::MatrixXd& points, double tol = 1e-9);

/// Exact facet enumeration of the convex hull of full-dimensional points
/// in R^m for m in {1, 2, 3, 4}: sorted interval (1), monotone chain (2),
/// incremental beneath-beyond with ridge-based horizon tracking (3, 4).
/// Facets are deduplicated with angular tolerance 1e-9. `eps` is the
/// relative thickness below which a point counts as on a facet plane.
std::vector<Halfspace> facet_enumerate(const Eigen::MatrixXd& points,
                                       double eps = 1e-9);

}  // namespace qregion
