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

#include "qregion/hull.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

namespace qregion {

AffineHull affine_hull(const Eigen::MatrixXd& points, double tol) {
    if (points.rows() == 0)
        throw std::invalid_argument("affine_hull: empty point set");
    const int n = static_cast<int>(points.cols());
    AffineHull hull;
    hull.origin = points.colwise().mean();
    Eigen::MatrixXd centered = points.rowwise() - hull.origin.transpose();
    Eigen::BDCSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeFullV);
    const auto& sigma = svd.singularValues();
    const double cutoff = tol * std::max(sigma.size() ? sigma(0) : 0.0, 1.0);
    int m = 0;
    while (m < sigma.size() && sigma(m) > cutoff) ++m;
    hull.dim = m;
    hull.basis = svd.matrixV().leftCols(m);
    hull.normals = svd.matrixV().rightCols(n - m);
    return hull;
}

namespace {

std::vector<Halfspace> interval_facets(const Eigen::MatrixXd& pts) {
    const double lo = pts.col(0).minCoeff();
    const double hi = pts.col(0).maxCoeff();
    Halfspace upper, lower;
    upper.normal = Eigen::VectorXd::Constant(1, 1.0);
    upper.offset = hi;
    lower.normal = Eigen::VectorXd::Constant(1, -1.0);
    lower.offset = -lo;
    return {upper, lower};
}

// Andrew's monotone chain; returns CCW hull vertices.
std::vector<Eigen::Vector2d> monotone_chain(std::vector<Eigen::Vector2d> p) {
    std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) {
        return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
    });
    p.erase(std::unique(p.begin(), p.end(),
                        [](const auto& a, const auto& b) { return a == b; }),
            p.end());
    const auto cross = [](const Eigen::Vector2d& o, const Eigen::Vector2d& a,
                          const Eigen::Vector2d& b) {
        return (a.x() - o.x()) * (b.y() - o.y()) -
               (a.y() - o.y()) * (b.x() - o.x());
    };
    const int n = static_cast<int>(p.size());
    if (n < 3) return p;
    std::vector<Eigen::Vector2d> h(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    for (int i = n - 2, t = k + 1; i >= 0; --i) {
        while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    h.resize(k - 1);
    return h;
}

std::vector<Halfspace> polygon_facets(const Eigen::MatrixXd& pts) {
    std::vector<Eigen::Vector2d> p(pts.rows());
    for (int i = 0; i < pts.rows(); ++i) p[i] = pts.row(i).transpose();
    auto hull = monotone_chain(std::move(p));
    if (hull.size() < 3)
        throw std::invalid_argument("polygon_facets: points are not full-dimensional");
    std::vector<Halfspace> facets;
    for (size_t i = 0; i < hull.size(); ++i) {
        const Eigen::Vector2d a = hull[i];
        const Eigen::Vector2d b = hull[(i + 1) % hull.size()];
        Eigen::Vector2d edge = b - a;
        Eigen::Vector2d normal(edge.y(), -edge.x());  // outward for CCW
        const double len = normal.norm();
        if (len == 0.0) continue;
        normal /= len;
        Halfspace h;
        h.normal = normal;
        h.offset = normal.dot(a);
        facets.push_back(std::move(h));
    }
    return facets;
}

// ---- incremental beneath-beyond hull for m = 3, 4 ----

struct Facet {
    std::vector<int> vertices;  // m point indices
    Eigen::VectorXd normal;     // unit outward
    double offset = 0.0;
    bool alive = true;
};

using RidgeKey = std::array<int, 3>;  // sorted vertex ids, padded with -1

RidgeKey ridge_key(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    RidgeKey key{-1, -1, -1};
    for (size_t i = 0; i < v.size(); ++i) key[i] = v[i];
    return key;
}

// Hyperplane through the m facet vertices, oriented away from `interior`.
bool facet_plane(const Eigen::MatrixXd& pts, const std::vector<int>& verts,
                 const Eigen::VectorXd& interior, double eps, Facet& out) {
    const int m = static_cast<int>(pts.cols());
    Eigen::MatrixXd edges(m - 1, m);
    for (int i = 1; i < m; ++i)
        edges.row(i - 1) = pts.row(verts[i]) - pts.row(verts[0]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(edges);
    lu.setThreshold(1e-12);
    if (lu.dimensionOfKernel() != 1) return false;
    Eigen::VectorXd normal = lu.kernel().col(0);
    const double len = normal.norm();
    if (len < 1e-300) return false;
    normal /= len;
    double offset = normal.dot(pts.row(verts[0]));
    const double side = normal.dot(interior) - offset;
    if (std::abs(side) <= eps) return false;  // interior on the plane
    if (side > 0) {
        normal = -normal;
        offset = -offset;
    }
    out.vertices = verts;
    out.normal = std::move(normal);
    out.offset = offset;
    out.alive = true;
    return true;
}

std::vector<Halfspace> incremental_facets(const Eigen::MatrixXd& pts,
                                          double eps_rel) {
    const int m = static_cast<int>(pts.cols());
    const int npts = static_cast<int>(pts.rows());
    const double scale =
        std::max(pts.cwiseAbs().maxCoeff(), 1.0);
    const double eps = eps_rel * scale;

    // Greedy initial simplex: extreme pair, then max-residual points.
    std::vector<int> simplex;
    {
        int i_min = 0, i_max = 0;
        for (int i = 0; i < npts; ++i) {
            if (pts(i, 0) < pts(i_min, 0)) i_min = i;
            if (pts(i, 0) > pts(i_max, 0)) i_max = i;
        }
        if (i_min == i_max) i_max = (i_min + 1) % npts;
        simplex = {i_min, i_max};
        Eigen::MatrixXd dirs(m, 0);
        Eigen::VectorXd base = pts.row(i_min).transpose();
        {
            Eigen::VectorXd e = pts.row(i_max).transpose() - base;
            if (e.norm() <= eps)
                throw std::invalid_argument("facet_enumerate: degenerate point set");
            dirs.conservativeResize(m, 1);
            dirs.col(0) = e / e.norm();
        }
        while (static_cast<int>(simplex.size()) < m + 1) {
            int best = -1;
            double best_res = eps;
            for (int i = 0; i < npts; ++i) {
                Eigen::VectorXd x = pts.row(i).transpose() - base;
                Eigen::VectorXd res = x - dirs * (dirs.transpose() * x);
                const double r = res.norm();
                if (r > best_res) {
                    best_res = r;
                    best = i;
                }
            }
            if (best < 0)
                throw std::invalid_argument(
                    "facet_enumerate: points are not full-dimensional");
            simplex.push_back(best);
            Eigen::VectorXd x = pts.row(best).transpose() - base;
            Eigen::VectorXd res = x - dirs * (dirs.transpose() * x);
            dirs.conservativeResize(m, dirs.cols() + 1);
            dirs.col(dirs.cols() - 1) = res / res.norm();
        }
    }

    Eigen::VectorXd interior = Eigen::VectorXd::Zero(m);
    for (int id : simplex) interior += pts.row(id).transpose();
    interior /= static_cast<double>(simplex.size());

    std::vector<Facet> facets;
    std::map<RidgeKey, std::vector<int>> ridge_map;
    const auto link_ridges = [&](int facet_id) {
        const auto& verts = facets[facet_id].vertices;
        for (size_t skip = 0; skip < verts.size(); ++skip) {
            std::vector<int> ridge;
            for (size_t i = 0; i < verts.size(); ++i)
                if (i != skip) ridge.push_back(verts[i]);
            ridge_map[ridge_key(ridge)].push_back(facet_id);
        }
    };

    for (size_t skip = 0; skip < simplex.size(); ++skip) {
        std::vector<int> verts;
        for (size_t i = 0; i < simplex.size(); ++i)
            if (i != skip) verts.push_back(simplex[i]);
        Facet f;
        if (!facet_plane(pts, verts, interior, 0.0, f))
            throw std::invalid_argument("facet_enumerate: degenerate initial simplex");
        facets.push_back(std::move(f));
        link_ridges(static_cast<int>(facets.size()) - 1);
    }

    int dead_count = 0;
    const auto compact = [&]() {
        std::vector<Facet> kept;
        kept.reserve(facets.size() - dead_count);
        for (auto& f : facets)
            if (f.alive) kept.push_back(std::move(f));
        facets = std::move(kept);
        ridge_map.clear();
        for (int f = 0; f < static_cast<int>(facets.size()); ++f)
            link_ridges(f);
        dead_count = 0;
    };

    for (int p = 0; p < npts; ++p) {
        if (std::find(simplex.begin(), simplex.end(), p) != simplex.end())
            continue;
        if (dead_count > 1024 &&
            dead_count > static_cast<int>(facets.size()) / 2)
            compact();
        const Eigen::VectorXd x = pts.row(p).transpose();
        std::vector<int> visible;
        for (int f = 0; f < static_cast<int>(facets.size()); ++f)
            if (facets[f].alive &&
                facets[f].normal.dot(x) - facets[f].offset > eps)
                visible.push_back(f);
        if (visible.empty()) continue;

        // Horizon: ridges incident to exactly one visible facet.
        std::map<RidgeKey, std::pair<std::vector<int>, int>> horizon;
        for (int f : visible) {
            const auto& verts = facets[f].vertices;
            for (size_t skip = 0; skip < verts.size(); ++skip) {
                std::vector<int> ridge;
                for (size_t i = 0; i < verts.size(); ++i)
                    if (i != skip) ridge.push_back(verts[i]);
                const RidgeKey key = ridge_key(ridge);
                int visible_count = 0;
                for (int g : ridge_map[key])
                    if (facets[g].alive &&
                        std::find(visible.begin(), visible.end(), g) != visible.end())
                        ++visible_count;
                if (visible_count == 1)
                    horizon[key] = {ridge, f};
            }
        }

        dead_count += static_cast<int>(visible.size());
        for (int f : visible) {
            facets[f].alive = false;
            const auto& verts = facets[f].vertices;
            for (size_t skip = 0; skip < verts.size(); ++skip) {
                std::vector<int> ridge;
                for (size_t i = 0; i < verts.size(); ++i)
                    if (i != skip) ridge.push_back(verts[i]);
                auto& lst = ridge_map[ridge_key(ridge)];
                lst.erase(std::remove(lst.begin(), lst.end(), f), lst.end());
            }
        }

        for (auto& [key, entry] : horizon) {
            std::vector<int> verts = entry.first;
            verts.push_back(p);
            Facet f;
            if (!facet_plane(pts, verts, interior, 0.0, f)) continue;
            facets.push_back(std::move(f));
            link_ridges(static_cast<int>(facets.size()) - 1);
        }
    }

    // Deduplicate coplanar facets (angular tolerance 1e-9) via a
    // quantized-key map; missing a near-duplicate only leaves a
    // redundant halfspace behind.
    std::vector<Halfspace> out;
    std::map<std::vector<long long>, int> seen;
    for (const auto& f : facets) {
        if (!f.alive) continue;
        std::vector<long long> key(m + 1);
        for (int i = 0; i < m; ++i)
            key[i] = static_cast<long long>(std::llround(f.normal(i) * 1e9));
        key[m] = static_cast<long long>(std::llround(f.offset / scale * 1e9));
        if (seen.emplace(std::move(key), 1).second)
            out.push_back({f.normal, f.offset});
    }
    return out;
}

}  // namespace

std::vector<Halfspace> facet_enumerate(const Eigen::MatrixXd& points,
                                       double eps) {
    const int m = static_cast<int>(points.cols());
    if (points.rows() < m + 1)
        throw std::invalid_argument("facet_enumerate: too few points");
    switch (m) {
        case 1: return interval_facets(points);
        case 2: return polygon_facets(points);
        case 3:
        case 4: return incremental_facets(points, eps);
        default:
            throw std::invalid_argument(
                "facet_enumerate: dimension must be between 1 and 4");
    }
}

}  // namespace qregion
