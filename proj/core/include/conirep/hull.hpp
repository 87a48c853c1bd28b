#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "conirep/linalg.hpp"

namespace conirep {

/// A hull facet after coplanar simplices have been merged. `vertices` holds
/// every input point lying on the supporting hyperplane (within tolerance),
/// sorted ascending.
struct HullFacet {
    std::vector<std::size_t> vertices;
    Vector normal;  ///< outward unit normal
    double offset = 0.0;  ///< normal . x == offset on the facet

    [[nodiscard]] double signed_distance(const Vector& p) const { return normal.dot(p) - offset; }
    [[nodiscard]] bool contains(std::size_t index) const;
};

struct ConvexHull {
    std::size_t dim = 0;
    bool full_dimensional = false;
    std::vector<HullFacet> facets;
    /// Boundary triangulation produced by the incremental construction; each
    /// entry has `dim` point indices.
    std::vector<std::vector<std::size_t>> simplicial_facets;
};

/// Convex hull of a point set in R^d, d >= 1, by incremental Quickhull:
/// an initial simplex, per-facet outside sets, and repeated expansion by the
/// furthest outside point. Points within `tol` of a facet plane count as
/// inside. If the points do not span d dimensions the result has
/// `full_dimensional == false` and no facets.
ConvexHull convex_hull(std::span<const Vector> points, double tol = 1e-9);

}  // namespace conirep
