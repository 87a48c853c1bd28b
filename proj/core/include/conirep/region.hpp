#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "conirep/cone.hpp"
#include "conirep/integrate.hpp"
#include "conirep/linalg.hpp"

namespace conirep {

/// Face of [0,1]^m: the coordinates in `fixed` are pinned to `values`
/// (0 or 1), the ones in `free` range over [0,1].
struct HypercubeElement {
    std::vector<std::size_t> fixed;
    std::vector<int> values;
    std::vector<std::size_t> free;

    [[nodiscard]] std::size_t dimension() const { return free.size(); }
};

/// All faces of [0,1]^m of the given dimension, in a fixed order.
std::vector<HypercubeElement> hypercube_elements(std::size_t m, std::size_t dimension);

struct IntersectionStats {
    std::size_t systems = 0;
    std::size_t skipped_singular = 0;
};

/// Region of [0,1]^m served by one cone element, in V-representation plus
/// its fan triangulation.
struct RegionPolytope {
    RaySet element;
    std::size_t element_dimension = 0;
    std::vector<Vector> vertices;
    std::vector<Simplex> simplices;
    double volume = 0.0;
    bool degenerate = true;
    IntersectionStats stats;
};

/// Face lattice of the pointed part of an adjacent cone.
Cone adjacent_lattice(const AdjacentCone& adj, const Tolerances& tol = {});

/// Vertices of adj intersected with [0,1]^m: the origin, every cube vertex
/// inside adj, and every point where a face of adj meets a cube face of
/// complementary dimension within both faces. Faces of adj are the faces of
/// `lattice` extended by adj's lineality space. Near-singular intersection
/// systems are skipped and counted in `stats`. Deduplicated, sorted
/// lexicographically.
std::vector<Vector> hypercube_intersect(const AdjacentCone& adj, const Cone& lattice, const Tolerances& tol = {},
                                        IntersectionStats* stats = nullptr);

/// Convex-hull facets of a vertex set, coplanar facets merged; empty when the
/// vertices are not full-dimensional.
std::vector<std::vector<std::size_t>> polytope_facets(std::span<const Vector> vertices, double tol = 1e-9);

/// Fan triangulation from the lexicographically smallest vertex: every facet
/// not containing it is recursively fan-triangulated and joined to it.
std::vector<Simplex> triangulate_polytope(const std::vector<std::vector<std::size_t>>& facets,
                                          std::span<const Vector> vertices, double tol = 1e-9);

/// adjacent_lattice + hypercube_intersect + polytope_facets +
/// triangulate_polytope. Throws BudgetExceeded past `max_simplices`.
RegionPolytope build_region(const AdjacentCone& adj, const Tolerances& tol = {},
                            std::size_t max_simplices = 1'000'000);

}  // namespace conirep
