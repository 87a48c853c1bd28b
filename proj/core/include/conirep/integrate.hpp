#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "conirep/linalg.hpp"

namespace conirep {

struct RegionPolytope;

/// m-simplex given by m+1 vertices; `volume` caches |det(edges)| / m!.
struct Simplex {
    std::vector<Vector> vertices;
    double volume = 0.0;

    static Simplex from_vertices(std::vector<Vector> vertices);
};

/// |d|^2 - |B^T d|^2: squared distance from `point` to span(basis).
/// An empty basis gives |d|^2.
double squared_distance(const Vector& point, const OrthonormalBasis& basis);

/// Exact integral of squared_distance(., basis) over the simplex.
///
/// The integrand is the quadratic form q(x) = x^T (I - B B^T) x. For a
/// homogeneous quadratic over an m-simplex with vertices v_1..v_{m+1}
///
///   int_S q = vol(S) / C(m+2, 2) * sum_{l1 <= l2} q~(v_l1, v_l2)
///
/// with q~ the symmetric bilinear form of q. The pair sum is evaluated as
/// (sum_l q(v_l) + q(sum_l v_l)) / 2, which keeps every term nonnegative.
double simplex_integral(const Simplex& simplex, const OrthonormalBasis& basis);

/// Sum of simplex integrals (ascending index order) of the squared distance
/// to span(element_rays). Empty `element_rays` measures distance to the origin.
double region_integral(std::span<const Simplex> simplices, std::span<const Vector> element_rays,
                       double tol_rank = 1e-9);
double region_integral(const RegionPolytope& region, std::span<const Vector> element_rays,
                       double tol_rank = 1e-9);

/// Basis of span(rays) in R^dim; empty `rays` gives a dim x 0 basis.
OrthonormalBasis element_basis(std::span<const Vector> rays, std::size_t dim, double tol_rank = 1e-9);

}  // namespace conirep
