#include "conirep/integrate.hpp"

#include <algorithm>

#include "conirep/errors.hpp"
#include "conirep/region.hpp"

namespace conirep {

Simplex Simplex::from_vertices(std::vector<Vector> vertices) {
    Simplex s;
    s.volume = simplex_volume(vertices);
    s.vertices = std::move(vertices);
    return s;
}

double squared_distance(const Vector& point, const OrthonormalBasis& basis) {
    if (basis.rank() == 0) return point.squaredNorm();
    if (static_cast<std::size_t>(point.size()) != basis.dim())
        throw DimensionMismatch("squared_distance: point and basis dimensions differ");
    // Residual form of |d|^2 - |B^T d|^2; never negative.
    return (point - basis.project(point)).squaredNorm();
}

double simplex_integral(const Simplex& simplex, const OrthonormalBasis& basis) {
    if (simplex.vertices.empty() || simplex.volume == 0.0) return 0.0;
    const auto m = static_cast<double>(simplex.vertices.front().size());
    Vector total = Vector::Zero(simplex.vertices.front().size());
    double diagonal = 0.0;
    for (const Vector& v : simplex.vertices) {
        diagonal += squared_distance(v, basis);
        total += v;
    }
    const double pair_sum = 0.5 * (diagonal + squared_distance(total, basis));
    const double binom = (m + 2.0) * (m + 1.0) / 2.0;
    return simplex.volume / binom * pair_sum;
}

OrthonormalBasis element_basis(std::span<const Vector> rays, std::size_t dim, double tol_rank) {
    if (rays.empty()) {
        OrthonormalBasis empty;
        empty.columns.resize(static_cast<Eigen::Index>(dim), 0);
        return empty;
    }
    return gram_schmidt(rays, tol_rank);
}

double region_integral(std::span<const Simplex> simplices, std::span<const Vector> element_rays,
                       double tol_rank) {
    if (simplices.empty()) return 0.0;
    const auto dim = static_cast<std::size_t>(simplices.front().vertices.front().size());
    const OrthonormalBasis basis = element_basis(element_rays, dim, tol_rank);
    double sum = 0.0;
    for (const Simplex& s : simplices) sum += simplex_integral(s, basis);
    return sum;
}

double region_integral(const RegionPolytope& region, std::span<const Vector> element_rays, double tol_rank) {
    return region_integral(region.simplices, element_rays, tol_rank);
}

}  // namespace conirep
