#include "conirep/region.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "conirep/errors.hpp"
#include "conirep/hull.hpp"

namespace conirep {

std::vector<HypercubeElement> hypercube_elements(std::size_t m, std::size_t dimension) {
    std::vector<HypercubeElement> out;
    if (dimension > m) return out;
    const std::size_t fixed_count = m - dimension;
    // subsets of size fixed_count in lexicographic order, then 2^fixed_count value patterns
    std::vector<bool> mask(m, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(fixed_count), true);
    do {
        HypercubeElement base;
        for (std::size_t i = 0; i < m; ++i) (mask[i] ? base.fixed : base.free).push_back(i);
        for (std::size_t pattern = 0; pattern < (std::size_t{1} << fixed_count); ++pattern) {
            HypercubeElement e = base;
            for (std::size_t k = 0; k < fixed_count; ++k) e.values.push_back(static_cast<int>((pattern >> k) & 1U));
            out.push_back(std::move(e));
        }
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

Cone adjacent_lattice(const AdjacentCone& adj, const Tolerances& tol) { return build_cone(adj.generators, tol); }

namespace {

void add_unique(std::vector<Vector>& points, const Vector& p, double tol) {
    for (const Vector& q : points)
        if ((q - p).cwiseAbs().maxCoeff() <= tol) return;
    points.push_back(p);
}

// Fan triangulation of a full-dimensional point set in R^k; returns (k+1)-tuples.
std::vector<std::vector<std::size_t>> fan(std::span<const Vector> points, double tol);

// Fan triangulation of the facet `ids` (lying in a hyperplane of R^k); (k)-tuples.
std::vector<std::vector<std::size_t>> fan_facet(std::span<const Vector> points, const std::vector<std::size_t>& ids,
                                                double tol) {
    const auto k = static_cast<std::size_t>(points.front().size());
    std::vector<Vector> diffs;
    for (std::size_t i = 1; i < ids.size(); ++i) diffs.push_back(points[ids[i]] - points[ids[0]]);
    if (diffs.empty()) return {};
    const OrthonormalBasis plane = gram_schmidt(diffs, 1e-12);
    if (plane.rank() != k - 1) return {};
    std::vector<Vector> local;
    for (std::size_t id : ids) local.push_back(plane.coordinates(points[id] - points[ids[0]]));
    std::vector<std::vector<std::size_t>> out;
    for (auto& tuple : fan(local, tol)) {
        for (std::size_t& t : tuple) t = ids[t];
        out.push_back(std::move(tuple));
    }
    return out;
}

std::size_t lexmin(std::span<const Vector> points, const std::vector<std::size_t>& ids) {
    std::size_t best = ids.front();
    for (std::size_t id : ids)
        if (lexicographic_less(points[id], points[best])) best = id;
    return best;
}

std::vector<std::vector<std::size_t>> fan_over(std::span<const Vector> points,
                                               const std::vector<std::vector<std::size_t>>& facets, double tol) {
    std::vector<std::size_t> all(points.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::vector<std::size_t> used;
    for (const auto& f : facets) used.insert(used.end(), f.begin(), f.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    if (used.empty()) return {};
    const std::size_t apex = lexmin(points, used);

    std::vector<std::vector<std::size_t>> out;
    for (const auto& facet : facets) {
        if (std::find(facet.begin(), facet.end(), apex) != facet.end()) continue;
        for (auto& tuple : fan_facet(points, facet, tol)) {
            tuple.insert(tuple.begin(), apex);
            out.push_back(std::move(tuple));
        }
    }
    return out;
}

std::vector<std::vector<std::size_t>> fan(std::span<const Vector> points, double tol) {
    if (points.empty()) return {};
    if (points.front().size() == 1) {
        std::size_t lo = 0;
        std::size_t hi = 0;
        for (std::size_t i = 1; i < points.size(); ++i) {
            if (points[i](0) < points[lo](0)) lo = i;
            if (points[i](0) > points[hi](0)) hi = i;
        }
        if (!(points[hi](0) - points[lo](0) > tol)) return {};
        return {{lo, hi}};
    }
    const ConvexHull hull = convex_hull(points, tol);
    if (!hull.full_dimensional) return {};
    std::vector<std::vector<std::size_t>> facets;
    for (const HullFacet& f : hull.facets) facets.push_back(f.vertices);
    return fan_over(points, facets, tol);
}

}  // namespace

std::vector<Vector> hypercube_intersect(const AdjacentCone& adj, const Cone& lattice, const Tolerances& tol,
                                        IntersectionStats* stats) {
    const std::size_t m = adj.ambient_dim();
    IntersectionStats local;
    std::vector<Vector> points;
    points.push_back(Vector::Zero(static_cast<Eigen::Index>(m)));

    for (const auto& level : lattice.elements) {
        for (const RaySet& face : level) {
            std::vector<Vector> dirs = lattice.rays_of(face);
            for (Eigen::Index j = 0; j < adj.lineality.cols(); ++j) dirs.emplace_back(adj.lineality.col(j));
            if (dirs.empty()) continue;  // apex: the origin, already present
            const OrthonormalBasis basis = gram_schmidt(dirs, tol.rank);
            const std::size_t k = basis.rank();
            if (k == 0) continue;

            for (const HypercubeElement& cube : hypercube_elements(m, m - k)) {
                ++local.systems;
                Matrix a(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
                Vector rhs(static_cast<Eigen::Index>(k));
                for (std::size_t r = 0; r < k; ++r) {
                    a.row(static_cast<Eigen::Index>(r)) = basis.columns.row(static_cast<Eigen::Index>(cube.fixed[r]));
                    rhs(static_cast<Eigen::Index>(r)) = cube.values[r];
                }
                const Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
                const Vector& sv = svd.singularValues();
                if (!(sv(sv.size() - 1) * tol.condition > sv(0))) {
                    ++local.skipped_singular;
                    continue;
                }
                Vector x = basis.columns * svd.solve(rhs);
                bool inside = true;
                for (std::size_t r = 0; r < k; ++r) x(static_cast<Eigen::Index>(cube.fixed[r])) = cube.values[r];
                for (std::size_t f : cube.free) {
                    double& xf = x(static_cast<Eigen::Index>(f));
                    if (xf < -tol.dedup || xf > 1.0 + tol.dedup) {
                        inside = false;
                        break;
                    }
                    xf = std::clamp(xf, 0.0, 1.0);
                }
                if (!inside || !cone_contains(x, adj, tol.member)) continue;
                add_unique(points, x, tol.dedup);
            }
        }
    }
    std::sort(points.begin(), points.end(), lexicographic_less);
    if (stats) {
        stats->systems += local.systems;
        stats->skipped_singular += local.skipped_singular;
    }
    return points;
}

std::vector<std::vector<std::size_t>> polytope_facets(std::span<const Vector> vertices, double tol) {
    std::vector<std::vector<std::size_t>> out;
    if (vertices.empty()) return out;
    const ConvexHull hull = convex_hull(vertices, tol);
    if (!hull.full_dimensional) return out;
    for (const HullFacet& f : hull.facets) out.push_back(f.vertices);
    return out;
}

std::vector<Simplex> triangulate_polytope(const std::vector<std::vector<std::size_t>>& facets,
                                          std::span<const Vector> vertices, double tol) {
    std::vector<Simplex> out;
    for (const auto& tuple : fan_over(vertices, facets, tol)) {
        std::vector<Vector> verts;
        for (std::size_t id : tuple) verts.push_back(vertices[id]);
        Simplex s = Simplex::from_vertices(std::move(verts));
        if (s.volume > 0.0) out.push_back(std::move(s));
    }
    return out;
}

RegionPolytope build_region(const AdjacentCone& adj, const Tolerances& tol, std::size_t max_simplices) {
    RegionPolytope region;
    region.element = adj.element;
    region.element_dimension = adj.dimension;
    const Cone lattice = adjacent_lattice(adj, tol);
    region.vertices = hypercube_intersect(adj, lattice, tol, &region.stats);

    const std::size_t m = adj.ambient_dim();
    if (region.vertices.size() < m + 1) return region;
    const auto facets = polytope_facets(region.vertices, tol.geom);
    if (facets.empty()) return region;
    region.simplices = triangulate_polytope(facets, region.vertices, tol.geom);
    if (region.simplices.size() > max_simplices)
        throw BudgetExceeded("region triangulation exceeds the simplex budget");
    for (const Simplex& s : region.simplices) region.volume += s.volume;
    region.degenerate = region.simplices.empty();
    return region;
}

}  // namespace conirep
