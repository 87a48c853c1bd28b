#include "conirep/cone.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>

#include "conirep/errors.hpp"
#include "conirep/hull.hpp"
#include "conirep/nnls.hpp"

namespace conirep {

StateMatrix::StateMatrix(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() < 1 || entries_.cols() < 1) throw InputError("state matrix must have at least one row and column");
    for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
        for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
            const double v = entries_(i, j);
            if (!std::isfinite(v)) throw InputError("state matrix entries must be finite");
            if (v < 0.0) throw InputError("state matrix entries must be nonnegative");
        }
    }
}

std::vector<Vector> StateMatrix::columns() const {
    std::vector<Vector> out;
    out.reserve(neurons());
    for (std::size_t k = 0; k < neurons(); ++k) out.push_back(column(k));
    return out;
}

std::size_t Cone::proper_element_count() const {
    std::size_t count = 0;
    for (std::size_t i = 1; i < rank && i < elements.size(); ++i) count += elements[i].size();
    return count;
}

std::vector<Vector> Cone::rays_of(const RaySet& set) const {
    std::vector<Vector> out;
    out.reserve(set.size());
    for (std::size_t r : set) out.push_back(rays.at(r));
    return out;
}

std::vector<std::size_t> Cone::extreme_inputs() const {
    std::vector<std::size_t> out;
    for (const auto& origins : ray_origins) out.push_back(origins.front());
    return out;
}

namespace {

struct Candidate {
    Vector unit;
    std::vector<std::size_t> origins;
};

bool is_extreme(std::size_t i, const std::vector<Candidate>& candidates, double tol_geom) {
    if (candidates.size() == 1) return true;
    const Eigen::Index m = candidates[i].unit.size();
    Matrix others(m, static_cast<Eigen::Index>(candidates.size() - 1));
    Eigen::Index col = 0;
    for (std::size_t k = 0; k < candidates.size(); ++k)
        if (k != i) others.col(col++) = candidates[k].unit;
    const NnlsResult fit = nnls(others, candidates[i].unit);
    return std::sqrt(fit.residual_sq) >= tol_geom;
}

bool is_subset(const RaySet& small, const RaySet& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool in_lattice(const RaySet& element, const Cone& cone) {
    for (const auto& level : cone.elements)
        if (std::binary_search(level.begin(), level.end(), element)) return true;
    return false;
}

}  // namespace

Cone build_cone(std::span<const Vector> generators, const Tolerances& tol) {
    if (generators.empty()) throw InputError("build_cone: no generators");
    const Eigen::Index m = generators.front().size();
    Cone cone;
    cone.ambient_dim = static_cast<std::size_t>(m);

    std::vector<Candidate> candidates;
    for (std::size_t k = 0; k < generators.size(); ++k) {
        const Vector& g = generators[k];
        if (g.size() != m) throw DimensionMismatch("build_cone: generators have different dimensions");
        const double norm = g.norm();
        if (norm == 0.0) {
            cone.zero_inputs.push_back(k);
            continue;
        }
        const Vector unit = g / norm;
        auto same = std::find_if(candidates.begin(), candidates.end(),
                                 [&](const Candidate& c) { return c.unit.dot(unit) > 1.0 - tol.ray_merge; });
        if (same != candidates.end()) {
            same->origins.push_back(k);
        } else {
            candidates.push_back({unit, {k}});
        }
    }
    if (candidates.empty()) throw AllZeroMatrix("every generator is zero");

    std::vector<Candidate> extreme;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (is_extreme(i, candidates, tol.geom)) {
            extreme.push_back(candidates[i]);
        } else {
            cone.redundant_inputs.insert(cone.redundant_inputs.end(), candidates[i].origins.begin(),
                                         candidates[i].origins.end());
        }
    }
    std::sort(extreme.begin(), extreme.end(),
              [](const Candidate& a, const Candidate& b) { return lexicographic_less(a.unit, b.unit); });
    for (Candidate& c : extreme) {
        cone.rays.push_back(c.unit);
        cone.redundant_inputs.insert(cone.redundant_inputs.end(), c.origins.begin() + 1, c.origins.end());
        cone.ray_origins.push_back(std::move(c.origins));
    }
    std::sort(cone.redundant_inputs.begin(), cone.redundant_inputs.end());

    cone.span = gram_schmidt(cone.rays, tol.rank);
    cone.rank = cone.span.rank();
    if (cone.rank == cone.ambient_dim) cone.span.columns = Matrix::Identity(m, m);

    if (cone.rank == 1) {
        if (cone.rays.size() != 1) throw Error("build_cone: cone is not pointed");
        cone.facets = {RaySet{}};
    } else {
        std::vector<Vector> points;
        points.push_back(Vector::Zero(static_cast<Eigen::Index>(cone.rank)));
        for (const Vector& r : cone.rays) points.push_back(normalized(cone.span.coordinates(r)));
        const ConvexHull hull = convex_hull(points, tol.geom);
        if (!hull.full_dimensional) throw RankDeficient("build_cone: rays do not span their own span");
        for (const HullFacet& f : hull.facets) {
            if (!f.contains(0)) continue;
            RaySet set;
            for (std::size_t v : f.vertices)
                if (v != 0) set.push_back(v - 1);
            cone.facets.push_back(std::move(set));
        }
        if (cone.facets.empty()) throw Error("build_cone: cone is not pointed");
        std::sort(cone.facets.begin(), cone.facets.end());
    }
    for (const RaySet& facet : cone.facets) cone.facet_normals.push_back(facet_normal_outward(facet, cone, tol));

    cone_sub_elements(cone, tol);
    return cone;
}

Cone coni_facets(const StateMatrix& c, const Tolerances& tol) {
    if (c.all_zero()) throw AllZeroMatrix("every column of the state matrix is zero");
    const std::vector<Vector> cols = c.columns();
    return build_cone(cols, tol);
}

void cone_sub_elements(Cone& cone, const Tolerances& tol) {
    const std::size_t r = cone.rank;
    cone.elements.assign(r + 1, {});
    cone.elements[0].push_back(RaySet{});
    RaySet all(cone.rays.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    cone.elements[r].push_back(all);

    std::set<RaySet> seen;
    std::deque<RaySet> queue;
    for (const RaySet& f : cone.facets) {
        if (f.empty()) continue;
        if (seen.insert(f).second) queue.push_back(f);
    }
    while (!queue.empty()) {
        const RaySet current = queue.front();
        queue.pop_front();
        for (const RaySet& f : cone.facets) {
            RaySet meet;
            std::set_intersection(current.begin(), current.end(), f.begin(), f.end(), std::back_inserter(meet));
            if (meet.empty() || meet == current) continue;
            if (seen.insert(meet).second) queue.push_back(meet);
        }
    }
    for (const RaySet& e : seen) {
        const std::size_t dim = numerical_rank(cone.rays_of(e), tol.rank);
        if (dim == 0 || dim >= r) continue;
        cone.elements[dim].push_back(e);
    }
    for (auto& level : cone.elements) std::sort(level.begin(), level.end());
}

std::vector<RaySet> adjacent_facets(const RaySet& element, const Cone& cone) {
    if (!in_lattice(element, cone)) throw InputError("adjacent_facets: element is not a face of the cone");
    std::vector<RaySet> out;
    for (const RaySet& f : cone.facets)
        if (is_subset(element, f)) out.push_back(f);
    return out;
}

Vector facet_normal_outward(const RaySet& facet, const Cone& cone, const Tolerances& tol) {
    const std::size_t r = cone.rank;
    Vector normal;
    if (r == 1) {
        if (!facet.empty()) throw RankDeficient("facet_normal_outward: a ray cone has only the apex as facet");
        normal = -cone.rays.front();
    } else {
        std::vector<Vector> chosen;
        std::vector<Vector> ortho;
        for (std::size_t idx : facet) {
            const Vector coords = cone.span.coordinates(cone.rays.at(idx));
            Vector v = normalized(coords);
            for (int pass = 0; pass < 2; ++pass)
                for (const Vector& q : ortho) v -= q.dot(v) * q;
            if (v.norm() < tol.rank) continue;
            ortho.push_back(normalized(v));
            chosen.push_back(coords);
            if (chosen.size() == r - 1) break;
        }
        if (chosen.size() != r - 1) throw RankDeficient("facet_normal_outward: facet rays do not span a hyperplane");
        normal = cone.span.lift(normal_vector(chosen, tol.rank));
    }

    double pivot = 0.0;
    for (std::size_t k = 0; k < cone.rays.size(); ++k) {
        if (std::binary_search(facet.begin(), facet.end(), k)) continue;
        const double d = normal.dot(cone.rays[k]);
        if (std::abs(d) > std::abs(pivot)) pivot = d;
    }
    if (std::abs(pivot) <= tol.geom) throw RankDeficient("facet_normal_outward: orientation is ambiguous");
    if (pivot > 0.0) normal = -normal;
    return normal;
}

std::vector<RaySet> region_elements(const Cone& cone) {
    std::vector<RaySet> out;
    for (std::size_t i = 1; i < cone.rank && i < cone.elements.size(); ++i)
        out.insert(out.end(), cone.elements[i].begin(), cone.elements[i].end());
    if (!cone.full_dimensional() && cone.elements.size() > cone.rank)
        out.insert(out.end(), cone.elements[cone.rank].begin(), cone.elements[cone.rank].end());
    return out;
}

std::size_t element_dimension(const RaySet& element, const Cone& cone) {
    for (std::size_t i = 0; i < cone.elements.size(); ++i)
        if (std::binary_search(cone.elements[i].begin(), cone.elements[i].end(), element)) return i;
    throw InputError("element_dimension: element is not a face of the cone");
}

AdjacentCone adjacent_cone(const RaySet& element, const Cone& cone, const Tolerances& tol) {
    (void)tol;
    const std::vector<RaySet> allowed = region_elements(cone);
    if (std::find(allowed.begin(), allowed.end(), element) == allowed.end())
        throw InputError("adjacent_cone: element has no region (not a proper face)");

    AdjacentCone adj;
    adj.element = element;
    adj.dimension = element_dimension(element, cone);
    adj.element_rays = cone.rays_of(element);
    for (std::size_t f = 0; f < cone.facets.size(); ++f)
        if (is_subset(element, cone.facets[f])) adj.normals.push_back(cone.facet_normals[f]);
    adj.generators = adj.element_rays;
    adj.generators.insert(adj.generators.end(), adj.normals.begin(), adj.normals.end());
    adj.lineality = cone.lineality();
    return adj;
}

bool cone_contains(const Vector& point, std::span<const Vector> generators, double tol_member) {
    if (generators.empty()) return point.norm() < tol_member;
    Matrix a(point.size(), static_cast<Eigen::Index>(generators.size()));
    for (std::size_t k = 0; k < generators.size(); ++k) {
        if (generators[k].size() != point.size()) throw DimensionMismatch("cone_contains: dimension mismatch");
        a.col(static_cast<Eigen::Index>(k)) = generators[k];
    }
    return std::sqrt(nnls(a, point).residual_sq) < tol_member;
}

bool cone_contains(const Vector& point, const AdjacentCone& adj, double tol_member) {
    std::vector<Vector> gens = adj.generators;
    for (Eigen::Index j = 0; j < adj.lineality.cols(); ++j) {
        gens.emplace_back(adj.lineality.col(j));
        gens.emplace_back(-adj.lineality.col(j));
    }
    return cone_contains(point, gens, tol_member);
}

}  // namespace conirep
