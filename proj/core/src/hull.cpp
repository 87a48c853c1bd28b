#include "conirep/hull.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "conirep/errors.hpp"

namespace conirep {

bool HullFacet::contains(std::size_t index) const {
    return std::binary_search(vertices.begin(), vertices.end(), index);
}

namespace {

struct WorkFacet {
    std::vector<std::size_t> verts;  // sorted, size d
    Vector normal;
    double offset = 0.0;
    std::vector<std::size_t> outside;
    bool alive = true;
};

class IncrementalHull {
public:
    IncrementalHull(std::span<const Vector> points, double tol)
        : pts_(points), tol_(tol), d_(static_cast<std::size_t>(points.front().size())) {}

    ConvexHull run() {
        ConvexHull out;
        out.dim = d_;
        std::vector<std::size_t> simplex;
        if (!initial_simplex(simplex)) return out;
        out.full_dimensional = true;

        interior_ = Vector::Zero(static_cast<Eigen::Index>(d_));
        for (std::size_t i : simplex) interior_ += pts_[i];
        interior_ /= static_cast<double>(simplex.size());

        for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
            std::vector<std::size_t> verts;
            for (std::size_t k = 0; k < simplex.size(); ++k)
                if (k != skip) verts.push_back(simplex[k]);
            add_facet(std::move(verts));
        }

        std::vector<std::size_t> pending;
        for (std::size_t i = 0; i < pts_.size(); ++i)
            if (std::find(simplex.begin(), simplex.end(), i) == simplex.end()) pending.push_back(i);
        assign(pending);

        while (true) {
            std::size_t seed = facets_.size();
            for (std::size_t f = 0; f < facets_.size(); ++f) {
                if (facets_[f].alive && !facets_[f].outside.empty()) {
                    seed = f;
                    break;
                }
            }
            if (seed == facets_.size()) break;
            expand(seed);
        }

        for (const WorkFacet& f : facets_)
            if (f.alive) out.simplicial_facets.push_back(f.verts);
        merge(out);
        return out;
    }

private:
    double distance(const WorkFacet& f, std::size_t p) const { return f.normal.dot(pts_[p]) - f.offset; }

    bool initial_simplex(std::vector<std::size_t>& simplex) const {
        std::size_t first = 0;
        for (std::size_t i = 1; i < pts_.size(); ++i)
            if (lexicographic_less(pts_[i], pts_[first])) first = i;
        simplex = {first};
        std::vector<Vector> dirs;
        for (std::size_t step = 0; step < d_; ++step) {
            double best = -1.0;
            std::size_t best_idx = 0;
            Vector best_res;
            for (std::size_t i = 0; i < pts_.size(); ++i) {
                Vector r = pts_[i] - pts_[first];
                for (int pass = 0; pass < 2; ++pass)
                    for (const Vector& q : dirs) r -= q.dot(r) * q;
                const double dist = r.norm();
                if (dist > best) {
                    best = dist;
                    best_idx = i;
                    best_res = r;
                }
            }
            if (best <= tol_) return false;
            dirs.push_back(best_res / best);
            simplex.push_back(best_idx);
        }
        return true;
    }

    void add_facet(std::vector<std::size_t> verts) {
        std::sort(verts.begin(), verts.end());
        WorkFacet f;
        f.verts = std::move(verts);
        const Vector& base = pts_[f.verts.front()];
        if (d_ == 1) {
            f.normal = Vector::Ones(1);
        } else {
            std::vector<Vector> edges;
            for (std::size_t k = 1; k < f.verts.size(); ++k) edges.emplace_back(pts_[f.verts[k]] - base);
            f.normal = normal_vector(edges, 1e-14);
        }
        f.offset = f.normal.dot(base);
        if (f.normal.dot(interior_) - f.offset > 0.0) {
            f.normal = -f.normal;
            f.offset = -f.offset;
        }
        facets_.push_back(std::move(f));
    }

    void assign(const std::vector<std::size_t>& points) {
        for (std::size_t p : points) {
            for (WorkFacet& f : facets_) {
                if (f.alive && distance(f, p) > tol_) {
                    f.outside.push_back(p);
                    break;
                }
            }
        }
    }

    void expand(std::size_t seed) {
        const WorkFacet& sf = facets_[seed];
        std::size_t apex = sf.outside.front();
        double far = distance(sf, apex);
        for (std::size_t p : sf.outside) {
            const double dist = distance(sf, p);
            if (dist > far) {
                far = dist;
                apex = p;
            }
        }

        std::map<std::vector<std::size_t>, int> ridge_count;
        std::vector<std::size_t> orphans;
        for (WorkFacet& f : facets_) {
            if (!f.alive || distance(f, apex) <= tol_) continue;
            f.alive = false;
            for (std::size_t p : f.outside)
                if (p != apex) orphans.push_back(p);
            f.outside.clear();
            for (std::size_t skip = 0; skip < f.verts.size(); ++skip) {
                std::vector<std::size_t> ridge;
                for (std::size_t k = 0; k < f.verts.size(); ++k)
                    if (k != skip) ridge.push_back(f.verts[k]);
                ++ridge_count[ridge];
            }
        }
        for (const auto& [ridge, count] : ridge_count) {
            if (count != 1) continue;
            std::vector<std::size_t> verts = ridge;
            verts.push_back(apex);
            add_facet(std::move(verts));
        }
        assign(orphans);
    }

    void merge(ConvexHull& out) const {
        for (const WorkFacet& f : facets_) {
            if (!f.alive) continue;
            bool merged = false;
            for (const HullFacet& g : out.facets) {
                if (f.normal.dot(g.normal) > 1.0 - 1e-9 && std::abs(f.offset - g.offset) <= tol_) {
                    merged = true;
                    break;
                }
            }
            if (merged) continue;
            HullFacet h;
            h.normal = f.normal;
            h.offset = f.offset;
            for (std::size_t i = 0; i < pts_.size(); ++i)
                if (std::abs(h.signed_distance(pts_[i])) <= tol_) h.vertices.push_back(i);
            out.facets.push_back(std::move(h));
        }
    }

    std::span<const Vector> pts_;
    double tol_;
    std::size_t d_;
    Vector interior_;
    std::vector<WorkFacet> facets_;
};

ConvexHull hull_1d(std::span<const Vector> points, double tol) {
    ConvexHull out;
    out.dim = 1;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const Vector& p : points) {
        lo = std::min(lo, p(0));
        hi = std::max(hi, p(0));
    }
    if (!(hi - lo > tol)) return out;
    out.full_dimensional = true;
    HullFacet low{{}, Vector::Constant(1, -1.0), -lo};
    HullFacet high{{}, Vector::Constant(1, 1.0), hi};
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i](0) <= lo + tol) low.vertices.push_back(i);
        if (points[i](0) >= hi - tol) high.vertices.push_back(i);
    }
    out.simplicial_facets = {{low.vertices.front()}, {high.vertices.front()}};
    out.facets = {std::move(low), std::move(high)};
    return out;
}

}  // namespace

ConvexHull convex_hull(std::span<const Vector> points, double tol) {
    if (points.empty()) return {};
    const auto d = points.front().size();
    for (const Vector& p : points)
        if (p.size() != d) throw DimensionMismatch("convex_hull: points have different dimensions");
    if (d == 0) return {};
    if (points.size() < static_cast<std::size_t>(d) + 1) {
        ConvexHull out;
        out.dim = static_cast<std::size_t>(d);
        return out;
    }
    if (d == 1) return hull_1d(points, tol);
    return IncrementalHull(points, tol).run();
}

}  // namespace conirep
