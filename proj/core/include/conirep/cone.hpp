#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "conirep/linalg.hpp"

namespace conirep {

/// Indices into Cone::rays, sorted ascending.
using RaySet = std::vector<std::size_t>;

/// Nonnegative m x n activity matrix: rows are input states, columns are the
/// per-neuron activity vectors.
class StateMatrix {
public:
    /// Throws InputError unless m, n >= 1 and every entry is finite and >= 0.
    explicit StateMatrix(Matrix entries);

    [[nodiscard]] std::size_t states() const { return static_cast<std::size_t>(entries_.rows()); }
    [[nodiscard]] std::size_t neurons() const { return static_cast<std::size_t>(entries_.cols()); }
    [[nodiscard]] const Matrix& entries() const { return entries_; }
    [[nodiscard]] Vector column(std::size_t k) const { return entries_.col(static_cast<Eigen::Index>(k)); }
    [[nodiscard]] std::vector<Vector> columns() const;
    [[nodiscard]] bool all_zero() const { return entries_.isZero(0.0); }

    friend bool operator==(const StateMatrix& a, const StateMatrix& b) {
        return a.entries_.rows() == b.entries_.rows() && a.entries_.cols() == b.entries_.cols() &&
               a.entries_ == b.entries_;
    }

private:
    Matrix entries_;
};

/// Conical hull of a finite vector set.
///
/// `elements[i]` lists the i-dimensional faces as ray sets, for i in
/// 0..rank: `elements[0]` is the apex (the empty set), `elements[rank]` is
/// the whole cone, `elements[rank - 1]` are the facets. Facet normals are
/// outward unit vectors lying in the span of the cone.
struct Cone {
    std::size_t ambient_dim = 0;
    std::size_t rank = 0;
    OrthonormalBasis span;
    std::vector<Vector> rays;
    /// Input indices parallel to each ray (ascending).
    std::vector<std::vector<std::size_t>> ray_origins;
    /// Nonzero inputs that are not the first input of an extreme ray.
    std::vector<std::size_t> redundant_inputs;
    std::vector<std::size_t> zero_inputs;
    std::vector<RaySet> facets;
    std::vector<Vector> facet_normals;
    std::vector<std::vector<RaySet>> elements;

    [[nodiscard]] bool full_dimensional() const { return rank == ambient_dim; }
    [[nodiscard]] bool has_lattice() const { return !elements.empty(); }
    /// Number of faces of dimension 1..rank-1.
    [[nodiscard]] std::size_t proper_element_count() const;
    /// Orthonormal basis (columns) of the orthogonal complement of the span.
    [[nodiscard]] Matrix lineality() const { return orthogonal_complement(span); }
    /// Unit rays of `set`.
    [[nodiscard]] std::vector<Vector> rays_of(const RaySet& set) const;
    /// First input index of each extreme ray, in ray order.
    [[nodiscard]] std::vector<std::size_t> extreme_inputs() const;
};

/// Generator set of the region of points whose nearest cone point lies in
/// `element`: the element's rays plus the outward normals of every facet
/// containing it. When the cone is not full-dimensional the region also
/// contains the orthogonal complement of the cone's span (`lineality`).
struct AdjacentCone {
    RaySet element;
    std::size_t dimension = 0;
    std::vector<Vector> element_rays;
    std::vector<Vector> normals;
    std::vector<Vector> generators;
    Matrix lineality;

    [[nodiscard]] std::size_t ambient_dim() const { return static_cast<std::size_t>(lineality.rows()); }
};

/// Extreme rays and facets of coni(C). Zero columns are dropped, parallel
/// columns merged, non-extreme columns reported in `redundant_inputs`.
/// The element lattice is populated as well. Throws AllZeroMatrix when
/// every column is zero.
Cone coni_facets(const StateMatrix& c, const Tolerances& tol = {});

/// Same as coni_facets for an arbitrary generator list (entries of any sign).
/// The generated cone must be pointed. Throws AllZeroMatrix if every
/// generator is zero.
Cone build_cone(std::span<const Vector> generators, const Tolerances& tol = {});

/// Populates `elements` by closing the facet set under intersection.
void cone_sub_elements(Cone& cone, const Tolerances& tol = {});

/// Facets whose ray set contains `element`. Throws InputError if `element`
/// is not a face of the cone.
std::vector<RaySet> adjacent_facets(const RaySet& element, const Cone& cone);

/// Outward unit normal of `facet` inside the span of the cone, obtained from
/// the generalized cross product of rank-1 independent facet rays.
/// Throws RankDeficient when no ray off the facet fixes the orientation.
Vector facet_normal_outward(const RaySet& facet, const Cone& cone, const Tolerances& tol = {});

/// Faces whose regions partition the space outside the cone: dimensions
/// 1..rank-1, plus the whole cone when it is not full-dimensional.
std::vector<RaySet> region_elements(const Cone& cone);

/// Dimension of a face given by its ray set.
std::size_t element_dimension(const RaySet& element, const Cone& cone);

/// Throws InputError if `element` is not one of region_elements(cone).
AdjacentCone adjacent_cone(const RaySet& element, const Cone& cone, const Tolerances& tol = {});

/// True iff the NNLS fit of `point` by `generators` leaves a residual norm
/// below `tol_member`.
bool cone_contains(const Vector& point, std::span<const Vector> generators, double tol_member = 1e-8);

/// Membership in an adjacent cone including its lineality space.
bool cone_contains(const Vector& point, const AdjacentCone& adj, double tol_member = 1e-8);

}  // namespace conirep
