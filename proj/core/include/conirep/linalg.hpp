#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace conirep {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Numerical tolerances shared by the geometric pipeline. The defaults are
/// sized for double precision at unit scale and small ambient dimensions.
struct Tolerances {
    double rank = 1e-9;       ///< residual norm (relative) below which a vector is dependent
    double ortho = 1e-10;     ///< orthonormality check
    double geom = 1e-9;       ///< generic incidence / extremality threshold
    double member = 1e-8;     ///< cone membership residual
    double dedup = 1e-9;      ///< absolute per-coordinate point merge distance
    double ray_merge = 1e-12; ///< unit rays with dot > 1 - ray_merge are the same ray
    double condition = 1e12;  ///< linear systems above this condition number are skipped
};

/// Orthonormal basis of span(rays). `columns` is m x rank.
struct OrthonormalBasis {
    Matrix columns;
    std::vector<std::size_t> source_rays;

    [[nodiscard]] std::size_t dim() const { return static_cast<std::size_t>(columns.rows()); }
    [[nodiscard]] std::size_t rank() const { return static_cast<std::size_t>(columns.cols()); }

    /// Orthogonal projection of `p` onto the span.
    [[nodiscard]] Vector project(const Vector& p) const;
    /// Coordinates of `p` in the basis (B^T p).
    [[nodiscard]] Vector coordinates(const Vector& p) const;
    /// Inverse of `coordinates`: B c.
    [[nodiscard]] Vector lift(const Vector& c) const;
};

/// Re-orthogonalizing (two-pass modified) Gram-Schmidt. Dependent inputs are
/// dropped; the basis size equals the numerical rank of the input set.
/// Throws DimensionMismatch if the rays disagree in length.
OrthonormalBasis gram_schmidt(std::span<const Vector> rays, double tol_rank = 1e-9);

/// Orthonormal basis of the orthogonal complement of `basis` in R^dim.
Matrix orthogonal_complement(const OrthonormalBasis& basis);

/// Generalized cross product: given m-1 vectors of length m, returns the unit
/// vector orthogonal to all of them, computed by cofactor (Laplace) expansion
/// of the determinant whose first column is the unknown. Orientation is
/// whatever the cofactor signs give; callers orient it.
/// Throws RankDeficient if the inputs are linearly dependent.
Vector normal_vector(std::span<const Vector> vectors, double tol_rank = 1e-9);

/// |det(v1 - v0, ..., vm - v0)| / m!. Degenerate simplices give 0.
double simplex_volume(std::span<const Vector> vertices);

/// Numerical rank via column-pivoted QR, relative threshold `tol`.
std::size_t numerical_rank(std::span<const Vector> vectors, double tol = 1e-9);

/// Unit-normalized copy; zero vectors stay zero.
Vector normalized(const Vector& v);

/// Lexicographic strict ordering on equal-length vectors.
bool lexicographic_less(const Vector& a, const Vector& b);

}  // namespace conirep
