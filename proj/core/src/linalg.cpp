#include "conirep/linalg.hpp"

#include <cmath>
#include <string>

#include "conirep/errors.hpp"

namespace conirep {

Vector OrthonormalBasis::project(const Vector& p) const {
    if (columns.cols() == 0) return Vector::Zero(p.size());
    return columns * (columns.transpose() * p);
}

Vector OrthonormalBasis::coordinates(const Vector& p) const { return columns.transpose() * p; }

Vector OrthonormalBasis::lift(const Vector& c) const { return columns * c; }

OrthonormalBasis gram_schmidt(std::span<const Vector> rays, double tol_rank) {
    OrthonormalBasis basis;
    if (rays.empty()) throw DimensionMismatch("gram_schmidt: no input vectors");
    const Eigen::Index m = rays.front().size();
    basis.columns.resize(m, 0);

    std::vector<Vector> cols;
    for (std::size_t k = 0; k < rays.size(); ++k) {
        const Vector& ray = rays[k];
        if (ray.size() != m) throw DimensionMismatch("gram_schmidt: rays have different dimensions");
        basis.source_rays.push_back(k);
        const double scale = ray.norm();
        if (scale == 0.0) continue;
        Vector v = ray / scale;
        // two passes of modified Gram-Schmidt
        for (int pass = 0; pass < 2; ++pass) {
            for (const Vector& q : cols) v -= q.dot(v) * q;
        }
        const double residual = v.norm();
        if (residual < tol_rank) continue;
        cols.push_back(v / residual);
    }
    basis.columns.resize(m, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) basis.columns.col(static_cast<Eigen::Index>(j)) = cols[j];
    return basis;
}

Matrix orthogonal_complement(const OrthonormalBasis& basis) {
    const auto m = static_cast<Eigen::Index>(basis.dim());
    std::vector<Vector> cols;
    for (Eigen::Index j = 0; j < basis.columns.cols(); ++j) cols.emplace_back(basis.columns.col(j));
    const std::size_t known = cols.size();
    for (Eigen::Index i = 0; i < m && static_cast<Eigen::Index>(cols.size()) < m; ++i) {
        Vector v = Vector::Unit(m, i);
        for (int pass = 0; pass < 2; ++pass) {
            for (const Vector& q : cols) v -= q.dot(v) * q;
        }
        const double residual = v.norm();
        if (residual < 1e-6) continue;
        cols.push_back(v / residual);
    }
    Matrix out(m, static_cast<Eigen::Index>(cols.size() - known));
    for (std::size_t j = known; j < cols.size(); ++j) out.col(static_cast<Eigen::Index>(j - known)) = cols[j];
    return out;
}

Vector normal_vector(std::span<const Vector> vectors, double tol_rank) {
    if (vectors.empty()) throw DimensionMismatch("normal_vector: need m-1 vectors of dimension m");
    const Eigen::Index m = vectors.front().size();
    if (static_cast<Eigen::Index>(vectors.size()) != m - 1)
        throw DimensionMismatch("normal_vector: expected " + std::to_string(m - 1) + " vectors, got " +
                                std::to_string(vectors.size()));

    Matrix cols(m, m - 1);
    for (Eigen::Index j = 0; j < m - 1; ++j) {
        if (vectors[static_cast<std::size_t>(j)].size() != m)
            throw DimensionMismatch("normal_vector: vectors have different dimensions");
        cols.col(j) = normalized(vectors[static_cast<std::size_t>(j)]);
    }

    // Expand det([x | cols]) along its first column: n_i is the cofactor of row i.
    Vector n(m);
    Matrix minor(m - 1, m - 1);
    for (Eigen::Index i = 0; i < m; ++i) {
        if (m > 1) {
            minor.topRows(i) = cols.topRows(i);
            minor.bottomRows(m - 1 - i) = cols.bottomRows(m - 1 - i);
        }
        const double det = (m == 1) ? 1.0 : minor.determinant();
        n(i) = (i % 2 == 0) ? det : -det;
    }
    const double norm = n.norm();
    if (!(norm >= tol_rank)) throw RankDeficient("normal_vector: input vectors are linearly dependent");
    return n / norm;
}

double simplex_volume(std::span<const Vector> vertices) {
    if (vertices.empty()) return 0.0;
    const Eigen::Index m = vertices.front().size();
    if (static_cast<Eigen::Index>(vertices.size()) != m + 1)
        throw DimensionMismatch("simplex_volume: expected m+1 vertices");
    Matrix edges(m, m);
    for (Eigen::Index j = 0; j < m; ++j) edges.col(j) = vertices[static_cast<std::size_t>(j + 1)] - vertices[0];
    double factorial = 1.0;
    for (Eigen::Index k = 2; k <= m; ++k) factorial *= static_cast<double>(k);
    return std::abs(edges.determinant()) / factorial;
}

std::size_t numerical_rank(std::span<const Vector> vectors, double tol) {
    if (vectors.empty()) return 0;
    const Eigen::Index m = vectors.front().size();
    Matrix a(m, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        if (vectors[j].size() != m) throw DimensionMismatch("numerical_rank: vectors have different dimensions");
        a.col(static_cast<Eigen::Index>(j)) = normalized(vectors[j]);
    }
    Eigen::ColPivHouseholderQR<Matrix> qr(a);
    qr.setThreshold(tol);
    return static_cast<std::size_t>(qr.rank());
}

Vector normalized(const Vector& v) {
    const double n = v.norm();
    return n > 0.0 ? Vector(v / n) : v;
}

bool lexicographic_less(const Vector& a, const Vector& b) {
    for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
        if (a(i) < b(i)) return true;
        if (b(i) < a(i)) return false;
    }
    return a.size() < b.size();
}

}  // namespace conirep
