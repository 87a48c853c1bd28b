#include "conirep/nnls.hpp"

#include <algorithm>
#include <vector>

#include "conirep/errors.hpp"

namespace conirep {

namespace {

// Least-squares solution restricted to the passive columns.
Vector solve_passive(const Matrix& a, const Vector& b, const std::vector<Eigen::Index>& passive) {
    Matrix sub(a.rows(), static_cast<Eigen::Index>(passive.size()));
    for (std::size_t k = 0; k < passive.size(); ++k) sub.col(static_cast<Eigen::Index>(k)) = a.col(passive[k]);
    return sub.colPivHouseholderQr().solve(b);
}

}  // namespace

NnlsResult nnls(const Matrix& a, const Vector& b, const NnlsOptions& options) {
    if (a.rows() != b.size()) throw DimensionMismatch("nnls: target length does not match matrix rows");
    const Eigen::Index n = a.cols();
    const std::size_t limit = options.max_iterations ? options.max_iterations : 10 * static_cast<std::size_t>(n);
    const double scale = std::max(1.0, (a.size() ? a.cwiseAbs().maxCoeff() : 0.0) * b.norm());
    const double threshold = options.tol_kkt * scale;

    NnlsResult result;
    result.weights = Vector::Zero(n);
    Vector& w = result.weights;
    std::vector<bool> passive(static_cast<std::size_t>(n), false);
    std::vector<bool> blocked(static_cast<std::size_t>(n), false);

    while (true) {
        const Vector gradient = a.transpose() * (b - a * w);
        Eigen::Index enter = -1;
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto uj = static_cast<std::size_t>(j);
            if (passive[uj] || blocked[uj] || gradient(j) <= threshold) continue;
            if (enter < 0 || gradient(j) > gradient(enter)) enter = j;
        }
        if (enter < 0) break;
        if (++result.iterations > limit) throw IterationLimit("nnls: iteration limit exceeded");
        passive[static_cast<std::size_t>(enter)] = true;

        bool first = true;
        while (true) {
            std::vector<Eigen::Index> cols;
            for (Eigen::Index j = 0; j < n; ++j)
                if (passive[static_cast<std::size_t>(j)]) cols.push_back(j);
            if (cols.empty()) {
                w.setZero();
                break;
            }
            const Vector z = solve_passive(a, b, cols);

            std::size_t entering_pos = 0;
            bool feasible = true;
            for (std::size_t k = 0; k < cols.size(); ++k) {
                if (cols[k] == enter) entering_pos = k;
                if (z(static_cast<Eigen::Index>(k)) <= 0.0) feasible = false;
            }
            if (first && z(static_cast<Eigen::Index>(entering_pos)) <= 0.0) {
                // Rounding made the entering column useless; exclude it until w moves.
                passive[static_cast<std::size_t>(enter)] = false;
                blocked[static_cast<std::size_t>(enter)] = true;
                break;
            }
            first = false;
            if (feasible) {
                w.setZero();
                for (std::size_t k = 0; k < cols.size(); ++k) w(cols[k]) = z(static_cast<Eigen::Index>(k));
                std::fill(blocked.begin(), blocked.end(), false);
                break;
            }

            double alpha = 1.0;
            std::size_t leaving = cols.size();
            for (std::size_t k = 0; k < cols.size(); ++k) {
                const double zk = z(static_cast<Eigen::Index>(k));
                if (zk > 0.0) continue;
                const double wk = w(cols[k]);
                const double step = wk / (wk - zk);
                if (step < alpha) {
                    alpha = step;
                    leaving = k;
                }
            }
            for (std::size_t k = 0; k < cols.size(); ++k) {
                double& wk = w(cols[k]);
                wk += alpha * (z(static_cast<Eigen::Index>(k)) - wk);
            }
            for (std::size_t k = 0; k < cols.size(); ++k) {
                double& wk = w(cols[k]);
                if (k == leaving || wk <= 0.0) {
                    wk = 0.0;
                    passive[static_cast<std::size_t>(cols[k])] = false;
                }
            }
            std::fill(blocked.begin(), blocked.end(), false);
        }
    }

    result.residual_sq = (b - a * w).squaredNorm();
    return result;
}

double residual_sq(const Matrix& a, const Vector& w, const Vector& b) {
    if (a.cols() != w.size() || a.rows() != b.size()) throw DimensionMismatch("residual_sq: dimension mismatch");
    return (b - a * w).squaredNorm();
}

}  // namespace conirep
