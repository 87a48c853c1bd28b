#include "conirep/oracle.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "conirep/errors.hpp"

namespace conirep {

WeightVector nnls(const StateMatrix& c, const Vector& target, const NnlsOptions& options) {
    if (static_cast<std::size_t>(target.size()) != c.states())
        throw DimensionMismatch("nnls: target length must equal the number of states");
    return {nnls(c.entries(), target, options).weights};
}

double residual_sq(const StateMatrix& c, const WeightVector& w, const Vector& target) {
    return residual_sq(c.entries(), w.weights, target);
}

namespace {

// Sum of residuals over the cells whose first coordinate index is `first`.
double slab_sum(const Matrix& a, std::size_t m, std::size_t n, std::size_t first, const NnlsOptions& options) {
    const double h = 1.0 / static_cast<double>(n);
    std::vector<std::size_t> idx(m, 0);
    idx[0] = first;
    Vector p(static_cast<Eigen::Index>(m));
    double sum = 0.0;
    while (true) {
        for (std::size_t i = 0; i < m; ++i) p(static_cast<Eigen::Index>(i)) = (static_cast<double>(idx[i]) + 0.5) * h;
        sum += nnls(a, p, options).residual_sq;
        // odometer over coordinates 1..m-1, last coordinate fastest
        std::size_t pos = m;
        while (pos > 1) {
            --pos;
            if (++idx[pos] < n) break;
            idx[pos] = 0;
            if (pos == 1) return sum;
        }
        if (m == 1) return sum;
    }
}

}  // namespace

QuadratureResult ir_num(const StateMatrix& c, std::size_t n, const QuadratureConfig& config) {
    if (n < 1) throw InputError("ir_num: need at least one sample per axis");
    const std::size_t m = c.states();
    double total = 1.0;
    for (std::size_t i = 0; i < m; ++i) total *= static_cast<double>(n);
    if (total > static_cast<double>(config.sample_budget))
        throw BudgetExceeded("ir_num: n^m exceeds the sample budget");

    const auto start = std::chrono::steady_clock::now();
    std::vector<double> slabs(n, 0.0);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (std::size_t s = next++; s < n; s = next++) slabs[s] = slab_sum(c.entries(), m, n, s, config.nnls);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = n;
        }
    };
    const unsigned threads = std::max(1U, std::min<unsigned>(config.threads, static_cast<unsigned>(n)));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    double sum = 0.0;
    for (double s : slabs) sum += s;

    QuadratureResult result;
    result.n = n;
    result.total_samples = static_cast<std::size_t>(total);
    result.ir_num = sum / total;
    result.irn_num = result.ir_num / (static_cast<double>(m) / 3.0);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<ConvergenceRow> convergence_study(const StateMatrix& c, std::span<const std::size_t> ns,
                                              double reference, const QuadratureConfig& config) {
    std::vector<ConvergenceRow> rows;
    for (std::size_t n : ns) {
        const QuadratureResult q = ir_num(c, n, config);
        rows.push_back({n, q.ir_num, std::abs(q.ir_num - reference), q.seconds});
    }
    return rows;
}

}  // namespace conirep
