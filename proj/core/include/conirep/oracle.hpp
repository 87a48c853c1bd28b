#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "conirep/cone.hpp"
#include "conirep/nnls.hpp"

namespace conirep {

/// Nonnegative readout weights, one per input neuron.
struct WeightVector {
    Vector weights;
};

/// Optimal nonnegative readout weights for a desired output vector.
WeightVector nnls(const StateMatrix& c, const Vector& target, const NnlsOptions& options = {});

/// |target - C w|^2. Throws DimensionMismatch on size disagreement.
double residual_sq(const StateMatrix& c, const WeightVector& w, const Vector& target);

struct QuadratureConfig {
    std::size_t sample_budget = 10'000'000;
    unsigned threads = 1;
    NnlsOptions nnls;
};

struct QuadratureResult {
    double ir_num = 0.0;
    double irn_num = 0.0;
    std::size_t n = 0;
    std::size_t total_samples = 0;
    double seconds = 0.0;
};

/// Midpoint-rule estimate of the mean squared readout error over [0,1]^m:
/// the NNLS residual is averaged over the n^m cell centres
/// ((n_1, ..., n_m) - 1/2) / n. Cells are grouped by their first coordinate
/// and group sums are reduced in order, so the result does not depend on the
/// thread count. Throws BudgetExceeded when n^m exceeds the sample budget.
QuadratureResult ir_num(const StateMatrix& c, std::size_t n, const QuadratureConfig& config = {});

struct ConvergenceRow {
    std::size_t n = 0;
    double ir_num = 0.0;
    double abs_error = 0.0;
    double seconds = 0.0;
};

/// ir_num at each resolution in `ns`, with its distance to `reference`.
std::vector<ConvergenceRow> convergence_study(const StateMatrix& c, std::span<const std::size_t> ns,
                                              double reference, const QuadratureConfig& config = {});

}  // namespace conirep
