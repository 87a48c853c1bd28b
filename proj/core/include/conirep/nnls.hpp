#pragma once

#include <cstddef>

#include "conirep/linalg.hpp"

namespace conirep {

struct NnlsOptions {
    /// Gradient threshold for the KKT test; scaled by max(1, max|a| * |b|).
    double tol_kkt = 1e-10;
    /// Outer-iteration limit; 0 selects 10 * columns.
    std::size_t max_iterations = 0;
};

struct NnlsResult {
    Vector weights;
    double residual_sq = 0.0;
    std::size_t iterations = 0;
};

/// Lawson-Hanson active-set solver for min |b - A w|^2 subject to w >= 0.
/// The entering column is the one with the largest positive gradient; ties go
/// to the smallest index. Throws IterationLimit on cycling and
/// DimensionMismatch if b does not match A's rows.
NnlsResult nnls(const Matrix& a, const Vector& b, const NnlsOptions& options = {});

/// |b - A w|^2
double residual_sq(const Matrix& a, const Vector& w, const Vector& b);

}  // namespace conirep
