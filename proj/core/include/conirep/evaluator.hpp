#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "conirep/cone.hpp"
#include "conirep/linalg.hpp"

namespace conirep {

enum class Method { Analytical, ClosedForm, NumericalFallback };

std::string_view to_string(Method method);

/// How to treat matrices whose cone does not span R^m.
enum class RankDeficientPolicy {
    Analytical,  ///< regions carry the orthogonal complement of the cone's span
    Numerical,   ///< midpoint-rule fallback, result flagged
};

struct EvaluatorConfig {
    Tolerances tol;
    std::size_t max_states = 10;
    std::size_t max_elements = 100'000;
    std::size_t max_simplices = 1'000'000;
    /// n^m bound for the numerical fallback resolution (n >= 16).
    std::size_t fallback_sample_budget = 10'000'000;
    unsigned threads = 1;
    /// Skip the lattice when every cube vertex is inside the cone.
    bool early_exit = true;
    RankDeficientPolicy rank_deficient = RankDeficientPolicy::Analytical;
};

struct RegionSummary {
    std::size_t element_id = 0;
    /// Matrix columns (0-based) whose rays define the element.
    std::vector<std::size_t> element_columns;
    std::size_t dimension = 0;
    double volume = 0.0;
    double integral = 0.0;
    std::size_t vertex_count = 0;
    std::size_t simplex_count = 0;
    bool empty = true;
};

struct EvaluationResult {
    std::size_t states = 0;
    std::size_t neurons = 0;
    std::size_t cone_rank = 0;
    double ir = 0.0;
    double irn = 0.0;
    double output_volume = 0.0;
    Method method = Method::Analytical;
    std::vector<RegionSummary> regions;
    std::vector<std::size_t> extreme_ray_columns;
    std::vector<std::size_t> redundant_columns;
    std::vector<std::size_t> zero_columns;
    std::size_t skipped_intersections = 0;
    /// Samples per axis used by the numerical fallback, 0 otherwise.
    std::size_t fallback_n = 0;
    std::vector<std::string> diagnostics;
};

/// Mean squared error of the best nonnegative readout over all desired
/// outputs in [0,1]^m (the cube has unit volume, so no division is needed).
///
/// All-zero matrices use the closed form m/3; cones containing every cube
/// vertex give 0. Otherwise the space outside the cone is split into one
/// region per face (the points whose nearest cone point lies in that face),
/// each region is clipped to the cube, fan-triangulated, and the squared
/// distance to the face's span is integrated exactly per simplex.
///
/// Throws BudgetExceeded when m, the element count or the simplex count
/// exceed the configured limits.
EvaluationResult evaluate(const StateMatrix& c, const EvaluatorConfig& config = {});

/// Volume of coni(C) intersected with [0,1]^m.
double output_volume(const StateMatrix& c, const EvaluatorConfig& config = {});

/// Per-element region rows, including empty regions. The fully-covered
/// shortcut is disabled so every element is listed.
std::vector<RegionSummary> region_report(const StateMatrix& c, EvaluatorConfig config = {});

}  // namespace conirep
