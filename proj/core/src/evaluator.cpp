#include "conirep/evaluator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "conirep/errors.hpp"
#include "conirep/integrate.hpp"
#include "conirep/oracle.hpp"
#include "conirep/region.hpp"

namespace conirep {

std::string_view to_string(Method method) {
    switch (method) {
        case Method::Analytical: return "analytical";
        case Method::ClosedForm: return "closed-form";
        case Method::NumericalFallback: return "numerical-fallback";
    }
    return "unknown";
}

namespace {

std::vector<std::size_t> zero_columns_of(const StateMatrix& c) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < c.neurons(); ++k)
        if (c.entries().col(static_cast<Eigen::Index>(k)).isZero(0.0)) out.push_back(k);
    return out;
}

bool covers_hypercube(const Cone& cone, const Tolerances& tol) {
    if (!cone.full_dimensional()) return false;
    const std::size_t m = cone.ambient_dim;
    Vector corner(static_cast<Eigen::Index>(m));
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        for (std::size_t i = 0; i < m; ++i) corner(static_cast<Eigen::Index>(i)) = static_cast<double>((mask >> i) & 1U);
        if (!cone_contains(corner, cone.rays, tol.member)) return false;
    }
    return true;
}

std::size_t fallback_resolution(std::size_t m, std::size_t budget) {
    std::size_t n = 16;
    while (true) {
        double next = 1.0;
        for (std::size_t i = 0; i < m; ++i) next *= static_cast<double>(n + 1);
        if (next > static_cast<double>(budget)) return n;
        ++n;
    }
}

struct ElementOutcome {
    RegionSummary summary;
    std::size_t skipped = 0;
};

ElementOutcome evaluate_element(const Cone& cone, const RaySet& element, std::size_t id, const EvaluatorConfig& config) {
    const AdjacentCone adj = adjacent_cone(element, cone, config.tol);
    const RegionPolytope region = build_region(adj, config.tol, config.max_simplices);
    ElementOutcome out;
    out.skipped = region.stats.skipped_singular;
    RegionSummary& s = out.summary;
    s.element_id = id;
    for (std::size_t r : element) s.element_columns.push_back(cone.ray_origins[r].front());
    std::sort(s.element_columns.begin(), s.element_columns.end());
    s.dimension = adj.dimension;
    s.volume = region.volume;
    s.integral = region_integral(region, adj.element_rays, config.tol.rank);
    s.vertex_count = region.vertices.size();
    s.simplex_count = region.simplices.size();
    s.empty = region.degenerate;
    return out;
}

}  // namespace

EvaluationResult evaluate(const StateMatrix& c, const EvaluatorConfig& config) {
    EvaluationResult result;
    const std::size_t m = c.states();
    result.states = m;
    result.neurons = c.neurons();
    if (m > config.max_states) throw BudgetExceeded("evaluate: state count exceeds the configured maximum");
    const double worst = static_cast<double>(m) / 3.0;

    if (c.all_zero()) {
        result.method = Method::ClosedForm;
        result.ir = worst;
        result.irn = 1.0;
        result.output_volume = 0.0;
        result.zero_columns = zero_columns_of(c);
        RegionSummary apex;
        apex.dimension = 0;
        apex.volume = 1.0;
        apex.integral = worst;
        apex.vertex_count = std::size_t{1} << m;
        apex.empty = false;
        result.regions.push_back(apex);
        result.diagnostics.emplace_back("all columns are zero: closed form m/3");
        return result;
    }

    const Cone cone = coni_facets(c, config.tol);
    result.cone_rank = cone.rank;
    result.extreme_ray_columns = cone.extreme_inputs();
    std::sort(result.extreme_ray_columns.begin(), result.extreme_ray_columns.end());
    result.redundant_columns = cone.redundant_inputs;
    result.zero_columns = cone.zero_inputs;

    if (m == 1 || (config.early_exit && covers_hypercube(cone, config.tol))) {
        result.method = Method::ClosedForm;
        result.ir = 0.0;
        result.irn = 0.0;
        result.output_volume = 1.0;
        result.diagnostics.emplace_back("cone contains every hypercube vertex");
        return result;
    }

    if (!cone.full_dimensional() && config.rank_deficient == RankDeficientPolicy::Numerical) {
        QuadratureConfig qc;
        qc.sample_budget = config.fallback_sample_budget;
        qc.threads = config.threads;
        const std::size_t n = fallback_resolution(m, config.fallback_sample_budget);
        const QuadratureResult q = ir_num(c, n, qc);
        result.method = Method::NumericalFallback;
        result.ir = q.ir_num;
        result.irn = q.irn_num;
        result.output_volume = 0.0;
        result.fallback_n = n;
        result.diagnostics.emplace_back("cone rank " + std::to_string(cone.rank) + " < " + std::to_string(m) +
                                        ": midpoint-rule fallback with n = " + std::to_string(n));
        return result;
    }

    const std::vector<RaySet> elements = region_elements(cone);
    if (elements.size() > config.max_elements) throw BudgetExceeded("evaluate: cone element count exceeds budget");

    std::vector<ElementOutcome> outcomes(elements.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> simplices{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (std::size_t e = next++; e < elements.size(); e = next++) {
                outcomes[e] = evaluate_element(cone, elements[e], e, config);
                if ((simplices += outcomes[e].summary.simplex_count) > config.max_simplices)
                    throw BudgetExceeded("evaluate: simplex count exceeds budget");
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = elements.size();
        }
    };
    const unsigned threads = std::max(1U, std::min<unsigned>(config.threads, static_cast<unsigned>(elements.size())));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    double covered = 1.0;
    for (ElementOutcome& o : outcomes) {
        result.ir += o.summary.integral;
        covered -= o.summary.volume;
        result.skipped_intersections += o.skipped;
        result.regions.push_back(std::move(o.summary));
    }
    result.method = Method::Analytical;
    result.output_volume = std::clamp(covered, 0.0, 1.0);
    result.irn = result.ir / worst;
    if (!cone.full_dimensional())
        result.diagnostics.emplace_back("cone rank " + std::to_string(cone.rank) + " < " + std::to_string(m) +
                                        ": regions include the orthogonal complement of the cone span");
    if (std::abs(covered - result.output_volume) > 1e-9)
        result.diagnostics.emplace_back("region volumes exceed the hypercube volume by " + std::to_string(-covered));
    return result;
}

double output_volume(const StateMatrix& c, const EvaluatorConfig& config) { return evaluate(c, config).output_volume; }

std::vector<RegionSummary> region_report(const StateMatrix& c, EvaluatorConfig config) {
    config.early_exit = false;
    return evaluate(c, config).regions;
}

}  // namespace conirep
