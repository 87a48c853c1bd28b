#include "conirep/report.hpp"

#include <ostream>

#include "conirep/matrix_io.hpp"

namespace conirep {

nlohmann::ordered_json to_json(const EvaluationResult& result) {
    nlohmann::ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["states"] = result.states;
    j["neurons"] = result.neurons;
    j["method"] = std::string(to_string(result.method));
    j["ir"] = result.ir;
    j["irn"] = result.irn;
    j["output_volume"] = result.output_volume;
    j["cone_rank"] = result.cone_rank;
    j["extreme_ray_columns"] = result.extreme_ray_columns;
    j["redundant_columns"] = result.redundant_columns;
    j["zero_columns"] = result.zero_columns;
    auto regions = nlohmann::ordered_json::array();
    for (const RegionSummary& r : result.regions) {
        nlohmann::ordered_json row;
        row["element_id"] = r.element_id;
        row["element_columns"] = r.element_columns;
        row["dimension"] = r.dimension;
        row["volume"] = r.volume;
        row["integral"] = r.integral;
        row["vertices"] = r.vertex_count;
        row["simplices"] = r.simplex_count;
        row["empty"] = r.empty;
        regions.push_back(std::move(row));
    }
    j["regions"] = std::move(regions);
    j["skipped_intersections"] = result.skipped_intersections;
    if (result.fallback_n) j["fallback_n"] = result.fallback_n;
    j["diagnostics"] = result.diagnostics;
    return j;
}

nlohmann::ordered_json to_json(const QuadratureResult& result, std::size_t states) {
    nlohmann::ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["states"] = states;
    j["n"] = result.n;
    j["total_samples"] = result.total_samples;
    j["ir_num"] = result.ir_num;
    j["irn_num"] = result.irn_num;
    j["seconds"] = result.seconds;
    return j;
}

void write_csv(std::ostream& out, const EvaluationResult& result) {
    out << "element_id,element_columns,dimension,volume,integral,empty\n";
    for (const RegionSummary& r : result.regions) {
        out << r.element_id << ',';
        for (std::size_t k = 0; k < r.element_columns.size(); ++k) out << (k ? " " : "") << r.element_columns[k];
        out << ',' << r.dimension << ',' << format_double(r.volume) << ',' << format_double(r.integral) << ','
            << (r.empty ? "true" : "false") << '\n';
    }
    out << "# ir=" << format_double(result.ir) << " irn=" << format_double(result.irn)
        << " output_volume=" << format_double(result.output_volume) << " method=" << to_string(result.method) << '\n';
}

namespace {

void write_list(std::ostream& out, const std::vector<std::size_t>& v) {
    out << '{';
    for (std::size_t k = 0; k < v.size(); ++k) out << (k ? "," : "") << v[k];
    out << '}';
}

}  // namespace

void write_text(std::ostream& out, const EvaluationResult& result) {
    out << "states: " << result.states << "  neurons: " << result.neurons << "  cone rank: " << result.cone_rank
        << '\n';
    out << "method: " << to_string(result.method) << '\n';
    out << "Ir:  " << format_double(result.ir) << '\n';
    out << "IrN: " << format_double(result.irn) << '\n';
    out << "output volume: " << format_double(result.output_volume) << '\n';
    out << "extreme-ray columns: ";
    write_list(out, result.extreme_ray_columns);
    out << "\nredundant columns: ";
    write_list(out, result.redundant_columns);
    out << "\nzero columns: ";
    write_list(out, result.zero_columns);
    out << '\n';
    for (const RegionSummary& r : result.regions) {
        out << "  region " << r.element_id << " dim " << r.dimension << " columns ";
        write_list(out, r.element_columns);
        out << " volume " << format_double(r.volume) << " integral " << format_double(r.integral)
            << (r.empty ? " (empty)" : "") << '\n';
    }
    for (const std::string& d : result.diagnostics) out << "note: " << d << '\n';
}

void write_csv(std::ostream& out, const QuadratureResult& result) {
    out << "n,total_samples,ir_num,irn_num\n"
        << result.n << ',' << result.total_samples << ',' << format_double(result.ir_num) << ','
        << format_double(result.irn_num) << '\n';
}

void write_text(std::ostream& out, const QuadratureResult& result) {
    out << "n: " << result.n << " (" << result.total_samples << " samples)\n"
        << "Ir_num:  " << format_double(result.ir_num) << '\n'
        << "IrN_num: " << format_double(result.irn_num) << '\n'
        << "seconds: " << result.seconds << '\n';
}

void write_convergence_csv(std::ostream& out, std::span<const ConvergenceRow> rows) {
    out << "n,ir_num,abs_error\n";
    for (const ConvergenceRow& r : rows)
        out << r.n << ',' << format_double(r.ir_num) << ',' << format_double(r.abs_error) << '\n';
}

}  // namespace conirep
