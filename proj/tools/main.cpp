// conirep: evaluate how well a nonnegative activity matrix supports a
// nonnegative-weighted linear readout.
//
//   conirep evaluate --input C.csv [--format json|csv|text] [--strict]
//   conirep numeric  --input C.csv --n 32
//   conirep compare  --input C.csv --ns 8,16,32,64 [--plot-data rows.csv]
//   conirep encode   --input spikes.txt --slot-length 0.5 --states 4 --output C.csv
//   conirep sweep    --input a.csv --input b.csv ...
//
// Exit codes: 0 success, 1 input error, 2 numerical fallback under --strict,
// 3 budget exceeded.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "conirep/encode.hpp"
#include "conirep/errors.hpp"
#include "conirep/evaluator.hpp"
#include "conirep/matrix_io.hpp"
#include "conirep/oracle.hpp"
#include "conirep/report.hpp"

namespace fs = std::filesystem;
using namespace conirep;

namespace {

enum ExitCode { kOk = 0, kInputError = 1, kFallbackStrict = 2, kBudget = 3 };

struct RunConfig {
    std::vector<std::string> inputs;
    std::string output;
    std::string format = "json";
    std::size_t n = 32;
    std::vector<std::size_t> ns{8, 16, 32, 64};
    std::string plot_data;
    unsigned threads = 1;
    bool deterministic = false;
    bool strict = false;
    std::size_t budget_samples = 10'000'000;
    std::optional<double> tol_geom;
    std::string rank_deficient = "analytic";
    std::size_t max_states = 10;
    double slot_length = 1.0;
    std::size_t states = 1;
};

// Writes to --output when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw InputError("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

unsigned effective_threads(const RunConfig& cfg) { return cfg.deterministic ? 1U : std::max(1U, cfg.threads); }

EvaluatorConfig evaluator_config(const RunConfig& cfg) {
    EvaluatorConfig ec;
    if (cfg.tol_geom) ec.tol.geom = *cfg.tol_geom;
    ec.threads = effective_threads(cfg);
    ec.fallback_sample_budget = cfg.budget_samples;
    ec.max_states = cfg.max_states;
    ec.rank_deficient =
        cfg.rank_deficient == "numeric" ? RankDeficientPolicy::Numerical : RankDeficientPolicy::Analytical;
    return ec;
}

QuadratureConfig quadrature_config(const RunConfig& cfg) {
    QuadratureConfig qc;
    qc.sample_budget = cfg.budget_samples;
    qc.threads = effective_threads(cfg);
    return qc;
}

const std::string& single_input(const RunConfig& cfg) {
    if (cfg.inputs.size() != 1) throw InputError("exactly one --input is required");
    return cfg.inputs.front();
}

int cmd_evaluate(const RunConfig& cfg) {
    const StateMatrix c = read_matrix_file(single_input(cfg));
    const EvaluationResult result = evaluate(c, evaluator_config(cfg));
    Sink sink(cfg.output);
    if (cfg.format == "json") {
        sink.stream() << to_json(result).dump(2) << '\n';
    } else if (cfg.format == "csv") {
        write_csv(sink.stream(), result);
    } else {
        write_text(sink.stream(), result);
    }
    if (cfg.strict && result.method == Method::NumericalFallback) return kFallbackStrict;
    return kOk;
}

int cmd_numeric(const RunConfig& cfg) {
    const StateMatrix c = read_matrix_file(single_input(cfg));
    const QuadratureResult q = ir_num(c, cfg.n, quadrature_config(cfg));
    Sink sink(cfg.output);
    if (cfg.format == "json") {
        sink.stream() << to_json(q, c.states()).dump(2) << '\n';
    } else if (cfg.format == "csv") {
        write_csv(sink.stream(), q);
    } else {
        write_text(sink.stream(), q);
    }
    return kOk;
}

int cmd_compare(const RunConfig& cfg) {
    const StateMatrix c = read_matrix_file(single_input(cfg));
    const EvaluationResult exact = evaluate(c, evaluator_config(cfg));
    if (exact.method == Method::NumericalFallback) {
        std::cerr << "conirep: compare needs an analytical reference; matrix fell back to quadrature\n";
        return cfg.strict ? kFallbackStrict : kInputError;
    }
    const auto rows = convergence_study(c, cfg.ns, exact.ir, quadrature_config(cfg));
    Sink sink(cfg.output);
    sink.stream() << "# ir=" << format_double(exact.ir) << '\n';
    write_convergence_csv(sink.stream(), rows);
    if (!cfg.plot_data.empty()) {
        Sink plot(cfg.plot_data);
        write_convergence_csv(plot.stream(), rows);
    }
    return kOk;
}

int cmd_encode(const RunConfig& cfg) {
    const SpikeTrain train = read_spike_file(single_input(cfg));
    const BinResult binned = bin_spikes(train, {cfg.slot_length, cfg.states});
    Sink sink(cfg.output);
    write_matrix_csv(sink.stream(), binned.matrix,
                     "states=" + std::to_string(cfg.states) + " neurons=" + std::to_string(train.neuron_count) +
                         " slot_length=" + format_double(cfg.slot_length));
    if (binned.ignored_events)
        std::cerr << "conirep: ignored " << binned.ignored_events << " spikes after the last slot\n";
    return kOk;
}

int cmd_sweep(const RunConfig& cfg) {
    std::vector<fs::path> files;
    for (const std::string& in : cfg.inputs) {
        if (fs::is_directory(in)) {
            std::vector<fs::path> found;
            for (const auto& entry : fs::directory_iterator(in))
                if (entry.is_regular_file() && entry.path().extension() == ".csv") found.push_back(entry.path());
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
        } else {
            files.emplace_back(in);
        }
    }
    if (files.empty()) throw InputError("sweep: no input matrices");

    Sink sink(cfg.output);
    sink.stream() << "file,states,neurons,ir,irn,output_volume,method\n";
    bool fallback = false;
    for (const fs::path& f : files) {
        const StateMatrix c = read_matrix_file(f);
        const EvaluationResult r = evaluate(c, evaluator_config(cfg));
        fallback = fallback || r.method == Method::NumericalFallback;
        sink.stream() << f.string() << ',' << r.states << ',' << r.neurons << ',' << format_double(r.ir) << ','
                      << format_double(r.irn) << ',' << format_double(r.output_volume) << ',' << to_string(r.method)
                      << '\n';
    }
    return (cfg.strict && fallback) ? kFallbackStrict : kOk;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--input,-i", cfg.inputs, "Input file")->required();
    sub->add_option("--output,-o", cfg.output, "Output file (default: stdout)");
    sub->add_option("--threads", cfg.threads, "Worker threads")->envname("CONIREP_THREADS")->check(CLI::PositiveNumber);
    sub->add_flag("--deterministic", cfg.deterministic, "Single-threaded, fixed summation order");
    sub->add_flag("--strict", cfg.strict, "Exit 2 when the numerical fallback was used");
    sub->add_option("--budget-samples", cfg.budget_samples, "Maximum quadrature samples n^m")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol-geom", cfg.tol_geom, "Geometric incidence tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--max-states", cfg.max_states, "Largest accepted state count m")->check(CLI::PositiveNumber);
    sub->add_option("--rank-deficient", cfg.rank_deficient, "Treatment of cones spanning fewer than m dimensions")
        ->check(CLI::IsMember({"analytic", "numeric"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"conirep: input-representation error of nonnegative activity matrices"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* evaluate_cmd = app.add_subcommand("evaluate", "Exact Ir(C), IrN(C), output volume and regions");
    add_common(evaluate_cmd, cfg);
    evaluate_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv", "text"}));

    auto* numeric_cmd = app.add_subcommand("numeric", "Midpoint-rule estimate with n samples per axis");
    add_common(numeric_cmd, cfg);
    numeric_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv", "text"}));
    numeric_cmd->add_option("--n", cfg.n, "Samples per axis")->check(CLI::PositiveNumber);

    auto* compare_cmd = app.add_subcommand("compare", "Convergence of the midpoint rule to the exact value");
    add_common(compare_cmd, cfg);
    compare_cmd->add_option("--ns", cfg.ns, "Resolutions, e.g. 8,16,32,64")->delimiter(',');
    compare_cmd->add_option("--plot-data", cfg.plot_data, "Also write the rows to this file");

    auto* encode_cmd = app.add_subcommand("encode", "Bin a spike file into a state matrix CSV");
    add_common(encode_cmd, cfg);
    encode_cmd->add_option("--slot-length", cfg.slot_length, "Seconds per input state")
        ->required()
        ->check(CLI::PositiveNumber);
    encode_cmd->add_option("--states", cfg.states, "Number of input states m")->required()->check(CLI::PositiveNumber);

    auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate many matrices (files or directories) into one CSV");
    add_common(sweep_cmd, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*evaluate_cmd) return cmd_evaluate(cfg);
        if (*numeric_cmd) return cmd_numeric(cfg);
        if (*compare_cmd) return cmd_compare(cfg);
        if (*encode_cmd) return cmd_encode(cfg);
        if (*sweep_cmd) return cmd_sweep(cfg);
    } catch (const BudgetExceeded& e) {
        std::cerr << "conirep: " << e.what() << '\n';
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "conirep: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
