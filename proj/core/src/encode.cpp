#include "conirep/encode.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "conirep/errors.hpp"

namespace conirep {

void SpikeTrain::validate_and_sort() {
    if (!(duration > 0.0) || !std::isfinite(duration)) throw InputError("spike train duration must be positive");
    if (neuron_count == 0) throw InputError("spike train must declare at least one neuron");
    for (const SpikeEvent& e : events) {
        if (e.neuron < 1 || e.neuron > neuron_count)
            throw InputError("spike event neuron id " + std::to_string(e.neuron) + " out of range");
        if (!(e.time >= 0.0) || !(e.time < duration))
            throw InputError("spike event time " + std::to_string(e.time) + " outside [0, duration)");
    }
    std::stable_sort(events.begin(), events.end(),
                     [](const SpikeEvent& a, const SpikeEvent& b) { return a.time < b.time; });
}

namespace {

bool parse_header(const std::string& line, SpikeTrain& train) {
    std::istringstream in(line.substr(1));
    std::string token;
    bool neurons = false;
    bool duration = false;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        try {
            std::size_t used = 0;
            if (key == "neurons") {
                const long long n = std::stoll(value, &used);
                if (used != value.size() || n < 1) throw InputError("bad neuron count in header: " + value);
                train.neuron_count = static_cast<std::size_t>(n);
                neurons = true;
            } else if (key == "duration") {
                train.duration = std::stod(value, &used);
                if (used != value.size()) throw InputError("bad duration in header: " + value);
                duration = true;
            }
        } catch (const std::logic_error&) {
            throw InputError("malformed spike file header: " + line);
        }
    }
    if (neurons != duration) throw InputError("spike file header needs both neurons= and duration=");
    return neurons;
}

}  // namespace

SpikeTrain read_spike_train(std::istream& in) {
    SpikeTrain train;
    bool have_header = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            if (!have_header && parse_header(line.substr(first), train)) have_header = true;
            continue;
        }
        if (!have_header) throw InputError("spike file: record before '# neurons=... duration=...' header");
        std::istringstream rec(line);
        long long neuron = 0;
        double time = 0.0;
        std::string extra;
        if (!(rec >> neuron >> time) || (rec >> extra) || neuron < 1)
            throw InputError("spike file line " + std::to_string(line_no) + ": expected '<neuronId>\\t<time>'");
        train.events.push_back({static_cast<std::size_t>(neuron), time});
    }
    if (!have_header) throw InputError("spike file: missing '# neurons=<n> duration=<seconds>' header");
    train.validate_and_sort();
    return train;
}

SpikeTrain read_spike_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open spike file " + path.string());
    return read_spike_train(in);
}

BinResult bin_spikes(const SpikeTrain& train, const SlotConfig& config) {
    if (!(config.slot_length > 0.0) || !std::isfinite(config.slot_length))
        throw InputError("slot length must be positive");
    if (config.state_count < 1) throw InputError("state count must be at least 1");
    const double span = config.slot_length * static_cast<double>(config.state_count);
    if (span > train.duration * (1.0 + 1e-12))
        throw InputError("state_count * slot_length exceeds the spike train duration");

    Matrix counts = Matrix::Zero(static_cast<Eigen::Index>(config.state_count),
                                 static_cast<Eigen::Index>(train.neuron_count));
    std::size_t ignored = 0;
    for (const SpikeEvent& e : train.events) {
        if (e.neuron < 1 || e.neuron > train.neuron_count) throw InputError("spike event neuron id out of range");
        const double q = e.time / config.slot_length;
        double slot = std::floor(q);
        if (q - slot > 1.0 - 1e-9) slot += 1.0;
        if (slot >= static_cast<double>(config.state_count)) {
            ++ignored;
            continue;
        }
        counts(static_cast<Eigen::Index>(slot), static_cast<Eigen::Index>(e.neuron - 1)) += 1.0;
    }
    return {StateMatrix(std::move(counts)), ignored};
}

}  // namespace conirep
