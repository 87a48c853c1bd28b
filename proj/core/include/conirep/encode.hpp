#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "conirep/cone.hpp"

namespace conirep {

struct SpikeEvent {
    std::size_t neuron = 1;  ///< 1-based, as in spike files
    double time = 0.0;       ///< seconds
};

/// Spike events of `neuron_count` neurons over [0, duration).
struct SpikeTrain {
    std::vector<SpikeEvent> events;
    std::size_t neuron_count = 0;
    double duration = 0.0;

    /// Throws InputError on out-of-range neurons or times; sorts events by time.
    void validate_and_sort();
};

/// Each input state occupies one slot of `slot_length` seconds.
struct SlotConfig {
    double slot_length = 1.0;
    std::size_t state_count = 1;
};

struct BinResult {
    StateMatrix matrix;
    /// Events at or after state_count * slot_length (ignored).
    std::size_t ignored_events = 0;
};

/// Parses the spike file format:
///
///   # neurons=<n> duration=<seconds>
///   <neuronId><TAB><time>
///   ...
///
/// Other lines starting with '#' and blank lines are ignored. Throws
/// InputError on malformed records or a missing header.
SpikeTrain read_spike_train(std::istream& in);
SpikeTrain read_spike_file(const std::filesystem::path& path);

/// Entry (k, l) counts neuron l's spikes in the half-open slot
/// [k * t_s, (k + 1) * t_s). Times within 1e-9 slots below a boundary are
/// snapped onto it, so decimal boundaries such as 0.3 with t_s = 0.1 land in
/// the later slot.
BinResult bin_spikes(const SpikeTrain& train, const SlotConfig& config);

}  // namespace conirep
