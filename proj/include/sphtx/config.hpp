#ifndef SPHTX_CONFIG_HPP
#define SPHTX_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "sphtx/channel.hpp"
#include "sphtx/particle_sim.hpp"

namespace sphtx {

enum class CurveSelector { Simulated, VolumeAnalytic, Pta, Uca, Deviation };

std::string to_string(CurveSelector c);

/// One experiment: a scenario, an observation grid, optional simulation
/// parameters, and the curves to emit.
struct ExperimentConfig {
    ChannelSpec channel;
    ReceiverKind receiver = ReceiverKind::Passive;
    TransmitterModel transmitter = TransmitterModel::UniformVolume;

    std::optional<SimParams> sim;

    // Grid: either explicit times or a log-spaced descriptor. When t_min /
    // t_max are omitted they default to [t_peak/100, 100 t_peak].
    std::vector<double> explicit_times;
    double t_min = 0.0;
    double t_max = 0.0;
    int points_per_decade = 40;

    std::vector<CurveSelector> outputs;
    bool normalize = false;
    std::string output_path;

    // Optional distance sweep for deviation presets: each distance yields
    // its own deviation curve/file.
    std::vector<double> distance_sweep;
};

/// Parses and validates a config file (INI-style sections of key = value
/// pairs, all values SI). Throws ParseError with file/line diagnostics or
/// a validation error from the domain checks.
ExperimentConfig load_config(const std::string& path);

/// Parses config text directly (used by load_config and tests).
ExperimentConfig parse_config(const std::string& text, const std::string& origin);

/// Canonical text form; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ExperimentConfig& cfg);

/// The observation grid implied by the config (explicit times win).
TimeGrid resolve_grid(const ExperimentConfig& cfg);

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b);

} // namespace sphtx

#endif
