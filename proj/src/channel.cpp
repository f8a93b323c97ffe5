#include "sphtx/channel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sphtx {

std::string to_string(Dimension d) {
    return d == Dimension::OneD ? "1d" : "3d";
}

std::string to_string(ReceiverKind k) {
    return k == ReceiverKind::Passive ? "passive" : "absorbing";
}

std::string to_string(TransmitterModel m) {
    switch (m) {
    case TransmitterModel::Point: return "point";
    case TransmitterModel::UniformVolume: return "uniform_volume";
    case TransmitterModel::SurfaceRelease: return "surface_release";
    }
    return "?";
}

ChannelSpec validate(const ChannelSpec& spec) {
    auto bad = [](const std::string& what) { throw DomainError(what); };
    if (!(spec.r_tx >= 0.0) || !std::isfinite(spec.r_tx))
        bad("r_tx must be finite and >= 0");
    if (!(spec.r_rx > 0.0) || !std::isfinite(spec.r_rx))
        bad("r_rx must be finite and > 0");
    if (!(spec.diffusion > 0.0) || !std::isfinite(spec.diffusion))
        bad("diffusion coefficient must be finite and > 0");
    if (!(spec.distance > 0.0) || !std::isfinite(spec.distance))
        bad("distance must be finite and > 0");
    if (spec.molecules < 1)
        bad("molecule count must be >= 1");
    if (spec.distance < spec.r_tx + spec.r_rx) {
        std::ostringstream os;
        os << "transmitter and receiver overlap: distance " << spec.distance
           << " < r_tx + r_rx = " << spec.r_tx + spec.r_rx;
        throw OverlapError(os.str());
    }
    return spec;
}

TxExtent derived_geometry(const ChannelSpec& spec) {
    return {spec.distance - spec.r_tx, spec.distance + spec.r_tx};
}

double source_distance(const ChannelSpec& spec, const SourcePoint& p) {
    if (spec.dimension == Dimension::OneD)
        return spec.distance + p.offset;
    const double c = p.offset;
    const double d = spec.distance;
    const double proj = std::cos(p.azimuth) * std::sin(p.polar);
    return std::sqrt(c * c + d * d - 2.0 * c * d * proj);
}

TimeGrid TimeGrid::from_times(std::vector<double> ts) {
    if (ts.empty())
        throw DomainError("time grid must be nonempty");
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (!(ts[i] > 0.0) || !std::isfinite(ts[i]))
            throw DomainError("time grid entries must be finite and > 0");
        if (i > 0 && !(ts[i] > ts[i - 1]))
            throw DomainError("time grid must be strictly increasing");
    }
    TimeGrid g;
    g.times = std::move(ts);
    return g;
}

TimeGrid TimeGrid::log_spaced(double t_min, double t_max, int points_per_decade) {
    if (!(t_min > 0.0) || !(t_max > t_min))
        throw DomainError("log grid needs 0 < t_min < t_max");
    if (points_per_decade < 1)
        throw DomainError("points_per_decade must be >= 1");
    const double decades = std::log10(t_max / t_min);
    const int n = std::max(2, static_cast<int>(std::lround(decades * points_per_decade)) + 1);
    std::vector<double> ts(n);
    for (int i = 0; i < n; ++i)
        ts[i] = t_min * std::pow(t_max / t_min, static_cast<double>(i) / (n - 1));
    ts.front() = t_min;
    ts.back() = t_max;
    return from_times(std::move(ts));
}

} // namespace sphtx
