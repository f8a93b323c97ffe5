#ifndef SPHTX_CHANNEL_HPP
#define SPHTX_CHANNEL_HPP

#include <string>
#include <vector>

#include "sphtx/errors.hpp"

namespace sphtx {

enum class Dimension { OneD, ThreeD };
enum class ReceiverKind { Passive, Absorbing };
enum class TransmitterModel { Point, UniformVolume, SurfaceRelease };

std::string to_string(Dimension d);
std::string to_string(ReceiverKind k);
std::string to_string(TransmitterModel m);

/// Physical scenario. All quantities in SI base units (m, s, m^2/s).
///
/// The transmitter is a segment of half-length r_tx (1D) or a sphere of
/// radius r_tx (3D) centered a distance `distance` from the center of the
/// receiver, which is an interval of half-length r_rx (1D) or a sphere of
/// radius r_rx (3D). `molecules` are released at t = 0.
struct ChannelSpec {
    Dimension dimension = Dimension::ThreeD;
    double r_tx = 0.0;
    double r_rx = 0.0;
    double distance = 0.0;
    double diffusion = 0.0;
    long molecules = 0;
};

/// Checks all ChannelSpec invariants and returns the spec unchanged.
///
/// Throws OverlapError when distance < r_tx + r_rx (tangent geometry is
/// allowed), DomainError for nonpositive diffusion, r_rx or molecule count,
/// or negative r_tx. Idempotent.
ChannelSpec validate(const ChannelSpec& spec);

/// Near and far edges of the transmitter as seen from the receiver center.
struct TxExtent {
    double near_edge; // distance - r_tx
    double far_edge;  // distance + r_tx
};

TxExtent derived_geometry(const ChannelSpec& spec);

/// A source location inside (or on) the transmitter.
///
/// `offset` is the distance from the transmitter center; `polar` and
/// `azimuth` locate the point in 3D and are ignored in 1D (where offset is
/// signed, in [-r_tx, r_tx]).
struct SourcePoint {
    double offset = 0.0;
    double polar = 0.0;
    double azimuth = 0.0;
};

/// Distance from the receiver center to a source point.
double source_distance(const ChannelSpec& spec, const SourcePoint& p);

/// Strictly increasing positive observation times.
struct TimeGrid {
    std::vector<double> times;

    static TimeGrid from_times(std::vector<double> ts);
    static TimeGrid log_spaced(double t_min, double t_max, int points_per_decade);

    bool empty() const { return times.empty(); }
    std::size_t size() const { return times.size(); }
    double front() const { return times.front(); }
    double back() const { return times.back(); }
};

} // namespace sphtx

#endif
