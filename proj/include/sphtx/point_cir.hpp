#ifndef SPHTX_POINT_CIR_HPP
#define SPHTX_POINT_CIR_HPP

#include "sphtx/channel.hpp"

namespace sphtx {

/// Error function and its complement.
///
/// erfc is evaluated directly (not as 1 - erf) so that the large-argument
/// tail keeps full relative accuracy; early-time responses need arguments
/// up to ~30. Accuracy is well below 1e-12 absolute everywhere.
double erf(double x);
double erfc(double x);

/// Expected molecule count at the receiver for a point transmitter at
/// distance `spec.distance`, dispatching on (dimension, kind).
///
/// Absorbing responses count cumulative absorbed molecules and are
/// non-decreasing in t; passive responses count molecules currently inside
/// the receiver. t = 0 (and any t whose exponentials underflow) yields 0.
double point_source_cir(const ChannelSpec& spec, ReceiverKind kind, double t);

/// As point_source_cir but with the source at distance `d` from the
/// receiver center instead of spec.distance. Shared by the volume
/// integrations.
double point_source_cir_at(const ChannelSpec& spec, ReceiverKind kind,
                           double d, double t);

/// Expected point concentration at the receiver center (molecules/m in 1D,
/// molecules/m^3 in 3D).
double point_concentration(const ChannelSpec& spec, double t);

/// Uniform-concentration approximation for a passive receiver: point
/// concentration scaled by the receiver volume (2 r_rx in 1D,
/// 4/3 pi r_rx^3 in 3D). Throws KindError for absorbing receivers.
double uca_cir(const ChannelSpec& spec, ReceiverKind kind, double t);

/// Expected signal peak time for a point transmitter: d^2/2D (1D passive),
/// d^2/6D (3D passive), and (d - r_rx)^2/6D for the peak absorption rate
/// of an absorbing receiver in either dimension.
double peak_time(const ChannelSpec& spec, ReceiverKind kind);

} // namespace sphtx

#endif
