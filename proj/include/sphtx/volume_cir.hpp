#ifndef SPHTX_VOLUME_CIR_HPP
#define SPHTX_VOLUME_CIR_HPP

#include <vector>

#include "sphtx/channel.hpp"
#include "sphtx/quadrature.hpp"

namespace sphtx {

/// Closed-form expected count at a 1D passive receiver when the molecules
/// start uniformly on the transmitter segment. Exact; reduces to the point
/// response as r_tx -> 0.
double line_tx_cir_passive_1d(const ChannelSpec& spec, double t);

/// Closed-form expected cumulative absorbed count at a 1D absorbing
/// receiver for a uniform segment source. Non-decreasing in t and -> N.
double line_tx_cir_absorbing_1d(const ChannelSpec& spec, double t);

/// Density of the distance s between the receiver center and a random
/// source point, for a uniform ball (UniformVolume) or uniform spherical
/// shell (SurfaceRelease) of radius r_tx centered at spec.distance.
/// Support is [distance - r_tx, distance + r_tx]; 3D only.
///
///   ball : p(s) = 3 s (r_tx^2 - (d - s)^2) / (4 r_tx^3 d)
///   shell: p(s) = s / (2 r_tx d)
///
/// Both satisfy the shell theorem E[1/s] = 1/d.
double radial_distance_density(const ChannelSpec& spec, TransmitterModel model,
                               double s);

/// 3D spherical-transmitter response (molecules uniform in the ball),
/// integrating the point response against the radial distance density.
double sphere_tx_cir_3d(const ChannelSpec& spec, ReceiverKind kind, double t,
                        const QuadratureSpec& q);

/// 3D surface-release response (molecules uniform on the sphere). Exact
/// for a transparent transmitter whose molecules start on the surface.
double surface_tx_cir_3d(const ChannelSpec& spec, ReceiverKind kind, double t,
                         const QuadratureSpec& q);

/// Brute-force volume average of the point response over the transmitter:
/// a direct integral over the offset in 1D and, with
/// QuadratureMethod::DirectSpherical3D, the full (c, theta, phi) integral
/// in 3D. Serves as the independent oracle for the closed forms and for
/// the radial-density path.
double volume_cir_generic(const ChannelSpec& spec, ReceiverKind kind, double t,
                          const QuadratureSpec& q);

/// Uniform-volume transmitter response dispatched on dimension:
/// closed forms in 1D, radial-density quadrature in 3D.
double volume_tx_cir(const ChannelSpec& spec, ReceiverKind kind, double t,
                     const QuadratureSpec& q);

/// Percent relative deviation of the point-transmitter approximation from
/// the volume-transmitter response, on a grid of normalized times.
struct DeviationCurve {
    std::vector<double> normalized_times; // t / t_peak
    std::vector<double> deviations_pct;   // 100 (PTA - volume) / volume
    std::vector<double> excluded_times;   // grid times where the volume
                                          // response underflowed to zero
    double peak_time_s = 0.0;
};

/// Deviation of the PTA over `grid` (absolute times). Grid points where
/// the volume response underflows to zero are excluded and reported in
/// excluded_times; if every point is excluded, throws EmptyCurveError.
DeviationCurve pta_deviation(const ChannelSpec& spec, ReceiverKind kind,
                             const TimeGrid& grid);

} // namespace sphtx

#endif
