#include "sphtx/volume_cir.hpp"

#include <algorithm>
#include <cmath>

#include "sphtx/point_cir.hpp"

namespace sphtx {

namespace {

void require_1d(const ChannelSpec& spec) {
    if (spec.dimension != Dimension::OneD)
        throw DimensionError("operation requires a 1D spec");
}

void require_3d(const ChannelSpec& spec) {
    if (spec.dimension != Dimension::ThreeD)
        throw DimensionError("operation requires a 3D spec");
}

// Antiderivative helpers for the 1D closed forms, written so that the
// second differences cancel algebraically instead of numerically.
//
// With L = 2 sqrt(D t):
//   integral of erf(v/L)  dv = v erf(v/L)  + (L/sqrt(pi)) exp(-v^2/L^2)
//   integral of erfc(v/L) dv = v erfc(v/L) - (L/sqrt(pi)) exp(-v^2/L^2)
//
// psi(v) is the erf antiderivative minus its linear part v; the linear
// parts of the four-point stencil in the passive response sum to zero
// exactly, and psi decays like a Gaussian, so small-t evaluation keeps
// relative accuracy.
double psi(double v, double l) {
    const double u = v / l;
    return (l / std::sqrt(M_PI)) * std::exp(-u * u) - v * std::erfc(u);
}

double erfc_antideriv(double v, double l) {
    const double u = v / l;
    return v * std::erfc(u) - (l / std::sqrt(M_PI)) * std::exp(-u * u);
}

double check_time(const ChannelSpec& spec, double t) {
    if (t < 0.0 || !std::isfinite(t))
        throw DomainError("time must be finite and >= 0");
    return static_cast<double>(spec.molecules);
}

} // namespace

double line_tx_cir_passive_1d(const ChannelSpec& spec, double t) {
    require_1d(spec);
    const double n = check_time(spec, t);
    if (t == 0.0)
        return 0.0;
    if (spec.r_tx == 0.0)
        return point_source_cir(spec, ReceiverKind::Passive, t);
    const auto [xi, xf] = derived_geometry(spec);
    const double r = spec.r_rx;
    const double l = 2.0 * std::sqrt(spec.diffusion * t);
    const double stencil = psi(xf + r, l) - psi(xi + r, l) -
                           psi(xf - r, l) + psi(xi - r, l);
    return std::max(0.0, n / (4.0 * spec.r_tx) * stencil);
}

double line_tx_cir_absorbing_1d(const ChannelSpec& spec, double t) {
    require_1d(spec);
    const double n = check_time(spec, t);
    if (t == 0.0)
        return 0.0;
    if (spec.r_tx == 0.0)
        return point_source_cir(spec, ReceiverKind::Absorbing, t);
    const auto [xi, xf] = derived_geometry(spec);
    const double r = spec.r_rx;
    const double l = 2.0 * std::sqrt(spec.diffusion * t);
    const double value = erfc_antideriv(xf - r, l) - erfc_antideriv(xi - r, l);
    return std::clamp(n / (2.0 * spec.r_tx) * value, 0.0, n);
}

double radial_distance_density(const ChannelSpec& spec, TransmitterModel model,
                               double s) {
    require_3d(spec);
    const double d = spec.distance;
    const double rt = spec.r_tx;
    if (model == TransmitterModel::Point)
        throw ModelError("a point transmitter has no radial distance density");
    if (s < d - rt || s > d + rt)
        throw DomainError("radial distance outside the transmitter support");
    if (model == TransmitterModel::SurfaceRelease)
        return s / (2.0 * rt * d);
    const double gap = d - s;
    return 3.0 * s * (rt * rt - gap * gap) / (4.0 * rt * rt * rt * d);
}

namespace {

double radial_average(const ChannelSpec& spec, ReceiverKind kind, double t,
                      TransmitterModel model, const QuadratureSpec& q) {
    const auto [lo, hi] = derived_geometry(spec);
    auto integrand = [&](double s) {
        return radial_distance_density(spec, model, s) *
               point_source_cir_at(spec, kind, s, t);
    };
    const double n = static_cast<double>(spec.molecules);
    const double v = integrate_adaptive(integrand, lo, hi, q).value;
    return std::clamp(v, 0.0, n);
}

} // namespace

double sphere_tx_cir_3d(const ChannelSpec& spec, ReceiverKind kind, double t,
                        const QuadratureSpec& q) {
    require_3d(spec);
    check_time(spec, t);
    if (t == 0.0)
        return 0.0;
    if (spec.r_tx == 0.0)
        return point_source_cir(spec, kind, t);
    return radial_average(spec, kind, t, TransmitterModel::UniformVolume, q);
}

double surface_tx_cir_3d(const ChannelSpec& spec, ReceiverKind kind, double t,
                         const QuadratureSpec& q) {
    require_3d(spec);
    check_time(spec, t);
    if (t == 0.0)
        return 0.0;
    if (spec.r_tx == 0.0)
        return point_source_cir(spec, kind, t);
    return radial_average(spec, kind, t, TransmitterModel::SurfaceRelease, q);
}

namespace {

// Direct triple integral over the transmitter ball in spherical
// coordinates, with the source-to-receiver distance
// d_int = sqrt(c^2 + d^2 - 2 c d cos(phi) sin(theta)).
// Nested one-dimensional adaptive passes, tightest innermost.
double direct_spherical(const ChannelSpec& spec, ReceiverKind kind, double t,
                        const QuadratureSpec& q) {
    const double d = spec.distance;
    const double rt = spec.r_tx;
    const double volume = 4.0 / 3.0 * M_PI * rt * rt * rt;

    auto phi_integral = [&](double c, double sin_theta) {
        auto f = [&](double phi) {
            const double dint = std::sqrt(std::max(
                0.0, c * c + d * d - 2.0 * c * d * std::cos(phi) * sin_theta));
            return point_source_cir_at(spec, kind, dint, t);
        };
        return integrate_adaptive(f, 0.0, 2.0 * M_PI, q.rel_tol * 0.02,
                                  q.abs_tol * 0.02, q.max_subdivisions)
            .value;
    };
    auto theta_integral = [&](double c) {
        auto f = [&](double theta) {
            return phi_integral(c, std::sin(theta)) * std::sin(theta);
        };
        return integrate_adaptive(f, 0.0, M_PI, q.rel_tol * 0.1,
                                  q.abs_tol * 0.1, q.max_subdivisions)
            .value;
    };
    auto radial = [&](double c) { return theta_integral(c) * c * c; };
    const double total =
        integrate_adaptive(radial, 0.0, rt, q.rel_tol, q.abs_tol * volume,
                           q.max_subdivisions)
            .value;
    const double n = static_cast<double>(spec.molecules);
    return std::clamp(total / volume, 0.0, n);
}

} // namespace

double volume_cir_generic(const ChannelSpec& spec, ReceiverKind kind, double t,
                          const QuadratureSpec& q) {
    check_time(spec, t);
    if (t == 0.0)
        return 0.0;
    if (spec.r_tx == 0.0)
        return point_source_cir(spec, kind, t);
    if (spec.dimension == Dimension::OneD) {
        auto f = [&](double c) {
            return point_source_cir_at(spec, kind, spec.distance + c, t);
        };
        const double v =
            integrate_adaptive(f, -spec.r_tx, spec.r_tx, q).value / (2.0 * spec.r_tx);
        return std::clamp(v, 0.0, static_cast<double>(spec.molecules));
    }
    if (q.method == QuadratureMethod::DirectSpherical3D)
        return direct_spherical(spec, kind, t, q);
    return radial_average(spec, kind, t, TransmitterModel::UniformVolume, q);
}

double volume_tx_cir(const ChannelSpec& spec, ReceiverKind kind, double t,
                     const QuadratureSpec& q) {
    if (spec.dimension == Dimension::OneD)
        return kind == ReceiverKind::Passive ? line_tx_cir_passive_1d(spec, t)
                                             : line_tx_cir_absorbing_1d(spec, t);
    return sphere_tx_cir_3d(spec, kind, t, q);
}

DeviationCurve pta_deviation(const ChannelSpec& spec, ReceiverKind kind,
                             const TimeGrid& grid) {
    // Ratios need relative accuracy even when both responses are tiny, so
    // the quadrature runs with a pure relative tolerance here.
    QuadratureSpec q = QuadratureSpec::defaults_for(spec);
    q.abs_tol = 0.0;

    DeviationCurve curve;
    curve.peak_time_s = peak_time(spec, kind);
    for (double t : grid.times) {
        const double vol = volume_tx_cir(spec, kind, t, q);
        if (vol <= 0.0 || !std::isfinite(vol)) {
            curve.excluded_times.push_back(t);
            continue;
        }
        const double pta = point_source_cir(spec, kind, t);
        curve.normalized_times.push_back(t / curve.peak_time_s);
        curve.deviations_pct.push_back(100.0 * (pta - vol) / vol);
    }
    if (curve.normalized_times.empty())
        throw EmptyCurveError("every grid point was excluded: volume response underflowed");
    return curve;
}

} // namespace sphtx
