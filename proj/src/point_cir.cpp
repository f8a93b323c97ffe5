#include "sphtx/point_cir.hpp"

#include <cmath>

namespace sphtx {

double erf(double x) { return std::erf(x); }
double erfc(double x) { return std::erfc(x); }

namespace {

// Passive responses subtract error functions of (d -+ r_rx)/(2 sqrt(D t)).
// For large arguments the erf difference cancels catastrophically, so the
// identity erf(a) - erf(b) = erfc(b) - erfc(a) is used once the smaller
// argument exceeds 1; there the erfc values are small and well separated.
double erf_gap(double lo, double hi) {
    if (lo > 1.0)
        return std::erfc(lo) - std::erfc(hi);
    return std::erf(hi) - std::erf(lo);
}

double passive_1d(double n, double d, double r_rx, double diff, double t) {
    const double den = 2.0 * std::sqrt(diff * t);
    return 0.5 * n * erf_gap((d - r_rx) / den, (d + r_rx) / den);
}

double passive_3d(double n, double d, double r_rx, double diff, double t) {
    const double den = 2.0 * std::sqrt(diff * t);
    const double a = (d + r_rx) / den;
    const double b = (d - r_rx) / den;
    const double first = 0.5 * n * erf_gap(b, a);
    const double second = (n / d) * std::sqrt(diff * t / M_PI) *
                          (std::exp(-a * a) - std::exp(-b * b));
    return first + second;
}

} // namespace

double point_source_cir_at(const ChannelSpec& spec, ReceiverKind kind,
                           double d, double t) {
    if (t < 0.0 || !std::isfinite(t))
        throw DomainError("time must be finite and >= 0");
    if (t == 0.0)
        return 0.0;
    const double n = static_cast<double>(spec.molecules);
    const double r = spec.r_rx;
    const double diff = spec.diffusion;
    if (kind == ReceiverKind::Absorbing) {
        const double tail = std::erfc((d - r) / std::sqrt(4.0 * diff * t));
        if (spec.dimension == Dimension::OneD)
            return n * tail;
        return n * r / d * tail;
    }
    if (spec.dimension == Dimension::OneD)
        return passive_1d(n, d, r, diff, t);
    if (d == 0.0)
        throw DomainError("3D passive response is singular at d = 0");
    return passive_3d(n, d, r, diff, t);
}

double point_source_cir(const ChannelSpec& spec, ReceiverKind kind, double t) {
    return point_source_cir_at(spec, kind, spec.distance, t);
}

double point_concentration(const ChannelSpec& spec, double t) {
    if (t < 0.0 || !std::isfinite(t))
        throw DomainError("time must be finite and >= 0");
    if (t == 0.0)
        return 0.0;
    const double n = static_cast<double>(spec.molecules);
    const double d = spec.distance;
    const double g = std::exp(-d * d / (4.0 * spec.diffusion * t));
    if (spec.dimension == Dimension::OneD)
        return n / std::sqrt(4.0 * M_PI * spec.diffusion * t) * g;
    return n / std::pow(4.0 * M_PI * spec.diffusion * t, 1.5) * g;
}

double uca_cir(const ChannelSpec& spec, ReceiverKind kind, double t) {
    if (kind != ReceiverKind::Passive)
        throw KindError("the uniform concentration approximation applies to passive receivers only");
    const double volume = spec.dimension == Dimension::OneD
                              ? 2.0 * spec.r_rx
                              : 4.0 / 3.0 * M_PI * spec.r_rx * spec.r_rx * spec.r_rx;
    return volume * point_concentration(spec, t);
}

double peak_time(const ChannelSpec& spec, ReceiverKind kind) {
    const double d = spec.distance;
    if (kind == ReceiverKind::Absorbing) {
        const double gap = d - spec.r_rx;
        return gap * gap / (6.0 * spec.diffusion);
    }
    return spec.dimension == Dimension::OneD ? d * d / (2.0 * spec.diffusion)
                                             : d * d / (6.0 * spec.diffusion);
}

} // namespace sphtx
