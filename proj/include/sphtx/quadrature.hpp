#ifndef SPHTX_QUADRATURE_HPP
#define SPHTX_QUADRATURE_HPP

#include <functional>

#include "sphtx/channel.hpp"
#include "sphtx/errors.hpp"

namespace sphtx {

/// Path used to evaluate the 3D spherical-transmitter integral.
///
/// RadialDensity1D collapses the triple integral to a single integral over
/// the source-to-receiver distance, which is exact because the point
/// response depends on the source location only through that distance.
/// DirectSpherical3D integrates over (c, theta, phi) as written and is kept
/// as an independent cross-validation path.
enum class QuadratureMethod { RadialDensity1D, DirectSpherical3D };

struct QuadratureSpec {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12; // callers usually scale this by the molecule count
    int max_subdivisions = 4000;
    QuadratureMethod method = QuadratureMethod::RadialDensity1D;

    /// Defaults with abs_tol = 1e-12 * N.
    static QuadratureSpec defaults_for(const ChannelSpec& spec);
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

/// Adaptive Gauss-Kronrod (7,15) integration of f over [a, b].
///
/// Bisects the interval with the largest error estimate until the summed
/// estimate drops below max(abs_tol, rel_tol * |integral|). Throws
/// ConvergenceError when max_subdivisions intervals are not enough.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double rel_tol, double abs_tol,
                                    int max_subdivisions);

inline QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                           double a, double b,
                                           const QuadratureSpec& q) {
    return integrate_adaptive(f, a, b, q.rel_tol, q.abs_tol, q.max_subdivisions);
}

/// Location and value of a single interior maximum of f on [lo, hi].
struct PeakEstimate {
    double argmax = 0.0;
    double value = 0.0;
    bool at_boundary = false;
};

/// Coarse log-spaced scan followed by golden-section refinement.
///
/// The refinement narrows the bracket until its width is below
/// rel_tol * argmax. If the coarse argmax sits on a boundary of [lo, hi]
/// (monotone curves) the boundary sample is returned unrefined.
PeakEstimate find_peak_log(const std::function<double(double)>& f,
                           double lo, double hi,
                           int points_per_decade = 40, double rel_tol = 1e-6);

} // namespace sphtx

#endif
