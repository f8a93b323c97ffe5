#include "sphtx/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace sphtx {

QuadratureSpec QuadratureSpec::defaults_for(const ChannelSpec& spec) {
    QuadratureSpec q;
    q.abs_tol = 1e-12 * static_cast<double>(spec.molecules);
    return q;
}

namespace {

// Gauss-Kronrod (7,15) nodes and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
    double a, b;
    double value;
    double error;
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(center - half * kXgk[i]);
        fv[14 - i] = f(center + half * kXgk[i]);
    }
    fv[7] = f(center);

    double kronrod = kWgk[7] * fv[7];
    double gauss = kWg[3] * fv[7];
    double resabs = kWgk[7] * std::fabs(fv[7]);
    for (int i = 0; i < 7; ++i) {
        kronrod += kWgk[i] * (fv[i] + fv[14 - i]);
        resabs += kWgk[i] * (std::fabs(fv[i]) + std::fabs(fv[14 - i]));
    }
    for (int i = 0; i < 3; ++i)
        gauss += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);

    const double mean = 0.5 * kronrod;
    double resasc = kWgk[7] * std::fabs(fv[7] - mean);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::fabs(fv[i] - mean) + std::fabs(fv[14 - i] - mean));

    kronrod *= half;
    gauss *= half;
    resabs *= std::fabs(half);
    resasc *= std::fabs(half);

    // QUADPACK-style error estimate, sharper than |K15 - G7| alone.
    double err = std::fabs(kronrod - gauss);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
        err = std::max(err, 50.0 * eps * resabs);

    return {a, b, kronrod, err};
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double rel_tol, double abs_tol,
                                    int max_subdivisions) {
    if (!(b >= a) || !std::isfinite(a) || !std::isfinite(b))
        throw DomainError("integration interval must be finite with a <= b");
    if (a == b)
        return {0.0, 0.0, 0};

    auto worse = [](const Panel& x, const Panel& y) { return x.error < y.error; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> panels(worse);

    panels.push(evaluate_panel(f, a, b));
    long evals = 15;
    double total = panels.top().value;
    double total_err = panels.top().error;
    int count = 1;

    while (total_err > std::max(abs_tol, rel_tol * std::fabs(total))) {
        if (count >= max_subdivisions)
            throw ConvergenceError("adaptive quadrature exceeded max_subdivisions without converging");
        Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            throw ConvergenceError("adaptive quadrature hit floating-point interval resolution");
        Panel left = evaluate_panel(f, worst.a, mid);
        Panel right = evaluate_panel(f, mid, worst.b);
        evals += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++count;
    }

    return {total, total_err, evals};
}

PeakEstimate find_peak_log(const std::function<double(double)>& f,
                           double lo, double hi,
                           int points_per_decade, double rel_tol) {
    if (!(lo > 0.0) || !(hi > lo))
        throw DomainError("find_peak_log needs 0 < lo < hi");
    TimeGrid grid = TimeGrid::log_spaced(lo, hi, points_per_decade);
    std::size_t best = 0;
    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        vals[i] = f(grid.times[i]);
        if (vals[i] > vals[best])
            best = i;
    }
    if (best == 0 || best + 1 == grid.size())
        return {grid.times[best], vals[best], true};

    // Golden-section on log(t) within the bracketing grid cells.
    double a = std::log(grid.times[best - 1]);
    double b = std::log(grid.times[best + 1]);
    const double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(std::exp(x1));
    double f2 = f(std::exp(x2));
    while ((b - a) > rel_tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(std::exp(x2));
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(std::exp(x1));
        }
    }
    const double t_star = std::exp(0.5 * (a + b));
    return {t_star, f(t_star), false};
}

} // namespace sphtx
