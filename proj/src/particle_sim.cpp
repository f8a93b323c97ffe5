#include "sphtx/particle_sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace sphtx {

std::vector<MoleculeState> init_molecules(const ChannelSpec& spec,
                                          TransmitterModel model,
                                          Xoshiro256pp& rng) {
    if (model == TransmitterModel::SurfaceRelease && spec.dimension == Dimension::OneD)
        throw ModelError("surface release is defined for 3D transmitters only");

    std::vector<MoleculeState> states(static_cast<std::size_t>(spec.molecules));
    if (model == TransmitterModel::Point || spec.r_tx == 0.0)
        return states; // all at the transmitter center

    if (spec.dimension == Dimension::OneD) {
        for (auto& m : states)
            m.x = spec.r_tx * (2.0 * rng.uniform01() - 1.0);
        return states;
    }

    for (auto& m : states) {
        // Uniform direction from a normalized Gaussian triple; radius
        // r_tx * U^(1/3) for the ball, exactly r_tx for the shell.
        double gx, gy, gz, norm2;
        do {
            gx = rng.normal();
            gy = rng.normal();
            gz = rng.normal();
            norm2 = gx * gx + gy * gy + gz * gz;
        } while (norm2 == 0.0);
        const double inv = 1.0 / std::sqrt(norm2);
        double radius = spec.r_tx;
        if (model == TransmitterModel::UniformVolume)
            radius *= std::cbrt(rng.uniform01());
        m.x = radius * gx * inv;
        m.y = radius * gy * inv;
        m.z = radius * gz * inv;
    }
    return states;
}

void diffuse_step(std::vector<MoleculeState>& states, Dimension dim,
                  double diffusion, double dt, Xoshiro256pp& rng) {
    if (!(dt > 0.0))
        throw DomainError("diffusion step requires dt > 0");
    const double sigma = std::sqrt(2.0 * diffusion * dt);
    if (dim == Dimension::OneD) {
        for (auto& m : states)
            if (m.alive)
                m.x += sigma * rng.normal();
        return;
    }
    for (auto& m : states) {
        if (!m.alive)
            continue;
        m.x += sigma * rng.normal();
        m.y += sigma * rng.normal();
        m.z += sigma * rng.normal();
    }
}

bool segment_hits_sphere(const double p0[3], const double p1[3],
                         const double center[3], double radius) {
    const double d[3] = {p1[0] - p0[0], p1[1] - p0[1], p1[2] - p0[2]};
    const double m[3] = {p0[0] - center[0], p0[1] - center[1], p0[2] - center[2]};
    const double a = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
    const double b = m[0] * d[0] + m[1] * d[1] + m[2] * d[2];
    const double c = m[0] * m[0] + m[1] * m[1] + m[2] * m[2] - radius * radius;
    if (c <= 0.0)
        return true; // already touching or inside
    if (a == 0.0)
        return false; // zero-length step outside
    const double disc = b * b - a * c;
    if (disc < 0.0)
        return false;
    const double tau = (-b - std::sqrt(disc)) / a; // first crossing
    return tau >= 0.0 && tau <= 1.0;
}

namespace {

double dist_to_sphere(const double p[3], const double center[3], double radius) {
    const double dx = p[0] - center[0];
    const double dy = p[1] - center[1];
    const double dz = p[2] - center[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz) - radius;
}

bool bridge_crossing(double x1, double x2, double diffusion, double dt,
                     Xoshiro256pp& rng) {
    const double p = std::exp(-x1 * x2 / (diffusion * dt));
    return rng.uniform01() < p;
}

} // namespace

bool detect_absorption(const double prev[3], const double next[3],
                       const ChannelSpec& spec, AbsorptionMode mode,
                       double diffusion, double dt, Xoshiro256pp& rng) {
    if (spec.dimension == Dimension::OneD) {
        const double lo = spec.distance - spec.r_rx;
        const double hi = spec.distance + spec.r_rx;
        const double a = prev[0];
        const double b = next[0];
        bool hit;
        if (a < lo)
            hit = b >= lo;
        else if (a > hi)
            hit = b <= hi;
        else
            hit = true; // prev inside, caller violated the precondition
        if (hit)
            return true;
        if (mode == AbsorptionMode::SegmentIntersectionWithBridge) {
            const double boundary = a < lo ? lo : hi;
            return bridge_crossing(std::fabs(a - boundary), std::fabs(b - boundary),
                                   diffusion, dt, rng);
        }
        return false;
    }

    const double center[3] = {spec.distance, 0.0, 0.0};
    if (segment_hits_sphere(prev, next, center, spec.r_rx))
        return true;
    if (mode == AbsorptionMode::SegmentIntersectionWithBridge) {
        const double x1 = dist_to_sphere(prev, center, spec.r_rx);
        const double x2 = dist_to_sphere(next, center, spec.r_rx);
        return bridge_crossing(x1, x2, diffusion, dt, rng);
    }
    return false;
}

namespace {

bool inside_receiver(const MoleculeState& m, const ChannelSpec& spec) {
    if (spec.dimension == Dimension::OneD)
        return std::fabs(m.x - spec.distance) <= spec.r_rx;
    const double dx = m.x - spec.distance;
    return dx * dx + m.y * m.y + m.z * m.z <= spec.r_rx * spec.r_rx;
}

// Specular reflection of a step off the transmitter sphere (solid
// transmitter variant). The receiver absorption check runs on each
// straight sub-segment in flight order so a reflected path can still be
// absorbed mid-step. Returns true when the molecule was absorbed.
bool move_with_tx_reflection(MoleculeState& m, double nx, double ny, double nz,
                             const ChannelSpec& spec, ReceiverKind kind,
                             AbsorptionMode mode, double dt,
                             Xoshiro256pp& rng) {
    const double rt = spec.r_tx;
    double p0[3] = {m.x, m.y, m.z};
    double p1[3] = {nx, ny, nz};

    for (int bounce = 0; bounce < 16; ++bounce) {
        // First crossing of the transmitter sphere along p0 -> p1.
        const double d[3] = {p1[0] - p0[0], p1[1] - p0[1], p1[2] - p0[2]};
        const double a = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
        const double b = p0[0] * d[0] + p0[1] * d[1] + p0[2] * d[2];
        const double c = p0[0] * p0[0] + p0[1] * p0[1] + p0[2] * p0[2] - rt * rt;
        double tau = 2.0;
        if (a > 0.0) {
            const double disc = b * b - a * c;
            if (disc >= 0.0) {
                const double sq = std::sqrt(disc);
                const double t1 = (-b - sq) / a;
                const double t2 = (-b + sq) / a;
                constexpr double t_eps = 1e-12;
                if (t1 > t_eps && t1 <= 1.0)
                    tau = t1;
                else if (t2 > t_eps && t2 <= 1.0)
                    tau = t2;
            }
        }
        if (tau > 1.0) {
            if (kind == ReceiverKind::Absorbing &&
                detect_absorption(p0, p1, spec, mode, spec.diffusion, dt, rng)) {
                m.alive = false;
                return true;
            }
            m.x = p1[0];
            m.y = p1[1];
            m.z = p1[2];
            return false;
        }
        double hit[3] = {p0[0] + tau * d[0], p0[1] + tau * d[1], p0[2] + tau * d[2]};
        if (kind == ReceiverKind::Absorbing &&
            detect_absorption(p0, hit, spec, mode, spec.diffusion, dt, rng)) {
            m.alive = false;
            return true;
        }
        // Reflect the remaining displacement about the tangent plane.
        const double rem[3] = {p1[0] - hit[0], p1[1] - hit[1], p1[2] - hit[2]};
        const double nrm = std::sqrt(hit[0] * hit[0] + hit[1] * hit[1] + hit[2] * hit[2]);
        const double n[3] = {hit[0] / nrm, hit[1] / nrm, hit[2] / nrm};
        const double dot = rem[0] * n[0] + rem[1] * n[1] + rem[2] * n[2];
        p1[0] = hit[0] + rem[0] - 2.0 * dot * n[0];
        p1[1] = hit[1] + rem[1] - 2.0 * dot * n[1];
        p1[2] = hit[2] + rem[2] - 2.0 * dot * n[2];
        p0[0] = hit[0];
        p0[1] = hit[1];
        p0[2] = hit[2];
    }
    // Bounce cap reached: park the molecule at its last surface contact.
    m.x = p0[0];
    m.y = p0[1];
    m.z = p0[2];
    return false;
}

} // namespace

std::vector<long> run_realization(const ChannelSpec& spec, ReceiverKind kind,
                                  TransmitterModel model, const SimParams& params,
                                  const std::vector<long>& record_steps,
                                  std::uint64_t seed) {
    Xoshiro256pp rng(seed);
    std::vector<MoleculeState> mols = init_molecules(spec, model, rng);

    const bool reflective = params.tx_solidity == TxSolidity::Reflective &&
                            model == TransmitterModel::SurfaceRelease &&
                            spec.dimension == Dimension::ThreeD && spec.r_tx > 0.0;
    const bool one_d = spec.dimension == Dimension::OneD;
    const double sigma = std::sqrt(2.0 * spec.diffusion * params.dt);

    std::vector<long> counts;
    counts.reserve(record_steps.size());
    const long last_step = record_steps.empty() ? 0 : record_steps.back();
    std::size_t next_record = 0;
    long absorbed = 0;

    for (long step = 1; step <= last_step; ++step) {
        if (kind == ReceiverKind::Passive) {
            if (one_d) {
                for (auto& m : mols)
                    m.x += sigma * rng.normal();
            } else if (!reflective) {
                for (auto& m : mols) {
                    m.x += sigma * rng.normal();
                    m.y += sigma * rng.normal();
                    m.z += sigma * rng.normal();
                }
            } else {
                for (auto& m : mols) {
                    const double nx = m.x + sigma * rng.normal();
                    const double ny = m.y + sigma * rng.normal();
                    const double nz = m.z + sigma * rng.normal();
                    move_with_tx_reflection(m, nx, ny, nz, spec, kind,
                                            params.absorption_mode, params.dt, rng);
                }
            }
        } else {
            for (auto& m : mols) {
                if (!m.alive)
                    continue;
                if (one_d) {
                    const double prev[3] = {m.x, 0.0, 0.0};
                    const double next[3] = {m.x + sigma * rng.normal(), 0.0, 0.0};
                    if (detect_absorption(prev, next, spec, params.absorption_mode,
                                          spec.diffusion, params.dt, rng)) {
                        m.alive = false;
                        ++absorbed;
                    } else {
                        m.x = next[0];
                    }
                    continue;
                }
                const double nx = m.x + sigma * rng.normal();
                const double ny = m.y + sigma * rng.normal();
                const double nz = m.z + sigma * rng.normal();
                if (reflective) {
                    if (move_with_tx_reflection(m, nx, ny, nz, spec, kind,
                                                params.absorption_mode, params.dt, rng))
                        ++absorbed;
                    continue;
                }
                const double prev[3] = {m.x, m.y, m.z};
                const double next[3] = {nx, ny, nz};
                if (detect_absorption(prev, next, spec, params.absorption_mode,
                                      spec.diffusion, params.dt, rng)) {
                    m.alive = false;
                    ++absorbed;
                } else {
                    m.x = nx;
                    m.y = ny;
                    m.z = nz;
                }
            }
        }

        while (next_record < record_steps.size() && record_steps[next_record] == step) {
            if (kind == ReceiverKind::Absorbing) {
                counts.push_back(absorbed);
            } else {
                long inside = 0;
                for (const auto& m : mols)
                    inside += inside_receiver(m, spec) ? 1 : 0;
                counts.push_back(inside);
            }
            ++next_record;
        }
    }
    return counts;
}

namespace {

std::vector<long> snap_record_steps(const TimeGrid& grid, double dt) {
    std::vector<long> steps;
    steps.reserve(grid.size());
    for (double t : grid.times) {
        long k = std::max<long>(1, std::lround(t / dt));
        if (steps.empty() || k > steps.back())
            steps.push_back(k);
    }
    return steps;
}

} // namespace

EnsembleResult run_ensemble(const ChannelSpec& spec, ReceiverKind kind,
                            TransmitterModel model, const SimParams& params) {
    if (!(params.dt > 0.0) || !std::isfinite(params.dt))
        throw DomainError("simulation dt must be finite and > 0");
    if (params.realizations < 1)
        throw DomainError("at least one realization is required");
    if (params.record_times.empty())
        throw DomainError("record_times must be nonempty");
    if (params.horizon > 0.0 && params.horizon < params.record_times.back())
        throw DomainError("horizon is shorter than the last record time");

    const std::vector<long> record_steps = snap_record_steps(params.record_times, params.dt);
    const std::size_t n_rec = record_steps.size();
    const long n_real = params.realizations;

    // Every realization writes into its own slot; aggregation below walks
    // the slots in index order, so thread count and scheduling cannot
    // change the result.
    std::vector<std::vector<long>> per_real(static_cast<std::size_t>(n_real));
    std::atomic<long> cursor{0};
    auto worker = [&]() {
        for (;;) {
            const long i = cursor.fetch_add(1);
            if (i >= n_real)
                return;
            per_real[static_cast<std::size_t>(i)] =
                run_realization(spec, kind, model, params, record_steps,
                                derive_stream_seed(params.master_seed,
                                                   static_cast<std::uint64_t>(i)));
        }
    };

    int n_threads = params.threads > 0
                        ? params.threads
                        : static_cast<int>(std::thread::hardware_concurrency());
    n_threads = std::clamp<int>(n_threads, 1, static_cast<int>(n_real));
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_threads));
        for (int i = 0; i < n_threads; ++i)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    EnsembleResult result;
    result.realization_count = n_real;
    result.times.resize(n_rec);
    for (std::size_t j = 0; j < n_rec; ++j)
        result.times[j] = static_cast<double>(record_steps[j]) * params.dt;
    result.mean_count.assign(n_rec, 0.0);
    result.std_count.assign(n_rec, 0.0);

    for (std::size_t j = 0; j < n_rec; ++j) {
        double sum = 0.0;
        for (const auto& row : per_real)
            sum += static_cast<double>(row[j]);
        const double mean = sum / static_cast<double>(n_real);
        result.mean_count[j] = mean;
        if (n_real > 1) {
            double ss = 0.0;
            for (const auto& row : per_real) {
                const double dev = static_cast<double>(row[j]) - mean;
                ss += dev * dev;
            }
            result.std_count[j] = std::sqrt(ss / static_cast<double>(n_real - 1));
        }
    }
    if (kind == ReceiverKind::Absorbing) {
        result.absorbed_total.reserve(per_real.size());
        for (const auto& row : per_real)
            result.absorbed_total.push_back(row.empty() ? 0 : row.back());
    }
    return result;
}

} // namespace sphtx
