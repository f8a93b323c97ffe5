#ifndef SPHTX_PARTICLE_SIM_HPP
#define SPHTX_PARTICLE_SIM_HPP

#include <cstdint>
#include <vector>

#include "sphtx/channel.hpp"
#include "sphtx/rng.hpp"

namespace sphtx {

/// How absorbing-surface crossings are detected within a time step.
///
/// SegmentIntersection tests the straight line between the endpoints of a
/// step; this is the reference protocol and undercounts slightly because
/// it misses out-and-back excursions, which is why small steps are needed
/// close to the receiver. SegmentIntersectionWithBridge additionally
/// absorbs with probability exp(-x1 x2 / (D dt)) when the segment misses,
/// x1/x2 being the endpoint distances to the surface.
enum class AbsorptionMode { SegmentIntersection, SegmentIntersectionWithBridge };

/// Post-release interaction with the transmitter sphere (3D surface
/// release only): Transparent ignores it, Reflective bounces molecules
/// off its surface.
enum class TxSolidity { Transparent, Reflective };

struct SimParams {
    double dt = 0.0;
    double horizon = 0.0; // 0 -> max record time
    long realizations = 100;
    std::uint64_t master_seed = 1;
    AbsorptionMode absorption_mode = AbsorptionMode::SegmentIntersection;
    TxSolidity tx_solidity = TxSolidity::Transparent;
    TimeGrid record_times;
    int threads = 0; // 0 -> hardware concurrency
};

struct MoleculeState {
    double x = 0.0, y = 0.0, z = 0.0;
    bool alive = true;
};

/// N molecules placed per the transmitter model: all at the center
/// (Point), uniform over the segment/ball (UniformVolume), or uniform on
/// the sphere surface (SurfaceRelease, 3D only -> ModelError in 1D).
/// Positions are relative to the transmitter center; the receiver center
/// sits at +distance along x.
std::vector<MoleculeState> init_molecules(const ChannelSpec& spec,
                                          TransmitterModel model,
                                          Xoshiro256pp& rng);

/// One diffusion step: every live molecule's coordinates gain independent
/// zero-mean Gaussians with variance 2 D dt (x only in 1D).
void diffuse_step(std::vector<MoleculeState>& states, Dimension dim, double
                  diffusion, double dt, Xoshiro256pp& rng);

/// True when the straight segment from p0 to p1 touches the sphere.
bool segment_hits_sphere(const double p0[3], const double p1[3],
                         const double center[3], double radius);

/// Absorption test for one step of one molecule (prev must be outside the
/// receiver). In bridge mode a uniform draw from rng decides the extra
/// crossing-probability event.
bool detect_absorption(const double prev[3], const double next[3],
                       const ChannelSpec& spec, AbsorptionMode mode,
                       double diffusion, double dt, Xoshiro256pp& rng);

/// Per-record-time molecule counts for one realization: molecules inside
/// the receiver (passive) or cumulative absorbed (absorbing). Record
/// times are snapped to multiples of dt beforehand by run_ensemble.
std::vector<long> run_realization(const ChannelSpec& spec, ReceiverKind kind,
                                  TransmitterModel model, const SimParams& params,
                                  const std::vector<long>& record_steps,
                                  std::uint64_t seed);

struct EnsembleResult {
    std::vector<double> times;      // actual (snapped) record times
    std::vector<double> mean_count;
    std::vector<double> std_count;  // sample standard deviation
    long realization_count = 0;
    std::vector<long> absorbed_total; // per-realization final counts (absorbing)
};

/// Runs params.realizations independent realizations (seeds derived from
/// master_seed) and aggregates mean and sample standard deviation per
/// record time. Requested record times are snapped to the nearest step
/// (at least one) and deduplicated; the snapped times are returned.
/// Results are bit-identical for any thread count.
EnsembleResult run_ensemble(const ChannelSpec& spec, ReceiverKind kind,
                            TransmitterModel model, const SimParams& params);

} // namespace sphtx

#endif
