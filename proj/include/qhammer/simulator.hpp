#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qhammer/circuit.hpp"
#include "qhammer/factory.hpp"
#include "qhammer/topology.hpp"

namespace qhammer {

enum class NoiseMode {
    CoherentRx,  // each spectator event applies RX(theta_ct) to the centre
    StochasticX, // each spectator event flips the centre with probability p_ct
};

/**
 * Parametric cross-talk + readout model for the measured centre.
 *
 * w2 extends the kick to gates whose operands sit at graph distance 2
 * from the centre, scaled by w2 (angle in coherent mode, probability in
 * stochastic mode). Default 0 keeps strict nearest-neighbor adjacency.
 */
struct NoiseModel {
    NoiseMode mode = NoiseMode::CoherentRx;
    double theta_ct = 0.0;
    double p_ct = 0.0;
    double readout_eps0 = 0.0; // P(read 1 | state 0)
    double readout_eps1 = 0.0; // P(read 0 | state 1)
    double w2 = 0.0;

    void validate() const; // throws std::invalid_argument
};

/// Shot-outcome histogram of the measured centre.
struct Counts {
    std::uint64_t shots = 0;
    std::uint64_t n0 = 0;
    std::uint64_t n1 = 0;
};

/**
 * Number of cross-talk events the circuit inflicts on the centre: gate
 * ops (barriers and measures excluded) with at least one operand
 * graph-adjacent to the centre that do not act on the centre itself.
 * Each qualifying op counts once.
 */
std::uint64_t spectator_events(const Circuit &circuit, const CouplingGraph &graph,
                               QubitId center);

/**
 * Sample the measured centre under the noise model. The centre is the
 * target of the circuit's unique measure op; gates applied directly to
 * the centre (the preparation X) are applied exactly, every other gate
 * contributes per the spectator-event rule. Deterministic for fixed
 * (circuit, noise, seed, shots).
 */
Counts simulate(const Circuit &circuit, const CouplingGraph &graph, const NoiseModel &noise,
                std::uint64_t seed, std::uint64_t shots);

/**
 * Fit the template's cross-talk strength (theta_ct or p_ct) so the
 * model's expected flip rate for the spec's circuit equals target_rate,
 * inverting the readout correction first. Throws std::domain_error when
 * the rate is unreachable (readout floor/ceiling, or parity ceiling in
 * stochastic mode).
 */
NoiseModel calibrate(double target_rate, const ExperimentSpec &spec, const CouplingGraph &graph,
                     const NoiseModel &noise_template);

/// Event-count form of calibrate: g1 distance-1 events, g2 distance-2
/// events, centre prepared in `prepared`.
NoiseModel calibrate_for_events(double target_rate, std::uint64_t g1, std::uint64_t g2,
                                int prepared, const NoiseModel &noise_template);

/// Expected flip rate of the spec's circuit under the model (no sampling).
double expected_flip_rate(const ExperimentSpec &spec, const CouplingGraph &graph,
                          const NoiseModel &noise);

/// FNV-1a 64-bit hash; stable across platforms, used for seed substreams.
std::uint64_t fnv1a64(std::string_view text);

/// Per-experiment RNG seed derived from a campaign master seed and the
/// canonical label text, independent of execution order.
std::uint64_t substream_seed(std::uint64_t master_seed, std::string_view label_text);

/// Parsed noise configuration file (keys: mode, theta_ct, p_ct,
/// readout_eps0, readout_eps1, w2, seed).
struct NoiseFile {
    NoiseModel model;
    std::optional<std::uint64_t> seed;
};

NoiseFile load_noise_file(const std::string &path);

} // namespace qhammer
