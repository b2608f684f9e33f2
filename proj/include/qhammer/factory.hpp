#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qhammer/circuit.hpp"
#include "qhammer/labels.hpp"
#include "qhammer/topology.hpp"

namespace qhammer {

/// One experiment to build and run.
struct ExperimentSpec {
    ExperimentLabel label;
    std::uint32_t shots = 40000;
    /// Angle for the parametric single-qubit hammer gates; pi when unset.
    std::optional<double> angle_override;
    /// Prepare control (Precision) experiments in basis 1 instead of 0.
    bool control_prep_one = false;
};

/**
 * Build the attack circuit for a spec over the full device register:
 * preparation X gates per the label's flags, then 1 + extra_sets cycles
 * of the config's gate set each ending in a full barrier, then a single
 * measurement of the centre into classical bit 0. Control labels skip
 * the cycles entirely. Deterministic: equal inputs give identical
 * circuits.
 */
Circuit build_circuit(const ExperimentSpec &spec, const CouplingGraph &graph);

struct CampaignEntry {
    ExperimentLabel label;
    Circuit circuit;
};

/// Build failure report for a whole campaign: (label text, reason) pairs.
struct CampaignBuildError : std::runtime_error {
    explicit CampaignBuildError(std::vector<std::pair<std::string, std::string>> failures);
    std::vector<std::pair<std::string, std::string>> failures;
};

/// Build every spec in order (duplicates included); throws
/// CampaignBuildError aggregating all per-spec failures.
std::vector<CampaignEntry> build_campaign(const std::vector<ExperimentSpec> &specs,
                                          const CouplingGraph &graph);

} // namespace qhammer
