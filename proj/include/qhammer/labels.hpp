#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qhammer/topology.hpp"

namespace qhammer {

/// Per-cycle gate arrangement named by a label's trailing token.
enum class ConfigKind {
    Thirty,   // "30": all 30 directed CX pairs
    Thirty1H, // "301H": H on the two row middles, then the 30 CX
    Thirty2H, // "302H": H on the four row edges, then the 30 CX
    Cross4,   // "4 cross": the four diagonal CX
    Six,      // "6": one single-qubit gate per neighborhood qubit
    Control,  // "Precision(N)": prepare-and-measure baseline, no gates
};

/// Canonical config token ("30", "301H", "302H", "4 cross", "6").
/// Control labels have no token; this throws for Control.
std::string_view config_token(ConfigKind config);

/**
 * Structured form of an experiment label.
 *
 * Grammar:  ['-'] GATE '(' ['-'] CENTER '-' EXTRASETS ')' CONFIG
 *       or  "Precision(" CENTER ")"
 *
 * The leading '-' marks the six neighborhood qubits as prepared in
 * basis 1, the inner '-' the centre itself. CONFIG accepts "30", "301H",
 * "302H", "4 cross"/"4cross" and "6"; whitespace between ')' and the
 * token is optional and normalizes to one space.
 */
struct ExperimentLabel {
    bool neighbor_prep_one = false;
    std::string gate; // qasm mnemonic, or "Precision" for Control
    bool target_prep_one = false;
    QubitId center = 0;
    std::uint32_t extra_sets = 0;
    ConfigKind config = ConfigKind::Control;

    bool operator==(const ExperimentLabel &) const = default;
};

/// Parse failure with the byte offset of the offending input position.
struct LabelParseError : std::runtime_error {
    LabelParseError(const std::string &msg, std::size_t offset);
    std::size_t offset;
};

ExperimentLabel parse_label(std::string_view text);

/// Canonical text of a label; parse_label(format_label(x)) == x.
std::string format_label(const ExperimentLabel &label);

} // namespace qhammer
