#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhammer/topology.hpp"

namespace qhammer {

enum class GateKind {
    P,
    RZ,
    RX,
    RY,
    SX,
    SXDG,
    Y,
    U,
    H,
    X,
    CX,
    Barrier,
    Measure,
};

/// QASM-2 mnemonic for a gate kind ("p", "rz", ..., "barrier", "measure").
std::string_view gate_name(GateKind kind);

/// Inverse of gate_name for the unitary kinds plus "barrier"/"measure".
std::optional<GateKind> gate_kind_from_name(std::string_view name);

/// Number of angle parameters the kind expects (1 for P/RZ/RX/RY, 3 for U).
std::size_t param_arity(GateKind kind);

/**
 * One circuit operation. Single-qubit kinds take one operand, CX two,
 * Barrier any number; Measure takes one operand plus an explicit
 * classical-bit target in `clbit`.
 */
struct Gate {
    GateKind kind;
    std::vector<QubitId> qubits;
    std::vector<double> params;
    int clbit = -1; // Measure only

    static Gate p(QubitId q, double theta) { return {GateKind::P, {q}, {theta}, -1}; }
    static Gate rz(QubitId q, double theta) { return {GateKind::RZ, {q}, {theta}, -1}; }
    static Gate rx(QubitId q, double theta) { return {GateKind::RX, {q}, {theta}, -1}; }
    static Gate ry(QubitId q, double theta) { return {GateKind::RY, {q}, {theta}, -1}; }
    static Gate sx(QubitId q) { return {GateKind::SX, {q}, {}, -1}; }
    static Gate sxdg(QubitId q) { return {GateKind::SXDG, {q}, {}, -1}; }
    static Gate y(QubitId q) { return {GateKind::Y, {q}, {}, -1}; }
    static Gate u(QubitId q, double theta, double phi, double lambda) {
        return {GateKind::U, {q}, {theta, phi, lambda}, -1};
    }
    static Gate h(QubitId q) { return {GateKind::H, {q}, {}, -1}; }
    static Gate x(QubitId q) { return {GateKind::X, {q}, {}, -1}; }
    static Gate cx(QubitId control, QubitId target) {
        return {GateKind::CX, {control, target}, {}, -1};
    }
    static Gate barrier(std::vector<QubitId> qs) {
        return {GateKind::Barrier, std::move(qs), {}, -1};
    }
    static Gate measure(QubitId q, int clbit) { return {GateKind::Measure, {q}, {}, clbit}; }

    bool acts_on(QubitId q) const;
};

/// Ordered gate list over one quantum and one classical register.
struct Circuit {
    QubitId num_qubits = 0;
    int num_clbits = 0;
    std::vector<Gate> ops;

    Circuit() = default;
    Circuit(QubitId nq, int nc) : num_qubits(nq), num_clbits(nc) {}

    void add(Gate g) { ops.push_back(std::move(g)); }

    std::size_t count_kind(GateKind kind) const;
};

/**
 * Standard unitary of a gate (2x2, or 4x4 for CX with the first operand
 * as control and basis ordered |control target>). Throws for Barrier and
 * Measure.
 */
Eigen::MatrixXcd unitary_of(const Gate &gate);

/// True when |<a|b>| distance says A and B are equal up to global phase.
bool equal_up_to_phase(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b,
                       double tol = 1e-12);

struct Violation {
    std::size_t op_index;
    std::string message;
};

/// First invariant violation of the circuit, or nullopt when valid:
/// qubit/param arities, operand ranges, duplicate operands, classical
/// target range.
std::optional<Violation> validate(const Circuit &circuit);

/**
 * Render the circuit as OPENQASM 2.0 text: header, register declarations
 * ("q" and "c"), one statement per op. Barriers spanning the full
 * register collapse to "barrier q;". Byte-deterministic for a given
 * circuit; throws std::invalid_argument when validate() fails.
 */
std::string emit_qasm(const Circuit &circuit);

} // namespace qhammer
