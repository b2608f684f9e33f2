#include "qhammer/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qhammer {

namespace {

using cplx = std::complex<double>;
constexpr cplx I{0.0, 1.0};

} // namespace

std::string_view gate_name(GateKind kind) {
    switch (kind) {
    case GateKind::P: return "p";
    case GateKind::RZ: return "rz";
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::SX: return "sx";
    case GateKind::SXDG: return "sxdg";
    case GateKind::Y: return "y";
    case GateKind::U: return "u";
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::CX: return "cx";
    case GateKind::Barrier: return "barrier";
    case GateKind::Measure: return "measure";
    }
    throw std::logic_error("unreachable gate kind");
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    static const std::pair<std::string_view, GateKind> table[] = {
        {"p", GateKind::P},           {"rz", GateKind::RZ},
        {"rx", GateKind::RX},         {"ry", GateKind::RY},
        {"sx", GateKind::SX},         {"sxdg", GateKind::SXDG},
        {"y", GateKind::Y},           {"u", GateKind::U},
        {"h", GateKind::H},           {"x", GateKind::X},
        {"cx", GateKind::CX},         {"barrier", GateKind::Barrier},
        {"measure", GateKind::Measure},
    };
    for (auto [n, k] : table)
        if (n == name)
            return k;
    return std::nullopt;
}

std::size_t param_arity(GateKind kind) {
    switch (kind) {
    case GateKind::P:
    case GateKind::RZ:
    case GateKind::RX:
    case GateKind::RY:
        return 1;
    case GateKind::U:
        return 3;
    default:
        return 0;
    }
}

bool Gate::acts_on(QubitId q) const {
    return std::find(qubits.begin(), qubits.end(), q) != qubits.end();
}

std::size_t Circuit::count_kind(GateKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(ops.begin(), ops.end(), [&](const Gate &g) { return g.kind == kind; }));
}

Eigen::MatrixXcd unitary_of(const Gate &gate) {
    auto m2 = [](cplx a, cplx b, cplx c, cplx d) {
        Eigen::MatrixXcd m(2, 2);
        m << a, b, c, d;
        return m;
    };
    switch (gate.kind) {
    case GateKind::P: {
        double t = gate.params.at(0);
        return m2(1, 0, 0, std::exp(I * t));
    }
    case GateKind::RZ: {
        double t = gate.params.at(0);
        return m2(std::exp(-I * (t / 2)), 0, 0, std::exp(I * (t / 2)));
    }
    case GateKind::RX: {
        double t = gate.params.at(0);
        return m2(std::cos(t / 2), -I * std::sin(t / 2), -I * std::sin(t / 2), std::cos(t / 2));
    }
    case GateKind::RY: {
        double t = gate.params.at(0);
        return m2(std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2));
    }
    case GateKind::SX:
        return m2(0.5 * cplx(1, 1), 0.5 * cplx(1, -1), 0.5 * cplx(1, -1), 0.5 * cplx(1, 1));
    case GateKind::SXDG:
        return m2(0.5 * cplx(1, -1), 0.5 * cplx(1, 1), 0.5 * cplx(1, 1), 0.5 * cplx(1, -1));
    case GateKind::Y:
        return m2(0, -I, I, 0);
    case GateKind::U: {
        double t = gate.params.at(0), phi = gate.params.at(1), lam = gate.params.at(2);
        return m2(std::cos(t / 2), -std::exp(I * lam) * std::sin(t / 2),
                  std::exp(I * phi) * std::sin(t / 2),
                  std::exp(I * (phi + lam)) * std::cos(t / 2));
    }
    case GateKind::H: {
        double s = 1.0 / std::sqrt(2.0);
        return m2(s, s, s, -s);
    }
    case GateKind::X:
        return m2(0, 1, 1, 0);
    case GateKind::CX: {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
        // basis |control target>: control=1 flips the target
        m(0, 0) = 1;
        m(1, 1) = 1;
        m(2, 3) = 1;
        m(3, 2) = 1;
        return m;
    }
    case GateKind::Barrier:
    case GateKind::Measure:
        throw std::invalid_argument(std::string(gate_name(gate.kind)) + " has no unitary");
    }
    throw std::logic_error("unreachable gate kind");
}

bool equal_up_to_phase(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    // For unitaries, |tr(A^dag B)| == dim iff A = e^{i phi} B.
    cplx tr = (a.adjoint() * b).trace();
    return std::abs(std::abs(tr) - static_cast<double>(a.rows())) <= tol;
}

std::optional<Violation> validate(const Circuit &circuit) {
    for (std::size_t i = 0; i < circuit.ops.size(); ++i) {
        const Gate &g = circuit.ops[i];
        auto bad = [&](const std::string &msg) {
            return Violation{i, std::string(gate_name(g.kind)) + ": " + msg};
        };

        std::size_t want_qubits;
        switch (g.kind) {
        case GateKind::CX:
            want_qubits = 2;
            break;
        case GateKind::Barrier:
            want_qubits = g.qubits.size(); // any, checked non-empty below
            if (g.qubits.empty())
                return bad("barrier needs at least one operand");
            break;
        default:
            want_qubits = 1;
            break;
        }
        if (g.qubits.size() != want_qubits)
            return bad("expected " + std::to_string(want_qubits) + " operand(s), got " +
                       std::to_string(g.qubits.size()));
        if (g.params.size() != param_arity(g.kind))
            return bad("expected " + std::to_string(param_arity(g.kind)) + " parameter(s), got " +
                       std::to_string(g.params.size()));

        for (QubitId q : g.qubits)
            if (q >= circuit.num_qubits)
                return bad("operand q" + std::to_string(q) + " out of range");

        std::set<QubitId> uniq(g.qubits.begin(), g.qubits.end());
        if (uniq.size() != g.qubits.size())
            return bad("duplicate operands");

        if (g.kind == GateKind::Measure) {
            if (g.clbit < 0 || g.clbit >= circuit.num_clbits)
                return bad("classical target c" + std::to_string(g.clbit) + " out of range");
        } else if (g.clbit != -1) {
            return bad("classical target only valid on measure");
        }
    }
    return std::nullopt;
}

namespace {

std::string format_angle(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::string emit_qasm(const Circuit &circuit) {
    if (auto v = validate(circuit))
        throw std::invalid_argument("invalid circuit at op " + std::to_string(v->op_index) +
                                    ": " + v->message);

    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << circuit.num_qubits << "];\n";
    out << "creg c[" << circuit.num_clbits << "];\n";

    for (const Gate &g : circuit.ops) {
        if (g.kind == GateKind::Measure) {
            out << "measure q[" << g.qubits[0] << "] -> c[" << g.clbit << "];\n";
            continue;
        }
        if (g.kind == GateKind::Barrier) {
            bool full = g.qubits.size() == circuit.num_qubits;
            if (full) {
                // operands are distinct and in range, so covering the size
                // means covering the register
                out << "barrier q;\n";
            } else {
                out << "barrier ";
                for (std::size_t i = 0; i < g.qubits.size(); ++i)
                    out << (i ? "," : "") << "q[" << g.qubits[i] << "]";
                out << ";\n";
            }
            continue;
        }
        out << gate_name(g.kind);
        if (!g.params.empty()) {
            out << "(";
            for (std::size_t i = 0; i < g.params.size(); ++i)
                out << (i ? "," : "") << format_angle(g.params[i]);
            out << ")";
        }
        out << " ";
        for (std::size_t i = 0; i < g.qubits.size(); ++i)
            out << (i ? "," : "") << "q[" << g.qubits[i] << "]";
        out << ";\n";
    }
    return out.str();
}

} // namespace qhammer
