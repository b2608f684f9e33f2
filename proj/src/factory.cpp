#include "qhammer/factory.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qhammer {

namespace {

Gate hammer_gate(const std::string &name, QubitId q, double angle) {
    auto kind = gate_kind_from_name(name);
    if (!kind)
        throw std::invalid_argument("unknown hammer gate '" + name + "'");
    switch (*kind) {
    case GateKind::P: return Gate::p(q, angle);
    case GateKind::RZ: return Gate::rz(q, angle);
    case GateKind::RX: return Gate::rx(q, angle);
    case GateKind::RY: return Gate::ry(q, angle);
    case GateKind::SX: return Gate::sx(q);
    case GateKind::SXDG: return Gate::sxdg(q);
    case GateKind::Y: return Gate::y(q);
    case GateKind::U: return Gate::u(q, angle, -std::numbers::pi / 2, std::numbers::pi / 2);
    case GateKind::H: return Gate::h(q);
    case GateKind::X: return Gate::x(q);
    default:
        throw std::invalid_argument("gate '" + name + "' is not a single-qubit hammer gate");
    }
}

void append_cycle(Circuit &circuit, const ExperimentLabel &label,
                  const HammerNeighborhood &hood, double angle) {
    const auto &top = hood.top_row;
    const auto &bot = hood.bottom_row;
    switch (label.config) {
    case ConfigKind::Thirty1H:
        circuit.add(Gate::h(top[1]));
        circuit.add(Gate::h(bot[1]));
        break;
    case ConfigKind::Thirty2H:
        circuit.add(Gate::h(top[0]));
        circuit.add(Gate::h(top[2]));
        circuit.add(Gate::h(bot[0]));
        circuit.add(Gate::h(bot[2]));
        break;
    default:
        break;
    }

    switch (label.config) {
    case ConfigKind::Thirty:
    case ConfigKind::Thirty1H:
    case ConfigKind::Thirty2H:
        for (auto [a, b] : directed_row_pairs(top, bot))
            circuit.add(Gate::cx(a, b));
        break;
    case ConfigKind::Cross4:
        // the two diagonals through the centre, each both ways
        circuit.add(Gate::cx(top[0], bot[2]));
        circuit.add(Gate::cx(bot[2], top[0]));
        circuit.add(Gate::cx(top[2], bot[0]));
        circuit.add(Gate::cx(bot[0], top[2]));
        break;
    case ConfigKind::Six:
        for (QubitId q : hood.ring())
            circuit.add(hammer_gate(label.gate, q, angle));
        break;
    case ConfigKind::Control:
        break;
    }
}

} // namespace

Circuit build_circuit(const ExperimentSpec &spec, const CouplingGraph &graph) {
    const ExperimentLabel &label = spec.label;
    HammerNeighborhood hood = hammer_neighborhood(graph, label.center);
    double angle = spec.angle_override.value_or(std::numbers::pi);

    Circuit circuit(graph.qubit_count(), 1);

    bool prep_one =
        label.config == ConfigKind::Control ? spec.control_prep_one : label.target_prep_one;
    if (prep_one)
        circuit.add(Gate::x(label.center));
    if (label.neighbor_prep_one)
        for (QubitId q : hood.ring())
            circuit.add(Gate::x(q));

    std::uint32_t cycles = label.config == ConfigKind::Control ? 0 : 1 + label.extra_sets;
    std::vector<QubitId> all(graph.qubit_count());
    for (QubitId q = 0; q < graph.qubit_count(); ++q)
        all[q] = q;
    for (std::uint32_t cycle = 0; cycle < cycles; ++cycle) {
        append_cycle(circuit, label, hood, angle);
        circuit.add(Gate::barrier(all));
    }

    circuit.add(Gate::measure(label.center, 0));
    return circuit;
}

CampaignBuildError::CampaignBuildError(
    std::vector<std::pair<std::string, std::string>> failures_in)
    : std::runtime_error([&] {
          std::ostringstream msg;
          msg << failures_in.size() << " experiment(s) failed to build:";
          for (const auto &[label, why] : failures_in)
              msg << "\n  " << label << ": " << why;
          return msg.str();
      }()),
      failures(std::move(failures_in)) {}

std::vector<CampaignEntry> build_campaign(const std::vector<ExperimentSpec> &specs,
                                          const CouplingGraph &graph) {
    std::vector<CampaignEntry> entries;
    entries.reserve(specs.size());
    std::vector<std::pair<std::string, std::string>> failures;
    for (const ExperimentSpec &spec : specs) {
        try {
            entries.push_back({spec.label, build_circuit(spec, graph)});
        } catch (const std::exception &e) {
            failures.emplace_back(format_label(spec.label), e.what());
        }
    }
    if (!failures.empty())
        throw CampaignBuildError(std::move(failures));
    return entries;
}

} // namespace qhammer
