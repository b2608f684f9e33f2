#include "qhammer/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>

namespace qhammer {

namespace {

using cplx = std::complex<double>;

void require(bool ok, const std::string &msg) {
    if (!ok)
        throw std::invalid_argument(msg);
}

/// Graph distance from the centre, capped at 3 ("far").
std::vector<std::uint8_t> distances_from(const CouplingGraph &graph, QubitId center) {
    std::vector<std::uint8_t> dist(graph.qubit_count(), 3);
    dist[center] = 0;
    for (QubitId n1 : graph.neighbors(center)) {
        dist[n1] = 1;
        for (QubitId n2 : graph.neighbors(n1))
            if (dist[n2] > 2)
                dist[n2] = 2;
    }
    return dist;
}

bool is_event_op(const Gate &g) {
    return g.kind != GateKind::Barrier && g.kind != GateKind::Measure;
}

/// Distance class of a gate relative to the centre: 1 or 2 when any
/// operand sits at that distance (nearest operand wins), 0 otherwise.
int event_class(const Gate &g, const std::vector<std::uint8_t> &dist, QubitId center) {
    if (!is_event_op(g) || g.acts_on(center))
        return 0;
    std::uint8_t best = 3;
    for (QubitId q : g.qubits)
        best = std::min(best, dist[q]);
    return best <= 2 ? best : 0;
}

QubitId measured_center(const Circuit &circuit) {
    std::optional<QubitId> center;
    for (const Gate &g : circuit.ops) {
        if (g.kind != GateKind::Measure)
            continue;
        if (center)
            throw std::invalid_argument("circuit measures more than one qubit");
        center = g.qubits[0];
    }
    if (!center)
        throw std::invalid_argument("circuit has no measure op");
    return *center;
}

/// Uniform double in [0, 1) with a platform-stable bit pattern.
double unit_double(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct CenterState {
    cplx a{1.0, 0.0}; // amplitude of |0>
    cplx b{0.0, 0.0}; // amplitude of |1>

    void apply(const Eigen::MatrixXcd &u) {
        cplx na = u(0, 0) * a + u(0, 1) * b;
        cplx nb = u(1, 0) * a + u(1, 1) * b;
        a = na;
        b = nb;
    }

    double p1() const { return std::norm(b); }
};

Eigen::MatrixXcd rx_kick(double theta) { return unitary_of(Gate::rx(0, theta)); }

struct Outcome {
    double p_true1;  // probability the centre is in |1> before readout
    int prepared;    // basis state implied by the preparation gates
};

/// Evolve the centre through the circuit under the model (no readout, no
/// sampling). Gates on the centre are applied exactly; everything else
/// contributes a cross-talk kick per its distance class.
Outcome evolve_center(const Circuit &circuit, const CouplingGraph &graph,
                      const NoiseModel &noise, QubitId center) {
    const auto dist = distances_from(graph, center);

    // evolution ends at the centre's measurement
    std::size_t end = circuit.ops.size();
    for (std::size_t i = 0; i < circuit.ops.size(); ++i)
        if (circuit.ops[i].kind == GateKind::Measure) {
            end = i;
            break;
        }
    auto active = [&] { return std::span(circuit.ops.data(), end); };

    int prepared = 0;
    for (const Gate &g : active())
        if (is_event_op(g) && g.acts_on(center) &&
            (g.kind == GateKind::X || g.kind == GateKind::Y))
            prepared ^= 1;

    if (noise.mode == NoiseMode::CoherentRx) {
        const Eigen::MatrixXcd kick1 = rx_kick(noise.theta_ct);
        const Eigen::MatrixXcd kick2 = rx_kick(noise.w2 * noise.theta_ct);
        CenterState state;
        for (const Gate &g : active()) {
            if (!is_event_op(g))
                continue;
            if (g.acts_on(center)) {
                if (g.kind == GateKind::CX)
                    throw std::invalid_argument(
                        "two-qubit gate on the measured centre is outside the spectator model");
                state.apply(unitary_of(g));
                continue;
            }
            switch (event_class(g, dist, center)) {
            case 1: state.apply(kick1); break;
            case 2:
                if (noise.w2 != 0.0)
                    state.apply(kick2);
                break;
            default: break;
            }
        }
        return {state.p1(), prepared};
    }

    // stochastic_x: the centre is a classical bit; accumulated event
    // flips reduce to a single parity draw
    std::uint64_t g1 = 0, g2 = 0;
    for (const Gate &g : active()) {
        if (!is_event_op(g))
            continue;
        if (g.acts_on(center)) {
            switch (g.kind) {
            case GateKind::X:
            case GateKind::Y:
            case GateKind::RZ:
            case GateKind::P:
                break; // flips are in `prepared`; phases are invisible
            default:
                throw std::invalid_argument(
                    std::string("gate '") + std::string(gate_name(g.kind)) +
                    "' on the centre has no classical action in stochastic mode");
            }
            continue;
        }
        int cls = event_class(g, dist, center);
        if (cls == 1)
            ++g1;
        else if (cls == 2)
            ++g2;
    }
    double p2 = noise.w2 * noise.p_ct;
    double keep = std::pow(1.0 - 2.0 * noise.p_ct, static_cast<double>(g1)) *
                  std::pow(1.0 - 2.0 * p2, static_cast<double>(g2));
    double p_odd = (1.0 - keep) / 2.0;
    double p_true1 = prepared ? 1.0 - p_odd : p_odd;
    return {p_true1, prepared};
}

double readout_p1(double p_true1, const NoiseModel &noise) {
    return p_true1 * (1.0 - noise.readout_eps1) + (1.0 - p_true1) * noise.readout_eps0;
}

} // namespace

void NoiseModel::validate() const {
    require(std::isfinite(theta_ct), "theta_ct must be finite");
    require(p_ct >= 0.0 && p_ct <= 1.0, "p_ct must lie in [0,1]");
    require(readout_eps0 >= 0.0 && readout_eps0 <= 1.0, "readout_eps0 must lie in [0,1]");
    require(readout_eps1 >= 0.0 && readout_eps1 <= 1.0, "readout_eps1 must lie in [0,1]");
    require(w2 >= 0.0 && w2 <= 1.0, "w2 must lie in [0,1]");
}

std::uint64_t spectator_events(const Circuit &circuit, const CouplingGraph &graph,
                               QubitId center) {
    require(center < graph.qubit_count(), "centre qubit out of range");
    const auto dist = distances_from(graph, center);
    std::uint64_t events = 0;
    for (const Gate &g : circuit.ops)
        if (event_class(g, dist, center) == 1)
            ++events;
    return events;
}

Counts simulate(const Circuit &circuit, const CouplingGraph &graph, const NoiseModel &noise,
                std::uint64_t seed, std::uint64_t shots) {
    noise.validate();
    require(shots >= 1, "shots must be >= 1");
    if (auto v = validate(circuit))
        throw std::invalid_argument("invalid circuit at op " + std::to_string(v->op_index) +
                                    ": " + v->message);
    QubitId center = measured_center(circuit);
    require(center < graph.qubit_count(), "measured qubit out of graph range");

    double p1 = readout_p1(evolve_center(circuit, graph, noise, center).p_true1, noise);

    std::mt19937_64 rng(seed);
    Counts counts;
    counts.shots = shots;
    for (std::uint64_t s = 0; s < shots; ++s)
        if (unit_double(rng) < p1)
            ++counts.n1;
    counts.n0 = shots - counts.n1;
    return counts;
}

double expected_flip_rate(const ExperimentSpec &spec, const CouplingGraph &graph,
                          const NoiseModel &noise) {
    noise.validate();
    Circuit circuit = build_circuit(spec, graph);
    Outcome out = evolve_center(circuit, graph, noise, spec.label.center);
    double p_read1 = readout_p1(out.p_true1, noise);
    return out.prepared ? 1.0 - p_read1 : p_read1;
}

NoiseModel calibrate(double target_rate, const ExperimentSpec &spec, const CouplingGraph &graph,
                     const NoiseModel &noise_template) {
    noise_template.validate();
    Circuit circuit = build_circuit(spec, graph);
    QubitId center = spec.label.center;
    const auto dist = distances_from(graph, center);

    std::uint64_t g1 = 0, g2 = 0;
    int prepared = 0;
    for (const Gate &g : circuit.ops) {
        if (is_event_op(g) && g.acts_on(center) &&
            (g.kind == GateKind::X || g.kind == GateKind::Y))
            prepared ^= 1;
        int cls = event_class(g, dist, center);
        if (cls == 1)
            ++g1;
        else if (cls == 2 && noise_template.w2 != 0.0)
            ++g2;
    }
    return calibrate_for_events(target_rate, g1, g2, prepared, noise_template);
}

NoiseModel calibrate_for_events(double target_rate, std::uint64_t g1, std::uint64_t g2,
                                int prepared, const NoiseModel &noise_template) {
    noise_template.validate();
    require(target_rate > 0.0 && target_rate < 1.0, "target rate must lie in (0,1)");
    require(prepared == 0 || prepared == 1, "prepared state must be 0 or 1");
    if (noise_template.w2 == 0.0)
        g2 = 0;
    if (g1 + g2 == 0)
        throw std::domain_error("spec yields no spectator events; nothing to calibrate");

    const double eps0 = noise_template.readout_eps0;
    const double eps1 = noise_template.readout_eps1;
    const double eps_prep = prepared ? eps1 : eps0;
    const double denom = 1.0 - eps0 - eps1;
    if (std::abs(denom) < 1e-12)
        throw std::domain_error("readout errors make every true rate read the same");

    // flip rate r = eps_prep + q * (1 - eps0 - eps1) with q the true flip
    // probability, so invert the affine readout map first
    double q = (target_rate - eps_prep) / denom;
    if (q < 0.0 || q > 1.0) {
        std::ostringstream msg;
        msg << "target rate " << target_rate << " unreachable: readout bounds flip rates to ["
            << std::min(eps_prep, eps_prep + denom) << ", "
            << std::max(eps_prep, eps_prep + denom) << "]";
        throw std::domain_error(msg.str());
    }

    NoiseModel fitted = noise_template;
    if (noise_template.mode == NoiseMode::CoherentRx) {
        double weight = static_cast<double>(g1) + noise_template.w2 * static_cast<double>(g2);
        fitted.theta_ct = (2.0 / weight) * std::asin(std::sqrt(q));
        return fitted;
    }

    // stochastic_x
    auto parity_flip = [&](double p) {
        return (1.0 - std::pow(1.0 - 2.0 * p, static_cast<double>(g1)) *
                          std::pow(1.0 - 2.0 * noise_template.w2 * p,
                                   static_cast<double>(g2))) /
               2.0;
    };
    if (g2 == 0) {
        double base = 1.0 - 2.0 * q;
        if (base >= 0.0) {
            fitted.p_ct = (1.0 - std::pow(base, 1.0 / static_cast<double>(g1))) / 2.0;
            return fitted;
        }
        if (g1 % 2 == 1) { // odd event count admits the real odd root
            fitted.p_ct = (1.0 + std::pow(-base, 1.0 / static_cast<double>(g1))) / 2.0;
            return fitted;
        }
        throw std::domain_error("true flip rates above 1/2 are unreachable with an even "
                                "spectator-event count in stochastic mode");
    }
    // mixed distance classes: bisect on [0, 1/2] where the parity flip
    // rate is monotone
    if (q > parity_flip(0.5))
        throw std::domain_error("target rate exceeds the stochastic parity ceiling");
    double lo = 0.0, hi = 0.5;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (parity_flip(mid) < q ? lo : hi) = mid;
    }
    fitted.p_ct = 0.5 * (lo + hi);
    return fitted;
}

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t substream_seed(std::uint64_t master_seed, std::string_view label_text) {
    // splitmix64 finalizer over the combined words
    std::uint64_t z = master_seed + 0x9e3779b97f4a7c15ull + fnv1a64(label_text);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

NoiseFile load_noise_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open noise file: " + path);

    NoiseFile out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        auto fail = [&](const std::string &why) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + why);
        };

        std::string key, value, extra;
        std::string body = line;
        std::replace(body.begin(), body.end(), '=', ' ');
        std::istringstream ls(body);
        if (!(ls >> key))
            continue;
        if (!(ls >> value) || (ls >> extra))
            fail("expected 'key = value'");

        try {
            if (key == "mode") {
                if (value == "coherent_rx")
                    out.model.mode = NoiseMode::CoherentRx;
                else if (value == "stochastic_x")
                    out.model.mode = NoiseMode::StochasticX;
                else
                    fail("unknown mode '" + value + "'");
            } else if (key == "theta_ct") {
                out.model.theta_ct = std::stod(value);
            } else if (key == "p_ct") {
                out.model.p_ct = std::stod(value);
            } else if (key == "readout_eps0") {
                out.model.readout_eps0 = std::stod(value);
            } else if (key == "readout_eps1") {
                out.model.readout_eps1 = std::stod(value);
            } else if (key == "w2") {
                out.model.w2 = std::stod(value);
            } else if (key == "seed") {
                out.seed = std::stoull(value);
            } else {
                fail("unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument &) {
            fail("malformed value '" + value + "' for key '" + key + "'");
        } catch (const std::out_of_range &) {
            fail("value '" + value + "' out of range for key '" + key + "'");
        }
    }
    out.model.validate();
    return out;
}

} // namespace qhammer
