#include <doctest.h>

#include <fstream>
#include <numbers>
#include <sstream>

#include "qhammer/factory.hpp"

using namespace qhammer;

namespace {

ExperimentSpec spec_for(const std::string &label_text) {
    ExperimentSpec spec;
    spec.label = parse_label(label_text);
    return spec;
}

const CouplingGraph &eagle() {
    static CouplingGraph g = load_device_map("eagle127");
    return g;
}

} // namespace

TEST_CASE("thirty config with target prep builds 33 ops") {
    Circuit c = build_circuit(spec_for("cx(-72-0) 30"), eagle());
    CHECK(c.ops.size() == 33);
    CHECK(c.count_kind(GateKind::X) == 1);
    CHECK(c.count_kind(GateKind::CX) == 30);
    CHECK(c.count_kind(GateKind::Barrier) == 1);
    CHECK(c.count_kind(GateKind::Measure) == 1);

    // prep X on the centre first, measure of the centre into c0 last
    CHECK(c.ops.front().kind == GateKind::X);
    CHECK(c.ops.front().qubits == std::vector<QubitId>{72});
    CHECK(c.ops.back().kind == GateKind::Measure);
    CHECK(c.ops.back().qubits == std::vector<QubitId>{72});
    CHECK(c.ops.back().clbit == 0);

    CHECK(c.num_qubits == 127);
    CHECK(c.num_clbits == 1);
    CHECK_FALSE(validate(c).has_value());
}

TEST_CASE("control experiments are prepare-and-measure only") {
    Circuit c = build_circuit(spec_for("Precision(72)"), eagle());
    REQUIRE(c.ops.size() == 1);
    CHECK(c.ops[0].kind == GateKind::Measure);
    CHECK(c.count_kind(GateKind::Barrier) == 0);

    ExperimentSpec basis1 = spec_for("Precision(72)");
    basis1.control_prep_one = true;
    Circuit c1 = build_circuit(basis1, eagle());
    REQUIRE(c1.ops.size() == 2);
    CHECK(c1.ops[0].kind == GateKind::X);
    CHECK(c1.ops[0].qubits == std::vector<QubitId>{72});
}

TEST_CASE("six config at 1000 extra sets builds 1001 cycles") {
    Circuit c = build_circuit(spec_for("p(93-1000) 6"), eagle());
    CHECK(c.ops.size() == 7008); // 1001 * (6 gates + barrier) + measure
    CHECK(c.count_kind(GateKind::P) == 6006);
    CHECK(c.count_kind(GateKind::Barrier) == 1001);
    CHECK(c.count_kind(GateKind::Measure) == 1);
    CHECK(c.ops.back().qubits == std::vector<QubitId>{93});

    // default hammer angle is pi
    CHECK(c.ops[0].kind == GateKind::P);
    CHECK(c.ops[0].params[0] == doctest::Approx(std::numbers::pi));
}

TEST_CASE("per-cycle gate sets match their configs") {
    SUBCASE("thirty emits exactly 30 cx per cycle") {
        Circuit c = build_circuit(spec_for("cx(72-2) 30"), eagle());
        CHECK(c.count_kind(GateKind::CX) == 3 * 30);
        CHECK(c.count_kind(GateKind::Barrier) == 3);
    }
    SUBCASE("301H adds hadamards on the row middles each cycle") {
        Circuit c = build_circuit(spec_for("cx(72-1) 301H"), eagle());
        CHECK(c.count_kind(GateKind::H) == 2 * 2);
        CHECK(c.count_kind(GateKind::CX) == 2 * 30);
        // first cycle: H 62, H 81, then the cx block
        CHECK(c.ops[0].kind == GateKind::H);
        CHECK(c.ops[0].qubits == std::vector<QubitId>{62});
        CHECK(c.ops[1].qubits == std::vector<QubitId>{81});
        CHECK(c.ops[2].kind == GateKind::CX);
    }
    SUBCASE("302H adds hadamards on the four row edges each cycle") {
        Circuit c = build_circuit(spec_for("cx(72-0) 302H"), eagle());
        CHECK(c.count_kind(GateKind::H) == 4);
        CHECK(c.ops[0].qubits == std::vector<QubitId>{61});
        CHECK(c.ops[1].qubits == std::vector<QubitId>{63});
        CHECK(c.ops[2].qubits == std::vector<QubitId>{80});
        CHECK(c.ops[3].qubits == std::vector<QubitId>{82});
    }
    SUBCASE("cross4 emits the two diagonals, both directions") {
        Circuit c = build_circuit(spec_for("cx(72-0) 4 cross"), eagle());
        CHECK(c.count_kind(GateKind::CX) == 4);
        CHECK(c.ops[0].qubits == std::vector<QubitId>{61, 82});
        CHECK(c.ops[1].qubits == std::vector<QubitId>{82, 61});
        CHECK(c.ops[2].qubits == std::vector<QubitId>{63, 80});
        CHECK(c.ops[3].qubits == std::vector<QubitId>{80, 63});
    }
    SUBCASE("six emits one gate per neighborhood qubit") {
        Circuit c = build_circuit(spec_for("y(72-0) 6"), eagle());
        CHECK(c.count_kind(GateKind::Y) == 6);
        CHECK(c.ops[0].qubits == std::vector<QubitId>{61});
        CHECK(c.ops[5].qubits == std::vector<QubitId>{82});
    }
}

TEST_CASE("neighbor preparation flag sets the six ring qubits") {
    Circuit c = build_circuit(spec_for("-cx(-72-1) 4 cross"), eagle());
    // X on centre, then X on 61,62,63,80,81,82
    CHECK(c.count_kind(GateKind::X) == 7);
    CHECK(c.ops[0].qubits == std::vector<QubitId>{72});
    CHECK(c.ops[1].qubits == std::vector<QubitId>{61});
    CHECK(c.ops[6].qubits == std::vector<QubitId>{82});
    CHECK(c.count_kind(GateKind::CX) == 8); // 2 cycles * 4
}

TEST_CASE("exactly one measure, on the centre only") {
    for (const char *text : {"cx(-72-0) 30", "p(93-1000) 6", "Precision(15)",
                             "cx(34-2) 302H", "-u(109-3) 6"}) {
        CAPTURE(text);
        Circuit c = build_circuit(spec_for(text), eagle());
        CHECK(c.count_kind(GateKind::Measure) == 1);
    }
}

TEST_CASE("barrier count equals cycle count") {
    CHECK(build_circuit(spec_for("cx(72-0) 30"), eagle()).count_kind(GateKind::Barrier) == 1);
    CHECK(build_circuit(spec_for("cx(72-3) 30"), eagle()).count_kind(GateKind::Barrier) == 4);
    CHECK(build_circuit(spec_for("Precision(72)"), eagle()).count_kind(GateKind::Barrier) == 0);
}

TEST_CASE("angle override reaches the parametric gates") {
    ExperimentSpec spec = spec_for("rx(54-0) 6");
    spec.angle_override = 0.125;
    Circuit c = build_circuit(spec, eagle());
    CHECK(c.ops[0].kind == GateKind::RX);
    CHECK(c.ops[0].params[0] == 0.125);
}

TEST_CASE("builds are deterministic down to the emitted bytes") {
    ExperimentSpec spec = spec_for("cx(-72-1) 301H");
    std::string a = emit_qasm(build_circuit(spec, eagle()));
    std::string b = emit_qasm(build_circuit(spec, eagle()));
    CHECK(a == b);
}

TEST_CASE("golden qasm for the thirty config at centre 72") {
    Circuit c = build_circuit(spec_for("cx(-72-0) 30"), eagle());
    std::ifstream in(std::string(QHAMMER_TEST_DATA_DIR) + "/golden_t1-cx-72-0-30.qasm",
                     std::ios::binary);
    REQUIRE(in.good());
    std::stringstream golden;
    golden << in.rdbuf();
    CHECK(emit_qasm(c) == golden.str());
}

TEST_CASE("invalid centres are rejected with context") {
    CHECK_THROWS_AS(build_circuit(spec_for("cx(0-0) 30"), eagle()), std::invalid_argument);
    CHECK_THROWS_AS(build_circuit(spec_for("cx(62-0) 30"), eagle()), std::invalid_argument);
}

TEST_CASE("config/gate mismatch is caught even on hand-built labels") {
    ExperimentSpec spec;
    spec.label.gate = "cx";
    spec.label.center = 72;
    spec.label.config = ConfigKind::Six;
    CHECK_THROWS_AS(build_circuit(spec, eagle()), std::invalid_argument);
}

TEST_CASE("campaigns build one circuit per spec, in order") {
    std::vector<ExperimentSpec> specs;
    for (QubitId c : {15, 34, 54, 72, 93, 109})
        specs.push_back(spec_for("cx(" + std::to_string(c) + "-0) 30"));
    auto entries = build_campaign(specs, eagle());
    REQUIRE(entries.size() == 6);
    for (std::size_t i = 0; i < entries.size(); ++i)
        CHECK(entries[i].label == specs[i].label);
}

TEST_CASE("empty campaign is empty") {
    CHECK(build_campaign({}, eagle()).empty());
}

TEST_CASE("duplicate labels are both built") {
    std::vector<ExperimentSpec> specs{spec_for("cx(72-0) 30"), spec_for("cx(72-0) 30")};
    CHECK(build_campaign(specs, eagle()).size() == 2);
}

TEST_CASE("campaign errors aggregate per label") {
    std::vector<ExperimentSpec> specs{spec_for("cx(72-0) 30"), spec_for("cx(0-0) 30"),
                                      spec_for("cx(62-0) 30")};
    try {
        build_campaign(specs, eagle());
        FAIL("expected CampaignBuildError");
    } catch (const CampaignBuildError &e) {
        REQUIRE(e.failures.size() == 2);
        CHECK(e.failures[0].first == "cx(0-0) 30");
        CHECK(e.failures[1].first == "cx(62-0) 30");
        CHECK(std::string(e.what()).find("cx(0-0) 30") != std::string::npos);
    }
}
