#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "qhammer/stats.hpp"

using namespace qhammer;

namespace {

ExperimentResult result_for(const std::string &label_text, std::uint64_t n0, std::uint64_t n1,
                            int prepared) {
    ExperimentResult r;
    r.label = parse_label(label_text);
    r.counts = {n0 + n1, n0, n1};
    r.prepared = prepared;
    return r;
}

/// The published 17-row contingency table of the centre-72 CX campaign.
ContingencyTable appendix_table() {
    ContingencyTable t;
    std::ifstream in(std::string(QHAMMER_TEST_DATA_DIR) + "/appendix_e.csv");
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        std::stringstream row(line);
        std::string label, p0, p1, c0, c1;
        std::getline(row, label, ',');
        std::getline(row, p0, ',');
        std::getline(row, p1, ',');
        std::getline(row, c0, ',');
        std::getline(row, c1, ',');
        t.rows.push_back({label, std::stoull(c0), std::stoull(c1)});
    }
    REQUIRE(t.rows.size() == 17);
    return t;
}

} // namespace

TEST_CASE("flip rate against the published rows") {
    CHECK(flip_rate(result_for("Precision(72)", 38925, 1075, 0)) == doctest::Approx(0.026875));
    CHECK(flip_rate(result_for("y(93-1000) 6", 38498, 1502, 0)) == doctest::Approx(0.03755));
    CHECK(flip_rate(result_for("cx(72-0) 30", 0, 40000, 1)) == 0.0);
}

TEST_CASE("success needs strictly more than two thirds") {
    CHECK(is_successful_attack(result_for("cx(-72-1) 30", 5948, 34052, 1)) == false);
    CHECK(is_successful_attack(result_for("cx(72-1) 30", 5948, 34052, 0)) == true); // 85.13%
    // exactly 2/3 of 30000 shots is 20000 flips: not a success
    CHECK(is_successful_attack(result_for("cx(72-0) 30", 10000, 20000, 0)) == false);
    CHECK(is_successful_attack(result_for("cx(72-0) 30", 9999, 20001, 0)) == true);
    CHECK(is_successful_attack(result_for("p(93-1000) 6", 39040, 960, 0)) == false); // 2.4%
}

TEST_CASE("precision baseline of control rows") {
    CHECK(precision_baseline(result_for("Precision(93)", 38907, 1093, 0)) ==
          doctest::Approx(0.972675));
    CHECK(precision_baseline(result_for("Precision(34)", 33340, 6660, 0)) ==
          doctest::Approx(0.8335));
    CHECK(precision_baseline(result_for("Precision(72)", 0, 40000, 1)) == 1.0);
    CHECK_THROWS_AS(precision_baseline(result_for("cx(72-0) 30", 1, 1, 0)),
                    std::invalid_argument);
}

TEST_CASE("result count invariants are enforced") {
    ExperimentResult bad = result_for("Precision(72)", 10, 10, 0);
    bad.counts.shots = 21;
    CHECK_THROWS_AS(flip_rate(bad), std::invalid_argument);
    bad.counts.shots = 0;
    bad.counts.n0 = bad.counts.n1 = 0;
    CHECK_THROWS_AS(flip_rate(bad), std::invalid_argument);
}

TEST_CASE("chi-square of the published table") {
    ContingencyTable table = appendix_table();
    CHECK(table.grand_total() == 680000);
    CHECK(table.col_total(0) == 466555);
    CHECK(table.col_total(1) == 213445);

    ChiSquareResult chi = chi_square(table);
    CHECK(std::abs(chi.chi2 - 334515.18) < 0.5);

    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        CHECK(std::abs(chi.expected[i][0] - 27444.41) < 0.01);
        CHECK(std::abs(chi.expected[i][1] - 12555.59) < 0.01);
        // expected marginals reproduce the row totals exactly
        CHECK(chi.expected[i][0] + chi.expected[i][1] ==
              doctest::Approx(static_cast<double>(table.row_total(i))).epsilon(1e-12));
    }

    // published per-cell contributions
    CHECK(std::abs(chi.contribution[0][0] - 4802.57) < 0.01);  // Precision(72), column 0
    CHECK(std::abs(chi.contribution[1][0] - 22411.13) < 0.01); // cx(-72-0) 30, column 0
}

TEST_CASE("independent rows give zero chi-square") {
    ContingencyTable t;
    t.rows.push_back({"a", 300, 100});
    t.rows.push_back({"b", 600, 200});
    t.rows.push_back({"c", 3, 1});
    ChiSquareResult chi = chi_square(t);
    CHECK(chi.chi2 == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("degenerate tables are rejected") {
    ContingencyTable single;
    single.rows.push_back({"a", 1, 2});
    CHECK_THROWS_AS(chi_square(single), std::invalid_argument);

    ContingencyTable zero_col;
    zero_col.rows.push_back({"a", 5, 0});
    zero_col.rows.push_back({"b", 7, 0});
    CHECK_THROWS_AS(chi_square(zero_col), std::invalid_argument);

    ContingencyTable zero_row;
    zero_row.rows.push_back({"a", 5, 5});
    zero_row.rows.push_back({"b", 0, 0});
    CHECK_THROWS_AS(chi_square(zero_row), std::invalid_argument);
}

TEST_CASE("chi-square is invariant under row permutation") {
    ContingencyTable table = appendix_table();
    ContingencyTable shuffled = table;
    std::mt19937 rng(3);
    std::shuffle(shuffled.rows.begin(), shuffled.rows.end(), rng);
    CHECK(chi_square(table).chi2 == doctest::Approx(chi_square(shuffled).chi2).epsilon(1e-12));
}

TEST_CASE("cramers v of the published campaign") {
    CramersVResult v = cramers_v(334515.18, 680000, 17, 2);
    CHECK(v.min_dim == 1);
    CHECK(std::abs(v.v - 0.70) < 0.005);
    CHECK(v.band == AssociationBand::Strong);
    CHECK(band_label(v.band) == "strongly associated");
}

TEST_CASE("cramers v edge values and bands") {
    CramersVResult none = cramers_v(0.0, 1000, 4, 2);
    CHECK(none.v == 0.0);
    CHECK(band_label(none.band) == "No association among the fields.");

    // chi2 = n * min_dim is the formula's upper bound
    CramersVResult perfect = cramers_v(5000.0, 5000, 3, 2);
    CHECK(perfect.v == 1.0);
    CHECK(band_label(perfect.band) == "perfect association");

    CHECK(cramers_v(0.04 * 1000, 1000, 2, 2).band == AssociationBand::Weak);  // v = 0.2
    CHECK(cramers_v(0.0625 * 1000, 1000, 2, 2).band == AssociationBand::Moderate); // v = 0.25
    CHECK(cramers_v(0.36 * 1000, 1000, 2, 2).band == AssociationBand::Moderate);   // v = 0.6
    CHECK(cramers_v(0.49 * 1000, 1000, 2, 2).band == AssociationBand::Strong);     // v = 0.7
}

TEST_CASE("cramers v argument validation") {
    CHECK_THROWS_AS(cramers_v(1.0, 0, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(cramers_v(1.0, 10, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(cramers_v(1.0, 10, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(cramers_v(-1.0, 10, 2, 2), std::invalid_argument);
}

TEST_CASE("scaling every cell leaves v unchanged") {
    ContingencyTable table = appendix_table();
    ContingencyTable doubled = table;
    for (auto &row : doubled.rows) {
        row.n0 *= 2;
        row.n1 *= 2;
    }
    ChiSquareResult chi = chi_square(table);
    ChiSquareResult chi2x = chi_square(doubled);
    CHECK(chi2x.chi2 == doctest::Approx(2.0 * chi.chi2).epsilon(1e-12));

    double v1 = cramers_v(chi.chi2, table.grand_total(), 17, 2).v;
    double v2 = cramers_v(chi2x.chi2, doubled.grand_total(), 17, 2).v;
    CHECK(v1 == doctest::Approx(v2).epsilon(1e-12));
}

TEST_CASE("v stays within [0,1] on random tables") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<std::uint64_t> cell(0, 5000);
    std::uniform_int_distribution<int> rows(2, 12);
    for (int trial = 0; trial < 200; ++trial) {
        ContingencyTable t;
        int r = rows(rng);
        for (int i = 0; i < r; ++i)
            t.rows.push_back({"row" + std::to_string(i), cell(rng) + 1, cell(rng) + 1});
        ChiSquareResult chi = chi_square(t);
        CramersVResult v = cramers_v(chi.chi2, t.grand_total(), r, 2);
        CAPTURE(trial);
        CHECK(v.v >= 0.0);
        CHECK(v.v <= 1.0 + 1e-12);
    }
}
