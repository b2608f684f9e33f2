#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qhammer/labels.hpp"
#include "qhammer/simulator.hpp"

namespace qhammer {

/// Shot counts of one experiment together with the centre's prepared
/// basis state (0 or 1).
struct ExperimentResult {
    ExperimentLabel label;
    Counts counts;
    int prepared = 0;
};

/// Fraction of shots whose outcome differs from the prepared state.
double flip_rate(const ExperimentResult &result);

/// The success rule: flip rate strictly greater than 2/3. Evaluated in
/// integer arithmetic, so an exact 2/3 is not a success.
bool is_successful_attack(const ExperimentResult &result);

/// Fraction of shots matching the prepared state of a control
/// (Precision) experiment. Throws for non-control labels.
double precision_baseline(const ExperimentResult &control);

/// Experiments-by-outcome frequency table (r rows, 2 outcome columns).
struct ContingencyTable {
    struct Row {
        std::string label;
        std::uint64_t n0 = 0;
        std::uint64_t n1 = 0;
    };
    std::vector<Row> rows;

    std::uint64_t row_total(std::size_t i) const { return rows[i].n0 + rows[i].n1; }
    std::uint64_t col_total(int j) const;
    std::uint64_t grand_total() const;
};

/// Chi-square statistic with the per-cell expected values and (O-E)^2/E
/// contributions, row-aligned with the input table.
struct ChiSquareResult {
    double chi2 = 0.0;
    std::vector<std::array<double, 2>> expected;
    std::vector<std::array<double, 2>> contribution;
};

/// Pearson chi-square of independence, no continuity correction.
/// Throws std::invalid_argument for degenerate tables (fewer than two
/// rows, or a zero row/column total).
ChiSquareResult chi_square(const ContingencyTable &table);

enum class AssociationBand { None, Weak, Moderate, Strong, Perfect };

/// Interpretation text for a band; the exact boundaries are v=0,
/// 0<v<=0.2, 0.2<v<=0.6, v>0.6, v=1.
std::string_view band_label(AssociationBand band);

struct CramersVResult {
    double chi2 = 0.0;
    std::uint64_t n = 0;
    int min_dim = 0;
    double v = 0.0;
    AssociationBand band = AssociationBand::None;
};

/// Effect size v = sqrt(chi2 / (n * min(c-1, r-1))) with its band.
CramersVResult cramers_v(double chi2, std::uint64_t n, int r, int c);

} // namespace qhammer
