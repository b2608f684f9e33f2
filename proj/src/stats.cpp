#include "qhammer/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace qhammer {

namespace {

std::uint64_t flip_count(const ExperimentResult &result) {
    return result.prepared == 0 ? result.counts.n1 : result.counts.n0;
}

void check_counts(const ExperimentResult &result) {
    if (result.counts.shots == 0)
        throw std::invalid_argument("result has zero shots");
    if (result.counts.n0 + result.counts.n1 != result.counts.shots)
        throw std::invalid_argument("outcome counts do not sum to the shot count");
    if (result.prepared != 0 && result.prepared != 1)
        throw std::invalid_argument("prepared state must be 0 or 1");
}

} // namespace

double flip_rate(const ExperimentResult &result) {
    check_counts(result);
    return static_cast<double>(flip_count(result)) / static_cast<double>(result.counts.shots);
}

bool is_successful_attack(const ExperimentResult &result) {
    check_counts(result);
    return 3 * flip_count(result) > 2 * result.counts.shots;
}

double precision_baseline(const ExperimentResult &control) {
    if (control.label.config != ConfigKind::Control)
        throw std::invalid_argument("precision baseline requires a control (Precision) result");
    check_counts(control);
    std::uint64_t matching = control.counts.shots - flip_count(control);
    return static_cast<double>(matching) / static_cast<double>(control.counts.shots);
}

std::uint64_t ContingencyTable::col_total(int j) const {
    std::uint64_t total = 0;
    for (const Row &row : rows)
        total += j == 0 ? row.n0 : row.n1;
    return total;
}

std::uint64_t ContingencyTable::grand_total() const { return col_total(0) + col_total(1); }

ChiSquareResult chi_square(const ContingencyTable &table) {
    if (table.rows.size() < 2)
        throw std::invalid_argument("chi-square requires at least 2 rows, got " +
                                    std::to_string(table.rows.size()));
    const double c0 = static_cast<double>(table.col_total(0));
    const double c1 = static_cast<double>(table.col_total(1));
    const double n = c0 + c1;
    if (c0 == 0.0 || c1 == 0.0)
        throw std::invalid_argument("degenerate table: an outcome column is all zero");

    ChiSquareResult result;
    result.expected.reserve(table.rows.size());
    result.contribution.reserve(table.rows.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const double rt = static_cast<double>(table.row_total(i));
        if (rt == 0.0)
            throw std::invalid_argument("degenerate table: row " + std::to_string(i) +
                                        " (" + table.rows[i].label + ") has zero total");
        const double e0 = rt * c0 / n;
        const double e1 = rt * c1 / n;
        const double o0 = static_cast<double>(table.rows[i].n0);
        const double o1 = static_cast<double>(table.rows[i].n1);
        const double k0 = (o0 - e0) * (o0 - e0) / e0;
        const double k1 = (o1 - e1) * (o1 - e1) / e1;
        result.expected.push_back({e0, e1});
        result.contribution.push_back({k0, k1});
        result.chi2 += k0 + k1;
    }
    return result;
}

std::string_view band_label(AssociationBand band) {
    switch (band) {
    case AssociationBand::None: return "No association among the fields.";
    case AssociationBand::Weak: return "weakly associated";
    case AssociationBand::Moderate: return "moderately associated";
    case AssociationBand::Strong: return "strongly associated";
    case AssociationBand::Perfect: return "perfect association";
    }
    throw std::logic_error("unreachable band");
}

CramersVResult cramers_v(double chi2, std::uint64_t n, int r, int c) {
    if (n < 1)
        throw std::invalid_argument("sample size must be >= 1");
    if (r < 2 || c < 2)
        throw std::invalid_argument("cramers_v requires r >= 2 and c >= 2");
    if (chi2 < 0.0)
        throw std::invalid_argument("chi2 must be non-negative");

    CramersVResult result;
    result.chi2 = chi2;
    result.n = n;
    result.min_dim = std::min(c - 1, r - 1);
    result.v = std::sqrt(chi2 / (static_cast<double>(n) * result.min_dim));

    if (result.v == 0.0)
        result.band = AssociationBand::None;
    else if (result.v == 1.0)
        result.band = AssociationBand::Perfect;
    else if (result.v <= 0.2)
        result.band = AssociationBand::Weak;
    else if (result.v <= 0.6)
        result.band = AssociationBand::Moderate;
    else
        result.band = AssociationBand::Strong;
    return result;
}

} // namespace qhammer
