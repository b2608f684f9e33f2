#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qhammer/factory.hpp"
#include "qhammer/simulator.hpp"
#include "qhammer/stats.hpp"

namespace qhammer::cli {

/// File-based campaign description shared by the gen/run commands.
struct CampaignConfig {
    std::string map_name = "eagle127";
    std::vector<std::string> labels;
    std::uint32_t shots = 40000;
    std::string noise_path;                  // empty: noiseless model
    std::optional<std::uint64_t> master_seed; // unset: noise-file seed, else 0
    std::filesystem::path out_dir;
    bool svg = false;
};

struct ManifestEntry {
    std::string label;
    std::string file;
    std::size_t total_ops = 0;
    std::map<std::string, std::size_t> op_counts; // per gate mnemonic
};

/// Generate one .qasm file per label plus manifest.json under
/// config.out_dir. Returns the manifest in label order.
std::vector<ManifestEntry> cmd_gen(const CampaignConfig &config);

struct ResultRow {
    std::string label;
    Counts counts;
};

/// Simulate the campaign and write results.csv under config.out_dir.
/// A Precision control row is inserted ahead of each centre's first
/// experiment unless the config already lists one for that centre.
/// Deterministic for a fixed master seed, independent of label order.
std::vector<ResultRow> cmd_run(const CampaignConfig &config);

struct AnalysisRow {
    std::string label;
    double flip_rate = 0.0;
    bool success = false;
};

struct AnalysisReport {
    std::vector<AnalysisRow> rows;
    ChiSquareResult chi;
    CramersVResult cramers;
    std::string text; // rendered report
};

/// Analyze a results CSV: per-row flip rate and the 2/3 success rule,
/// then the full contingency table with chi-square and Cramer's V.
/// Optionally writes the rendered report to out_path.
AnalysisReport cmd_analyze(const std::filesystem::path &csv_path,
                           const std::optional<std::filesystem::path> &out_path = {});

/// Write per-group plot data files (and optional SVG bar charts) from a
/// results CSV; one group per (centre, prepared-state). Returns the
/// paths written.
std::vector<std::filesystem::path> cmd_plotdata(const std::filesystem::path &csv_path,
                                                const std::filesystem::path &out_dir,
                                                bool svg);

/// Results CSV schema helpers. The header line is
/// "Experiment,Output 0 %,Output 1 %,Output 0 count,Output 1 count,Shots"
/// with percentages to 4 decimal places and LF line endings.
std::string results_csv_text(const std::vector<ResultRow> &rows);
void write_results_csv(const std::filesystem::path &path, const std::vector<ResultRow> &rows);
std::vector<ResultRow> read_results_csv(const std::filesystem::path &path);

/// Filesystem-safe, injective file stem for a label
/// ("-cx(-72-1) 4 cross" becomes "n1-t1-cx-72-1-4cross").
std::string label_file_stem(const ExperimentLabel &label);

} // namespace qhammer::cli
