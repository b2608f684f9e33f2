#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qhammer/campaign.hpp"

namespace {

using qhammer::cli::CampaignConfig;

std::vector<std::string> read_labels_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open labels file: " + path);
    std::vector<std::string> labels;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos)
            continue;
        labels.push_back(line.substr(start));
    }
    return labels;
}

std::optional<std::uint64_t> env_seed() {
    const char *env = std::getenv("QHAMMER_SEED");
    if (!env || !*env)
        return std::nullopt;
    try {
        return std::stoull(env);
    } catch (const std::exception &) {
        throw std::runtime_error("QHAMMER_SEED is not a valid unsigned integer");
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"qhammer: heavy-hex row-hammer circuit generation, simulation and analysis"};
    app.require_subcommand(1);

    std::string map_name = "eagle127";
    std::string labels_file;
    std::string noise_file;
    std::string out_dir = "out";
    std::string csv_path;
    std::string report_out;
    std::uint32_t shots = 40000;
    std::uint64_t seed_flag = 0;
    bool seed_given = false;
    bool svg = false;

    auto *gen = app.add_subcommand("gen", "Generate QASM circuits and a manifest");
    gen->add_option("--map", map_name, "Device map name or edge-list file")->capture_default_str();
    gen->add_option("--labels-file", labels_file, "Experiment labels, one per line")->required();
    gen->add_option("--out", out_dir, "Output directory")->capture_default_str();

    auto *run = app.add_subcommand("run", "Simulate a campaign into results.csv");
    run->add_option("--map", map_name, "Device map name or edge-list file")->capture_default_str();
    run->add_option("--labels-file", labels_file, "Experiment labels, one per line")->required();
    run->add_option("--shots", shots, "Shots per experiment")->capture_default_str();
    run->add_option("--noise", noise_file, "Noise configuration file");
    run->add_option("--seed", seed_flag, "Campaign master seed")
        ->each([&](const std::string &) { seed_given = true; });
    run->add_option("--out", out_dir, "Output directory")->capture_default_str();

    auto *analyze = app.add_subcommand("analyze", "Flip rates, success flags and Cramer's V");
    analyze->add_option("csv", csv_path, "results.csv produced by 'run'")->required();
    analyze->add_option("--out", report_out, "Also write the report to this file");

    auto *plotdata = app.add_subcommand("plotdata", "Per-group plot data files from results.csv");
    plotdata->add_option("csv", csv_path, "results.csv produced by 'run'")->required();
    plotdata->add_option("--out", out_dir, "Output directory")->capture_default_str();
    plotdata->add_flag("--svg", svg, "Also render an SVG bar chart per group");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            CampaignConfig config;
            config.map_name = map_name;
            config.labels = read_labels_file(labels_file);
            config.out_dir = out_dir;
            auto manifest = cmd_gen(config);
            std::cout << "wrote " << manifest.size() << " circuit(s) and manifest.json to "
                      << out_dir << "\n";
        } else if (run->parsed()) {
            if (shots < 1)
                throw std::runtime_error("--shots must be >= 1");
            CampaignConfig config;
            config.map_name = map_name;
            config.labels = read_labels_file(labels_file);
            config.shots = shots;
            config.noise_path = noise_file;
            config.out_dir = out_dir;
            if (auto env = env_seed())
                config.master_seed = *env;
            else if (seed_given)
                config.master_seed = seed_flag;
            auto rows = qhammer::cli::cmd_run(config);
            std::cout << "wrote " << rows.size() << " result row(s) to " << out_dir
                      << "/results.csv\n";
        } else if (analyze->parsed()) {
            std::optional<std::filesystem::path> out;
            if (!report_out.empty())
                out = report_out;
            auto report = qhammer::cli::cmd_analyze(csv_path, out);
            std::cout << report.text;
        } else if (plotdata->parsed()) {
            auto written = qhammer::cli::cmd_plotdata(csv_path, out_dir, svg);
            for (const auto &path : written)
                std::cout << "wrote " << path.string() << "\n";
        }
    } catch (const qhammer::CampaignBuildError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
