#include "qhammer/campaign.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qhammer::cli {

namespace fs = std::filesystem;

namespace {

std::string pct(std::uint64_t part, std::uint64_t whole) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f",
                  100.0 * static_cast<double>(part) / static_cast<double>(whole));
    return buf;
}

std::string fixed2(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fixed4(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

/// Parse every label string, aggregating failures per label.
std::vector<ExperimentSpec> parse_specs(const CampaignConfig &config) {
    std::vector<ExperimentSpec> specs;
    std::vector<std::pair<std::string, std::string>> failures;
    for (const std::string &text : config.labels) {
        try {
            ExperimentSpec spec;
            spec.label = parse_label(text);
            spec.shots = config.shots;
            specs.push_back(std::move(spec));
        } catch (const std::exception &e) {
            failures.emplace_back(text, e.what());
        }
    }
    if (!failures.empty())
        throw CampaignBuildError(std::move(failures));
    return specs;
}

void write_text_file(const fs::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << text;
}

struct CsvRecord {
    std::string label;
    Counts counts;
    std::size_t line_no = 0;
};

std::vector<std::string> split_fields(const std::string &line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

std::vector<CsvRecord> read_records(const fs::path &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open results CSV: " + path.string());

    std::vector<CsvRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (line_no == 1 && line.rfind("Experiment,", 0) == 0)
            continue; // header
        auto fields = split_fields(line);
        auto fail = [&](const std::string &why) {
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": " + why);
        };
        if (fields.size() != 6)
            fail("expected 6 fields, got " + std::to_string(fields.size()));
        CsvRecord rec;
        rec.label = fields[0];
        rec.line_no = line_no;
        try {
            rec.counts.n0 = std::stoull(fields[3]);
            rec.counts.n1 = std::stoull(fields[4]);
            rec.counts.shots = std::stoull(fields[5]);
        } catch (const std::exception &) {
            fail("malformed count field");
        }
        if (rec.counts.n0 + rec.counts.n1 != rec.counts.shots)
            fail("outcome counts do not sum to the shot count");
        records.push_back(std::move(rec));
    }
    return records;
}

int prepared_state(const ExperimentLabel &label) {
    return label.config != ConfigKind::Control && label.target_prep_one ? 1 : 0;
}

std::string xml_escape(const std::string &text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
        }
    }
    return out;
}

/// Minimal self-contained bar chart with the 2/3 success threshold.
std::string render_svg(const std::string &title,
                       const std::vector<std::pair<std::string, double>> &bars) {
    const double bar_w = 46.0, gap = 18.0, left = 64.0, top = 36.0;
    const double plot_h = 260.0, bottom = 110.0;
    const double width = left + bars.size() * (bar_w + gap) + gap + 16.0;
    const double height = top + plot_h + bottom;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed2(width)
        << "\" height=\"" << fixed2(height) << "\" font-family=\"sans-serif\">\n";
    svg << "<text x=\"" << fixed2(width / 2) << "\" y=\"20\" text-anchor=\"middle\" "
        << "font-size=\"14\">" << xml_escape(title) << "</text>\n";

    // axes and gridlines every 20%
    for (int g = 0; g <= 100; g += 20) {
        double y = top + plot_h * (1.0 - g / 100.0);
        svg << "<line x1=\"" << fixed2(left) << "\" y1=\"" << fixed2(y) << "\" x2=\""
            << fixed2(width - 16.0) << "\" y2=\"" << fixed2(y)
            << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << fixed2(left - 8.0) << "\" y=\"" << fixed2(y + 4.0)
            << "\" text-anchor=\"end\" font-size=\"11\">" << g << "%</text>\n";
    }

    for (std::size_t i = 0; i < bars.size(); ++i) {
        const auto &[label, value] = bars[i];
        double h = plot_h * value / 100.0;
        double x = left + gap + i * (bar_w + gap);
        double y = top + plot_h - h;
        bool success = 3.0 * value > 200.0;
        svg << "<rect x=\"" << fixed2(x) << "\" y=\"" << fixed2(y) << "\" width=\""
            << fixed2(bar_w) << "\" height=\"" << fixed2(h) << "\" fill=\""
            << (success ? "#d1495b" : "#4878a8") << "\"/>\n";
        svg << "<text x=\"" << fixed2(x + bar_w / 2) << "\" y=\"" << fixed2(y - 5.0)
            << "\" text-anchor=\"middle\" font-size=\"10\">" << fixed2(value) << "</text>\n";
        double lx = x + bar_w / 2, ly = top + plot_h + 14.0;
        svg << "<text x=\"" << fixed2(lx) << "\" y=\"" << fixed2(ly)
            << "\" text-anchor=\"end\" font-size=\"10\" transform=\"rotate(-40 " << fixed2(lx)
            << " " << fixed2(ly) << ")\">" << xml_escape(label) << "</text>\n";
    }

    double ty = top + plot_h * (1.0 - 2.0 / 3.0);
    svg << "<line x1=\"" << fixed2(left) << "\" y1=\"" << fixed2(ty) << "\" x2=\""
        << fixed2(width - 16.0) << "\" y2=\"" << fixed2(ty)
        << "\" stroke=\"#d1495b\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n";
    svg << "<text x=\"" << fixed2(width - 16.0) << "\" y=\"" << fixed2(ty - 5.0)
        << "\" text-anchor=\"end\" font-size=\"11\" fill=\"#d1495b\">2/3 threshold</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace

std::string label_file_stem(const ExperimentLabel &label) {
    if (label.config == ConfigKind::Control)
        return "precision-" + std::to_string(label.center);
    std::string stem;
    if (label.neighbor_prep_one)
        stem += "n1-";
    if (label.target_prep_one)
        stem += "t1-";
    stem += label.gate;
    stem += '-';
    stem += std::to_string(label.center);
    stem += '-';
    stem += std::to_string(label.extra_sets);
    stem += '-';
    std::string token{config_token(label.config)};
    token.erase(std::remove(token.begin(), token.end(), ' '), token.end());
    stem += token;
    return stem;
}

std::vector<ManifestEntry> cmd_gen(const CampaignConfig &config) {
    CouplingGraph graph = load_device_map(config.map_name);
    auto specs = parse_specs(config);
    auto entries = build_campaign(specs, graph);

    fs::create_directories(config.out_dir);
    std::vector<ManifestEntry> manifest;
    nlohmann::ordered_json json_manifest = nlohmann::ordered_json::array();
    for (const CampaignEntry &entry : entries) {
        ManifestEntry me;
        me.label = format_label(entry.label);
        me.file = label_file_stem(entry.label) + ".qasm";
        me.total_ops = entry.circuit.ops.size();
        for (const Gate &g : entry.circuit.ops)
            ++me.op_counts[std::string(gate_name(g.kind))];

        write_text_file(config.out_dir / me.file, emit_qasm(entry.circuit));

        nlohmann::ordered_json jops = nlohmann::ordered_json::object();
        for (const auto &[name, count] : me.op_counts)
            jops[name] = count;
        json_manifest.push_back({{"label", me.label},
                                 {"file", me.file},
                                 {"total_ops", me.total_ops},
                                 {"op_counts", jops}});
        manifest.push_back(std::move(me));
    }
    write_text_file(config.out_dir / "manifest.json", json_manifest.dump(2) + "\n");
    return manifest;
}

std::vector<ResultRow> cmd_run(const CampaignConfig &config) {
    CouplingGraph graph = load_device_map(config.map_name);

    NoiseModel noise;
    std::uint64_t master_seed = config.master_seed.value_or(0);
    if (!config.noise_path.empty()) {
        NoiseFile nf = load_noise_file(config.noise_path);
        noise = nf.model;
        if (!config.master_seed && nf.seed)
            master_seed = *nf.seed;
    }

    auto specs = parse_specs(config);

    // auto-insert one control per centre ahead of its first experiment,
    // unless the campaign already carries one for that centre
    std::set<QubitId> has_control;
    for (const ExperimentSpec &spec : specs)
        if (spec.label.config == ConfigKind::Control)
            has_control.insert(spec.label.center);
    std::vector<ExperimentSpec> ordered;
    std::set<QubitId> inserted;
    for (const ExperimentSpec &spec : specs) {
        QubitId c = spec.label.center;
        if (!has_control.count(c) && !inserted.count(c)) {
            ExperimentSpec control;
            control.label.gate = "Precision";
            control.label.config = ConfigKind::Control;
            control.label.center = c;
            control.shots = config.shots;
            ordered.push_back(control);
            inserted.insert(c);
        }
        ordered.push_back(spec);
    }

    auto entries = build_campaign(ordered, graph);
    std::vector<ResultRow> rows;
    rows.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        std::string label_text = format_label(entries[i].label);
        std::uint64_t seed = substream_seed(master_seed, label_text);
        Counts counts = simulate(entries[i].circuit, graph, noise, seed, ordered[i].shots);
        rows.push_back({std::move(label_text), counts});
    }

    fs::create_directories(config.out_dir);
    write_results_csv(config.out_dir / "results.csv", rows);
    return rows;
}

std::string results_csv_text(const std::vector<ResultRow> &rows) {
    std::ostringstream out;
    out << "Experiment,Output 0 %,Output 1 %,Output 0 count,Output 1 count,Shots\n";
    for (const ResultRow &row : rows) {
        out << row.label << ',' << pct(row.counts.n0, row.counts.shots) << ','
            << pct(row.counts.n1, row.counts.shots) << ',' << row.counts.n0 << ','
            << row.counts.n1 << ',' << row.counts.shots << '\n';
    }
    return out.str();
}

void write_results_csv(const fs::path &path, const std::vector<ResultRow> &rows) {
    write_text_file(path, results_csv_text(rows));
}

std::vector<ResultRow> read_results_csv(const fs::path &path) {
    std::vector<ResultRow> rows;
    for (const CsvRecord &rec : read_records(path))
        rows.push_back({rec.label, rec.counts});
    return rows;
}

AnalysisReport cmd_analyze(const fs::path &csv_path,
                           const std::optional<fs::path> &out_path) {
    auto records = read_records(csv_path);

    AnalysisReport report;
    ContingencyTable table;
    for (const CsvRecord &rec : records) {
        ExperimentLabel label;
        try {
            label = parse_label(rec.label);
        } catch (const LabelParseError &e) {
            throw std::runtime_error(csv_path.string() + ":" + std::to_string(rec.line_no) +
                                     ": bad experiment label: " + e.what());
        }
        ExperimentResult result{label, rec.counts, prepared_state(label)};
        report.rows.push_back({rec.label, flip_rate(result), is_successful_attack(result)});
        table.rows.push_back({rec.label, rec.counts.n0, rec.counts.n1});
    }

    report.chi = chi_square(table); // rejects tables with fewer than 2 rows
    report.cramers =
        cramers_v(report.chi.chi2, table.grand_total(), static_cast<int>(table.rows.size()), 2);

    std::size_t label_w = 12;
    for (const AnalysisRow &row : report.rows)
        label_w = std::max(label_w, row.label.size());

    std::ostringstream out;
    out << "Flip-rate summary (success rule: flip rate > 2/3)\n";
    for (const AnalysisRow &row : report.rows) {
        out << "  " << row.label << std::string(label_w - row.label.size() + 2, ' ')
            << fixed4(100.0 * row.flip_rate) << " %  " << (row.success ? "SUCCESS" : "-")
            << "\n";
    }
    out << "\nContingency table (" << table.rows.size() << " rows x 2 outcomes)\n";
    out << "  " << "Experiment" << std::string(label_w - 10 + 2, ' ')
        << "Output0   Output1   Expected0    Expected1    Contrib0     Contrib1\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto &row = table.rows[i];
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%-9llu %-9llu %-12.2f %-12.2f %-12.2f %-12.2f",
                      static_cast<unsigned long long>(row.n0),
                      static_cast<unsigned long long>(row.n1), report.chi.expected[i][0],
                      report.chi.expected[i][1], report.chi.contribution[i][0],
                      report.chi.contribution[i][1]);
        out << "  " << row.label << std::string(label_w - row.label.size() + 2, ' ') << buf
            << "\n";
    }
    out << "  " << "Total" << std::string(label_w - 5 + 2, ' ') << table.col_total(0) << " / "
        << table.col_total(1) << " / " << table.grand_total() << "\n";
    out << "\nCramer's V\n";
    out << "  chi2          = " << fixed2(report.cramers.chi2) << "\n";
    out << "  n             = " << report.cramers.n << "\n";
    out << "  min(c-1, r-1) = " << report.cramers.min_dim << "\n";
    out << "  V             = " << fixed4(report.cramers.v) << "\n";
    out << "  interpretation: " << band_label(report.cramers.band) << "\n";
    report.text = out.str();

    if (out_path)
        write_text_file(*out_path, report.text);
    return report;
}

std::vector<fs::path> cmd_plotdata(const fs::path &csv_path, const fs::path &out_dir,
                                   bool svg) {
    auto records = read_records(csv_path);
    if (records.empty()) {
        std::cerr << "warning: " << csv_path.string() << " has no data rows, nothing to plot\n";
        return {};
    }

    struct Group {
        std::string key;
        std::string title;
        std::vector<std::pair<std::string, double>> bars; // label, flip %
        std::vector<bool> success;
    };
    std::vector<Group> groups;
    auto group_for = [&](const ExperimentLabel &label, int prepared) -> Group & {
        std::string key =
            "center" + std::to_string(label.center) + "_prep" + std::to_string(prepared);
        for (Group &g : groups)
            if (g.key == key)
                return g;
        groups.push_back({key,
                          "centre " + std::to_string(label.center) + ", prepared |" +
                              std::to_string(prepared) + ">",
                          {},
                          {}});
        return groups.back();
    };

    for (const CsvRecord &rec : records) {
        ExperimentLabel label;
        try {
            label = parse_label(rec.label);
        } catch (const LabelParseError &e) {
            throw std::runtime_error(csv_path.string() + ":" + std::to_string(rec.line_no) +
                                     ": bad experiment label: " + e.what());
        }
        int prepared = prepared_state(label);
        ExperimentResult result{label, rec.counts, prepared};
        Group &g = group_for(label, prepared);
        g.bars.emplace_back(rec.label, 100.0 * flip_rate(result));
        g.success.push_back(is_successful_attack(result));
    }

    fs::create_directories(out_dir);
    std::vector<fs::path> written;
    for (const Group &g : groups) {
        fs::path dat = out_dir / ("plot_" + g.key + ".dat");
        std::ostringstream out;
        out << "# " << g.title << "\n";
        out << "# index  flip_percent  success  label\n";
        for (std::size_t i = 0; i < g.bars.size(); ++i)
            out << i << "  " << fixed4(g.bars[i].second) << "  " << (g.success[i] ? 1 : 0)
                << "  \"" << g.bars[i].first << "\"\n";
        write_text_file(dat, out.str());
        written.push_back(dat);

        if (svg) {
            fs::path svg_path = out_dir / ("plot_" + g.key + ".svg");
            write_text_file(svg_path, render_svg(g.title, g.bars));
            written.push_back(svg_path);
        }
    }
    return written;
}

} // namespace qhammer::cli
