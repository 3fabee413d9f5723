#include "grouphide/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace grouphide {

std::string record_field(const ExperimentRecord &r, std::string_view field) {
    if (field == "network") return r.network;
    if (field == "selection") return r.selection;
    if (field == "strategy") return r.strategy;
    if (field == "measure") return r.measure;
    if (field == "repetition") return std::to_string(r.repetition);
    if (field == "group") return std::to_string(r.group);
    throw std::invalid_argument("unknown record field '" + std::string(field) + "'");
}

std::vector<SummaryRow> summarize_samples(const std::vector<std::pair<std::vector<std::string>, double>> &samples) {
    if (samples.empty()) throw std::invalid_argument("summarize: no records");
    std::map<std::vector<std::string>, std::vector<double>> buckets;
    for (const auto &[key, value] : samples) buckets[key].push_back(value);
    std::vector<SummaryRow> rows;
    for (const auto &[key, values] : buckets) {
        SummaryRow row;
        row.key = key;
        row.n = values.size();
        double sum = 0.0;
        for (double v : values) sum += v;
        row.mean_delta = sum / static_cast<double>(row.n);
        if (row.n == 1) {
            row.single_sample = true;
        } else {
            double ss = 0.0;
            for (double v : values) ss += (v - row.mean_delta) * (v - row.mean_delta);
            double sd = std::sqrt(ss / static_cast<double>(row.n - 1));
            row.ci95_half_width = 1.96 * sd / std::sqrt(static_cast<double>(row.n));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<SummaryRow> summarize(const std::vector<ExperimentRecord> &records,
                                  const std::vector<std::string> &group_by) {
    std::vector<std::pair<std::vector<std::string>, double>> samples;
    samples.reserve(records.size());
    for (const ExperimentRecord &r : records) {
        std::vector<std::string> key;
        for (const std::string &f : group_by) key.push_back(record_field(r, f));
        samples.emplace_back(std::move(key), r.delta);
    }
    return summarize_samples(samples);
}

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    // Shortest text that parses back to the same double.
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

Table records_table(const std::vector<ExperimentRecord> &records) {
    Table t;
    t.header = {"network", "selection", "strategy", "measure",   "seed",    "repetition",    "group",
                "value_before", "value_after", "delta", "removed_count", "budget", "ged_alpha", "ged_max_length"};
    for (const ExperimentRecord &r : records)
        t.rows.push_back({r.network, r.selection, r.strategy, r.measure, std::to_string(r.seed),
                          std::to_string(r.repetition), std::to_string(r.group), format_number(r.value_before),
                          format_number(r.value_after), format_number(r.delta), std::to_string(r.removed_count),
                          std::to_string(r.budget), format_number(r.ged_alpha), std::to_string(r.ged_max_length)});
    return t;
}

Table timings_table(const std::vector<ExperimentRecord> &records) {
    Table t;
    t.header = {"network", "repetition", "group", "strategy", "wall_time"};
    std::string last;
    for (const ExperimentRecord &r : records) {
        // Measures of one strategy run share the timing; keep the first.
        std::string id = r.network + '/' + std::to_string(r.repetition) + '/' + std::to_string(r.group) + '/' + r.strategy;
        if (id == last) continue;
        last = id;
        t.rows.push_back({r.network, std::to_string(r.repetition), std::to_string(r.group), r.strategy,
                          format_number(r.wall_time)});
    }
    return t;
}

Table summary_table(const std::vector<SummaryRow> &rows, const std::vector<std::string> &key_names) {
    Table t;
    t.header = key_names;
    for (const char *h : {"mean_delta", "ci95_half_width", "n", "single_sample"}) t.header.emplace_back(h);
    for (const SummaryRow &r : rows) {
        if (r.key.size() != key_names.size()) throw std::invalid_argument("summary key width mismatch");
        std::vector<std::string> row = r.key;
        row.push_back(format_number(r.mean_delta));
        row.push_back(format_number(r.ci95_half_width));
        row.push_back(std::to_string(r.n));
        row.emplace_back(r.single_sample ? "1" : "0");
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table comparison_table(const std::vector<ComparisonRecord> &records) {
    Table t;
    t.header = {"network", "selection",     "repetition",    "group", "measure", "strategy", "value_before",
                "value_after", "delta", "optimal_value", "optimal_delta", "ratio"};
    for (const ComparisonRecord &r : records)
        t.rows.push_back({r.network, r.selection, std::to_string(r.repetition), std::to_string(r.group), r.measure,
                          r.strategy, format_number(r.value_before), format_number(r.value_after),
                          format_number(r.delta), format_number(r.optimal_value), format_number(r.optimal_delta),
                          format_number(r.ratio)});
    return t;
}

namespace {

void write_field(std::ostream &out, const std::string &field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) {
        out << field;
        return;
    }
    out << '"';
    for (char c : field) {
        if (c == '"') out << '"';
        out << c;
    }
    out << '"';
}

void write_row(std::ostream &out, const std::vector<std::string> &row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out << ',';
        write_field(out, row[i]);
    }
    out << "\r\n";
}

}  // namespace

void write_csv(std::ostream &out, const Table &table) {
    write_row(out, table.header);
    for (const auto &row : table.rows) {
        if (row.size() != table.header.size()) throw std::invalid_argument("csv row width differs from header");
        write_row(out, row);
    }
}

Table read_csv(std::istream &in) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false, any = false;
    char c;
    auto end_row = [&] {
        row.push_back(std::move(field));
        field.clear();
        rows.push_back(std::move(row));
        row.clear();
        any = false;
    };
    while (in.get(c)) {
        if (quoted) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field += '"';
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        switch (c) {
        case '"':
            quoted = true;
            any = true;
            break;
        case ',':
            row.push_back(std::move(field));
            field.clear();
            any = true;
            break;
        case '\r':
            break;
        case '\n':
            end_row();
            break;
        default:
            field += c;
            any = true;
        }
    }
    if (quoted) throw std::runtime_error("csv: unterminated quoted field");
    if (any || !row.empty()) end_row();
    Table t;
    if (rows.empty()) return t;
    t.header = std::move(rows.front());
    t.rows.assign(std::make_move_iterator(rows.begin() + 1), std::make_move_iterator(rows.end()));
    return t;
}

void emit_csv(const Table &table, const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_csv(out, table);
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

namespace {

std::string xml_escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string join_key(const std::vector<std::string> &parts, std::size_t count) {
    std::string s;
    for (std::size_t i = 0; i < count; ++i) {
        if (i) s += " / ";
        s += parts[i];
    }
    return s;
}

constexpr const char *kPalette[] = {"#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3", "#937860", "#da8bc3",
                                    "#8c8c8c"};

}  // namespace

std::string render_bar_chart(const std::vector<SummaryRow> &rows, const ChartOptions &options) {
    // Group label = all key parts but the last; series = last part.
    std::vector<std::string> groups, series;
    auto index_of = [](std::vector<std::string> &list, const std::string &s) {
        auto it = std::find(list.begin(), list.end(), s);
        if (it != list.end()) return static_cast<std::size_t>(it - list.begin());
        list.push_back(s);
        return list.size() - 1;
    };
    struct Bar {
        std::size_t group, series;
        const SummaryRow *row;
    };
    std::vector<Bar> bars;
    double lo = 0.0, hi = 0.0;
    for (const SummaryRow &r : rows) {
        std::string g = r.key.size() > 1 ? join_key(r.key, r.key.size() - 1) : (r.key.empty() ? "" : r.key[0]);
        std::string s = r.key.size() > 1 ? r.key.back() : "";
        bars.push_back({index_of(groups, g), index_of(series, s), &r});
        lo = std::min(lo, r.mean_delta - r.ci95_half_width);
        hi = std::max(hi, r.mean_delta + r.ci95_half_width);
    }
    if (hi - lo <= 0.0) hi = 1.0;

    const double bar_w = 18, gap = 24, left = 70, right = 150, top = 40, plot_h = 300, bottom = 70;
    const std::size_t per_group = std::max<std::size_t>(series.size(), 1);
    const double group_w = per_group * bar_w + gap;
    const double plot_w = std::max(1.0, groups.size() * group_w);
    const double width = left + plot_w + right, height = top + plot_h + bottom;
    auto y_of = [&](double v) { return top + (hi - v) / (hi - lo) * plot_h; };
    auto num = [](double v) { return format_number(std::round(v * 100.0) / 100.0); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
        << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!options.title.empty())
        svg << "<text x=\"" << num(width / 2) << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
            << xml_escape(options.title) << "</text>\n";
    svg << "<text transform=\"translate(16," << num(top + plot_h / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
        << xml_escape(options.y_label) << "</text>\n";
    svg << "<line class=\"axis\" x1=\"" << num(left) << "\" y1=\"" << num(top) << "\" x2=\"" << num(left)
        << "\" y2=\"" << num(top + plot_h) << "\" stroke=\"black\"/>\n";
    for (double v : {lo, hi}) {
        svg << "<text x=\"" << num(left - 4) << "\" y=\"" << num(y_of(v) + 4) << "\" text-anchor=\"end\">"
            << format_number(v) << "</text>\n";
    }
    svg << "<line class=\"baseline\" x1=\"" << num(left) << "\" y1=\"" << num(y_of(0)) << "\" x2=\""
        << num(left + plot_w) << "\" y2=\"" << num(y_of(0)) << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << num(left - 4) << "\" y=\"" << num(y_of(0) + 4) << "\" text-anchor=\"end\">0</text>\n";

    for (const Bar &b : bars) {
        const SummaryRow &r = *b.row;
        double x = left + gap / 2 + b.group * group_w + b.series * bar_w;
        double y0 = y_of(0), y1 = y_of(r.mean_delta);
        svg << "<rect class=\"bar\" x=\"" << num(x) << "\" y=\"" << num(std::min(y0, y1)) << "\" width=\""
            << num(bar_w - 2) << "\" height=\"" << num(std::abs(y1 - y0)) << "\" fill=\""
            << kPalette[b.series % std::size(kPalette)] << "\"><title>" << xml_escape(join_key(r.key, r.key.size()))
            << ": " << format_number(r.mean_delta) << " +/- " << format_number(r.ci95_half_width) << " (n="
            << r.n << ")</title></rect>\n";
        double cx = x + (bar_w - 2) / 2;
        svg << "<line class=\"whisker\" x1=\"" << num(cx) << "\" y1=\"" << num(y_of(r.mean_delta - r.ci95_half_width))
            << "\" x2=\"" << num(cx) << "\" y2=\"" << num(y_of(r.mean_delta + r.ci95_half_width))
            << "\" stroke=\"black\"/>\n";
    }
    for (std::size_t g = 0; g < groups.size(); ++g) {
        double cx = left + gap / 2 + g * group_w + per_group * bar_w / 2;
        svg << "<text class=\"group-label\" x=\"" << num(cx) << "\" y=\"" << num(top + plot_h + 18)
            << "\" text-anchor=\"middle\">" << xml_escape(groups[g]) << "</text>\n";
    }
    for (std::size_t s = 0; s < series.size(); ++s) {
        if (series[s].empty()) continue;
        double y = top + 14 * s;
        svg << "<rect x=\"" << num(left + plot_w + 16) << "\" y=\"" << num(y) << "\" width=\"10\" height=\"10\" fill=\""
            << kPalette[s % std::size(kPalette)] << "\"/>\n";
        svg << "<text x=\"" << num(left + plot_w + 30) << "\" y=\"" << num(y + 9) << "\">" << xml_escape(series[s])
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void emit_bar_chart(const std::vector<SummaryRow> &rows, const std::string &path, const ChartOptions &options) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << render_bar_chart(rows, options);
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace grouphide
