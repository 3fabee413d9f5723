#ifndef GROUPHIDE_REPORT_HPP_
#define GROUPHIDE_REPORT_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "grouphide/experiment.hpp"

namespace grouphide {

struct SummaryRow {
    std::vector<std::string> key;
    double mean_delta = 0.0;
    double ci95_half_width = 0.0;  // 1.96 * sample sd / sqrt(n)
    std::size_t n = 0;
    bool single_sample = false;  // n == 1, half-width reported as 0
};

/// Record fields usable as grouping keys: "network", "selection", "strategy",
/// "measure", "repetition", "group".
std::string record_field(const ExperimentRecord &r, std::string_view field);

/// Mean delta and normal-approximation 95% interval per distinct key, rows
/// sorted by key. Throws std::invalid_argument on empty input.
std::vector<SummaryRow> summarize(const std::vector<ExperimentRecord> &records,
                                  const std::vector<std::string> &group_by);

/// Same statistics over arbitrary keyed samples.
std::vector<SummaryRow> summarize_samples(const std::vector<std::pair<std::vector<std::string>, double>> &samples);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Shortest text that parses back to exactly `x`, '.' decimal.
std::string format_number(double x);

Table records_table(const std::vector<ExperimentRecord> &records);
/// Strategy wall times, one row per (repetition, group, strategy).
Table timings_table(const std::vector<ExperimentRecord> &records);
Table summary_table(const std::vector<SummaryRow> &rows, const std::vector<std::string> &key_names);
Table comparison_table(const std::vector<ComparisonRecord> &records);

void write_csv(std::ostream &out, const Table &table);
Table read_csv(std::istream &in);

/// Writes the table to `path`; throws std::runtime_error on IO failure.
void emit_csv(const Table &table, const std::string &path);

struct ChartOptions {
    std::string title;
    std::string y_label = "mean change";
};

/// SVG grouped bar chart. The last key component picks the series (bar colour)
/// and the rest label the group along the x axis. Bars hang from a zero
/// baseline, so negative means go down; each bar carries a CI whisker.
std::string render_bar_chart(const std::vector<SummaryRow> &rows, const ChartOptions &options = {});
void emit_bar_chart(const std::vector<SummaryRow> &rows, const std::string &path, const ChartOptions &options = {});

}  // namespace grouphide

#endif  // GROUPHIDE_REPORT_HPP_
