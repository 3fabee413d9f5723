#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "grouphide/centrality.hpp"
#include "grouphide/experiment.hpp"
#include "grouphide/generators.hpp"
#include "grouphide/graph.hpp"
#include "grouphide/groups.hpp"
#include "grouphide/hiding.hpp"
#include "grouphide/report.hpp"
#include "grouphide/rng.hpp"

namespace fs = std::filesystem;
using namespace grouphide;

namespace {

// Seed streams of the first repetition and group of a campaign.
constexpr std::uint64_t kNetworkStream = 0x6e6574;
constexpr std::uint64_t kGroupStream = 0x677270;

// Flags that map onto config keys. Anything given on the command line
// overrides the config file.
struct Settings {
    std::string config_file;
    std::map<std::string, std::string> flags;

    void bind(CLI::App *cmd, const std::string &flag, const std::string &key, const std::string &help) {
        cmd->add_option_function<std::string>(flag, [this, key](const std::string &v) { flags[key] = v; }, help);
    }

    ExperimentConfig load() const {
        ExperimentConfig config;
        if (!config_file.empty()) {
            std::ifstream in(config_file);
            if (!in) throw std::runtime_error("cannot open config file " + config_file);
            apply_settings(config, parse_key_values(in));
        }
        apply_settings(config, flags);
        return config;
    }
};

void bind_model(Settings &s, CLI::App *cmd) {
    s.bind(cmd, "--model", "model", "ws, er or ba");
    s.bind(cmd, "--n", "n", "Number of nodes");
    s.bind(cmd, "--avg-degree", "avg_degree", "Target average degree");
    s.bind(cmd, "--rewire-p", "rewire_p", "Watts-Strogatz rewiring probability");
    s.bind(cmd, "--seed", "seed", "Base seed");
}

void bind_selection(Settings &s, CLI::App *cmd) {
    s.bind(cmd, "--selection", "selection", "dense, cells or scattered");
    s.bind(cmd, "--group-size", "group_size", "Number of evaders");
    s.bind(cmd, "--cell-low", "cell_low", "Smallest cell size");
    s.bind(cmd, "--cell-high", "cell_high", "Largest cell size");
}

void bind_ged(Settings &s, CLI::App *cmd) {
    s.bind(cmd, "--ged-alpha", "ged_alpha", "Walk decay, or 'auto' for 1/max degree");
    s.bind(cmd, "--ged-max-length", "ged_max_length", "Longest walk counted");
    s.bind(cmd, "--ged-tolerance", "ged_tolerance", "Relative tolerance for stopping the walk sum");
}

void bind_campaign(Settings &s, CLI::App *cmd) {
    cmd->add_option("--config", s.config_file, "key=value configuration file")->check(CLI::ExistingFile);
    bind_model(s, cmd);
    bind_selection(s, cmd);
    bind_ged(s, cmd);
    s.bind(cmd, "--dataset", "dataset", "Edge-list file used instead of a random model");
    s.bind(cmd, "--budget", "budget", "Edge removal budget, or 'auto' for the group size");
    s.bind(cmd, "--strategies", "strategies", "Comma-separated strategies");
    s.bind(cmd, "--measures", "measures", "Comma-separated measures");
    s.bind(cmd, "--repetitions", "repetitions", "Networks (or group redraws for datasets)");
    s.bind(cmd, "--groups", "groups", "Groups per network");
    s.bind(cmd, "--workers", "workers", "Worker threads");
}

Graph load_graph(const std::string &path) { return giant_component(load_edge_list_file(path)); }

NodeSet parse_group(const Graph &g, const std::string &list) {
    NodeSet group;
    std::stringstream in(list);
    std::string label;
    while (std::getline(in, label, ',')) {
        if (label.empty()) continue;
        NodeId v = g.find_label(label);
        if (v == kInvalidNode) throw std::invalid_argument("unknown node '" + label + "'");
        group.push_back(v);
    }
    std::sort(group.begin(), group.end());
    group.erase(std::unique(group.begin(), group.end()), group.end());
    return group;
}

std::string edge_text(const Graph &g, const Edge &e) { return g.label(e.u) + " " + g.label(e.v); }

CentralityMeasure measure_from(const ExperimentConfig &config, MeasureKind kind, const Graph &g) {
    CentralityMeasure m;
    m.kind = kind;
    m.ged = config.ged;
    return freeze(m, g);
}

HidingInstance instance_from(const ExperimentConfig &config, const Graph &g, const NodeSet &group,
                             MeasureKind kind) {
    HidingInstance instance;
    instance.graph = g;
    instance.evaders = group;
    instance.measure = measure_from(config, kind, g);
    instance.removable = default_removable(g, group);
    instance.budget = config.budget.value_or(group.size());
    validate(instance);
    return instance;
}

void write_text(const fs::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

// One chart per measure: x axis groups by network, bars by strategy.
void emit_charts(const std::vector<SummaryRow> &rows, const fs::path &dir, const std::string &y_label) {
    std::map<std::string, std::vector<SummaryRow>> by_measure;
    for (const SummaryRow &r : rows) {
        SummaryRow copy = r;
        copy.key = {r.key[0], r.key[2]};
        by_measure[r.key[1]].push_back(std::move(copy));
    }
    for (const auto &[measure, chart_rows] : by_measure) {
        ChartOptions options;
        options.title = measure;
        options.y_label = y_label;
        emit_bar_chart(chart_rows, (dir / ("chart-" + measure + ".svg")).string(), options);
    }
}

int cmd_generate(const Settings &s, const std::string &out_path) {
    ExperimentConfig config = s.load();
    Rng rng(derive_seed(config.base_seed, {kNetworkStream, 0}));
    Graph g = generate(config.model, rng);
    if (out_path.empty() || out_path == "-") {
        write_edge_list(std::cout, g);
    } else {
        std::ofstream out(out_path);
        write_edge_list(out, g);
        if (!out) throw std::runtime_error("cannot write " + out_path);
    }
    return 0;
}

int cmd_select(const Settings &s, const std::string &graph_path) {
    ExperimentConfig config = s.load();
    Graph g = load_graph(graph_path);
    Rng rng(derive_seed(config.base_seed, {kGroupStream, 0, 0}));
    NodeSet group = select_group(g, config.group_size, config.selection, rng);
    for (std::size_t i = 0; i < group.size(); ++i) std::cout << (i ? "," : "") << g.label(group[i]);
    std::cout << "\n";
    return 0;
}

int cmd_measure(const Settings &s, const std::string &graph_path, const std::string &group_list) {
    ExperimentConfig config = s.load();
    Graph g = load_graph(graph_path);
    NodeSet group = parse_group(g, group_list);
    for (MeasureKind kind : config.measures)
        std::cout << to_string(kind) << " " << format_number(evaluate(measure_from(config, kind, g), g, group))
                  << "\n";
    return 0;
}

int cmd_hide(const Settings &s, const std::string &graph_path, const std::string &group_list,
             const std::string &strategy_name) {
    ExperimentConfig config = s.load();
    Graph g = load_graph(graph_path);
    NodeSet group = parse_group(g, group_list);
    HidingInstance instance = instance_from(config, g, group, MeasureKind::Degree);
    Strategy strategy = parse_strategy(strategy_name);
    std::uint64_t seed = derive_seed(config.base_seed, {0, 0, static_cast<std::uint64_t>(strategy) + 1});
    StrategyOutcome outcome = run_strategy(instance, strategy, seed);
    std::cout << "removed " << outcome.removed.size() << "\n";
    for (const Edge &e : outcome.removed) std::cout << "  " << edge_text(g, e) << "\n";
    for (MeasureKind kind : config.measures) {
        CentralityMeasure m = measure_from(config, kind, g);
        std::cout << to_string(kind) << " " << format_number(evaluate(m, g, group)) << " -> "
                  << format_number(evaluate(m, outcome.graph_after, group)) << "\n";
    }
    return 0;
}

int cmd_brute_force(const Settings &s, const std::string &graph_path, const std::string &group_list,
                    BruteForceOptions options) {
    ExperimentConfig config = s.load();
    options.workers = config.workers;
    Graph g = load_graph(graph_path);
    NodeSet group = parse_group(g, group_list);
    for (MeasureKind kind : config.measures) {
        HidingInstance instance = instance_from(config, g, group, kind);
        BruteForceResult best = brute_force_optimal(instance, options);
        std::cout << to_string(kind) << " " << format_number(evaluate(instance.measure, g, group)) << " -> "
                  << format_number(best.value) << " (" << best.evaluated << " subsets)\n";
        for (const Edge &e : best.removed) std::cout << "  " << edge_text(g, e) << "\n";
    }
    return 0;
}

int cmd_experiment(const Settings &s, const fs::path &dir) {
    ExperimentConfig config = s.load();
    config.validate();
    fs::create_directories(dir);
    write_text(dir / "config.txt", to_config_text(config));
    auto records = run_experiment(config);
    emit_csv(records_table(records), (dir / "records.csv").string());
    emit_csv(timings_table(records), (dir / "timings.csv").string());
    auto summary = summarize(records, {"network", "measure", "strategy"});
    emit_csv(summary_table(summary, {"network", "measure", "strategy"}), (dir / "summary.csv").string());
    emit_charts(summary, dir, "mean change");
    std::cout << records.size() << " records written to " << dir.string() << "\n";
    return 0;
}

int cmd_compare(const Settings &s, const fs::path &dir, BruteForceOptions options) {
    ExperimentConfig config = s.load();
    config.validate();
    options.workers = 1;  // repetitions already run in parallel
    fs::create_directories(dir);
    write_text(dir / "config.txt", to_config_text(config));
    auto records = run_optimality_comparison(config, options);
    emit_csv(comparison_table(records), (dir / "records.csv").string());
    std::vector<std::pair<std::vector<std::string>, double>> samples;
    for (const ComparisonRecord &r : records)
        if (r.strategy != "brute-force") samples.push_back({{r.network, r.measure, r.strategy}, r.ratio});
    auto summary = summarize_samples(samples);
    Table table = summary_table(summary, {"network", "measure", "strategy"});
    for (std::string &h : table.header)
        if (h == "mean_delta") h = "mean_ratio";
    emit_csv(table, (dir / "summary.csv").string());
    emit_charts(summary, dir, "fraction of optimal drop");
    std::cout << records.size() << " records written to " << dir.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Group centrality hiding toolkit"};
    app.require_subcommand(1);

    Settings settings;
    std::string out_path, graph_path, group_list, strategy_name = "optimal-degree";
    std::string run_dir = "grouphide-run";
    BruteForceOptions oracle;

    auto needs_graph = [&](CLI::App *cmd) {
        cmd->add_option("--graph", graph_path, "Edge-list file (giant component is used)")
            ->required()
            ->check(CLI::ExistingFile);
    };
    auto needs_group = [&](CLI::App *cmd) {
        cmd->add_option("--group", group_list, "Comma-separated node labels")->required();
    };

    auto *generate_cmd = app.add_subcommand("generate", "Write a random network as an edge list");
    bind_model(settings, generate_cmd);
    generate_cmd->add_option("-o,--output", out_path, "Output file, '-' for stdout");

    auto *select_cmd = app.add_subcommand("select-group", "Draw a group of evaders");
    needs_graph(select_cmd);
    bind_selection(settings, select_cmd);
    settings.bind(select_cmd, "--seed", "seed", "Base seed");

    auto *measure_cmd = app.add_subcommand("measure", "Evaluate group centralities");
    needs_graph(measure_cmd);
    needs_group(measure_cmd);
    settings.bind(measure_cmd, "--measures", "measures", "Comma-separated measures");
    bind_ged(settings, measure_cmd);

    auto *hide_cmd = app.add_subcommand("hide", "Run one hiding strategy on one group");
    needs_graph(hide_cmd);
    needs_group(hide_cmd);
    hide_cmd->add_option("--strategy", strategy_name, "optimal-degree, internal, random or shortcut");
    settings.bind(hide_cmd, "--budget", "budget", "Edge removal budget");
    settings.bind(hide_cmd, "--measures", "measures", "Measures reported before and after");
    settings.bind(hide_cmd, "--seed", "seed", "Base seed");
    bind_ged(settings, hide_cmd);

    auto *brute_cmd = app.add_subcommand("brute-force", "Exhaustive optimal removal within budget");
    needs_graph(brute_cmd);
    needs_group(brute_cmd);
    settings.bind(brute_cmd, "--budget", "budget", "Edge removal budget");
    settings.bind(brute_cmd, "--measures", "measures", "Comma-separated measures");
    settings.bind(brute_cmd, "--workers", "workers", "Worker threads");
    brute_cmd->add_option("--subset-cap", oracle.subset_cap, "Refuse enumerations larger than this");
    bind_ged(settings, brute_cmd);

    auto *experiment_cmd = app.add_subcommand("experiment", "Run a hiding campaign");
    bind_campaign(settings, experiment_cmd);
    experiment_cmd->add_option("--out", run_dir, "Run directory");

    auto *compare_cmd = app.add_subcommand("compare-optimal", "Compare strategies with the exhaustive optimum");
    bind_campaign(settings, compare_cmd);
    compare_cmd->add_option("--out", run_dir, "Run directory");
    compare_cmd->add_option("--subset-cap", oracle.subset_cap, "Refuse enumerations larger than this");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*generate_cmd) return cmd_generate(settings, out_path);
        if (*select_cmd) return cmd_select(settings, graph_path);
        if (*measure_cmd) return cmd_measure(settings, graph_path, group_list);
        if (*hide_cmd) return cmd_hide(settings, graph_path, group_list, strategy_name);
        if (*brute_cmd) return cmd_brute_force(settings, graph_path, group_list, oracle);
        if (*experiment_cmd) return cmd_experiment(settings, run_dir);
        if (*compare_cmd) return cmd_compare(settings, run_dir, oracle);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
