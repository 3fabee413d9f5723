#include "grouphide/experiment.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <istream>
#include <sstream>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

namespace grouphide {

namespace {

constexpr std::uint64_t kNetworkStream = 0x6e6574;  // "net"
constexpr std::uint64_t kGroupStream = 0x677270;    // "grp"

std::uint64_t strategy_code(Strategy s) { return static_cast<std::uint64_t>(s) + 1; }

// Calls job(i) for i in [0, count) on up to `workers` threads. Jobs write to
// their own slots, so the result does not depend on scheduling.
template <class Job>
void parallel_for(std::size_t count, unsigned workers, Job job) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> threads;
        for (unsigned w = 0; w < workers; ++w)
            threads.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        job(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
    }
    if (failure) std::rethrow_exception(failure);
}

Graph load_dataset(const ExperimentConfig &config) {
    return giant_component(load_edge_list_file(config.dataset));
}

Graph network_for(const ExperimentConfig &config, std::size_t rep, const Graph *dataset) {
    if (dataset) return *dataset;
    Rng rng(derive_seed(config.base_seed, {kNetworkStream, rep}));
    return generate(config.model, rng);
}

std::vector<CentralityMeasure> frozen_measures(const ExperimentConfig &config, const Graph &g) {
    std::vector<CentralityMeasure> out;
    for (MeasureKind kind : config.measures) {
        CentralityMeasure m{kind, {}};
        if (kind == MeasureKind::GedWalk) m = CentralityMeasure::ged_walk(config.ged);
        out.push_back(freeze(m, g));
    }
    return out;
}

HidingInstance make_instance(const ExperimentConfig &config, const Graph &g, std::size_t rep, std::size_t group) {
    Rng rng(derive_seed(config.base_seed, {kGroupStream, rep, group}));
    HidingInstance instance;
    instance.graph = g;
    instance.evaders = select_group(g, config.group_size, config.selection, rng);
    instance.removable = default_removable(g, instance.evaders);
    instance.budget = config.effective_budget();
    return instance;
}

}  // namespace

std::string ExperimentConfig::network_name() const {
    if (!dataset.empty()) return std::filesystem::path(dataset).stem().string();
    return std::string(to_string(model.kind));
}

void ExperimentConfig::validate() const {
    if (repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");
    if (groups_per_network < 1) throw std::invalid_argument("groups_per_network must be at least 1");
    if (strategies.empty()) throw std::invalid_argument("at least one strategy is required");
    if (measures.empty()) throw std::invalid_argument("at least one measure is required");
    if (group_size < 1) throw std::invalid_argument("group_size must be at least 1");
    if (dataset.empty()) {
        model.validate();
        if (group_size >= model.n) throw std::invalid_argument("group_size must be below the node count");
    }
    if (selection.kind == SelectionKind::Cells &&
        (selection.cell_bounds.low < 2 || selection.cell_bounds.low > selection.cell_bounds.high))
        throw std::invalid_argument("invalid cell size bounds");
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig &config) {
    config.validate();
    std::optional<Graph> dataset;
    if (!config.dataset.empty()) {
        dataset = load_dataset(config);
        if (config.group_size >= dataset->node_count())
            throw std::invalid_argument("group_size must be below the node count of " + config.dataset);
    }
    const std::string network = config.network_name();
    const std::string selection(to_string(config.selection.kind));

    std::vector<std::vector<ExperimentRecord>> per_rep(config.repetitions);
    parallel_for(config.repetitions, config.workers, [&](std::size_t rep) {
        Graph g = network_for(config, rep, dataset ? &*dataset : nullptr);
        const auto measures = frozen_measures(config, g);
        auto &out = per_rep[rep];
        for (std::size_t group = 0; group < config.groups_per_network; ++group) {
            HidingInstance instance = make_instance(config, g, rep, group);
            std::vector<double> before;
            for (const auto &m : measures) before.push_back(evaluate(m, g, instance.evaders));
            for (Strategy strategy : config.strategies) {
                std::uint64_t seed = derive_seed(config.base_seed, {rep, group, strategy_code(strategy)});
                auto t0 = std::chrono::steady_clock::now();
                StrategyOutcome outcome = run_strategy(instance, strategy, seed);
                double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                for (std::size_t mi = 0; mi < measures.size(); ++mi) {
                    ExperimentRecord r;
                    r.network = network;
                    r.selection = selection;
                    r.strategy = std::string(to_string(strategy));
                    r.measure = measures[mi].name();
                    r.seed = seed;
                    r.repetition = rep;
                    r.group = group;
                    r.value_before = before[mi];
                    r.value_after = outcome.removed.empty()
                                        ? before[mi]
                                        : evaluate(measures[mi], outcome.graph_after, instance.evaders);
                    r.delta = r.value_after - r.value_before;
                    r.removed_count = outcome.removed.size();
                    r.budget = instance.budget;
                    if (measures[mi].kind == MeasureKind::GedWalk) {
                        r.ged_alpha = *measures[mi].ged.alpha;
                        r.ged_max_length = measures[mi].ged.max_length;
                    }
                    r.wall_time = seconds;
                    out.push_back(std::move(r));
                }
            }
        }
    });

    std::vector<ExperimentRecord> records;
    for (auto &chunk : per_rep)
        for (auto &r : chunk) records.push_back(std::move(r));
    return records;
}

double drop_ratio(double delta, double optimal_delta) {
    if (optimal_delta == 0.0) return delta == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    return delta / optimal_delta;
}

std::vector<ComparisonRecord> run_optimality_comparison(const ExperimentConfig &config,
                                                        const BruteForceOptions &oracle,
                                                        std::size_t *skipped) {
    config.validate();
    std::optional<Graph> dataset;
    if (!config.dataset.empty()) dataset = load_dataset(config);
    const std::string network = config.network_name();
    const std::string selection(to_string(config.selection.kind));

    std::vector<std::vector<ComparisonRecord>> per_rep(config.repetitions);
    std::vector<std::size_t> skipped_per_rep(config.repetitions, 0);
    parallel_for(config.repetitions, config.workers, [&](std::size_t rep) {
        Graph g = network_for(config, rep, dataset ? &*dataset : nullptr);
        const auto measures = frozen_measures(config, g);
        auto &out = per_rep[rep];
        for (std::size_t group = 0; group < config.groups_per_network; ++group) {
            HidingInstance instance = make_instance(config, g, rep, group);
            std::vector<StrategyOutcome> outcomes;
            for (Strategy strategy : config.strategies)
                outcomes.push_back(run_strategy(
                    instance, strategy, derive_seed(config.base_seed, {rep, group, strategy_code(strategy)})));

            for (const CentralityMeasure &m : measures) {
                double before = evaluate(m, g, instance.evaders);
                HidingInstance probe = instance;
                probe.measure = m;
                BruteForceResult best;
                try {
                    best = brute_force_optimal(probe, oracle);
                } catch (const EnumerationCapExceeded &e) {
                    if (skipped) {
                        ++skipped_per_rep[rep];
                        continue;
                    }
                    throw EnumerationCapExceeded(network + " repetition " + std::to_string(rep) + " group " +
                                                 std::to_string(group) + " (" + m.name() + "): " + e.what());
                }
                const double optimal_delta = best.value - before;
                auto emit = [&](std::string strategy, double after) {
                    ComparisonRecord r;
                    r.network = network;
                    r.selection = selection;
                    r.repetition = rep;
                    r.group = group;
                    r.measure = m.name();
                    r.strategy = std::move(strategy);
                    r.value_before = before;
                    r.value_after = after;
                    r.delta = after - before;
                    r.optimal_value = best.value;
                    r.optimal_delta = optimal_delta;
                    r.ratio = drop_ratio(r.delta, optimal_delta);
                    out.push_back(std::move(r));
                };
                for (const StrategyOutcome &o : outcomes)
                    emit(std::string(to_string(o.strategy)),
                         o.removed.empty() ? before : evaluate(m, o.graph_after, instance.evaders));
                emit("brute-force", best.value);
            }
        }
    });

    if (skipped) *skipped = std::accumulate(skipped_per_rep.begin(), skipped_per_rep.end(), std::size_t{0});
    std::vector<ComparisonRecord> records;
    for (auto &chunk : per_rep)
        for (auto &r : chunk) records.push_back(std::move(r));
    return records;
}

std::map<std::string, std::string> parse_key_values(std::istream &in) {
    std::map<std::string, std::string> out;
    std::string line;
    std::size_t line_no = 0;
    auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t\r");
        auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key=value");
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

namespace {

template <class T, class Parse>
std::vector<T> parse_list(const std::string &text, Parse parse) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        out.push_back(parse(item.substr(b, e - b + 1)));
    }
    return out;
}

std::size_t to_size(const std::string &key, const std::string &v) {
    std::size_t pos = 0;
    unsigned long long x = 0;
    try {
        x = std::stoull(v, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    if (pos == 0 || pos != v.size() || v.front() == '-')
        throw std::invalid_argument("config key '" + key + "' expects a non-negative integer, got '" + v + "'");
    return static_cast<std::size_t>(x);
}

double to_double(const std::string &key, const std::string &v) {
    std::size_t pos = 0;
    double x = 0;
    try {
        x = std::stod(v, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    if (pos == 0 || pos != v.size())
        throw std::invalid_argument("config key '" + key + "' expects a number, got '" + v + "'");
    return x;
}

}  // namespace

void apply_settings(ExperimentConfig &config, const std::map<std::string, std::string> &settings) {
    for (const auto &[key, value] : settings) {
        if (key == "model") config.model.kind = parse_model_kind(value);
        else if (key == "n") config.model.n = to_size(key, value);
        else if (key == "avg_degree") config.model.avg_degree = to_size(key, value);
        else if (key == "rewire_p") config.model.rewire_p = to_double(key, value);
        else if (key == "dataset") config.dataset = value;
        else if (key == "selection") config.selection.kind = parse_selection_kind(value);
        else if (key == "cell_low") config.selection.cell_bounds.low = static_cast<int>(to_size(key, value));
        else if (key == "cell_high") config.selection.cell_bounds.high = static_cast<int>(to_size(key, value));
        else if (key == "group_size") config.group_size = to_size(key, value);
        else if (key == "budget") {
            if (value.empty() || value == "auto") config.budget.reset();
            else config.budget = to_size(key, value);
        } else if (key == "strategies")
            config.strategies = parse_list<Strategy>(value, [](const std::string &s) { return parse_strategy(s); });
        else if (key == "measures")
            config.measures = parse_list<MeasureKind>(value, [](const std::string &s) { return parse_measure_kind(s); });
        else if (key == "repetitions") config.repetitions = to_size(key, value);
        else if (key == "groups") config.groups_per_network = to_size(key, value);
        else if (key == "seed") config.base_seed = to_size(key, value);
        else if (key == "workers") config.workers = static_cast<unsigned>(to_size(key, value));
        else if (key == "ged_alpha") {
            if (value.empty() || value == "auto") config.ged.alpha.reset();
            else config.ged.alpha = to_double(key, value);
        } else if (key == "ged_max_length") config.ged.max_length = static_cast<int>(to_size(key, value));
        else if (key == "ged_tolerance") config.ged.rel_tolerance = to_double(key, value);
        else throw std::invalid_argument("unknown config key '" + key + "'");
    }
}

std::string to_config_text(const ExperimentConfig &config) {
    std::ostringstream out;
    out.precision(17);
    auto join = [](const auto &items) {
        std::string s;
        for (const auto &i : items) {
            if (!s.empty()) s += ',';
            s += std::string(to_string(i));
        }
        return s;
    };
    out << "model = " << to_string(config.model.kind) << '\n'
        << "n = " << config.model.n << '\n'
        << "avg_degree = " << config.model.avg_degree << '\n'
        << "rewire_p = " << config.model.rewire_p << '\n'
        << "dataset = " << config.dataset << '\n'
        << "selection = " << to_string(config.selection.kind) << '\n'
        << "cell_low = " << config.selection.cell_bounds.low << '\n'
        << "cell_high = " << config.selection.cell_bounds.high << '\n'
        << "group_size = " << config.group_size << '\n'
        << "budget = " << (config.budget ? std::to_string(*config.budget) : std::string("auto")) << '\n'
        << "strategies = " << join(config.strategies) << '\n'
        << "measures = " << join(config.measures) << '\n'
        << "repetitions = " << config.repetitions << '\n'
        << "groups = " << config.groups_per_network << '\n'
        << "seed = " << config.base_seed << '\n'
        << "workers = " << config.workers << '\n';
    out << "ged_alpha = ";
    if (config.ged.alpha) out << *config.ged.alpha;
    else out << "auto";
    out << '\n'
        << "ged_max_length = " << config.ged.max_length << '\n'
        << "ged_tolerance = " << config.ged.rel_tolerance << '\n';
    return out.str();
}

}  // namespace grouphide
