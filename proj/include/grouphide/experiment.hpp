#ifndef GROUPHIDE_EXPERIMENT_HPP_
#define GROUPHIDE_EXPERIMENT_HPP_

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grouphide/centrality.hpp"
#include "grouphide/generators.hpp"
#include "grouphide/groups.hpp"
#include "grouphide/hiding.hpp"

namespace grouphide {

struct ExperimentConfig {
    /// Random model used when `dataset` is empty; regenerated per repetition.
    ModelSpec model;
    /// Edge-list path. The giant component is used and stays fixed; groups are
    /// redrawn per repetition.
    std::string dataset;
    SelectionCriterion selection;
    std::size_t group_size = 50;
    std::optional<std::size_t> budget;  // defaults to group_size
    std::vector<Strategy> strategies{std::begin(kAllStrategies), std::end(kAllStrategies)};
    std::vector<MeasureKind> measures{std::begin(kAllMeasures), std::end(kAllMeasures)};
    std::size_t repetitions = 20;
    std::size_t groups_per_network = 10;
    std::uint64_t base_seed = 1;
    unsigned workers = 1;
    GedParams ged;  // alpha left unset means 1/max degree of each starting network

    std::size_t effective_budget() const { return budget.value_or(group_size); }
    std::string network_name() const;
    void validate() const;
};

struct ExperimentRecord {
    std::string network;
    std::string selection;
    std::string strategy;
    std::string measure;
    std::uint64_t seed = 0;
    std::size_t repetition = 0;
    std::size_t group = 0;
    double value_before = 0.0;
    double value_after = 0.0;
    double delta = 0.0;
    std::size_t removed_count = 0;
    std::size_t budget = 0;
    double ged_alpha = 0.0;  // zero for non-GED measures
    int ged_max_length = 0;
    double wall_time = 0.0;  // seconds spent in the strategy itself
};

/// Per repetition: a network (fresh for models), `groups_per_network` groups,
/// every strategy from the same start, every measure before and after.
/// Records come back in (repetition, group, strategy, measure) order.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig &config);

struct ComparisonRecord {
    std::string network;
    std::string selection;
    std::size_t repetition = 0;
    std::size_t group = 0;
    std::string measure;
    std::string strategy;
    double value_before = 0.0;
    double value_after = 0.0;
    double delta = 0.0;
    double optimal_value = 0.0;
    double optimal_delta = 0.0;
    double ratio = 0.0;  // delta / optimal_delta, 1 when both are zero
};

/// Like run_experiment, but each (group, measure) also gets the brute-force
/// optimum over the removable edges within budget and every strategy is
/// reported as a fraction of that optimal drop. When `skipped` is given, a
/// (group, measure) whose enumeration exceeds the oracle's cap is left out and
/// counted there; otherwise EnumerationCapExceeded propagates.
std::vector<ComparisonRecord> run_optimality_comparison(const ExperimentConfig &config,
                                                        const BruteForceOptions &oracle = {},
                                                        std::size_t *skipped = nullptr);

/// Strategy drop as a fraction of the optimal drop; 0/0 is 1.
double drop_ratio(double delta, double optimal_delta);

// Loading and saving configurations as flat key=value text.

/// Parses "key = value" lines; '#' starts a comment.
std::map<std::string, std::string> parse_key_values(std::istream &in);
/// Applies known keys to `config`; unknown keys throw std::invalid_argument.
void apply_settings(ExperimentConfig &config, const std::map<std::string, std::string> &settings);
std::string to_config_text(const ExperimentConfig &config);

}  // namespace grouphide

#endif  // GROUPHIDE_EXPERIMENT_HPP_
