#ifndef GROUPHIDE_HIDING_HPP_
#define GROUPHIDE_HIDING_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "grouphide/centrality.hpp"
#include "grouphide/graph.hpp"
#include "grouphide/rng.hpp"

namespace grouphide {

enum class Strategy { OptimalDegree, Internal, Random, Shortcut };

inline constexpr Strategy kAllStrategies[] = {Strategy::OptimalDegree, Strategy::Internal, Strategy::Random,
                                              Strategy::Shortcut};

std::string_view to_string(Strategy s);
/// Accepts "optimal-degree", "internal", "random", "shortcut".
Strategy parse_strategy(std::string_view name);

/// A group hiding problem: lower `measure` of `evaders` to at most `theta`
/// by deleting at most `budget` edges taken from `removable`.
struct HidingInstance {
    Graph graph;
    NodeSet evaders;
    CentralityMeasure measure;
    double theta = 0.0;
    std::vector<Edge> removable;
    std::size_t budget = 0;
};

/// Throws std::invalid_argument unless the evaders form a nonempty strict
/// subset of the nodes and every removable edge exists and touches them.
void validate(const HidingInstance &instance);

/// Edges that must go to cut `neighbor` off from the evaders.
struct DisconnectCost {
    NodeId neighbor = 0;
    std::vector<Edge> edges;
    bool affordable = false;  // every edge is removable
};

/// One entry per node of N(H), ascending by neighbor id.
std::vector<DisconnectCost> disconnect_costs(const Graph &g, std::span<const NodeId> evaders,
                                             std::span<const Edge> removable);

/// Greedy over disconnect costs: affordable neighbors sorted by cost (ties by
/// id), whole blocks taken while they fit in the budget. Stops at the first
/// block that does not fit. Minimises group degree over all removals of at
/// most `budget` removable edges.
std::vector<Edge> optimal_degree_removal(const Graph &g, std::span<const NodeId> evaders,
                                         std::span<const Edge> removable, std::size_t budget);

/// Uniform removable edge, still in `g`, with both endpoints among the evaders.
std::optional<Edge> internal_step(const Graph &g, std::span<const NodeId> evaders,
                                  std::span<const Edge> removable, Rng &rng);

/// Uniform removable edge still in `g`.
std::optional<Edge> random_step(const Graph &g, std::span<const NodeId> evaders,
                                std::span<const Edge> removable, Rng &rng);

/// Boundary edge to the neighbor with the smallest mean distance to the rest
/// of the graph once the evaders are deleted. Unreachable nodes count as
/// distance |V|. Ties go to the smaller neighbor id, then the smaller evader id.
std::optional<Edge> shortcut_step(const Graph &g, std::span<const NodeId> evaders,
                                  std::span<const Edge> removable);

struct MeasureScore {
    CentralityMeasure measure;  // frozen against the starting graph
    double before = 0.0;
    double after = 0.0;
};

struct StrategyOutcome {
    Strategy strategy = Strategy::OptimalDegree;
    std::uint64_t seed = 0;
    std::vector<Edge> removed;
    Graph graph_after;
    std::vector<MeasureScore> scores;
};

std::vector<CentralityMeasure> default_measures();

/// Removal sequence of one strategy without scoring. OptimalDegree removes
/// its whole set at once; the others repeat their step on the current graph
/// until the budget is spent or no candidate is left.
StrategyOutcome run_strategy(const HidingInstance &instance, Strategy strategy, std::uint64_t seed);

/// run_strategy plus scores: each of `measures` is evaluated before and after
/// with GED-walk parameters frozen on the starting graph.
StrategyOutcome execute_strategy(const HidingInstance &instance, Strategy strategy, std::uint64_t seed,
                                 const std::vector<CentralityMeasure> &measures = default_measures());

class EnumerationCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BruteForceOptions {
    std::uint64_t subset_cap = 10'000'000;
    unsigned workers = 1;
};

struct BruteForceResult {
    std::vector<Edge> removed;
    double value = 0.0;
    std::uint64_t evaluated = 0;
};

/// Number of subsets of size at most `max_size` drawn from `n` items,
/// saturating at UINT64_MAX.
std::uint64_t count_subsets(std::size_t n, std::size_t max_size);

/// Exhaustive minimum of the instance's measure over every subset of the
/// removable edges with at most `budget` members. Ties prefer fewer edges,
/// then the lexicographically first subset. Stops early once zero is reached.
BruteForceResult brute_force_optimal(const HidingInstance &instance, const BruteForceOptions &options = {});

/// A removal set meeting the threshold within budget, or nullopt. Degree uses
/// the greedy; other measures enumerate subsets in (size, lexicographic) order.
std::optional<std::vector<Edge>> solve_group_hiding(const HidingInstance &instance,
                                                    const BruteForceOptions &options = {});

/// Smallest removal set meeting the threshold; `instance.budget` is ignored.
std::optional<std::vector<Edge>> solve_minimum_group_hiding(const HidingInstance &instance,
                                                            const BruteForceOptions &options = {});

}  // namespace grouphide

#endif  // GROUPHIDE_HIDING_HPP_
