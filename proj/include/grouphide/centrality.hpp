#ifndef GROUPHIDE_CENTRALITY_HPP_
#define GROUPHIDE_CENTRALITY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grouphide/graph.hpp"

namespace grouphide {

enum class MeasureKind { Degree, Closeness, Betweenness, GedWalk };

inline constexpr MeasureKind kAllMeasures[] = {MeasureKind::Degree, MeasureKind::Closeness,
                                               MeasureKind::Betweenness, MeasureKind::GedWalk};

std::string_view to_string(MeasureKind kind);
/// Accepts "degree", "closeness", "betweenness", "ged-walk" (also "ged").
MeasureKind parse_measure_kind(std::string_view name);

/// Truncation settings for GED-walk. An unset alpha means 1/max_degree of
/// whatever graph is being scored; use freeze() to pin it to one graph.
struct GedParams {
    std::optional<double> alpha;
    int max_length = 50;
    /// Stop summing once a term falls below this fraction of the running sum.
    /// Zero disables the early stop.
    double rel_tolerance = 1e-9;
};

struct CentralityMeasure {
    MeasureKind kind = MeasureKind::Degree;
    GedParams ged;

    static CentralityMeasure degree() { return {MeasureKind::Degree, {}}; }
    static CentralityMeasure closeness() { return {MeasureKind::Closeness, {}}; }
    static CentralityMeasure betweenness() { return {MeasureKind::Betweenness, {}}; }
    static CentralityMeasure ged_walk(GedParams params = {});

    std::string name() const { return std::string(to_string(kind)); }
};

/// Copy of `measure` with the GED-walk alpha resolved against `g`, so later
/// scores on modified graphs use the same decay. Edgeless graphs get alpha 1
/// (every score on them is zero anyway).
CentralityMeasure freeze(const CentralityMeasure &measure, const Graph &g);

// Group centralities. `group` must be a nonempty strict subset of the nodes
// without duplicates; violations throw std::invalid_argument.

double group_degree(const Graph &g, std::span<const NodeId> group);

/// Zero when some non-group node cannot be reached from the group.
double group_closeness(const Graph &g, std::span<const NodeId> group);

/// Needs at least two non-group nodes. Disconnected pairs contribute zero.
double group_betweenness(const Graph &g, std::span<const NodeId> group);

inline constexpr std::size_t kDefaultOracleNodeCap = 64;

/// Reference betweenness that enumerates every shortest path explicitly.
/// Exponential in the worst case; refuses graphs above `node_cap`.
double group_betweenness_naive(const Graph &g, std::span<const NodeId> group,
                               std::size_t node_cap = kDefaultOracleNodeCap);

/// Sum over i in [1, max_length] of alpha^i times the number of length-i walks
/// (i traversed edges) visiting the group.
double group_ged_walk(const Graph &g, std::span<const NodeId> group, double alpha, int max_length,
                      double rel_tolerance = 1e-9);

/// 1 / max_degree(g). Throws std::invalid_argument on edgeless graphs.
double default_alpha(const Graph &g);

/// Exact walk counts per length, index 0 holding length 1.
struct WalkTally {
    std::vector<std::uint64_t> total_walks;
    std::vector<std::uint64_t> avoiding_walks;
    std::vector<std::uint64_t> phi;
};

/// Exact W_i(G), W_i(G minus group) and their difference for i = 1..max_length.
/// Throws std::overflow_error if a count leaves the 64-bit range.
WalkTally count_walks(const Graph &g, std::span<const NodeId> group, int max_length);

double evaluate(const CentralityMeasure &measure, const Graph &g, std::span<const NodeId> group);

}  // namespace grouphide

#endif  // GROUPHIDE_CENTRALITY_HPP_
