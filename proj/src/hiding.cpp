#include "grouphide/hiding.hpp"

#include <algorithm>
#include <string>

namespace grouphide {

std::string_view to_string(Strategy s) {
    switch (s) {
    case Strategy::OptimalDegree:
        return "optimal-degree";
    case Strategy::Internal:
        return "internal";
    case Strategy::Random:
        return "random";
    case Strategy::Shortcut:
        return "shortcut";
    }
    return "?";
}

Strategy parse_strategy(std::string_view name) {
    if (name == "optimal-degree" || name == "optimal") return Strategy::OptimalDegree;
    if (name == "internal") return Strategy::Internal;
    if (name == "random") return Strategy::Random;
    if (name == "shortcut") return Strategy::Shortcut;
    throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

void validate(const HidingInstance &instance) {
    const Graph &g = instance.graph;
    if (instance.evaders.empty()) throw std::invalid_argument("evader group is empty");
    std::vector<char> in_group = node_mask(g, instance.evaders);
    if (instance.evaders.size() >= g.node_count())
        throw std::invalid_argument("evader group must be a strict subset of the nodes");
    for (const Edge &e : instance.removable) {
        if (!g.has_edge(e))
            throw std::invalid_argument("removable edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        ") not in graph");
        if (!in_group[e.u] && !in_group[e.v])
            throw std::invalid_argument("removable edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        ") does not touch the evaders");
    }
}

namespace {

std::vector<Edge> sorted_unique(std::span<const Edge> edges) {
    std::vector<Edge> out(edges.begin(), edges.end());
    normalize_edges(out);
    return out;
}

bool contains(const std::vector<Edge> &sorted, const Edge &e) {
    return std::binary_search(sorted.begin(), sorted.end(), e);
}

}  // namespace

std::vector<DisconnectCost> disconnect_costs(const Graph &g, std::span<const NodeId> evaders,
                                             std::span<const Edge> removable) {
    std::vector<char> in_group = node_mask(g, evaders);
    std::vector<Edge> allowed = sorted_unique(removable);
    std::vector<DisconnectCost> costs;
    for (NodeId v : neighbors_of_group(g, evaders)) {
        DisconnectCost cost;
        cost.neighbor = v;
        cost.affordable = true;
        for (NodeId h : g.neighbors(v)) {
            if (!in_group[h]) continue;
            Edge e(v, h);
            cost.edges.push_back(e);
            if (!contains(allowed, e)) cost.affordable = false;
        }
        costs.push_back(std::move(cost));
    }
    return costs;
}

std::vector<Edge> optimal_degree_removal(const Graph &g, std::span<const NodeId> evaders,
                                         std::span<const Edge> removable, std::size_t budget) {
    std::vector<DisconnectCost> costs = disconnect_costs(g, evaders, removable);
    std::erase_if(costs, [](const DisconnectCost &c) { return !c.affordable; });
    // Stable sort keeps ascending neighbor ids among equal costs.
    std::stable_sort(costs.begin(), costs.end(),
                     [](const DisconnectCost &a, const DisconnectCost &b) { return a.edges.size() < b.edges.size(); });
    std::vector<Edge> chosen;
    for (const DisconnectCost &c : costs) {
        if (chosen.size() + c.edges.size() > budget) break;
        chosen.insert(chosen.end(), c.edges.begin(), c.edges.end());
    }
    return chosen;
}

namespace {

template <class Pred>
std::vector<Edge> present_candidates(const Graph &g, std::span<const Edge> removable, Pred keep) {
    std::vector<Edge> out;
    for (const Edge &e : sorted_unique(removable))
        if (g.has_edge(e) && keep(e)) out.push_back(e);
    return out;
}

std::optional<Edge> pick_uniform(const std::vector<Edge> &candidates, Rng &rng) {
    if (candidates.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    return candidates[pick(rng)];
}

}  // namespace

std::optional<Edge> internal_step(const Graph &g, std::span<const NodeId> evaders, std::span<const Edge> removable,
                                  Rng &rng) {
    std::vector<char> in_group = node_mask(g, evaders);
    return pick_uniform(present_candidates(g, removable, [&](const Edge &e) { return in_group[e.u] && in_group[e.v]; }),
                        rng);
}

std::optional<Edge> random_step(const Graph &g, std::span<const NodeId> evaders, std::span<const Edge> removable,
                                Rng &rng) {
    node_mask(g, evaders);
    return pick_uniform(present_candidates(g, removable, [](const Edge &) { return true; }), rng);
}

std::optional<Edge> shortcut_step(const Graph &g, std::span<const NodeId> evaders, std::span<const Edge> removable) {
    std::vector<char> in_group = node_mask(g, evaders);
    auto boundary = present_candidates(g, removable, [&](const Edge &e) { return in_group[e.u] != in_group[e.v]; });
    if (boundary.empty()) return std::nullopt;

    // Every candidate shares the denominator |V \ H| - 1, so comparing
    // distance sums is the same as comparing means.
    const auto penalty = static_cast<std::uint64_t>(g.node_count());
    NodeId best_neighbor = kInvalidNode;
    std::uint64_t best_sum = 0;
    std::vector<NodeId> outside_ends;
    for (const Edge &e : boundary) outside_ends.push_back(in_group[e.u] ? e.v : e.u);
    std::sort(outside_ends.begin(), outside_ends.end());
    outside_ends.erase(std::unique(outside_ends.begin(), outside_ends.end()), outside_ends.end());
    for (NodeId v : outside_ends) {
        DistanceMap dm = multi_source_bfs(g, std::span<const NodeId>(&v, 1), in_group);
        std::uint64_t sum = 0;
        for (NodeId w = 0; w < g.node_count(); ++w) {
            if (in_group[w] || w == v) continue;
            sum += dm.reachable(w) ? dm.dist[w] : penalty;
        }
        if (best_neighbor == kInvalidNode || sum < best_sum) {
            best_neighbor = v;
            best_sum = sum;
        }
    }
    std::optional<Edge> pick;
    NodeId best_partner = kInvalidNode;
    for (const Edge &e : boundary) {
        if (!e.touches(best_neighbor)) continue;
        NodeId h = e.other(best_neighbor);
        if (h < best_partner) {
            best_partner = h;
            pick = e;
        }
    }
    return pick;
}

std::vector<CentralityMeasure> default_measures() {
    return {CentralityMeasure::degree(), CentralityMeasure::closeness(), CentralityMeasure::betweenness(),
            CentralityMeasure::ged_walk()};
}

StrategyOutcome run_strategy(const HidingInstance &instance, Strategy strategy, std::uint64_t seed) {
    validate(instance);
    const Graph &start = instance.graph;
    const NodeSet &group = instance.evaders;
    StrategyOutcome out;
    out.strategy = strategy;
    out.seed = seed;

    if (strategy == Strategy::OptimalDegree) {
        out.removed = optimal_degree_removal(start, group, instance.removable, instance.budget);
        out.graph_after = remove_edges(start, out.removed);
    } else {
        Rng rng(seed);
        Graph current = start;
        while (out.removed.size() < instance.budget) {
            std::optional<Edge> e;
            switch (strategy) {
            case Strategy::Internal:
                e = internal_step(current, group, instance.removable, rng);
                break;
            case Strategy::Random:
                e = random_step(current, group, instance.removable, rng);
                break;
            case Strategy::Shortcut:
                e = shortcut_step(current, group, instance.removable);
                break;
            case Strategy::OptimalDegree:
                break;
            }
            if (!e) break;
            out.removed.push_back(*e);
            current = remove_edges(current, std::span<const Edge>(&*e, 1));
        }
        out.graph_after = std::move(current);
    }
    return out;
}

StrategyOutcome execute_strategy(const HidingInstance &instance, Strategy strategy, std::uint64_t seed,
                                 const std::vector<CentralityMeasure> &measures) {
    StrategyOutcome out = run_strategy(instance, strategy, seed);
    const Graph &start = instance.graph;
    const NodeSet &group = instance.evaders;
    for (const CentralityMeasure &m : measures) {
        MeasureScore score;
        score.measure = freeze(m, start);
        score.before = evaluate(score.measure, start, group);
        score.after = out.removed.empty() ? score.before : evaluate(score.measure, out.graph_after, group);
        out.scores.push_back(score);
    }
    return out;
}

}  // namespace grouphide
