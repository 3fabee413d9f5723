#include "grouphide/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace grouphide {

std::string_view to_string(MeasureKind kind) {
    switch (kind) {
    case MeasureKind::Degree:
        return "degree";
    case MeasureKind::Closeness:
        return "closeness";
    case MeasureKind::Betweenness:
        return "betweenness";
    case MeasureKind::GedWalk:
        return "ged-walk";
    }
    return "?";
}

MeasureKind parse_measure_kind(std::string_view name) {
    if (name == "degree") return MeasureKind::Degree;
    if (name == "closeness") return MeasureKind::Closeness;
    if (name == "betweenness") return MeasureKind::Betweenness;
    if (name == "ged-walk" || name == "ged" || name == "gedwalk") return MeasureKind::GedWalk;
    throw std::invalid_argument("unknown centrality measure '" + std::string(name) + "'");
}

CentralityMeasure CentralityMeasure::ged_walk(GedParams params) {
    if (params.alpha && !(*params.alpha > 0.0)) throw std::invalid_argument("GED-walk alpha must be positive");
    if (params.max_length < 1) throw std::invalid_argument("GED-walk max_length must be at least 1");
    return {MeasureKind::GedWalk, params};
}

CentralityMeasure freeze(const CentralityMeasure &measure, const Graph &g) {
    CentralityMeasure out = measure;
    if (out.kind == MeasureKind::GedWalk && !out.ged.alpha)
        out.ged.alpha = g.edge_count() == 0 ? 1.0 : default_alpha(g);
    return out;
}

namespace {

// Validates the group and returns its membership mask.
std::vector<char> group_mask(const Graph &g, std::span<const NodeId> group) {
    if (group.empty()) throw std::invalid_argument("group must not be empty");
    std::vector<char> mask = node_mask(g, group);
    if (group.size() >= g.node_count()) throw std::invalid_argument("group must not contain every node");
    return mask;
}

}  // namespace

double group_degree(const Graph &g, std::span<const NodeId> group) {
    group_mask(g, group);
    auto outside = static_cast<double>(g.node_count() - group.size());
    return static_cast<double>(neighbors_of_group(g, group).size()) / outside;
}

double group_closeness(const Graph &g, std::span<const NodeId> group) {
    std::vector<char> in_group = group_mask(g, group);
    DistanceMap dm = multi_source_bfs(g, group);
    std::uint64_t total = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (in_group[v]) continue;
        if (!dm.reachable(v)) return 0.0;
        total += dm.dist[v];
    }
    return static_cast<double>(g.node_count() - group.size()) / static_cast<double>(total);
}

// One BFS per non-group source. Along the shortest-path DAG we count all
// shortest paths (sigma) and those that avoid the group (sigma_avoid); the
// through-group fraction of a pair is 1 - sigma_avoid / sigma.
double group_betweenness(const Graph &g, std::span<const NodeId> group) {
    std::vector<char> in_group = group_mask(g, group);
    const std::size_t n = g.node_count();
    const std::size_t outside = n - group.size();
    if (outside < 2) throw std::invalid_argument("betweenness needs at least two non-group nodes");

    std::vector<std::uint32_t> dist(n);
    std::vector<double> sigma(n), sigma_avoid(n);
    std::vector<NodeId> order;
    order.reserve(n);
    double sum = 0.0;
    for (NodeId s = 0; s < n; ++s) {
        if (in_group[s]) continue;
        std::fill(dist.begin(), dist.end(), kUnreachable);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(sigma_avoid.begin(), sigma_avoid.end(), 0.0);
        order.clear();
        dist[s] = 0;
        sigma[s] = 1.0;
        sigma_avoid[s] = 1.0;
        order.push_back(s);
        for (std::size_t head = 0; head < order.size(); ++head) {
            NodeId v = order[head];
            for (NodeId w : g.neighbors(v)) {
                if (dist[w] == kUnreachable) {
                    dist[w] = dist[v] + 1;
                    order.push_back(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    if (!in_group[w]) sigma_avoid[w] += sigma_avoid[v];
                }
            }
        }
        for (NodeId t : order) {
            if (t == s || in_group[t]) continue;
            sum += 1.0 - sigma_avoid[t] / sigma[t];
        }
    }
    // `sum` runs over ordered pairs, i.e. twice the unordered sum.
    return sum / (static_cast<double>(outside) * static_cast<double>(outside - 1));
}

namespace {

constexpr std::uint64_t kPathBudget = 10'000'000;

struct PathEnumerator {
    const Graph &g;
    const std::vector<char> &in_group;
    const std::vector<std::uint32_t> &dist;  // from the source
    std::uint64_t all = 0;
    std::uint64_t through = 0;
    std::uint64_t budget;

    // Walks back from `v` to the source along strictly decreasing distances,
    // so every completed walk is one shortest path.
    void walk(NodeId v, bool touched) {
        if (dist[v] == 0) {
            if (all == budget) throw std::length_error("betweenness oracle: too many shortest paths");
            ++all;
            if (touched) ++through;
            return;
        }
        for (NodeId u : g.neighbors(v))
            if (dist[u] + 1 == dist[v]) walk(u, touched || in_group[u]);
    }
};

}  // namespace

double group_betweenness_naive(const Graph &g, std::span<const NodeId> group, std::size_t node_cap) {
    if (g.node_count() > node_cap)
        throw std::length_error("betweenness oracle refuses graphs above " + std::to_string(node_cap) + " nodes");
    std::vector<char> in_group = group_mask(g, group);
    const std::size_t outside = g.node_count() - group.size();
    if (outside < 2) throw std::invalid_argument("betweenness needs at least two non-group nodes");

    double sum = 0.0;
    for (NodeId s = 0; s < g.node_count(); ++s) {
        if (in_group[s]) continue;
        DistanceMap dm = multi_source_bfs(g, std::span<const NodeId>(&s, 1));
        for (NodeId t = s + 1; t < g.node_count(); ++t) {
            if (in_group[t] || !dm.reachable(t)) continue;
            PathEnumerator paths{g, in_group, dm.dist, 0, 0, kPathBudget};
            paths.walk(t, false);
            sum += static_cast<double>(paths.through) / static_cast<double>(paths.all);
        }
    }
    return 2.0 * sum / (static_cast<double>(outside) * static_cast<double>(outside - 1));
}

double default_alpha(const Graph &g) {
    std::size_t d = max_degree(g);
    if (d == 0) throw std::invalid_argument("default alpha undefined on an edgeless graph");
    return 1.0 / static_cast<double>(d);
}

// Counts are carried pre-multiplied by alpha^i so they stay in range.
// walks[v]   : scaled number of length-i walks ending at v
// touched[v] : scaled number of those that visited the group
double group_ged_walk(const Graph &g, std::span<const NodeId> group, double alpha, int max_length,
                      double rel_tolerance) {
    std::vector<char> in_group = group_mask(g, group);
    if (!(alpha > 0.0)) throw std::invalid_argument("GED-walk alpha must be positive");
    if (max_length < 1) throw std::invalid_argument("GED-walk max_length must be at least 1");
    const std::size_t n = g.node_count();
    std::vector<double> walks(n, 1.0), touched(n), next_walks(n), next_touched(n);
    for (NodeId v = 0; v < n; ++v) touched[v] = in_group[v] ? 1.0 : 0.0;

    double sum = 0.0;
    for (int i = 1; i <= max_length; ++i) {
        double term = 0.0;
        for (NodeId v = 0; v < n; ++v) {
            double w = 0.0, t = 0.0;
            for (NodeId u : g.neighbors(v)) {
                w += walks[u];
                t += touched[u];
            }
            next_walks[v] = alpha * w;
            next_touched[v] = in_group[v] ? next_walks[v] : alpha * t;
            term += next_touched[v];
        }
        walks.swap(next_walks);
        touched.swap(next_touched);
        if (!std::isfinite(term)) throw std::overflow_error("GED-walk sum diverged");
        sum += term;
        if (rel_tolerance > 0.0 && term <= rel_tolerance * sum) break;
    }
    return sum;
}

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("walk count exceeds 64 bits");
    return r;
}

// Number of length-i walks for i = 1..L inside the nodes not flagged in `blocked`.
std::vector<std::uint64_t> walk_counts(const Graph &g, const std::vector<char> &blocked, int max_length) {
    const std::size_t n = g.node_count();
    std::vector<std::uint64_t> cur(n), next(n), out;
    for (NodeId v = 0; v < n; ++v) cur[v] = blocked[v] ? 0 : 1;
    for (int i = 1; i <= max_length; ++i) {
        std::uint64_t total = 0;
        for (NodeId v = 0; v < n; ++v) {
            std::uint64_t c = 0;
            if (!blocked[v])
                for (NodeId u : g.neighbors(v)) c = checked_add(c, cur[u]);
            next[v] = c;
            total = checked_add(total, c);
        }
        cur.swap(next);
        out.push_back(total);
    }
    return out;
}

}  // namespace

WalkTally count_walks(const Graph &g, std::span<const NodeId> group, int max_length) {
    std::vector<char> in_group = group_mask(g, group);
    if (max_length < 1) throw std::invalid_argument("max_length must be at least 1");
    WalkTally tally;
    tally.total_walks = walk_counts(g, std::vector<char>(g.node_count(), 0), max_length);
    tally.avoiding_walks = walk_counts(g, in_group, max_length);
    for (int i = 0; i < max_length; ++i) tally.phi.push_back(tally.total_walks[i] - tally.avoiding_walks[i]);
    return tally;
}

double evaluate(const CentralityMeasure &measure, const Graph &g, std::span<const NodeId> group) {
    switch (measure.kind) {
    case MeasureKind::Degree:
        return group_degree(g, group);
    case MeasureKind::Closeness:
        return group_closeness(g, group);
    case MeasureKind::Betweenness:
        return group_betweenness(g, group);
    case MeasureKind::GedWalk: {
        double alpha = measure.ged.alpha ? *measure.ged.alpha : default_alpha(g);
        return group_ged_walk(g, group, alpha, measure.ged.max_length, measure.ged.rel_tolerance);
    }
    }
    throw std::logic_error("unhandled measure kind");
}

}  // namespace grouphide
