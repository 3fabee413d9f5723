#ifndef GROUPHIDE_TESTS_SUPPORT_HPP_
#define GROUPHIDE_TESTS_SUPPORT_HPP_

// Small graph builders and slow reference computations shared by the tests.
// The references deliberately avoid the library's own BFS and walk code.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "grouphide/graph.hpp"
#include "grouphide/rng.hpp"

namespace testing_support {

using grouphide::Edge;
using grouphide::Graph;
using grouphide::NodeId;
using grouphide::NodeSet;

inline Graph make_graph(std::size_t n, std::initializer_list<std::pair<NodeId, NodeId>> pairs) {
    std::vector<Edge> edges;
    for (auto [a, b] : pairs) edges.emplace_back(a, b);
    return Graph::from_edges(n, edges);
}

inline Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

inline Graph cycle(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i) edges.emplace_back(i, static_cast<NodeId>((i + 1) % n));
    return Graph::from_edges(n, edges);
}

/// Center 0, leaves 1..leaves.
inline Graph star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (NodeId i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, edges);
}

inline Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    return Graph::from_edges(n, edges);
}

/// Each pair present with probability p.
inline Graph random_gnp(std::size_t n, double p, grouphide::Rng &rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b)
            if (coin(rng)) edges.emplace_back(a, b);
    return Graph::from_edges(n, edges);
}

inline NodeSet random_subset(std::size_t n, std::size_t k, grouphide::Rng &rng) {
    NodeSet all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(k);
    std::sort(all.begin(), all.end());
    return all;
}

/// Adjacency matrix copy, for oracles that should not share code with Graph.
inline std::vector<std::vector<int>> adjacency_matrix(const Graph &g) {
    std::vector<std::vector<int>> a(g.node_count(), std::vector<int>(g.node_count(), 0));
    for (const Edge &e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
    return a;
}

constexpr int kInf = std::numeric_limits<int>::max() / 4;

/// All-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<int>> all_pairs_distances(const Graph &g) {
    const std::size_t n = g.node_count();
    auto a = adjacency_matrix(g);
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (a[i][j]) d[i][j] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

/// Group closeness from Floyd-Warshall distances.
inline double closeness_reference(const Graph &g, const NodeSet &group) {
    auto d = all_pairs_distances(g);
    std::set<NodeId> in(group.begin(), group.end());
    long long sum = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (in.count(v)) continue;
        int best = kInf;
        for (NodeId s : group) best = std::min(best, d[s][v]);
        if (best >= kInf) return 0.0;
        sum += best;
    }
    return static_cast<double>(g.node_count() - group.size()) / static_cast<double>(sum);
}

/// Group degree by scanning the adjacency matrix.
inline double degree_reference(const Graph &g, const NodeSet &group) {
    auto a = adjacency_matrix(g);
    std::set<NodeId> in(group.begin(), group.end());
    std::size_t hit = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (in.count(v)) continue;
        for (NodeId s : group)
            if (a[s][v]) {
                ++hit;
                break;
            }
    }
    return static_cast<double>(hit) / static_cast<double>(g.node_count() - group.size());
}

/// Number of walks with exactly `length` edges that visit the group, found by
/// extending every walk one edge at a time. Only for tiny graphs.
inline std::uint64_t enumerate_group_walks(const Graph &g, const NodeSet &group, int length) {
    std::set<NodeId> in(group.begin(), group.end());
    std::uint64_t count = 0;
    std::function<void(NodeId, int, bool)> extend = [&](NodeId v, int left, bool touched) {
        if (left == 0) {
            if (touched) ++count;
            return;
        }
        for (NodeId w : g.neighbors(v)) extend(w, left - 1, touched || in.count(w) > 0);
    };
    for (NodeId v = 0; v < g.node_count(); ++v) extend(v, length, in.count(v) > 0);
    return count;
}

/// Calls visit(subset) for every subset of `items` of size at most max_size.
template <class T, class Visit>
void for_each_subset(const std::vector<T> &items, std::size_t max_size, Visit visit) {
    std::vector<T> current;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        visit(current);
        if (current.size() == max_size) return;
        for (std::size_t i = start; i < items.size(); ++i) {
            current.push_back(items[i]);
            rec(i + 1);
            current.pop_back();
        }
    };
    rec(0);
}

inline NodeSet bfs_component(const Graph &g, NodeId start, const std::vector<char> &blocked) {
    std::vector<char> seen(g.node_count(), 0);
    std::deque<NodeId> queue{start};
    seen[start] = 1;
    NodeSet out;
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        out.push_back(v);
        for (NodeId w : g.neighbors(v))
            if (!seen[w] && !blocked[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    }
    return out;
}

}  // namespace testing_support

#endif  // GROUPHIDE_TESTS_SUPPORT_HPP_
