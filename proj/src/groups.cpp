#include "grouphide/groups.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace grouphide {

std::string_view to_string(SelectionKind kind) {
    switch (kind) {
    case SelectionKind::Dense:
        return "dense";
    case SelectionKind::Cells:
        return "cells";
    case SelectionKind::Scattered:
        return "scattered";
    }
    return "?";
}

SelectionKind parse_selection_kind(std::string_view name) {
    if (name == "dense") return SelectionKind::Dense;
    if (name == "cells") return SelectionKind::Cells;
    if (name == "scattered") return SelectionKind::Scattered;
    throw std::invalid_argument("unknown selection criterion '" + std::string(name) + "'");
}

namespace {

void check_size(const Graph &g, std::size_t k) {
    if (k < 1 || k >= g.node_count())
        throw std::invalid_argument("group size " + std::to_string(k) + " outside [1, " +
                                    std::to_string(g.node_count()) + ")");
}

NodeId uniform_outside(const Graph &g, const std::vector<char> &excluded, Rng &rng) {
    std::vector<NodeId> pool;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (!excluded[v]) pool.push_back(v);
    if (pool.empty()) throw std::invalid_argument("no node left to select");
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    return pool[pick(rng)];
}

}  // namespace

void grow_dense(const Graph &g, NodeSet &group, std::size_t target_size, std::vector<char> &excluded, Rng &rng) {
    // links[v]: edges from v into `group`.
    std::vector<std::uint32_t> links(g.node_count(), 0);
    auto add = [&](NodeId v) {
        group.push_back(v);
        excluded[v] = 1;
        for (NodeId w : g.neighbors(v)) ++links[w];
    };
    for (NodeId v : group)
        for (NodeId w : g.neighbors(v)) ++links[w];
    if (group.empty() && target_size > 0) add(uniform_outside(g, excluded, rng));

    std::vector<NodeId> ties;
    while (group.size() < target_size) {
        std::uint32_t best = 0;
        ties.clear();
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (excluded[v] || links[v] == 0 || links[v] < best) continue;
            if (links[v] > best) {
                best = links[v];
                ties.clear();
            }
            ties.push_back(v);
        }
        if (ties.empty()) {
            add(uniform_outside(g, excluded, rng));  // growth stalled
            continue;
        }
        std::uniform_int_distribution<std::size_t> pick(0, ties.size() - 1);
        add(ties[pick(rng)]);
    }
}

NodeSet select_dense(const Graph &g, std::size_t k, Rng &rng) {
    check_size(g, k);
    NodeSet group;
    std::vector<char> excluded(g.node_count(), 0);
    grow_dense(g, group, k, excluded, rng);
    std::sort(group.begin(), group.end());
    return group;
}

std::vector<int> truncate_cell_sizes(std::span<const int> draws, std::size_t k) {
    std::vector<int> sizes;
    std::size_t total = 0;
    for (int d : draws) {
        if (total >= k) break;
        int take = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(d), k - total));
        sizes.push_back(take);
        total += static_cast<std::size_t>(take);
    }
    if (total < k) throw std::invalid_argument("cell size draws do not cover the group size");
    return sizes;
}

std::vector<int> draw_cell_sizes(std::size_t k, CellSizeBounds bounds, Rng &rng) {
    if (bounds.low < 2 || bounds.low > bounds.high) throw std::invalid_argument("invalid cell size bounds");
    std::uniform_int_distribution<int> size(bounds.low, bounds.high);
    std::vector<int> draws;
    std::size_t total = 0;
    while (total < k) {
        draws.push_back(size(rng));
        total += static_cast<std::size_t>(draws.back());
    }
    return truncate_cell_sizes(draws, k);
}

NodeSet select_cells(const Graph &g, std::size_t k, Rng &rng, CellSizeBounds bounds) {
    check_size(g, k);
    std::vector<int> sizes = draw_cell_sizes(k, bounds, rng);
    std::vector<char> taken(g.node_count(), 0);
    NodeSet all;
    for (int size : sizes) {
        NodeSet cell;
        grow_dense(g, cell, static_cast<std::size_t>(size), taken, rng);
        all.insert(all.end(), cell.begin(), cell.end());
    }
    std::sort(all.begin(), all.end());
    return all;
}

NodeSet select_scattered(const Graph &g, std::size_t k, Rng &rng) {
    check_size(g, k);
    std::vector<NodeId> nodes(g.node_count());
    std::iota(nodes.begin(), nodes.end(), NodeId{0});
    // Partial Fisher-Yates.
    for (std::size_t i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, nodes.size() - 1);
        std::swap(nodes[i], nodes[pick(rng)]);
    }
    nodes.resize(k);
    std::sort(nodes.begin(), nodes.end());
    return nodes;
}

NodeSet select_group(const Graph &g, std::size_t k, const SelectionCriterion &criterion, Rng &rng) {
    switch (criterion.kind) {
    case SelectionKind::Dense:
        return select_dense(g, k, rng);
    case SelectionKind::Cells:
        return select_cells(g, k, rng, criterion.cell_bounds);
    case SelectionKind::Scattered:
        return select_scattered(g, k, rng);
    }
    throw std::logic_error("unhandled selection kind");
}

std::vector<Edge> default_removable(const Graph &g, std::span<const NodeId> group) {
    node_mask(g, group);
    std::vector<Edge> out;
    for (NodeId h : group)
        for (NodeId w : g.neighbors(h)) out.emplace_back(h, w);
    normalize_edges(out);
    return out;
}

}  // namespace grouphide
