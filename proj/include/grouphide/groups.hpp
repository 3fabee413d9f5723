#ifndef GROUPHIDE_GROUPS_HPP_
#define GROUPHIDE_GROUPS_HPP_

#include <span>
#include <string_view>
#include <vector>

#include "grouphide/graph.hpp"
#include "grouphide/rng.hpp"

namespace grouphide {

enum class SelectionKind { Dense, Cells, Scattered };

std::string_view to_string(SelectionKind kind);
SelectionKind parse_selection_kind(std::string_view name);

struct CellSizeBounds {
    int low = 3;
    int high = 7;
};

struct SelectionCriterion {
    SelectionKind kind = SelectionKind::Dense;
    CellSizeBounds cell_bounds;  // Cells only
};

/// Grows `group` to `target_size` by repeatedly adding the node outside
/// `excluded` with the most edges into `group`; ties are broken uniformly at
/// random. When no such node touches the group, growth restarts from a
/// uniform node outside `excluded`. Added nodes are flagged in `excluded`.
void grow_dense(const Graph &g, NodeSet &group, std::size_t target_size, std::vector<char> &excluded, Rng &rng);

/// Uniform seed node, then dense growth to k nodes.
NodeSet select_dense(const Graph &g, std::size_t k, Rng &rng);

/// Truncates a sequence of drawn cell sizes so the total is exactly k; draws
/// past the point where k is reached are dropped.
std::vector<int> truncate_cell_sizes(std::span<const int> draws, std::size_t k);

/// Cell sizes drawn uniformly from the bounds until they cover k, the last one
/// truncated.
std::vector<int> draw_cell_sizes(std::size_t k, CellSizeBounds bounds, Rng &rng);

/// Union of disjoint dense cells, each grown from a fresh uniform seed.
NodeSet select_cells(const Graph &g, std::size_t k, Rng &rng, CellSizeBounds bounds = {});

/// Uniform k-subset of the nodes.
NodeSet select_scattered(const Graph &g, std::size_t k, Rng &rng);

NodeSet select_group(const Graph &g, std::size_t k, const SelectionCriterion &criterion, Rng &rng);

/// Every edge with at least one endpoint in the group, ascending.
std::vector<Edge> default_removable(const Graph &g, std::span<const NodeId> group);

}  // namespace grouphide

#endif  // GROUPHIDE_GROUPS_HPP_
