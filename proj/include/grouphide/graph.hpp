#ifndef GROUPHIDE_GRAPH_HPP_
#define GROUPHIDE_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace grouphide {

using NodeId = std::uint32_t;
using NodeSet = std::vector<NodeId>;

inline constexpr NodeId kInvalidNode = std::numeric_limits<NodeId>::max();

/// Undirected edge. Endpoints are stored with u < v so (a,b) and (b,a)
/// compare and hash equal.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;

    Edge() = default;
    Edge(NodeId a, NodeId b);

    friend auto operator<=>(const Edge &, const Edge &) = default;
    friend bool operator==(const Edge &, const Edge &) = default;

    /// The endpoint that is not `x`. `x` must be an endpoint.
    NodeId other(NodeId x) const { return x == u ? v : u; }
    bool touches(NodeId x) const { return x == u || x == v; }
};

struct EdgeHash {
    std::size_t operator()(const Edge &e) const noexcept {
        return std::hash<std::uint64_t>{}((std::uint64_t{e.u} << 32) | e.v);
    }
};

/// Sorts and deduplicates a list of edges in place.
void normalize_edges(std::vector<Edge> &edges);

/// Immutable undirected simple graph in compressed adjacency form.
/// Neighbor lists are sorted; node ids are dense in [0, node_count()).
class Graph {
public:
    Graph() = default;

    /// Builds a graph on `n` nodes. Self-loops are dropped and duplicate
    /// edges collapsed; an endpoint >= n throws std::out_of_range.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                            std::vector<std::string> labels = {});

    std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return targets_.size() / 2; }

    std::span<const NodeId> neighbors(NodeId v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_node(NodeId v) const { return v < node_count(); }
    bool has_edge(NodeId a, NodeId b) const;
    bool has_edge(const Edge &e) const { return has_edge(e.u, e.v); }

    /// All edges in ascending order.
    std::vector<Edge> edges() const;

    /// External label of `v`; the decimal id when the graph carries no labels.
    std::string label(NodeId v) const;
    bool has_labels() const { return labels_ != nullptr; }
    /// Node with external label `label`, or kInvalidNode.
    NodeId find_label(const std::string &label) const;

private:
    struct LabelTable {
        std::vector<std::string> names;
        std::unordered_map<std::string, NodeId> index;
    };

    std::vector<std::size_t> offsets_;
    std::vector<NodeId> targets_;
    std::shared_ptr<const LabelTable> labels_;

    friend class GraphAccess;
};

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Hop distance from the nearest member of a source set.
struct DistanceMap {
    NodeSet sources;
    std::vector<std::uint32_t> dist;

    bool reachable(NodeId v) const { return dist[v] != kUnreachable; }
};

/// Result of deleting a node set: the new graph plus the id mapping.
struct NodeRemoval {
    Graph graph;
    std::vector<NodeId> old_to_new;  // kInvalidNode for removed nodes
    std::vector<NodeId> new_to_old;
};

class EdgeListError : public std::runtime_error {
public:
    EdgeListError(std::size_t line, const std::string &what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}
    /// 1-based line number, 0 when the error is not tied to a line.
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

enum class Delimiter { Auto, Whitespace, Comma };

struct EdgeListOptions {
    Delimiter delimiter = Delimiter::Auto;
    bool drop_extra_columns = true;
};

/// Reads a whitespace/comma separated edge list. Lines starting with '#' or
/// '%' and blank lines are skipped. Labels get ids in order of first
/// appearance.
Graph load_edge_list(std::istream &in, const EdgeListOptions &options = {});
Graph load_edge_list_file(const std::string &path, const EdgeListOptions &options = {});
void write_edge_list(std::ostream &out, const Graph &g);

/// Membership mask for `nodes`. Throws std::invalid_argument on ids outside
/// the graph or on duplicates.
std::vector<char> node_mask(const Graph &g, std::span<const NodeId> nodes);

Graph remove_edges(const Graph &g, std::span<const Edge> removed);
Graph add_edges(const Graph &g, std::span<const Edge> added);
NodeRemoval remove_nodes(const Graph &g, std::span<const NodeId> removed);

/// N(S): nodes outside S adjacent to at least one member, ascending.
NodeSet neighbors_of_group(const Graph &g, std::span<const NodeId> group);

DistanceMap multi_source_bfs(const Graph &g, std::span<const NodeId> sources);

/// BFS that never enters nodes flagged in `blocked` (sources must not be
/// blocked). Blocked nodes report kUnreachable.
DistanceMap multi_source_bfs(const Graph &g, std::span<const NodeId> sources,
                             std::span<const char> blocked);

/// Component index per node; components are numbered in order of their
/// smallest node id.
std::vector<std::uint32_t> connected_components(const Graph &g, std::size_t *count = nullptr);

/// Induced subgraph on the largest component. Ties go to the component with
/// the smallest node id. Labels are carried over.
Graph giant_component(const Graph &g);

std::size_t max_degree(const Graph &g);

}  // namespace grouphide

#endif  // GROUPHIDE_GRAPH_HPP_
