#include "grouphide/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace grouphide {

Edge::Edge(NodeId a, NodeId b) : u(std::min(a, b)), v(std::max(a, b)) {}

void normalize_edges(std::vector<Edge> &edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

class GraphAccess {
public:
    // Builds the compressed form from already normalized edges (u < v, sorted, unique).
    static Graph build(std::size_t n, std::span<const Edge> edges,
                       std::shared_ptr<const Graph::LabelTable> labels) {
        Graph g;
        g.offsets_.assign(n + 1, 0);
        for (const Edge &e : edges) {
            ++g.offsets_[e.u + 1];
            ++g.offsets_[e.v + 1];
        }
        std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
        g.targets_.resize(2 * edges.size());
        std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
        // Sorted input keeps each neighbor list sorted: for a fixed node the
        // smaller partners arrive first (as e.u of earlier edges), then larger.
        for (const Edge &e : edges) g.targets_[cursor[e.v]++] = e.u;
        for (const Edge &e : edges) g.targets_[cursor[e.u]++] = e.v;
        g.labels_ = std::move(labels);
        return g;
    }

    static std::shared_ptr<const Graph::LabelTable> labels(const Graph &g) { return g.labels_; }

    static std::shared_ptr<const Graph::LabelTable> make_labels(std::vector<std::string> names) {
        auto table = std::make_shared<Graph::LabelTable>();
        table->index.reserve(names.size());
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (!table->index.emplace(names[i], static_cast<NodeId>(i)).second)
                throw std::invalid_argument("duplicate node label '" + names[i] + "'");
        }
        table->names = std::move(names);
        return table;
    }

    // Labels for the nodes listed in `new_to_old`, taken from `g`.
    static std::shared_ptr<const Graph::LabelTable> sub_labels(const Graph &g,
                                                              std::span<const NodeId> new_to_old) {
        std::vector<std::string> names;
        names.reserve(new_to_old.size());
        for (NodeId old : new_to_old) names.push_back(g.label(old));
        return make_labels(std::move(names));
    }
};

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels) {
    if (n >= kInvalidNode) throw std::length_error("graph too large");
    if (!labels.empty() && labels.size() != n)
        throw std::invalid_argument("label table size does not match node count");
    std::vector<Edge> clean;
    clean.reserve(edges.size());
    for (const Edge &e : edges) {
        if (e.v >= n) throw std::out_of_range("edge endpoint " + std::to_string(e.v) + " out of range");
        if (e.u != e.v) clean.push_back(e);
    }
    normalize_edges(clean);
    auto table = labels.empty() ? nullptr : GraphAccess::make_labels(std::move(labels));
    return GraphAccess::build(n, clean, std::move(table));
}

bool Graph::has_edge(NodeId a, NodeId b) const {
    if (a >= node_count() || b >= node_count()) return false;
    if (degree(a) > degree(b)) std::swap(a, b);
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (NodeId v = 0; v < node_count(); ++v)
        for (NodeId w : neighbors(v))
            if (v < w) out.emplace_back(v, w);
    return out;
}

std::string Graph::label(NodeId v) const {
    if (labels_) return labels_->names.at(v);
    return std::to_string(v);
}

NodeId Graph::find_label(const std::string &label) const {
    if (labels_) {
        auto it = labels_->index.find(label);
        return it == labels_->index.end() ? kInvalidNode : it->second;
    }
    try {
        std::size_t pos = 0;
        unsigned long id = std::stoul(label, &pos);
        if (pos == label.size() && id < node_count()) return static_cast<NodeId>(id);
    } catch (const std::exception &) {
    }
    return kInvalidNode;
}

std::vector<char> node_mask(const Graph &g, std::span<const NodeId> nodes) {
    std::vector<char> mask(g.node_count(), 0);
    for (NodeId v : nodes) {
        if (!g.has_node(v)) throw std::invalid_argument("node " + std::to_string(v) + " not in graph");
        if (mask[v]) throw std::invalid_argument("node " + std::to_string(v) + " listed twice");
        mask[v] = 1;
    }
    return mask;
}

Graph remove_edges(const Graph &g, std::span<const Edge> removed) {
    if (removed.empty()) return g;
    std::vector<Edge> drop(removed.begin(), removed.end());
    normalize_edges(drop);
    for (const Edge &e : drop)
        if (!g.has_edge(e))
            throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        ") not in graph");
    std::vector<Edge> kept;
    kept.reserve(g.edge_count() - drop.size());
    auto it = drop.begin();
    for (const Edge &e : g.edges()) {
        while (it != drop.end() && *it < e) ++it;
        if (it != drop.end() && *it == e) continue;
        kept.push_back(e);
    }
    return GraphAccess::build(g.node_count(), kept, GraphAccess::labels(g));
}

Graph add_edges(const Graph &g, std::span<const Edge> added) {
    std::vector<Edge> all = g.edges();
    for (const Edge &e : added) {
        if (e.v >= g.node_count()) throw std::out_of_range("edge endpoint out of range");
        if (e.u != e.v) all.push_back(e);
    }
    normalize_edges(all);
    return GraphAccess::build(g.node_count(), all, GraphAccess::labels(g));
}

namespace {

// Induced subgraph on the nodes flagged in `keep`.
NodeRemoval induced(const Graph &g, const std::vector<char> &keep) {
    NodeRemoval out;
    out.old_to_new.assign(g.node_count(), kInvalidNode);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (keep[v]) {
            out.old_to_new[v] = static_cast<NodeId>(out.new_to_old.size());
            out.new_to_old.push_back(v);
        }
    }
    std::vector<Edge> edges;
    for (const Edge &e : g.edges())
        if (keep[e.u] && keep[e.v]) edges.emplace_back(out.old_to_new[e.u], out.old_to_new[e.v]);
    // Relabelling is monotone, so the edge list stays sorted.
    auto labels = g.has_labels() ? GraphAccess::sub_labels(g, out.new_to_old) : nullptr;
    out.graph = GraphAccess::build(out.new_to_old.size(), edges, std::move(labels));
    return out;
}

}  // namespace

NodeRemoval remove_nodes(const Graph &g, std::span<const NodeId> removed) {
    std::vector<char> keep = node_mask(g, removed);
    for (char &k : keep) k = !k;
    return induced(g, keep);
}

NodeSet neighbors_of_group(const Graph &g, std::span<const NodeId> group) {
    std::vector<char> in_group = node_mask(g, group);
    std::vector<char> seen(g.node_count(), 0);
    NodeSet out;
    for (NodeId v : group)
        for (NodeId w : g.neighbors(v))
            if (!in_group[w] && !seen[w]) {
                seen[w] = 1;
                out.push_back(w);
            }
    std::sort(out.begin(), out.end());
    return out;
}

DistanceMap multi_source_bfs(const Graph &g, std::span<const NodeId> sources) {
    std::vector<char> none(g.node_count(), 0);
    return multi_source_bfs(g, sources, none);
}

DistanceMap multi_source_bfs(const Graph &g, std::span<const NodeId> sources,
                             std::span<const char> blocked) {
    if (sources.empty()) throw std::invalid_argument("multi_source_bfs: empty source set");
    DistanceMap map;
    map.sources.assign(sources.begin(), sources.end());
    map.dist.assign(g.node_count(), kUnreachable);
    std::vector<NodeId> queue;
    queue.reserve(g.node_count());
    for (NodeId s : sources) {
        if (!g.has_node(s)) throw std::invalid_argument("source " + std::to_string(s) + " not in graph");
        if (blocked[s]) throw std::invalid_argument("source " + std::to_string(s) + " is blocked");
        if (map.dist[s] == 0) continue;
        map.dist[s] = 0;
        queue.push_back(s);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        NodeId v = queue[head];
        for (NodeId w : g.neighbors(v)) {
            if (blocked[w] || map.dist[w] != kUnreachable) continue;
            map.dist[w] = map.dist[v] + 1;
            queue.push_back(w);
        }
    }
    return map;
}

std::vector<std::uint32_t> connected_components(const Graph &g, std::size_t *count) {
    std::vector<std::uint32_t> comp(g.node_count(), kUnreachable);
    std::uint32_t next = 0;
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < g.node_count(); ++s) {
        if (comp[s] != kUnreachable) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            for (NodeId w : g.neighbors(v))
                if (comp[w] == kUnreachable) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    if (count) *count = next;
    return comp;
}

Graph giant_component(const Graph &g) {
    if (g.node_count() == 0) throw std::invalid_argument("giant_component: empty graph");
    std::size_t count = 0;
    auto comp = connected_components(g, &count);
    if (count == 1) return g;
    std::vector<std::size_t> sizes(count, 0);
    for (auto c : comp) ++sizes[c];
    // max_element returns the first maximum, i.e. the component with the smallest id.
    auto best = static_cast<std::uint32_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    std::vector<char> keep(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) keep[v] = comp[v] == best;
    if (!g.has_labels()) {
        // Keep a trail back to the original ids.
        std::vector<std::string> names(g.node_count());
        for (NodeId v = 0; v < g.node_count(); ++v) names[v] = std::to_string(v);
        Graph labelled = GraphAccess::build(g.node_count(), g.edges(), GraphAccess::make_labels(std::move(names)));
        return induced(labelled, keep).graph;
    }
    return induced(g, keep).graph;
}

std::size_t max_degree(const Graph &g) {
    std::size_t best = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

}  // namespace grouphide
