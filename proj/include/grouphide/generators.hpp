#ifndef GROUPHIDE_GENERATORS_HPP_
#define GROUPHIDE_GENERATORS_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grouphide/graph.hpp"
#include "grouphide/rng.hpp"

namespace grouphide {

enum class ModelKind { BarabasiAlbert, WattsStrogatz, ErdosRenyi };

std::string_view to_string(ModelKind kind);
/// Accepts "ba", "ws", "er" and the full model names.
ModelKind parse_model_kind(std::string_view name);

struct ModelSpec {
    ModelKind kind = ModelKind::WattsStrogatz;
    std::size_t n = 1000;
    std::size_t avg_degree = 10;
    double rewire_p = 0.25;  // Watts-Strogatz only

    void validate() const;
};

/// Seed clique on m+1 nodes, then each new node links to m distinct existing
/// nodes picked with probability proportional to degree. Needs m >= 1 and at
/// least one node beyond the seed clique.
Graph barabasi_albert(std::size_t n, std::size_t m, Rng &rng);

/// Ring lattice with k/2 neighbors per side; each lattice edge has its far
/// endpoint moved with probability p to a uniform target. Moves that would
/// create a self-loop or a duplicate are skipped, so |E| = nk/2 exactly.
Graph watts_strogatz(std::size_t n, std::size_t k, double p, Rng &rng);

/// Uniform graph with exactly m distinct edges.
Graph erdos_renyi(std::size_t n, std::size_t m, Rng &rng);

/// BA uses m = d/2, WS uses k = d, ER uses m = n*d/2 edges.
Graph generate(const ModelSpec &spec, Rng &rng);

/// Closeness hardness construction over a host graph G_C: node ids
/// 0..|V_C|-1 are the host nodes, then h, x, then one node per host edge.
struct CliqueGadget {
    Graph graph;
    NodeId h = 0;
    NodeId x = 0;
    std::vector<NodeId> edge_nodes;  // parallel to host.edges()
    std::vector<Edge> removable;     // (h, v_i) for every host node
};

CliqueGadget clique_gadget(const Graph &host);

/// Betweenness hardness construction: the host graph plus one pendant per
/// terminal (ids |V_M|.. in terminal order). Evaders are the host nodes and the
/// removable edges are the host edges.
struct MultiwayCutGadget {
    Graph graph;
    NodeSet evaders;
    std::vector<Edge> removable;
    std::vector<NodeId> pendants;  // parallel to the terminal list
};

MultiwayCutGadget multiway_cut_gadget(const Graph &host, std::span<const NodeId> terminals);

}  // namespace grouphide

#endif  // GROUPHIDE_GENERATORS_HPP_
