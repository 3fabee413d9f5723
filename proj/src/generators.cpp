#include "grouphide/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace grouphide {

std::string_view to_string(ModelKind kind) {
    switch (kind) {
    case ModelKind::BarabasiAlbert:
        return "BA";
    case ModelKind::WattsStrogatz:
        return "WS";
    case ModelKind::ErdosRenyi:
        return "ER";
    }
    return "?";
}

ModelKind parse_model_kind(std::string_view name) {
    if (name == "ba" || name == "BA" || name == "barabasi-albert") return ModelKind::BarabasiAlbert;
    if (name == "ws" || name == "WS" || name == "watts-strogatz") return ModelKind::WattsStrogatz;
    if (name == "er" || name == "ER" || name == "erdos-renyi") return ModelKind::ErdosRenyi;
    throw std::invalid_argument("unknown network model '" + std::string(name) + "'");
}

void ModelSpec::validate() const {
    if (n < 4) throw std::invalid_argument("model needs at least 4 nodes");
    if (avg_degree < 2 || avg_degree % 2 != 0) throw std::invalid_argument("average degree must be even and >= 2");
    if (!(rewire_p >= 0.0 && rewire_p <= 1.0)) throw std::invalid_argument("rewiring probability outside [0,1]");
}

namespace {

std::uint64_t key(NodeId a, NodeId b) {
    Edge e(a, b);
    return (std::uint64_t{e.u} << 32) | e.v;
}

}  // namespace

Graph barabasi_albert(std::size_t n, std::size_t m, Rng &rng) {
    if (m < 1 || m + 1 >= n)
        throw std::invalid_argument("barabasi_albert needs 1 <= m and m + 1 < n (got n=" + std::to_string(n) +
                                    ", m=" + std::to_string(m) + ")");
    std::vector<Edge> edges;
    // Each node appears once per incident edge, so a uniform pick is degree-proportional.
    std::vector<NodeId> endpoints;
    for (NodeId a = 0; a <= m; ++a)
        for (NodeId b = a + 1; b <= m; ++b) {
            edges.emplace_back(a, b);
            endpoints.push_back(a);
            endpoints.push_back(b);
        }
    std::vector<NodeId> chosen;
    for (auto v = static_cast<NodeId>(m + 1); v < n; ++v) {
        chosen.clear();
        std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
        while (chosen.size() < m) {
            NodeId t = endpoints[pick(rng)];
            if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) chosen.push_back(t);
        }
        for (NodeId t : chosen) {
            edges.emplace_back(v, t);
            endpoints.push_back(v);
            endpoints.push_back(t);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph watts_strogatz(std::size_t n, std::size_t k, double p, Rng &rng) {
    if (k % 2 != 0 || k >= n || n < 3) throw std::invalid_argument("watts_strogatz needs even k < n");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("watts_strogatz needs 0 <= p <= 1");
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> present;
    for (NodeId i = 0; i < n; ++i)
        for (std::size_t j = 1; j <= k / 2; ++j) {
            auto w = static_cast<NodeId>((i + j) % n);
            edges.emplace_back(i, w);
            present.insert(key(i, w));
        }
    std::bernoulli_distribution rewire(p);
    std::uniform_int_distribution<NodeId> target(0, static_cast<NodeId>(n - 1));
    std::size_t idx = 0;
    for (NodeId i = 0; i < n; ++i)
        for (std::size_t j = 1; j <= k / 2; ++j, ++idx) {
            if (!rewire(rng)) continue;
            NodeId t = target(rng);
            auto far = static_cast<NodeId>((i + j) % n);
            if (t == i || present.count(key(i, t))) continue;
            present.erase(key(i, far));
            present.insert(key(i, t));
            edges[idx] = Edge(i, t);
        }
    return Graph::from_edges(n, edges);
}

Graph erdos_renyi(std::size_t n, std::size_t m, Rng &rng) {
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (m > pairs) throw std::invalid_argument("erdos_renyi: more edges than node pairs");
    // Floyd's sampling of m distinct pair indices.
    std::unordered_set<std::uint64_t> picked;
    picked.reserve(m);
    for (std::uint64_t j = pairs - m; j < pairs; ++j) {
        std::uniform_int_distribution<std::uint64_t> draw(0, j);
        std::uint64_t t = draw(rng);
        if (!picked.insert(t).second) picked.insert(j);
    }
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::uint64_t idx : picked) {
        // idx = v(v-1)/2 + u with u < v.
        auto v = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
        while (v * (v - 1) / 2 > idx) --v;
        while ((v + 1) * v / 2 <= idx) ++v;
        std::uint64_t u = idx - v * (v - 1) / 2;
        edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
    return Graph::from_edges(n, edges);
}

Graph generate(const ModelSpec &spec, Rng &rng) {
    spec.validate();
    switch (spec.kind) {
    case ModelKind::BarabasiAlbert:
        return barabasi_albert(spec.n, spec.avg_degree / 2, rng);
    case ModelKind::WattsStrogatz:
        return watts_strogatz(spec.n, spec.avg_degree, spec.rewire_p, rng);
    case ModelKind::ErdosRenyi:
        return erdos_renyi(spec.n, spec.n * spec.avg_degree / 2, rng);
    }
    throw std::logic_error("unhandled model kind");
}

CliqueGadget clique_gadget(const Graph &host) {
    const std::size_t nc = host.node_count();
    if (nc == 0) throw std::invalid_argument("clique_gadget needs a nonempty host graph");
    CliqueGadget gadget;
    gadget.h = static_cast<NodeId>(nc);
    gadget.x = static_cast<NodeId>(nc + 1);
    std::vector<std::string> labels;
    for (NodeId i = 0; i < nc; ++i) labels.push_back("v" + std::to_string(i));
    labels.emplace_back("h");
    labels.emplace_back("x");

    std::vector<Edge> edges;
    edges.emplace_back(gadget.h, gadget.x);
    for (NodeId i = 0; i < nc; ++i) {
        edges.emplace_back(gadget.h, i);
        edges.emplace_back(i, gadget.x);
        gadget.removable.emplace_back(gadget.h, i);
    }
    NodeId next = gadget.x + 1;
    for (const Edge &e : host.edges()) {
        gadget.edge_nodes.push_back(next);
        labels.push_back("e" + std::to_string(e.u) + "_" + std::to_string(e.v));
        edges.emplace_back(next, e.u);
        edges.emplace_back(next, e.v);
        ++next;
    }
    normalize_edges(gadget.removable);
    gadget.graph = Graph::from_edges(next, edges, std::move(labels));
    return gadget;
}

MultiwayCutGadget multiway_cut_gadget(const Graph &host, std::span<const NodeId> terminals) {
    if (terminals.size() < 3) throw std::invalid_argument("multiway_cut_gadget needs at least 3 terminals");
    node_mask(host, terminals);
    const std::size_t nm = host.node_count();
    MultiwayCutGadget gadget;
    std::vector<std::string> labels;
    for (NodeId i = 0; i < nm; ++i) {
        labels.push_back("v" + std::to_string(i));
        gadget.evaders.push_back(i);
    }
    std::vector<Edge> edges = host.edges();
    gadget.removable = edges;
    NodeId next = static_cast<NodeId>(nm);
    for (NodeId t : terminals) {
        gadget.pendants.push_back(next);
        labels.push_back("x" + std::to_string(t));
        edges.emplace_back(t, next);
        ++next;
    }
    gadget.graph = Graph::from_edges(next, edges, std::move(labels));
    return gadget;
}

}  // namespace grouphide
