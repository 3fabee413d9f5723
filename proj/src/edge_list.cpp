#include <fstream>
#include <ostream>
#include <string_view>

#include "grouphide/graph.hpp"

namespace grouphide {

namespace {

bool is_separator(char c, Delimiter d) {
    switch (d) {
    case Delimiter::Whitespace:
        return c == ' ' || c == '\t' || c == '\r';
    case Delimiter::Comma:
        return c == ',';
    case Delimiter::Auto:
        return c == ' ' || c == '\t' || c == '\r' || c == ',';
    }
    return false;
}

std::vector<std::string_view> tokenize(std::string_view line, Delimiter d) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (is_separator(line[i], d)) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !is_separator(line[j], d)) ++j;
        tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    if (d == Delimiter::Comma) {
        for (auto &t : tokens) {
            while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.remove_prefix(1);
            while (!t.empty() && (t.back() == ' ' || t.back() == '\t' || t.back() == '\r')) t.remove_suffix(1);
        }
    }
    return tokens;
}

}  // namespace

Graph load_edge_list(std::istream &in, const EdgeListOptions &options) {
    std::vector<std::string> names;
    std::unordered_map<std::string, NodeId> ids;
    std::vector<Edge> edges;
    auto intern = [&](std::string_view label, std::size_t line_no) {
        if (label.empty()) throw EdgeListError(line_no, "empty node label");
        auto [it, inserted] = ids.emplace(std::string(label), static_cast<NodeId>(names.size()));
        if (inserted) names.emplace_back(label);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        std::size_t first = view.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        if (view[first] == '#' || view[first] == '%') continue;
        auto tokens = tokenize(view, options.delimiter);
        if (tokens.size() < 2) throw EdgeListError(line_no, "expected two node labels");
        if (tokens.size() > 2 && !options.drop_extra_columns)
            throw EdgeListError(line_no, "unexpected extra columns");
        NodeId a = intern(tokens[0], line_no);
        NodeId b = intern(tokens[1], line_no);
        edges.emplace_back(a, b);
    }
    if (in.bad()) throw EdgeListError(0, "read failure");
    if (names.empty()) throw EdgeListError(0, "edge list is empty");
    std::size_t n = names.size();
    return Graph::from_edges(n, edges, std::move(names));
}

Graph load_edge_list_file(const std::string &path, const EdgeListOptions &options) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list '" + path + "'");
    return load_edge_list(in, options);
}

void write_edge_list(std::ostream &out, const Graph &g) {
    out << "# nodes " << g.node_count() << " edges " << g.edge_count() << '\n';
    for (const Edge &e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

}  // namespace grouphide
