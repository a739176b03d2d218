#pragma once

// PACE 2017 .gr exchange format and a small JSON mirror.
//
// .gr files: comment lines start with "c", the header is "p tw <n> <m>",
// then one edge per line, 1-indexed. Internally everything is 0-indexed;
// conversion happens only here.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pursuit/errors.hpp"
#include "pursuit/graph.hpp"

namespace pursuit {

struct GrReadResult {
    Graph graph;
    std::vector<std::string> warnings;
};

inline GrReadResult read_gr(std::istream& in) {
    GrReadResult res;
    std::string line;
    int line_no = 0;
    long n = -1, m = -1, edges_seen = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        if (!header_seen) {
            std::string p, tw;
            if (!(ss >> p >> tw >> n >> m) || p != "p" || tw != "tw" || n < 0 || m < 0)
                throw ParseError(line_no, "expected header 'p tw <n> <m>'");
            std::string rest;
            if (ss >> rest) throw ParseError(line_no, "trailing tokens after header");
            header_seen = true;
            res.graph = Graph(static_cast<int>(n));
            continue;
        }
        long u, v;
        if (!(ss >> u >> v)) throw ParseError(line_no, "expected edge line '<u> <v>'");
        std::string rest;
        if (ss >> rest) throw ParseError(line_no, "trailing tokens after edge");
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError(line_no, "edge endpoint out of range 1.." + std::to_string(n));
        if (u == v) throw ParseError(line_no, "self-loop rejected");
        ++edges_seen;
        int a = static_cast<int>(u) - 1, b = static_cast<int>(v) - 1;
        if (res.graph.has_edge(a, b)) {
            res.warnings.push_back("line " + std::to_string(line_no) + ": duplicate edge " +
                                   std::to_string(u) + " " + std::to_string(v) + " collapsed");
        } else {
            res.graph.add_edge(a, b);
        }
    }
    if (!header_seen) throw ParseError(line_no, "missing 'p tw' header");
    if (edges_seen != m)
        throw ParseError(line_no, "header announced " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges_seen));
    return res;
}

inline void write_gr(std::ostream& out, const Graph& g) {
    out << "p tw " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u + 1 << " " << v + 1 << "\n";
}

// JSON form: {"n": ..., "edges": [[u,v],...], "labels": [...]} (0-indexed).
inline nlohmann::ordered_json graph_to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    if (g.has_labels()) {
        auto labels = nlohmann::ordered_json::array();
        for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
        j["labels"] = labels;
    }
    return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
    try {
        Graph g(j.at("n").get<int>());
        for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
        if (j.contains("labels")) {
            int v = 0;
            for (const auto& l : j["labels"]) g.set_label(v++, l.get<std::string>());
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("bad graph JSON: ") + e.what());
    }
}

}  // namespace pursuit
