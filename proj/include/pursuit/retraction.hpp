#pragma once

// Retractions: homomorphisms from a graph onto an induced subgraph that fix
// the subgraph pointwise. Constructive builders exist for isometric paths
// and cliques; general existence is decided by backtracking search.

#include <optional>
#include <string>
#include <vector>

#include "pursuit/errors.hpp"
#include "pursuit/graph.hpp"

namespace pursuit {

struct Retraction {
    VertexSet image;       // support of the retract, sorted host ids
    std::vector<int> map;  // size host.n; identity on image

    bool operator==(const Retraction& other) const {
        return image == other.image && map == other.map;
    }
};

// Returns a violation description, or nullopt when `r` is a valid retraction
// of the host: total, identity on the image, and edge-preserving up to
// equality (the host is reflexive).
inline std::optional<std::string> check_retraction(const Graph& host, const Retraction& r) {
    const int n = host.vertex_count();
    if (static_cast<int>(r.map.size()) != n) return "map is not total over the host";
    if (r.image.empty()) return "empty image";
    for (int v : r.image) {
        if (v < 0 || v >= n) return "image vertex out of range";
        if (r.map[v] != v) return "map is not the identity on image vertex " + std::to_string(v);
    }
    for (int v = 0; v < n; ++v)
        if (!r.image.contains(r.map[v]))
            return "vertex " + std::to_string(v) + " maps outside the image";
    for (auto [u, v] : host.edges()) {
        int fu = r.map[u], fv = r.map[v];
        if (fu != fv && !host.has_edge(fu, fv))
            return "edge (" + std::to_string(u) + "," + std::to_string(v) +
                   ") maps to non-adjacent (" + std::to_string(fu) + "," + std::to_string(fv) + ")";
    }
    return std::nullopt;
}

// f(x) = p_{min(d(x, p_0), L)} for an isometric path p_0..p_L.
inline Retraction retraction_onto_isometric_path(const Graph& g, const std::vector<int>& path) {
    if (!is_isometric_path(g, path))
        throw InvalidInput("sequence is not an isometric path");
    const int last = static_cast<int>(path.size()) - 1;
    auto dist0 = bfs_distances(g, path[0]);
    Retraction r;
    r.image = VertexSet(path);
    r.map.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (dist0[v] == kUnreachable)
            throw InvalidInput("host must be connected to retract onto a path");
        r.map[v] = path[std::min(dist0[v], last)];
    }
    if (auto bad = check_retraction(g, r))
        throw InternalError("path retraction failed verification: " + *bad);
    return r;
}

// Identity on the clique, lowest clique vertex elsewhere. Valid because every
// image pair is adjacent or equal.
inline Retraction retraction_onto_clique(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw InvalidInput("clique retraction needs a nonempty set");
    if (!is_clique(g, s)) throw InvalidInput("set is not a clique");
    Retraction r;
    r.image = s;
    r.map.assign(g.vertex_count(), s[0]);
    for (int v : s) r.map[v] = v;
    if (auto bad = check_retraction(g, r))
        throw InternalError("clique retraction failed verification: " + *bad);
    return r;
}

struct RetractionSearchLimits {
    std::uint64_t node_budget = 2'000'000;
};

// Complete backtracking search for a retraction onto the induced subgraph on
// `support`. nullopt means proven nonexistence; exceeding the node budget
// raises ResourceExhausted instead. Free vertices are assigned in descending
// degree order, candidate images nearest-first.
inline std::optional<Retraction> find_retraction(const Graph& g, const VertexSet& support,
                                                 const RetractionSearchLimits& limits = {}) {
    if (support.empty()) throw InvalidInput("empty support");
    const int n = g.vertex_count();
    std::vector<int> assignment(n, -1);
    for (int v : support) assignment[v] = v;

    std::vector<int> free_vertices;
    for (int v = 0; v < n; ++v)
        if (!support.contains(v)) free_vertices.push_back(v);
    std::sort(free_vertices.begin(), free_vertices.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    // candidate images for each free vertex, nearest first
    auto dist = distances(g);
    std::vector<std::vector<int>> candidates(free_vertices.size());
    for (std::size_t i = 0; i < free_vertices.size(); ++i) {
        int v = free_vertices[i];
        candidates[i].assign(support.begin(), support.end());
        std::sort(candidates[i].begin(), candidates[i].end(), [&](int a, int b) {
            int da = dist[v][a] == kUnreachable ? 1 << 28 : dist[v][a];
            int db = dist[v][b] == kUnreachable ? 1 << 28 : dist[v][b];
            if (da != db) return da < db;
            return a < b;
        });
    }

    std::uint64_t nodes = 0;
    auto consistent = [&](int v, int img) {
        for (int w : g.neighbors(v)) {
            int fw = assignment[w];
            if (fw == -1) continue;
            if (img != fw && !g.has_edge(img, fw)) return false;
        }
        return true;
    };

    std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
        if (i == free_vertices.size()) return true;
        if (++nodes > limits.node_budget)
            throw ResourceExhausted("retraction search exceeded node budget " +
                                    std::to_string(limits.node_budget));
        int v = free_vertices[i];
        for (int img : candidates[i]) {
            if (!consistent(v, img)) continue;
            assignment[v] = img;
            if (search(i + 1)) return true;
            assignment[v] = -1;
        }
        return false;
    };

    if (!search(0)) return std::nullopt;
    Retraction r;
    r.image = support;
    r.map = std::move(assignment);
    if (auto bad = check_retraction(g, r))
        throw InternalError("found retraction failed verification: " + *bad);
    return r;
}

}  // namespace pursuit
