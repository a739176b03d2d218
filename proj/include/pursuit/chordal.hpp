#pragma once

// Chordal graph recognition by maximum cardinality search and clique tree
// construction. The clique tree is a tree decomposition whose bags are the
// maximal cliques, connected by a maximum-weight spanning tree on
// intersection sizes.

#include <optional>

#include "pursuit/tree_decomposition.hpp"

namespace pursuit {

// Elimination order from maximum cardinality search (ties to lowest id):
// repeatedly pick the unnumbered vertex with the most numbered neighbours.
// The reverse selection order is a perfect elimination order iff the graph
// is chordal.
inline std::vector<int> mcs_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> weight(n, 0), selection;
    std::vector<bool> numbered(n, false);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[v] && (pick == -1 || weight[v] > weight[pick])) pick = v;
        numbered[pick] = true;
        selection.push_back(pick);
        for (int w : g.neighbors(pick))
            if (!numbered[w]) ++weight[w];
    }
    std::reverse(selection.begin(), selection.end());
    return selection;  // perfect elimination order candidate
}

// Tarjan-Yannakakis test: v's later neighbours minus its parent must all be
// adjacent to the parent.
inline bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& peo) {
    const int n = g.vertex_count();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[peo[i]] = i;
    for (int i = 0; i < n; ++i) {
        int v = peo[i];
        int parent = -1;
        for (int w : g.neighbors(v))
            if (pos[w] > i && (parent == -1 || pos[w] < pos[parent])) parent = w;
        if (parent == -1) continue;
        for (int w : g.neighbors(v))
            if (pos[w] > i && w != parent && !g.has_edge(parent, w)) return false;
    }
    return true;
}

inline bool is_chordal(const Graph& g) { return is_perfect_elimination_order(g, mcs_order(g)); }

// Clique tree of a connected chordal graph; nullopt when g is not chordal.
// The result validates as a tree decomposition with every bag a clique.
inline std::optional<TreeDecomposition> clique_tree(const Graph& g) {
    if (!is_connected(g)) throw InvalidInput("clique tree requires a connected graph");
    const int n = g.vertex_count();
    auto peo = mcs_order(g);
    if (!is_perfect_elimination_order(g, peo)) return std::nullopt;

    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[peo[i]] = i;

    // candidate cliques {v} + later neighbours, then drop non-maximal ones
    std::vector<VertexSet> candidates;
    for (int i = 0; i < n; ++i) {
        int v = peo[i];
        std::vector<int> clique{v};
        for (int w : g.neighbors(v))
            if (pos[w] > i) clique.push_back(w);
        candidates.emplace_back(std::move(clique));
    }
    std::vector<VertexSet> cliques;
    for (const auto& c : candidates) {
        bool maximal = true;
        for (const auto& other : candidates)
            if (!(other == c) && c.is_subset_of(other)) {
                maximal = false;
                break;
            }
        if (maximal && std::find(cliques.begin(), cliques.end(), c) == cliques.end())
            cliques.push_back(c);
    }
    std::sort(cliques.begin(), cliques.end());

    TreeDecomposition t;
    t.bags = cliques;
    const int b = t.bag_count();
    if (b > 1) {
        // Prim over intersection weights; ties toward lower bag ids
        std::vector<bool> in_tree(b, false);
        std::vector<int> best_w(b, -1), best_to(b, -1);
        in_tree[0] = true;
        for (int j = 1; j < b; ++j) {
            best_w[j] = t.bags[0].intersect(t.bags[j]).size();
            best_to[j] = 0;
        }
        for (int step = 1; step < b; ++step) {
            int pick = -1;
            for (int j = 0; j < b; ++j)
                if (!in_tree[j] && (pick == -1 || best_w[j] > best_w[pick])) pick = j;
            in_tree[pick] = true;
            t.tree_edges.emplace_back(std::min(best_to[pick], pick), std::max(best_to[pick], pick));
            for (int j = 0; j < b; ++j)
                if (!in_tree[j]) {
                    int w = t.bags[pick].intersect(t.bags[j]).size();
                    if (w > best_w[j]) {
                        best_w[j] = w;
                        best_to[j] = pick;
                    }
                }
        }
    }
    if (!validate_td(g, t).ok)
        throw InternalError("clique tree construction produced an invalid decomposition");
    return t;
}

}  // namespace pursuit
