#pragma once

// Tree decompositions: validation against the three defining properties,
// width, tree utilities (centre, diameter, robber subtree), the clique
// intersection predicate, and the grid decomposition into isometric paths.

#include <optional>
#include <string>
#include <vector>

#include "pursuit/errors.hpp"
#include "pursuit/generators.hpp"
#include "pursuit/graph.hpp"

namespace pursuit {

struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<std::pair<int, int>> tree_edges;  // over bag ids

    int bag_count() const { return static_cast<int>(bags.size()); }

    bool operator==(const TreeDecomposition& other) const {
        return bags == other.bags && tree_edges == other.tree_edges;
    }
};

inline std::vector<std::vector<int>> tree_adjacency(const TreeDecomposition& t) {
    std::vector<std::vector<int>> adj(t.bag_count());
    for (auto [a, b] : t.tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

struct TdViolation {
    enum Kind { structure, vertex_coverage, edge_coverage, connectivity } kind;
    std::string detail;
};

struct TdValidation {
    bool ok = true;
    std::vector<TdViolation> violations;
    explicit operator bool() const { return ok; }
    std::string summary() const {
        std::string s;
        for (const auto& v : violations) s += (s.empty() ? "" : "; ") + v.detail;
        return s;
    }
};

// Checks the three defining properties. Property (3) is verified in the
// equivalent per-vertex form: the bags containing x form a subtree.
// Structural defects in the tree itself short-circuit the property checks.
inline TdValidation validate_td(const Graph& g, const TreeDecomposition& t) {
    TdValidation res;
    auto flag = [&](TdViolation::Kind k, std::string detail) {
        res.ok = false;
        res.violations.push_back({k, std::move(detail)});
    };

    const int b = t.bag_count();
    if (b == 0) {
        flag(TdViolation::structure, "decomposition has no bags");
        return res;
    }
    for (int i = 0; i < b; ++i)
        for (int v : t.bags[i])
            if (v < 0 || v >= g.vertex_count()) {
                flag(TdViolation::structure,
                     "bag " + std::to_string(i) + " contains out-of-range vertex " + std::to_string(v));
                return res;
            }
    for (auto [x, y] : t.tree_edges)
        if (x < 0 || x >= b || y < 0 || y >= b || x == y) {
            flag(TdViolation::structure, "bad tree edge (" + std::to_string(x) + "," + std::to_string(y) + ")");
            return res;
        }
    if (static_cast<int>(t.tree_edges.size()) != b - 1) {
        flag(TdViolation::structure, "tree must have exactly bags-1 edges");
        return res;
    }
    auto adj = tree_adjacency(t);
    {
        std::vector<bool> seen(b, false);
        std::vector<int> stack{0};
        seen[0] = true;
        int count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (!seen[w]) {
                    seen[w] = true;
                    ++count;
                    stack.push_back(w);
                }
        }
        if (count != b) {
            flag(TdViolation::structure, "tree edges do not connect all bags");
            return res;
        }
    }

    // (1) every vertex appears in some bag
    std::vector<std::vector<int>> occurrences(g.vertex_count());
    for (int i = 0; i < b; ++i)
        for (int v : t.bags[i]) occurrences[v].push_back(i);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (occurrences[v].empty())
            flag(TdViolation::vertex_coverage, "vertex " + std::to_string(v) + " is in no bag");

    // (2) every edge inside some bag
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int i : occurrences[u])
            if (t.bags[i].contains(v)) {
                covered = true;
                break;
            }
        if (!covered)
            flag(TdViolation::edge_coverage,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") is in no bag");
    }

    // (3) occurrence sets are connected in the tree
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& occ = occurrences[v];
        if (occ.size() <= 1) continue;
        std::vector<bool> in_occ(b, false), seen(b, false);
        for (int i : occ) in_occ[i] = true;
        std::vector<int> stack{occ[0]};
        seen[occ[0]] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (in_occ[w] && !seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != occ.size()) {
            int outside = -1;
            for (int i : occ)
                if (!seen[i]) {
                    outside = i;
                    break;
                }
            flag(TdViolation::connectivity,
                 "bags containing vertex " + std::to_string(v) + " are disconnected (bags " +
                     std::to_string(occ[0]) + " and " + std::to_string(outside) + ")");
        }
    }
    return res;
}

inline int width(const TreeDecomposition& t) {
    if (t.bags.empty()) throw InvalidInput("width of an empty decomposition");
    int largest = 0;
    for (const auto& bag : t.bags) largest = std::max(largest, bag.size());
    return largest - 1;
}

// Centre by iterative leaf stripping (1 or 2 bags) and the tree diameter.
inline std::pair<std::vector<int>, int> tree_centre_and_diameter(const TreeDecomposition& t) {
    const int b = t.bag_count();
    if (b == 0) throw InvalidInput("empty decomposition");
    if (b == 1) return {{0}, 0};
    auto adj = tree_adjacency(t);

    std::vector<int> degree(b);
    for (int i = 0; i < b; ++i) degree[i] = static_cast<int>(adj[i].size());
    std::vector<int> layer;
    for (int i = 0; i < b; ++i)
        if (degree[i] <= 1) layer.push_back(i);
    int remaining = b;
    std::vector<int> centre = layer;
    int rounds = 0;
    while (remaining > 2) {
        std::vector<int> next;
        for (int leaf : layer) {
            --remaining;
            for (int w : adj[leaf])
                if (--degree[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
        centre = layer;
        ++rounds;
    }
    std::sort(centre.begin(), centre.end());
    // diameter: 2*rounds of stripping plus 1 if two centre bags remain
    int diameter = 2 * rounds + (static_cast<int>(centre.size()) == 2 ? 1 : 0);
    return {centre, diameter};
}

// Bag-to-bag hop distances in the tree.
inline std::vector<int> tree_distances_from(const TreeDecomposition& t, int source) {
    auto adj = tree_adjacency(t);
    std::vector<int> dist(t.bag_count(), -1);
    std::vector<int> queue{source};
    dist[source] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int u = queue[i];
        for (int w : adj[u])
            if (dist[w] == -1) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

// All bags containing the robber's vertex; connected by property (3).
inline std::vector<int> robber_subtree(const TreeDecomposition& t, int robber) {
    std::vector<int> bags;
    for (int i = 0; i < t.bag_count(); ++i)
        if (t.bags[i].contains(robber)) bags.push_back(i);
    return bags;
}

// First bag on the path from `from` toward the nearest bag of `targets`.
// Returns `from` itself when it is already a target.
inline int next_bag_towards(const TreeDecomposition& t, int from, const std::vector<int>& targets) {
    if (std::find(targets.begin(), targets.end(), from) != targets.end()) return from;
    auto adj = tree_adjacency(t);
    std::vector<int> parent(t.bag_count(), -1), dist(t.bag_count(), -1);
    std::vector<int> queue{from};
    dist[from] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int u = queue[i];
        for (int w : adj[u])
            if (dist[w] == -1) {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            }
    }
    int best = -1;
    for (int tgt : targets)
        if (dist[tgt] >= 0 && (best == -1 || dist[tgt] < dist[best] ||
                               (dist[tgt] == dist[best] && tgt < best)))
            best = tgt;
    if (best == -1) throw InternalError("targets unreachable in the decomposition tree");
    int cur = best;
    while (parent[cur] != from) cur = parent[cur];
    return cur;
}

// True iff every pair of bags meets in a clique. Adjacent pairs suffice: by
// property (3) any pairwise intersection is contained in every intersection
// along the connecting tree path, and subsets of cliques are cliques.
inline bool pairwise_clique_intersections(const Graph& g, const TreeDecomposition& t) {
    for (auto [a, b] : t.tree_edges)
        if (!is_clique(g, t.bags[a].intersect(t.bags[b]))) return false;
    return true;
}

// Decomposition of the n x n grid into isometric paths, one bag
//   B[i][j] = {(i,k): j <= k <= n} on row i plus {(i+1,k): 1 <= k <= j},
// for 1 <= i <= n-1 and 1 <= j <= n, arranged as a path in lexicographic
// (i,j) order. The occurrence set of each grid vertex is an interval of this
// order, which validate_td certifies.
inline TreeDecomposition grid_path_decomposition(int n) {
    if (n < 2) throw InvalidInput("grid decomposition needs n >= 2");
    TreeDecomposition t;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j) {
            std::vector<int> bag;
            for (int k = j; k <= n; ++k) bag.push_back(grid_vertex(n, i - 1, k - 1));
            for (int k = 1; k <= j; ++k) bag.push_back(grid_vertex(n, i, k - 1));
            t.bags.emplace_back(std::move(bag));
        }
    for (int b = 0; b + 1 < t.bag_count(); ++b) t.tree_edges.emplace_back(b, b + 1);
    return t;
}

}  // namespace pursuit
