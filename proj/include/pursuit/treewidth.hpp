#pragma once

// Exact treewidth by dynamic programming over vertex subsets in the
// elimination-order formulation, with a witness decomposition rebuilt from
// the optimal order. Beyond the exact limit a min-fill greedy order supplies
// a certified upper-bound witness instead (flagged non-optimal).

#include <bit>
#include <cstdint>

#include "pursuit/tree_decomposition.hpp"

namespace pursuit {

struct TreewidthResult {
    int width = 0;
    TreeDecomposition witness;
    bool optimal = false;
};

namespace detail {

// Builds the decomposition induced by an elimination order: bag(v) = v plus
// its neighbours in the fill graph at elimination time; each bag attaches to
// the bag of the earliest-eliminated such neighbour.
inline TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;

    TreeDecomposition t;
    t.bags.resize(n);
    std::vector<bool> gone(n, false);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        std::vector<int> nb;
        for (int w = 0; w < n; ++w)
            if (!gone[w] && w != v && adj[v][w]) nb.push_back(w);
        std::vector<int> bag = nb;
        bag.push_back(v);
        t.bags[i] = VertexSet(std::move(bag));
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t c = a + 1; c < nb.size(); ++c)
                adj[nb[a]][nb[c]] = adj[nb[c]][nb[a]] = true;
        gone[v] = true;
        if (!nb.empty()) {
            int parent = nb[0];
            for (int w : nb)
                if (pos[w] < pos[parent]) parent = w;
            t.tree_edges.emplace_back(i, pos[parent]);
        } else if (i + 1 < n) {
            t.tree_edges.emplace_back(i, i + 1);
        }
    }
    return t;
}

inline std::vector<int> min_fill_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
    std::vector<bool> gone(n, false);
    std::vector<int> order;
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_fill = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (gone[v]) continue;
            std::vector<int> nb;
            for (int w = 0; w < n; ++w)
                if (!gone[w] && w != v && adj[v][w]) nb.push_back(w);
            int fill = 0;
            for (std::size_t a = 0; a < nb.size(); ++a)
                for (std::size_t c = a + 1; c < nb.size(); ++c)
                    if (!adj[nb[a]][nb[c]]) ++fill;
            int deg = static_cast<int>(nb.size());
            if (pick == -1 || fill < pick_fill || (fill == pick_fill && deg < pick_deg)) {
                pick = v;
                pick_fill = fill;
                pick_deg = deg;
            }
        }
        std::vector<int> nb;
        for (int w = 0; w < n; ++w)
            if (!gone[w] && w != pick && adj[pick][w]) nb.push_back(w);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t c = a + 1; c < nb.size(); ++c)
                adj[nb[a]][nb[c]] = adj[nb[c]][nb[a]] = true;
        gone[pick] = true;
        order.push_back(pick);
    }
    return order;
}

}  // namespace detail

inline TreewidthResult treewidth_exact(const Graph& g, int exact_limit = 14) {
    const int n = g.vertex_count();
    if (n == 0) throw InvalidInput("treewidth of the empty graph");
    if (exact_limit > 22) exact_limit = 22;  // subset DP memory wall

    if (n > exact_limit) {
        auto order = detail::min_fill_order(g);
        TreewidthResult res;
        res.witness = detail::decomposition_from_order(g, order);
        res.width = width(res.witness);
        res.optimal = false;
        if (!validate_td(g, res.witness).ok)
            throw InternalError("greedy elimination produced an invalid decomposition");
        return res;
    }

    // adjacency as bitmasks
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }

    // fill degree of v when S is already eliminated: vertices outside S
    // reachable from v through S
    auto elim_degree = [&](std::uint32_t s, int v) {
        std::uint32_t seen = 1u << v, stack = 1u << v, boundary = 0;
        while (stack) {
            int u = std::countr_zero(stack);
            stack &= stack - 1;
            std::uint32_t fresh = adj[u] & ~seen;
            seen |= fresh;
            stack |= fresh & s;
            boundary |= fresh & ~s;
        }
        return std::popcount(boundary & ~(1u << v));
    };

    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    std::vector<std::uint8_t> dp(full + 1, 0), choice(full + 1, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        int best = 255, best_v = -1;
        for (std::uint32_t rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint32_t prev = s & ~(1u << v);
            int cand = std::max<int>(dp[prev], elim_degree(prev, v));
            if (cand < best) {
                best = cand;
                best_v = v;
            }
        }
        dp[s] = static_cast<std::uint8_t>(best);
        choice[s] = static_cast<std::uint8_t>(best_v);
    }

    std::vector<int> order(n);
    std::uint32_t s = full;
    for (int i = n - 1; i >= 0; --i) {
        order[i] = choice[s];
        s &= ~(1u << order[i]);
    }

    TreewidthResult res;
    res.width = dp[full];
    res.witness = detail::decomposition_from_order(g, order);
    res.optimal = true;
    if (!validate_td(g, res.witness).ok || width(res.witness) != res.width)
        throw InternalError("treewidth witness does not match the DP value");
    return res;
}

}  // namespace pursuit
