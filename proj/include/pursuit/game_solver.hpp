#pragma once

// Exact oracle for the k-cop pursuit game on a graph: win/lose, capture time
// under optimal play, and replayable strategies for both sides. Also houses
// an independent cop-win test via dismantlability.

#include <memory>
#include <optional>

#include "pursuit/graph.hpp"
#include "pursuit/pursuit_game.hpp"

namespace pursuit {

struct GameSolution {
    int k = 0;
    bool cops_win = false;
    std::optional<std::uint32_t> capture_time;  // rounds, round 0 excluded
    std::shared_ptr<const PursuitSolution> table;

    // Optimal cop placement (sorted); ties resolve to the lexicographically
    // smallest placement.
    const std::vector<int>& opening() const { return table->opening(); }

    // Strategy maps; cops given in any order, targets aligned to that order.
    std::vector<int> cop_strategy(const std::vector<int>& cops, int robber) const {
        return table->cop_move(cops, robber);
    }
    int robber_strategy(const std::vector<int>& cops, int robber) const {
        return table->robber_move(cops, robber);
    }
    int robber_best_start(const std::vector<int>& cops) const {
        return table->robber_best_start(cops);
    }
    std::uint32_t value(const std::vector<int>& cops, int robber, bool cop_turn) const {
        return table->value(cops, robber, cop_turn);
    }
};

inline GameSolution solve_k_cop_game(const Graph& g, int k,
                                     std::uint64_t state_budget = kDefaultStateBudget) {
    if (!is_connected(g)) throw InvalidInput("game solver requires a connected graph");
    if (k < 1) throw InvalidInput("need at least one cop");
    GameSolution sol;
    sol.k = k;
    sol.table = std::make_shared<PursuitSolution>(solve_pursuit(identity_arena(g), k, state_budget));
    sol.cops_win = sol.table->cops_win();
    if (sol.cops_win) sol.capture_time = sol.table->capture_rounds();
    return sol;
}

struct CopNumberResult {
    int cop_number = 0;
    GameSolution solution;
};

// Smallest k <= k_max with a cop win.
inline CopNumberResult cop_number(const Graph& g, int k_max = 6,
                                  std::uint64_t state_budget = kDefaultStateBudget) {
    for (int k = 1; k <= k_max; ++k) {
        GameSolution sol = solve_k_cop_game(g, k, state_budget);
        if (sol.cops_win) return {k, std::move(sol)};
    }
    throw BoundNotFound("no winning cop count found up to k_max=" + std::to_string(k_max));
}

struct DismantleResult {
    bool cop_win = false;
    std::vector<int> order;  // deleted vertices, in deletion order
};

// Literature oracle, independent of the game solver: repeatedly delete a
// vertex whose closed neighbourhood is contained in another's; the graph is
// cop-win iff it reduces to a single vertex.
inline DismantleResult is_copwin_dismantlable(const Graph& g) {
    if (!is_connected(g)) throw InvalidInput("dismantlability check requires a connected graph");
    const int n = g.vertex_count();
    std::vector<bool> alive(n, true);
    DismantleResult res;
    int remaining = n;

    auto closed_contained = [&](int u, int v) {
        // N[u] subseteq N[v] among alive vertices
        if (!g.adjacent_or_equal(u, v)) return false;  // v must dominate u itself
        for (int w : g.neighbors(u))
            if (alive[w] && w != v && !g.adjacent_or_equal(w, v)) return false;
        return true;
    };

    while (remaining > 1) {
        int doomed = -1;
        for (int u = 0; u < n && doomed == -1; ++u) {
            if (!alive[u]) continue;
            for (int v = 0; v < n; ++v) {
                if (v == u || !alive[v]) continue;
                if (closed_contained(u, v)) {
                    doomed = u;
                    break;
                }
            }
        }
        if (doomed == -1) {
            res.cop_win = false;
            return res;
        }
        alive[doomed] = false;
        res.order.push_back(doomed);
        --remaining;
    }
    res.cop_win = true;
    return res;
}

}  // namespace pursuit
