#pragma once

// Exact solver for pursuit games on finite reflexive graphs.
//
// The game: k cops stand on vertices of a "cop arena", the robber on a
// "robber arena". Round 0: cops pick starting vertices, then the robber picks
// his, seeing the cops. Each later round the cops move first (every cop may
// step to a neighbour or pass), then the robber moves. The cops win the
// moment some cop occupies shadow[robber]; with the identity shadow this is
// the classic Cops and Robbers game, with a retraction as shadow it is the
// guarding game on a retract.
//
// Values are computed for every state by a backward breadth-first sweep over
// the bipartite state graph: value = number of rounds (cop moves) to capture
// under optimal play, or infinity when the robber escapes forever. Cop moves
// cost one round; robber replies resolve via a countdown of unlabelled
// successors, so a robber state finalizes at the max of its successor labels.

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "pursuit/errors.hpp"
#include "pursuit/graph.hpp"

namespace pursuit {

constexpr std::uint64_t kDefaultStateBudget = 50'000'000;

// Ranks sorted k-multisets over {0..n-1} in lexicographic order.
class MultisetIndexer {
public:
    MultisetIndexer(int n, int k) : n_(n), k_(k), table_(k + 1, std::vector<std::uint64_t>(n + 1, 0)) {
        // table_[j][m] = #multisets of size j over m symbols = C(m+j-1, j)
        for (int m = 0; m <= n; ++m) table_[0][m] = 1;
        for (int j = 1; j <= k; ++j)
            for (int m = 1; m <= n; ++m) table_[j][m] = table_[j][m - 1] + table_[j - 1][m];
    }

    std::uint64_t count() const { return table_[k_][n_]; }

    std::uint64_t rank(std::span<const int> sorted) const {
        std::uint64_t res = 0;
        int lo = 0, rem = k_;
        for (int x : sorted) {
            // #multisets of size rem over [lo,n) whose minimum is < x
            res += table_[rem][n_ - lo] - table_[rem][n_ - x];
            lo = x;
            --rem;
        }
        return res;
    }

    std::vector<int> unrank(std::uint64_t id) const {
        std::vector<int> out;
        out.reserve(k_);
        int lo = 0;
        for (int rem = k_; rem > 0; --rem) {
            int x = lo;
            while (true) {
                std::uint64_t with_min_x = table_[rem - 1][n_ - x];
                if (id < with_min_x) break;
                id -= with_min_x;
                ++x;
            }
            out.push_back(x);
            lo = x;
        }
        return out;
    }

private:
    int n_, k_;
    std::vector<std::vector<std::uint64_t>> table_;
};

struct PursuitArena {
    std::vector<std::vector<int>> cop_moves;     // closed neighbourhoods, sorted
    std::vector<std::vector<int>> robber_moves;  // closed neighbourhoods, sorted
    std::vector<int> shadow;                     // robber vertex -> cop-arena target

    int cop_vertices() const { return static_cast<int>(cop_moves.size()); }
    int robber_vertices() const { return static_cast<int>(robber_moves.size()); }
};

inline std::vector<std::vector<int>> closed_neighborhoods(const Graph& g) {
    std::vector<std::vector<int>> out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        out[v] = g.neighbors(v);
        out[v].insert(std::lower_bound(out[v].begin(), out[v].end(), v), v);
    }
    return out;
}

inline PursuitArena identity_arena(const Graph& g) {
    PursuitArena a;
    a.cop_moves = closed_neighborhoods(g);
    a.robber_moves = a.cop_moves;
    a.shadow.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) a.shadow[v] = v;
    return a;
}

class PursuitSolution {
public:
    static constexpr std::uint32_t kInfinity = std::numeric_limits<std::uint32_t>::max();

    PursuitSolution(PursuitArena arena, int k)
        : arena_(std::move(arena)),
          k_(k),
          indexer_(arena_.cop_vertices(), k),
          nr_(arena_.robber_vertices()) {}

    int k() const { return k_; }
    const PursuitArena& arena() const { return arena_; }
    const MultisetIndexer& indexer() const { return indexer_; }
    std::uint64_t state_count() const { return 2 * indexer_.count() * nr_; }

    bool cops_win() const { return best_opening_value_ != kInfinity; }
    std::uint32_t capture_rounds() const { return best_opening_value_; }
    const std::vector<int>& opening() const { return opening_; }

    bool captured(std::span<const int> sorted_cops, int robber) const {
        int target = arena_.shadow[robber];
        return std::binary_search(sorted_cops.begin(), sorted_cops.end(), target);
    }

    // Optimal remaining rounds from a state; cops about to move when
    // cop_turn, robber otherwise. Cop positions may be given in any order.
    std::uint32_t value(std::span<const int> cops, int robber, bool cop_turn) const {
        std::vector<int> c(cops.begin(), cops.end());
        std::sort(c.begin(), c.end());
        if (captured(c, robber)) return 0;
        std::uint64_t idx = indexer_.rank(c) * nr_ + robber;
        return cop_turn ? val_cop_[idx] : val_rob_[idx];
    }

    // Per-cop targets realizing the value-minimizing move multiset, aligned
    // with the order of `cops`. Ties break toward the lexicographically
    // smallest target multiset.
    std::vector<int> cop_move(std::span<const int> cops, int robber) const {
        std::vector<int> sorted(cops.begin(), cops.end());
        std::sort(sorted.begin(), sorted.end());
        std::uint64_t best_rank = indexer_.rank(sorted);
        std::uint32_t best = robber_state_value(best_rank, robber);
        bool found = false;
        for_each_move_rank(sorted, [&](std::uint64_t r) {
            std::uint32_t v = robber_state_value(r, robber);
            if (!found || v < best || (v == best && r < best_rank)) {
                best = v;
                best_rank = r;
                found = true;
            }
        });
        std::vector<int> targets = indexer_.unrank(best_rank);
        return realize_move(std::vector<int>(cops.begin(), cops.end()), targets);
    }

    // Value-maximizing robber reply (prefers escape, then max delay, then
    // lowest vertex id). A move onto an occupied shadow counts as value 0.
    int robber_move(std::span<const int> cops, int robber) const {
        std::vector<int> sorted(cops.begin(), cops.end());
        std::sort(sorted.begin(), sorted.end());
        std::uint64_t rank = indexer_.rank(sorted);
        int best_v = -1;
        std::uint32_t best = 0;
        for (int nxt : arena_.robber_moves[robber]) {
            std::uint32_t v = captured(sorted, nxt) ? 0 : val_cop_[rank * nr_ + nxt];
            if (best_v == -1 || v > best) {
                best = v;
                best_v = nxt;
            }
        }
        return best_v;
    }

    // Worst-case value over robber starts for a given cop placement.
    std::uint32_t placement_value(std::span<const int> cops) const {
        std::vector<int> sorted(cops.begin(), cops.end());
        std::sort(sorted.begin(), sorted.end());
        std::uint64_t rank = indexer_.rank(sorted);
        std::uint32_t worst = 0;
        for (int r = 0; r < nr_; ++r) {
            std::uint32_t v = captured(sorted, r) ? 0 : val_cop_[rank * nr_ + r];
            if (v > worst) worst = v;
            if (worst == kInfinity) break;
        }
        return worst;
    }

    // Robber start maximizing the game value against a given placement.
    int robber_best_start(std::span<const int> cops) const {
        std::vector<int> sorted(cops.begin(), cops.end());
        std::sort(sorted.begin(), sorted.end());
        std::uint64_t rank = indexer_.rank(sorted);
        int best_r = 0;
        std::uint32_t best = 0;
        bool found = false;
        for (int r = 0; r < nr_; ++r) {
            std::uint32_t v = captured(sorted, r) ? 0 : val_cop_[rank * nr_ + r];
            if (!found || v > best) {
                best = v;
                best_r = r;
                found = true;
            }
        }
        return best_r;
    }

    // Installs externally constructed value tables (solution cache loads).
    void adopt_tables(std::vector<std::uint32_t> val_cop, std::vector<std::uint32_t> val_rob) {
        if (val_cop.size() != indexer_.count() * nr_ || val_rob.size() != val_cop.size())
            throw InvalidInput("value tables have the wrong size");
        val_cop_ = std::move(val_cop);
        val_rob_ = std::move(val_rob);
        compute_opening();
    }

    // Enumerates distinct sorted move multisets reachable in one cop turn.
    template <typename Fn>
    void for_each_move_rank(std::span<const int> sorted_cops, Fn&& fn) const {
        std::vector<std::uint64_t> ranks;
        std::vector<int> choice(k_, 0), targets(k_);
        while (true) {
            for (int i = 0; i < k_; ++i) targets[i] = arena_.cop_moves[sorted_cops[i]][choice[i]];
            std::vector<int> t = targets;
            std::sort(t.begin(), t.end());
            ranks.push_back(indexer_.rank(t));
            int pos = k_ - 1;
            while (pos >= 0) {
                if (++choice[pos] < static_cast<int>(arena_.cop_moves[sorted_cops[pos]].size())) break;
                choice[pos--] = 0;
            }
            if (pos < 0) break;
        }
        std::sort(ranks.begin(), ranks.end());
        ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
        for (auto r : ranks) fn(r);
    }

    // Assigns each cop a target so the targets form exactly `targets_sorted`
    // and every individual move is legal. First match in sorted order.
    std::vector<int> realize_move(const std::vector<int>& cops, const std::vector<int>& targets_sorted) const {
        int k = static_cast<int>(cops.size());
        std::vector<int> assign(k, -1);
        std::vector<bool> used(k, false);
        std::function<bool(int)> place = [&](int i) {
            if (i == k) return true;
            for (int j = 0; j < k; ++j) {
                if (used[j]) continue;
                if (j > 0 && targets_sorted[j] == targets_sorted[j - 1] && !used[j - 1]) continue;
                const auto& legal = arena_.cop_moves[cops[i]];
                if (!std::binary_search(legal.begin(), legal.end(), targets_sorted[j])) continue;
                used[j] = true;
                assign[i] = targets_sorted[j];
                if (place(i + 1)) return true;
                used[j] = false;
            }
            return false;
        };
        if (!place(0)) throw InternalError("move multiset cannot be realized by the current cops");
        return assign;
    }

private:
    friend PursuitSolution solve_pursuit(PursuitArena arena, int k, std::uint64_t state_budget);

    std::uint32_t robber_state_value(std::uint64_t rank, int robber) const {
        // value of the robber-to-move state reached after a cop move
        auto cops = indexer_.unrank(rank);
        if (captured(cops, robber)) return 0;
        std::uint32_t v = val_rob_[rank * nr_ + robber];
        return v == kInfinity ? kInfinity : v + 1;
    }

    void compute_opening() {
        const std::uint64_t m = indexer_.count();
        best_opening_value_ = kInfinity;
        opening_ = indexer_.unrank(0);  // placement even when every opening loses
        for (std::uint64_t rank = 0; rank < m; ++rank) {
            auto cops = indexer_.unrank(rank);
            std::uint32_t worst = 0;
            for (int r = 0; r < nr_ && worst != kInfinity; ++r) {
                std::uint32_t v = captured(cops, r) ? 0 : val_cop_[rank * nr_ + r];
                if (v > worst) worst = v;
            }
            if (worst < best_opening_value_) {
                best_opening_value_ = worst;
                opening_ = cops;
            }
        }
    }

    PursuitArena arena_;
    int k_;
    MultisetIndexer indexer_;
    int nr_;
    std::vector<std::uint32_t> val_cop_, val_rob_;
    std::vector<int> opening_;
    std::uint32_t best_opening_value_ = kInfinity;
};

inline PursuitSolution solve_pursuit(PursuitArena arena, int k,
                                     std::uint64_t state_budget = kDefaultStateBudget) {
    if (k < 1) throw InvalidInput("need at least one cop");
    if (arena.cop_vertices() == 0 || arena.robber_vertices() == 0)
        throw InvalidInput("empty arena");

    PursuitSolution sol(std::move(arena), k);
    const PursuitArena& ar = sol.arena_;
    const MultisetIndexer& ix = sol.indexer_;
    const int nr = sol.nr_;
    const std::uint64_t m = ix.count();

    if (2 * m * nr > state_budget)
        throw ResourceExhausted("state space " + std::to_string(2 * m * nr) +
                                " exceeds budget " + std::to_string(state_budget));

    constexpr std::uint32_t INF = PursuitSolution::kInfinity;
    sol.val_cop_.assign(m * nr, INF);
    sol.val_rob_.assign(m * nr, INF);
    std::vector<std::uint32_t> countdown(m * nr, 0);

    // id encodes ((rank*nr + r) << 1) | turn, turn 1 = cop to move
    std::vector<std::vector<std::uint64_t>> buckets(1);
    auto push = [&](std::uint64_t id, std::uint32_t label) {
        if (label >= buckets.size()) buckets.resize(label + 1);
        buckets[label].push_back(id);
    };

    for (std::uint64_t rank = 0; rank < m; ++rank) {
        auto cops = ix.unrank(rank);
        for (int r = 0; r < nr; ++r) {
            std::uint64_t idx = rank * nr + r;
            if (sol.captured(cops, r)) {
                sol.val_cop_[idx] = 0;
                sol.val_rob_[idx] = 0;
                push(idx << 1 | 1, 0);
                push(idx << 1, 0);
            } else {
                countdown[idx] = static_cast<std::uint32_t>(ar.robber_moves[r].size());
            }
        }
    }

    for (std::uint32_t t = 0; t < buckets.size(); ++t) {
        for (std::size_t i = 0; i < buckets[t].size(); ++i) {
            std::uint64_t id = buckets[t][i];
            bool cop_turn = id & 1;
            std::uint64_t idx = id >> 1;
            std::uint64_t rank = idx / nr;
            int r = static_cast<int>(idx % nr);
            auto cops = ix.unrank(rank);

            if (!cop_turn) {
                // robber state labelled t: cop predecessors capture in t+1
                sol.for_each_move_rank(cops, [&](std::uint64_t prev_rank) {
                    std::uint64_t pidx = prev_rank * nr + r;
                    if (sol.val_cop_[pidx] == INF) {
                        sol.val_cop_[pidx] = t + 1;
                        push(pidx << 1 | 1, t + 1);
                    }
                });
            } else {
                // cop state labelled t: robber predecessors finalize at the
                // max successor label, i.e. when their countdown empties
                for (int rp : ar.robber_moves[r]) {
                    std::uint64_t pidx = rank * nr + rp;
                    if (sol.val_rob_[pidx] != INF) continue;
                    if (--countdown[pidx] == 0) {
                        sol.val_rob_[pidx] = t;
                        push(pidx << 1, t);
                    }
                }
            }
        }
    }

    sol.compute_opening();
    return sol;
}

}  // namespace pursuit
