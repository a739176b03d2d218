#pragma once

// Retract covers and the bounds they induce on the cop number.
//
// For a target subgraph H the candidate pool collects retracts of the host
// with solved guard certificates: isometric shortest paths between target
// vertices, maximal cliques meeting the target, the target itself when it
// retracts, and (on tiny hosts) every connected induced subgraph that
// retracts. rcc is then a minimum-weight set cover of H's vertices, weight =
// guard count. Values computed over a partial pool are still sound upper
// bounds and are flagged as pool-relative.

#include <map>
#include <optional>

#include "pursuit/chordal.hpp"
#include "pursuit/game_solver.hpp"
#include "pursuit/guard.hpp"
#include "pursuit/retraction.hpp"
#include "pursuit/tree_decomposition.hpp"
#include "pursuit/treewidth.hpp"

namespace pursuit {

struct PoolLimits {
    int max_entries = 512;
    int max_path_length = 64;  // candidate paths with more edges are skipped
    // hosts with at most this many vertices get every connected induced
    // subgraph as a candidate, which makes exact rcc pool-complete there
    int exhaustive_below = 8;
    int guard_k_max = 4;
    std::uint64_t retraction_nodes = 200'000;  // per-candidate search budget
    std::uint64_t state_budget = kDefaultStateBudget;
    std::vector<VertexSet> user_supports;
};

struct CandidatePool {
    std::vector<GuardCertificate> entries;
    bool truncated = false;  // entry limit hit or a candidate was skipped
    bool complete = false;   // exhaustive enumeration covered the whole host
};

// Guard certificates are expensive enough to share between the pools of
// different bags of the same graph; keyed by image support.
class GuardCertCache {
public:
    const std::optional<GuardCertificate>* find(const std::vector<int>& support) const {
        auto it = cache_.find(support);
        return it == cache_.end() ? nullptr : &it->second;
    }
    void put(const std::vector<int>& support, std::optional<GuardCertificate> cert) {
        cache_.emplace(support, std::move(cert));
    }

private:
    std::map<std::vector<int>, std::optional<GuardCertificate>> cache_;
};

namespace detail {

// Canonical shortest path using a precomputed distance matrix: always step
// to the lowest-id neighbour closer to the goal.
inline std::vector<int> canonical_path(const Graph& g, const std::vector<std::vector<int>>& dist,
                                       int u, int v) {
    std::vector<int> path{u};
    int cur = u;
    while (cur != v) {
        for (int w : g.neighbors(cur))
            if (dist[w][v] == dist[cur][v] - 1) {
                cur = w;
                break;
            }
        path.push_back(cur);
    }
    return path;
}

inline bool connected_support(const Graph& g, const std::vector<int>& support) {
    if (support.empty()) return false;
    std::vector<int> stack{support[0]};
    VertexSet in{std::vector<int>(support)};
    std::vector<bool> mark(g.vertex_count(), false);
    mark[support[0]] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u))
            if (in.contains(w) && !mark[w]) {
                mark[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == support.size();
}

}  // namespace detail

inline CandidatePool candidate_retracts(const Graph& g, const VertexSet& target,
                                        const PoolLimits& limits = {},
                                        GuardCertCache* cache = nullptr) {
    CandidatePool pool;
    if (target.empty()) {
        pool.complete = true;  // nothing to cover
        return pool;
    }
    GuardCertCache local_cache;
    if (!cache) cache = &local_cache;
    std::vector<std::vector<int>> seen_supports;
    bool resource_skipped = false;

    auto add = [&](const std::vector<int>& support, auto&& make_retraction) {
        if (static_cast<int>(pool.entries.size()) >= limits.max_entries) {
            pool.truncated = true;
            return;
        }
        std::vector<int> key = support;
        std::sort(key.begin(), key.end());
        if (std::binary_search(seen_supports.begin(), seen_supports.end(), key)) return;
        seen_supports.insert(
            std::lower_bound(seen_supports.begin(), seen_supports.end(), key), key);
        if (const auto* hit = cache->find(key)) {
            if (hit->has_value()) pool.entries.push_back(**hit);
            return;
        }
        std::optional<GuardCertificate> cert;
        try {
            if (auto r = make_retraction()) {
                int k_cap = std::max(limits.guard_k_max, 1);
                cert = guard_number(g, *r, k_cap, limits.state_budget);
            }
        } catch (const ResourceExhausted&) {
            pool.truncated = true;  // candidate skipped: pool may be missing entries
            resource_skipped = true;
            return;  // do not cache a budget failure as a proven absence
        } catch (const BoundNotFound&) {
            pool.truncated = true;  // guard cap too low for this retract
            return;
        }
        cache->put(key, cert);
        if (cert) pool.entries.push_back(*cert);
    };

    // the target itself, as an isometric path when it is one
    if (auto order = induced_path_order(g, target)) {
        if (is_isometric_path(g, *order))
            add(target.ids(), [&]() -> std::optional<Retraction> {
                return retraction_onto_isometric_path(g, *order);
            });
    }
    // the target itself, via general search
    RetractionSearchLimits search_limits{limits.retraction_nodes};
    add(target.ids(), [&]() { return find_retraction(g, target, search_limits); });

    // one canonical isometric shortest path per ordered pair of target vertices
    auto dist = distances(g);
    for (int u : target)
        for (int v : target) {
            if (dist[u][v] == kUnreachable) continue;
            if (dist[u][v] > limits.max_path_length) {
                pool.truncated = true;
                continue;
            }
            auto path = detail::canonical_path(g, dist, u, v);
            add(path, [&]() -> std::optional<Retraction> {
                return retraction_onto_isometric_path(g, path);
            });
        }

    // maximal cliques of the host meeting the target
    for (const auto& clique : maximal_cliques(g)) {
        if (clique.intersect(target).empty()) continue;
        add(clique.ids(),
            [&]() -> std::optional<Retraction> { return retraction_onto_clique(g, clique); });
    }

    // user-supplied supports
    for (const auto& s : limits.user_supports)
        add(s.ids(), [&]() { return find_retraction(g, s, search_limits); });

    // exhaustive mode on tiny hosts: every connected induced subgraph
    const int n = g.vertex_count();
    if (n <= limits.exhaustive_below && n <= 20) {
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> support;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) support.push_back(v);
            if (!detail::connected_support(g, support)) continue;
            add(support, [&]() {
                VertexSet s{std::vector<int>(support)};
                return find_retraction(g, s, search_limits);
            });
        }
        pool.complete = !pool.truncated;
    }
    if (pool.entries.empty() && resource_skipped)
        throw ResourceExhausted("candidate pool empty: every guard solve exceeded the budget");
    return pool;
}

struct RetractCover {
    VertexSet target;
    std::vector<GuardCertificate> entries;
    int total_guards = 0;
};

struct RccResult {
    int value = 0;
    RetractCover cover;
    bool exact_over_pool = false;
    bool pool_complete = false;
};

enum class RccMode { exact, greedy };

// Minimum-weight cover of the target's vertices by pool entries, weight =
// guard count. Exact mode runs a bitmask DP over target vertices; greedy is
// the classic largest-new-coverage heuristic with deterministic tie-breaks.
inline RccResult rcc(const Graph& g, const VertexSet& target, const CandidatePool& pool,
                     RccMode mode = RccMode::exact) {
    (void)g;
    RccResult res;
    res.cover.target = target;
    res.pool_complete = pool.complete;
    if (target.empty()) {
        res.exact_over_pool = !pool.truncated;
        return res;
    }

    const int h = target.size();
    std::vector<std::uint32_t> masks(pool.entries.size(), 0);
    std::uint32_t full = h == 32 ? ~0u : (1u << h) - 1, reachable = 0;
    for (std::size_t e = 0; e < pool.entries.size(); ++e) {
        for (int i = 0; i < h; ++i)
            if (pool.entries[e].retraction.image.contains(target[i])) masks[e] |= 1u << i;
        reachable |= masks[e];
    }
    if (reachable != full) {
        std::string missing;
        for (int i = 0; i < h; ++i)
            if (!(reachable & (1u << i))) missing += " " + std::to_string(target[i]);
        throw UncoverableError("pool cannot cover target vertices:" + missing);
    }

    std::vector<std::size_t> picked;
    if (mode == RccMode::exact) {
        if (h > 22) throw ResourceExhausted("target too large for exact set cover: " +
                                            std::to_string(h) + " vertices");
        const std::uint32_t states = full + 1;
        constexpr int kInf = 1 << 28;
        std::vector<int> dp(states, kInf);
        std::vector<std::pair<std::uint32_t, std::size_t>> parent(states, {0, SIZE_MAX});
        dp[0] = 0;
        for (std::uint32_t mask = 0; mask < states; ++mask) {
            if (dp[mask] == kInf || mask == full) continue;
            int lowest = std::countr_zero(~mask & full);
            for (std::size_t e = 0; e < masks.size(); ++e) {
                if (!(masks[e] & (1u << lowest))) continue;
                std::uint32_t next = mask | masks[e];
                int cost = dp[mask] + pool.entries[e].guards;
                if (cost < dp[next]) {
                    dp[next] = cost;
                    parent[next] = {mask, e};
                }
            }
        }
        for (std::uint32_t at = full; at != 0;) {
            picked.push_back(parent[at].second);
            at = parent[at].first;
        }
        std::reverse(picked.begin(), picked.end());
        res.exact_over_pool = !pool.truncated;
    } else {
        std::uint32_t covered = 0;
        while (covered != full) {
            std::size_t best = SIZE_MAX;
            int best_new = -1, best_guards = 0, best_low = 0;
            for (std::size_t e = 0; e < masks.size(); ++e) {
                int fresh = std::popcount(masks[e] & ~covered);
                if (fresh == 0) continue;
                int low = pool.entries[e].retraction.image[0];
                if (best == SIZE_MAX || fresh > best_new ||
                    (fresh == best_new && pool.entries[e].guards < best_guards) ||
                    (fresh == best_new && pool.entries[e].guards == best_guards &&
                     low < best_low)) {
                    best = e;
                    best_new = fresh;
                    best_guards = pool.entries[e].guards;
                    best_low = low;
                }
            }
            picked.push_back(best);
            covered |= masks[best];
        }
        res.exact_over_pool = false;
    }

    for (std::size_t e : picked) {
        res.cover.entries.push_back(pool.entries[e]);
        res.cover.total_guards += pool.entries[e].guards;
    }
    res.value = res.cover.total_guards;
    return res;
}

struct Eq1Bound {
    int value = 0;
    int treewidth = 0;
    bool treewidth_optimal = false;
};

// Integer form of the treewidth bound: floor(tw/2) + 1. With a non-optimal
// treewidth witness the value is still a sound upper bound, just flagged.
inline Eq1Bound eq1_bound(const TreewidthResult& tw) {
    return {tw.width / 2 + 1, tw.width, tw.optimal};
}

struct DecompositionAnalysis {
    std::vector<RccResult> per_bag;
    int max_rcc = 0;
    bool pool_relative = false;  // some bag's pool may be missing retracts
    bool clique_intersections = false;

    int two_team_bound() const { return 2 * max_rcc; }  // strategy: two leap teams
    std::optional<int> relay_bound() const {            // strategy: one team + relay cop
        if (!clique_intersections) return std::nullopt;
        return max_rcc + 1;
    }
};

// Per-bag rcc over one decomposition, shared by the bound evaluators and the
// strategy controllers so both use identical covers.
inline DecompositionAnalysis analyze_decomposition(const Graph& g, const TreeDecomposition& t,
                                                   const PoolLimits& limits = {},
                                                   GuardCertCache* cache = nullptr) {
    auto valid = validate_td(g, t);
    if (!valid.ok) throw InvalidInput("invalid tree decomposition: " + valid.summary());
    GuardCertCache local;
    if (!cache) cache = &local;
    DecompositionAnalysis res;
    for (const auto& bag : t.bags) {
        auto pool = candidate_retracts(g, bag, limits, cache);
        auto r = bag.size() <= 22 ? rcc(g, bag, pool, RccMode::exact)
                                  : rcc(g, bag, pool, RccMode::greedy);
        res.max_rcc = std::max(res.max_rcc, r.value);
        // an rcc of 1 is globally minimal, pool completeness aside
        res.pool_relative |= !(r.pool_complete || r.value <= 1);
        res.per_bag.push_back(std::move(r));
    }
    res.clique_intersections = pairwise_clique_intersections(g, t);
    return res;
}

struct BagBound {
    int value = 0;
    DecompositionAnalysis analysis;
};

// c(G) <= 2 * max-bag rcc, for any valid tree decomposition.
inline BagBound theorem1_bound(const Graph& g, const TreeDecomposition& t,
                               const PoolLimits& limits = {}, GuardCertCache* cache = nullptr) {
    BagBound b;
    b.analysis = analyze_decomposition(g, t, limits, cache);
    b.value = b.analysis.two_team_bound();
    return b;
}

struct CopWinCertificate {
    TreeDecomposition clique_tree;
};

// A clique-bag decomposition certifies cop number 1.
inline std::optional<CopWinCertificate> theorem_i_bound(const Graph& g) {
    auto ct = clique_tree(g);
    if (!ct) return std::nullopt;
    return CopWinCertificate{std::move(*ct)};
}

// c(G) <= max-bag rcc + 1 when all bag intersections are cliques.
inline std::optional<BagBound> theorem_main2_bound(const Graph& g, const TreeDecomposition& t,
                                                   const PoolLimits& limits = {},
                                                   GuardCertCache* cache = nullptr) {
    BagBound b;
    b.analysis = analyze_decomposition(g, t, limits, cache);
    if (!b.analysis.clique_intersections) return std::nullopt;
    b.value = *b.analysis.relay_bound();
    return b;
}

struct NamedDecomposition {
    std::string id;
    TreeDecomposition td;
};

struct BoundReportOptions {
    std::uint64_t state_budget = kDefaultStateBudget;
    int k_max = 6;
    PoolLimits pool;
    bool compute_exact = true;
    int treewidth_exact_limit = 14;
};

struct DecompositionReport {
    std::string id;
    TreeDecomposition td;
    DecompositionAnalysis analysis;
    int two_team_value = 0;
    std::optional<int> relay_value;
};

struct BoundReport {
    int n = 0, m = 0;

    std::optional<int> exact_cop_number;
    std::optional<std::uint32_t> capture_time;
    std::string exact_note;  // reason when absent
    std::optional<GameSolution> exact_solution;

    std::optional<Eq1Bound> eq1;
    std::string eq1_note;

    std::vector<DecompositionReport> decompositions;
    std::optional<int> two_team_best;  // min over decompositions
    std::string two_team_best_id;
    bool two_team_pool_relative = false;
    std::optional<int> relay_best;
    std::string relay_best_id;
    bool clique_bags_copwin = false;
    std::string clique_tree_id;

    bool soundness_ok = true;
    std::vector<std::string> soundness_violations;
    std::vector<std::string> notes;  // skipped decompositions etc.
};

// Evaluates every bound over the supplied decompositions, solves the exact
// game when the budget allows, and cross-checks exact <= bound for every
// bound present.
inline BoundReport best_bound_report(const Graph& g,
                                     const std::vector<NamedDecomposition>& decomps,
                                     const BoundReportOptions& options = {}) {
    BoundReport report;
    report.n = g.vertex_count();
    report.m = g.edge_count();

    try {
        auto tw = treewidth_exact(g, options.treewidth_exact_limit);
        report.eq1 = eq1_bound(tw);
        if (!tw.optimal)
            report.eq1_note = "treewidth is a greedy upper bound; eq1 value remains sound";
    } catch (const Error& e) {
        report.eq1_note = e.what();
    }

    GuardCertCache cache;
    for (const auto& nd : decomps) {
        DecompositionReport dr;
        dr.id = nd.id;
        dr.td = nd.td;
        try {
            dr.analysis = analyze_decomposition(g, nd.td, options.pool, &cache);
        } catch (const InvalidInput&) {
            throw;  // a broken decomposition is a caller error, not a budget issue
        } catch (const Error& e) {
            report.notes.push_back("decomposition " + nd.id + " skipped: " + e.what());
            continue;
        }
        dr.two_team_value = dr.analysis.two_team_bound();
        dr.relay_value = dr.analysis.relay_bound();
        if (!report.two_team_best || dr.two_team_value < *report.two_team_best) {
            report.two_team_best = dr.two_team_value;
            report.two_team_best_id = dr.id;
            report.two_team_pool_relative = dr.analysis.pool_relative;
        }
        if (dr.relay_value && (!report.relay_best || *dr.relay_value < *report.relay_best)) {
            report.relay_best = *dr.relay_value;
            report.relay_best_id = dr.id;
        }
        report.decompositions.push_back(std::move(dr));
    }

    if (auto copwin = theorem_i_bound(g)) {
        report.clique_bags_copwin = true;
        report.clique_tree_id = "clique-tree";
        bool present = false;
        for (const auto& dr : report.decompositions) present |= dr.id == "clique-tree";
        if (!present) {
            DecompositionReport dr;
            dr.id = "clique-tree";
            dr.td = copwin->clique_tree;
            dr.analysis = analyze_decomposition(g, dr.td, options.pool, &cache);
            dr.two_team_value = dr.analysis.two_team_bound();
            dr.relay_value = dr.analysis.relay_bound();
            report.decompositions.push_back(std::move(dr));
        }
    }

    if (options.compute_exact) {
        int k_cap = options.k_max;
        if (report.two_team_best) k_cap = std::min(k_cap, *report.two_team_best);
        if (report.relay_best) k_cap = std::min(k_cap, *report.relay_best);
        if (report.eq1) k_cap = std::min(k_cap, report.eq1->value);
        try {
            auto res = cop_number(g, std::max(1, k_cap), options.state_budget);
            report.exact_cop_number = res.cop_number;
            report.capture_time = res.solution.capture_time;
            report.exact_solution = std::move(res.solution);
        } catch (const Error& e) {
            report.exact_note = e.what();
        }
    } else {
        report.exact_note = "exact solve disabled";
    }

    if (report.exact_cop_number) {
        int c = *report.exact_cop_number;
        auto check = [&](bool cond, const std::string& what) {
            if (!cond) {
                report.soundness_ok = false;
                report.soundness_violations.push_back(what);
            }
        };
        if (report.eq1) check(c <= report.eq1->value, "exact exceeds the treewidth bound");
        if (report.two_team_best)
            check(c <= *report.two_team_best, "exact exceeds the two-team bound");
        if (report.relay_best) check(c <= *report.relay_best, "exact exceeds the relay bound");
        if (report.clique_bags_copwin) check(c == 1, "clique-bag certificate but exact != 1");
    }
    return report;
}

}  // namespace pursuit
