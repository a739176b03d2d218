#include <catch2/catch_amalgamated.hpp>

#include "pursuit/cover_bounds.hpp"
#include "pursuit/generators.hpp"

#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace pursuit;

namespace {
VertexSet all_vertices(const Graph& g) {
    std::vector<int> ids(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) ids[v] = v;
    return VertexSet(std::move(ids));
}
}  // namespace

TEST_CASE("pool for a single vertex target") {
    auto g = make_grid(3, 3);
    auto pool = candidate_retracts(g, VertexSet{{4}});
    bool has_singleton = false;
    for (const auto& e : pool.entries)
        if (e.retraction.image == VertexSet{{4}}) {
            has_singleton = true;
            CHECK(e.guards == 1);
        }
    CHECK(has_singleton);
}

TEST_CASE("pool contains a grid bag as a single isometric path") {
    auto grid = make_grid(4, 4);
    auto t = grid_path_decomposition(4);
    auto pool = candidate_retracts(grid, t.bags[5]);
    bool has_bag = false;
    for (const auto& e : pool.entries)
        if (e.retraction.image == t.bags[5]) {
            has_bag = true;
            CHECK(e.guards == 1);
        }
    CHECK(has_bag);
}

TEST_CASE("pool contains the whole clique for K_n") {
    auto kn = make_clique(5);
    auto pool = candidate_retracts(kn, all_vertices(kn));
    bool has_kn = false;
    for (const auto& e : pool.entries)
        if (e.retraction.image.size() == 5) {
            has_kn = true;
            CHECK(e.guards == 1);
        }
    CHECK(has_kn);
}

TEST_CASE("rcc of a grid bag is 1") {
    auto grid = make_grid(4, 4);
    auto t = grid_path_decomposition(4);
    for (int b : {0, 5, 11}) {
        auto pool = candidate_retracts(grid, t.bags[b]);
        auto r = rcc(grid, t.bags[b], pool);
        CHECK(r.value == 1);
    }
}

TEST_CASE("rcc of a clique is 1") {
    auto kn = make_clique(6);
    auto pool = candidate_retracts(kn, all_vertices(kn));
    CHECK(rcc(kn, all_vertices(kn), pool).value == 1);
}

TEST_CASE("rcc of C4 is 2, matching the brute-force oracle") {
    auto c4 = make_cycle(4);
    auto target = all_vertices(c4);
    auto pool = candidate_retracts(c4, target);
    auto r = rcc(c4, target, pool);
    CHECK(r.value == 2);
    CHECK(r.exact_over_pool);
    CHECK(r.pool_complete);
    CHECK(testsupport::rcc_bruteforce(c4, target) == 2);
}

TEST_CASE("exact rcc equals the brute-force oracle on assorted tiny graphs") {
    std::vector<Graph> graphs{make_cycle(5),        make_path(5),
                              make_clique(4),       testsupport::glued_c4(),
                              make_k_tree(2, 6, 3), make_random_connected(6, 0.4, 42)};
    // a star: the whole graph is the only weight-1 cover
    Graph star(5);
    for (int leaf = 1; leaf < 5; ++leaf) star.add_edge(0, leaf);
    graphs.push_back(star);
    for (const auto& g : graphs) {
        auto target = all_vertices(g);
        auto pool = candidate_retracts(g, target);
        auto r = rcc(g, target, pool);
        INFO("n=" << g.vertex_count() << " m=" << g.edge_count());
        CHECK(r.value == testsupport::rcc_bruteforce(g, target));
        CHECK(r.exact_over_pool);
    }
}

TEST_CASE("rcc covers really cover and report their weight") {
    auto g = testsupport::glued_c4();
    auto target = all_vertices(g);
    auto pool = candidate_retracts(g, target);
    auto r = rcc(g, target, pool);
    VertexSet covered;
    for (const auto& e : r.cover.entries) covered = covered.unite(e.retraction.image);
    CHECK(target.is_subset_of(covered));
    int total = 0;
    for (const auto& e : r.cover.entries) total += e.guards;
    CHECK(total == r.value);
    CHECK(r.value >= 1);
}

TEST_CASE("enlarging the pool never increases rcc") {
    for (std::uint64_t seed = 200; seed < 206; ++seed) {
        auto g = make_random_connected(6, 0.35, seed);
        auto target = all_vertices(g);
        PoolLimits narrow;
        narrow.exhaustive_below = 0;  // paths and cliques only
        auto small_pool = candidate_retracts(g, target, narrow);
        auto big_pool = candidate_retracts(g, target);
        CHECK(rcc(g, target, big_pool).value <= rcc(g, target, small_pool).value);
    }
}

TEST_CASE("greedy rcc is a sound upper bound") {
    for (std::uint64_t seed = 210; seed < 216; ++seed) {
        auto g = make_random_connected(7, 0.35, seed);
        auto target = all_vertices(g);
        auto pool = candidate_retracts(g, target);
        CHECK(rcc(g, target, pool, RccMode::greedy).value >= rcc(g, target, pool).value);
    }
}

TEST_CASE("uncoverable pools raise with the missing vertices") {
    auto g = make_path(4);
    CandidatePool empty_pool;
    CHECK_THROWS_AS(rcc(g, all_vertices(g), empty_pool), UncoverableError);
}

TEST_CASE("user-supplied supports join the pool through retraction search") {
    auto c6 = make_cycle(6);
    PoolLimits limits;
    limits.exhaustive_below = 0;
    limits.user_supports.push_back(VertexSet{{0, 1, 2, 3}});  // an isometric path
    auto pool = candidate_retracts(c6, VertexSet{{0, 3}}, limits);
    bool found = false;
    for (const auto& e : pool.entries) found |= e.retraction.image == VertexSet{{0, 1, 2, 3}};
    CHECK(found);
    // a support that is no retract is searched and rejected
    limits.user_supports = {VertexSet{{0, 1, 3, 4}}};
    auto pool2 = candidate_retracts(c6, VertexSet{{0, 3}}, limits);
    for (const auto& e : pool2.entries) CHECK_FALSE(e.retraction.image == VertexSet{{0, 1, 3, 4}});
}

TEST_CASE("eq1 bound values") {
    CHECK(eq1_bound(treewidth_exact(make_clique(6))).value == 3);
    CHECK(eq1_bound(treewidth_exact(make_grid(4, 4))).value == 3);
    CHECK(eq1_bound(treewidth_exact(make_cycle(7))).value == 2);  // outerplanar
}

TEST_CASE("two-team bound on grids is 2") {
    for (int n : {3, 4}) {
        auto grid = make_grid(n, n);
        auto b = theorem1_bound(grid, grid_path_decomposition(n));
        CHECK(b.value == 2);
        for (const auto& r : b.analysis.per_bag) CHECK(r.value == 1);
    }
}

TEST_CASE("two-team bound via a single clique bag is 2") {
    auto kn = make_clique(5);
    TreeDecomposition t;
    t.bags.push_back(all_vertices(kn));
    CHECK(theorem1_bound(kn, t).value == 2);
}

TEST_CASE("two-team bound over a clique tree of a k-tree is 2") {
    auto kt = make_k_tree(2, 9, 4);
    auto ct = clique_tree(kt);
    REQUIRE(ct.has_value());
    CHECK(theorem1_bound(kt, *ct).value == 2);
}

TEST_CASE("clique-bag certificate") {
    CHECK(theorem_i_bound(make_k_tree(3, 10, 2)).has_value());
    CHECK(theorem_i_bound(make_clique(7)).has_value());
    CHECK_FALSE(theorem_i_bound(make_cycle(5)).has_value());
}

TEST_CASE("relay bound on the glued squares is 3") {
    auto g = testsupport::glued_c4();
    TreeDecomposition t;
    t.bags.emplace_back(std::vector<int>{0, 1, 2, 3});
    t.bags.emplace_back(std::vector<int>{0, 1, 4, 5});
    t.tree_edges = {{0, 1}};
    auto relay = theorem_main2_bound(g, t);
    REQUIRE(relay.has_value());
    CHECK(relay->value == 3);
    CHECK(relay->analysis.max_rcc == 2);
    // same instance, the two-team strategy needs 4
    CHECK(theorem1_bound(g, t).value == 4);
}

TEST_CASE("relay bound on a clique tree is 2") {
    auto kt = make_k_tree(2, 8, 9);
    auto ct = clique_tree(kt);
    REQUIRE(ct.has_value());
    auto relay = theorem_main2_bound(kt, *ct);
    REQUIRE(relay.has_value());
    CHECK(relay->value == 2);
}

TEST_CASE("relay bound is absent for the grid decomposition") {
    auto grid = make_grid(3, 3);
    CHECK_FALSE(theorem_main2_bound(grid, grid_path_decomposition(3)).has_value());
}

TEST_CASE("bound shape invariants") {
    for (std::uint64_t seed = 230; seed < 236; ++seed) {
        auto g = make_random_connected(7, 0.4, seed);
        auto tw = treewidth_exact(g);
        auto b = theorem1_bound(g, tw.witness);
        CHECK(b.value % 2 == 0);
        auto relay = theorem_main2_bound(g, tw.witness);
        if (relay) CHECK(relay->value >= 2);
    }
}

TEST_CASE("bound report on the 4x4 grid") {
    auto grid = make_grid(4, 4);
    std::vector<NamedDecomposition> decomps{
        {"tw-witness", treewidth_exact(grid).witness},
        {"grid-paths", grid_path_decomposition(4)},
    };
    auto report = best_bound_report(grid, decomps);
    REQUIRE(report.exact_cop_number.has_value());
    CHECK(*report.exact_cop_number == 2);
    REQUIRE(report.eq1.has_value());
    CHECK(report.eq1->value == 3);
    REQUIRE(report.two_team_best.has_value());
    CHECK(*report.two_team_best == 2);
    CHECK(report.two_team_best_id == "grid-paths");
    CHECK(report.soundness_ok);
}

TEST_CASE("bound report on K5") {
    auto k5 = make_clique(5);
    std::vector<NamedDecomposition> decomps{{"tw-witness", treewidth_exact(k5).witness}};
    auto report = best_bound_report(k5, decomps);
    CHECK(report.exact_cop_number == 1);
    CHECK(report.clique_bags_copwin);
    CHECK(report.eq1->value == 3);  // slack: the treewidth bound is far from tight here
    CHECK(report.two_team_best == 2);
    CHECK(report.soundness_ok);
}

TEST_CASE("bound report on random chordal instances") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        auto kt = make_k_tree(2, 9, 77 + seed);
        auto ct = clique_tree(kt);
        REQUIRE(ct.has_value());
        std::vector<NamedDecomposition> decomps{{"clique-tree", *ct}};
        auto report = best_bound_report(kt, decomps);
        CHECK(report.exact_cop_number == 1);
        CHECK(report.clique_bags_copwin);
        CHECK(report.soundness_ok);
    }
}
