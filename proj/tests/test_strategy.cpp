#include <catch2/catch_amalgamated.hpp>

#include "pursuit/strategy.hpp"

#include "support/corpus.hpp"
#include "support/trace_checks.hpp"

using namespace pursuit;

namespace {

std::vector<RccResult> covers_for(const Graph& g, const TreeDecomposition& td) {
    return analyze_decomposition(g, td).per_bag;
}

TreeDecomposition single_bag_td(const Graph& g) {
    TreeDecomposition t;
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    t.bags.emplace_back(std::move(all));
    return t;
}

}  // namespace

TEST_CASE("leap strategy takes the 4x4 grid with two cops against every policy") {
    auto grid = make_grid(4, 4);
    auto td = grid_path_decomposition(4);
    auto covers = covers_for(grid, td);

    GreedyRobber greedy(grid);
    RandomRobber random(grid, 7);
    OptimalRobber optimal(solve_k_cop_game(grid, 2));
    StationaryRobber stay(grid);
    std::vector<RobberPolicy*> policies{&greedy, &random, &optimal, &stay};

    for (auto* policy : policies) {
        LeapController ctrl(grid, td, covers);
        CHECK(ctrl.cop_count() == 2);
        auto trace = simulate(grid, ctrl, *policy, 500);
        INFO("policy " << policy->name());
        CHECK(trace.outcome == SimulationTrace::Outcome::captured);
        testsupport::check_trace_legal(grid, trace);
        testsupport::check_never_reenter(td, ctrl, trace);
    }
}

TEST_CASE("leap strategy on a single clique bag degenerates to a straight chase") {
    auto k4 = make_clique(4);
    auto td = single_bag_td(k4);
    auto covers = covers_for(k4, td);
    LeapController ctrl(k4, td, covers);
    CHECK(ctrl.cop_count() == 2);
    GreedyRobber greedy(k4);
    auto trace = simulate(k4, ctrl, greedy, 50);
    CHECK(trace.outcome == SimulationTrace::Outcome::captured);
}

TEST_CASE("leap strategy on the path with edge bags uses two cops") {
    for (int n : {8, 9}) {
        auto path = make_path(n);
        auto td = testsupport::path_edge_decomposition(n);
        REQUIRE(validate_td(path, td).ok);
        auto covers = covers_for(path, td);
        for (const auto& r : covers) CHECK(r.value == 1);
        LeapController ctrl(path, td, covers);
        CHECK(ctrl.cop_count() == 2);
        // n-1 edge bags chained: the tree diameter n-2 is odd exactly for odd n
        CHECK(ctrl.two_centre_start() == (n % 2 == 1));
        OptimalRobber optimal(solve_k_cop_game(path, 2));
        auto trace = simulate(path, ctrl, optimal, 200);
        CHECK(trace.outcome == SimulationTrace::Outcome::captured);
        testsupport::check_trace_legal(path, trace);
        testsupport::check_never_reenter(td, ctrl, trace);
    }
}

TEST_CASE("clique-bag strategy captures with one cop on k-trees") {
    for (std::uint64_t seed : {0u, 1u, 2u}) {
        auto kt = make_k_tree(2, 10, seed);
        auto ct = clique_tree(kt);
        REQUIRE(ct.has_value());
        CliqueBagController ctrl(kt, *ct);
        CHECK(ctrl.cop_count() == 1);
        OptimalRobber optimal(solve_k_cop_game(kt, 1));
        auto trace = simulate(kt, ctrl, optimal, 300);
        CHECK(trace.outcome == SimulationTrace::Outcome::captured);
        testsupport::check_trace_legal(kt, trace);
        CHECK(solve_k_cop_game(kt, 1).cops_win);
    }
}

TEST_CASE("clique-bag strategy on a clique captures immediately") {
    auto kn = make_clique(5);
    auto ct = clique_tree(kn);
    REQUIRE(ct.has_value());
    CliqueBagController ctrl(kn, *ct);
    GreedyRobber greedy(kn);
    auto trace = simulate(kn, ctrl, greedy, 10);
    CHECK(trace.outcome == SimulationTrace::Outcome::captured);
    CHECK(trace.capture_round <= 1);
}

TEST_CASE("clique-bag strategy on a tree is the classic chase") {
    Graph tree(7);  // a small caterpillar
    tree.add_edge(0, 1);
    tree.add_edge(1, 2);
    tree.add_edge(2, 3);
    tree.add_edge(1, 4);
    tree.add_edge(4, 5);
    tree.add_edge(2, 6);
    auto ct = clique_tree(tree);
    REQUIRE(ct.has_value());
    for (const auto& bag : ct->bags) CHECK(bag.size() == 2);  // edges
    CliqueBagController ctrl(tree, *ct);
    OptimalRobber optimal(solve_k_cop_game(tree, 1));
    auto trace = simulate(tree, ctrl, optimal, 100);
    CHECK(trace.outcome == SimulationTrace::Outcome::captured);
}

TEST_CASE("clique-bag strategy rejects non-clique bags") {
    auto grid = make_grid(3, 3);
    CHECK_THROWS_AS(CliqueBagController(grid, grid_path_decomposition(3)), ConfigError);
}

TEST_CASE("relay strategy on the glued squares uses three cops") {
    auto g = testsupport::glued_c4();
    TreeDecomposition td;
    td.bags.emplace_back(std::vector<int>{0, 1, 2, 3});
    td.bags.emplace_back(std::vector<int>{0, 1, 4, 5});
    td.tree_edges = {{0, 1}};
    auto covers = covers_for(g, td);

    RelayController ctrl(g, td, covers);
    CHECK(ctrl.cop_count() == 3);  // max-bag rcc 2, plus the relay

    GreedyRobber greedy(g);
    auto trace = simulate(g, ctrl, greedy, 200);
    CHECK(trace.outcome == SimulationTrace::Outcome::captured);
    testsupport::check_trace_legal(g, trace);

    OptimalRobber optimal(solve_k_cop_game(g, 3));
    RelayController ctrl2(g, td, covers);
    trace = simulate(g, ctrl2, optimal, 200);
    CHECK(trace.outcome == SimulationTrace::Outcome::captured);
}

TEST_CASE("relay strategy on a clique tree uses two cops") {
    auto kt = make_k_tree(2, 9, 6);
    auto ct = clique_tree(kt);
    REQUIRE(ct.has_value());
    auto covers = covers_for(kt, *ct);
    RelayController ctrl(kt, *ct, covers);
    CHECK(ctrl.cop_count() == 2);  // m = 1 plus the relay
    GreedyRobber greedy(kt);
    auto trace = simulate(kt, ctrl, greedy, 200);
    CHECK(trace.outcome == SimulationTrace::Outcome::captured);
    testsupport::check_trace_legal(kt, trace);
}

TEST_CASE("relay strategy rejects decompositions without clique intersections") {
    auto grid = make_grid(3, 3);
    auto td = grid_path_decomposition(3);
    auto covers = covers_for(grid, td);
    CHECK_THROWS_AS(RelayController(grid, td, covers), ConfigError);
}

TEST_CASE("an empty bag in the decomposition is harmless") {
    auto p2 = make_path(2);
    TreeDecomposition td;
    td.bags.emplace_back(std::vector<int>{0, 1});
    td.bags.emplace_back(std::vector<int>{});
    td.tree_edges = {{0, 1}};
    REQUIRE(validate_td(p2, td).ok);
    auto covers = analyze_decomposition(p2, td).per_bag;
    CHECK(covers[1].value == 0);
    LeapController ctrl(p2, td, covers);
    GreedyRobber greedy(p2);
    auto trace = simulate(p2, ctrl, greedy, 50);
    CHECK(trace.outcome == SimulationTrace::Outcome::captured);
}

TEST_CASE("a stationary robber is captured quickly") {
    auto grid = make_grid(3, 3);
    auto td = grid_path_decomposition(3);
    auto covers = covers_for(grid, td);
    LeapController ctrl(grid, td, covers);
    StationaryRobber stay(grid);
    auto trace = simulate(grid, ctrl, stay, 200);
    CHECK(trace.outcome == SimulationTrace::Outcome::captured);
    auto measure = measure_guard_transfer(grid, td, covers);
    auto [centres, diameter] = tree_centre_and_diameter(td);
    auto bound = capture_time_bound(measure, diameter);
    CHECK(trace.capture_round <= bound.applicable());
}

TEST_CASE("an undersized optimal team times out on C4") {
    auto c4 = make_cycle(4);
    OptimalController ctrl(c4, solve_k_cop_game(c4, 1));
    GreedyRobber greedy(c4);
    auto trace = simulate(c4, ctrl, greedy, 60);
    CHECK(trace.outcome == SimulationTrace::Outcome::timeout);
}

TEST_CASE("optimal controller matches the solver's capture time") {
    auto grid = make_grid(3, 3);
    auto sol = solve_k_cop_game(grid, 2);
    REQUIRE(sol.cops_win);
    OptimalController ctrl(grid, sol);
    OptimalRobber optimal(sol);
    auto trace = simulate(grid, ctrl, optimal, 200);
    CHECK(trace.outcome == SimulationTrace::Outcome::captured);
    CHECK(trace.capture_round == static_cast<int>(*sol.capture_time));
}

TEST_CASE("guard and transfer measurements") {
    auto k4 = make_clique(4);
    auto td = single_bag_td(k4);
    auto covers = covers_for(k4, td);
    auto m = measure_guard_transfer(k4, td, covers);
    CHECK(m.transfer_rounds == 0);  // no bag pair at distance >= 1
    CHECK(m.guard_rounds == 1);     // enter the clique, then shadow

    auto grid = make_grid(3, 3);
    auto gtd = grid_path_decomposition(3);
    auto gcovers = covers_for(grid, gtd);
    auto gm = measure_guard_transfer(grid, gtd, gcovers);
    CHECK(gm.guard_rounds >= 1);
    CHECK(gm.transfer_rounds >= 1);
}

TEST_CASE("capture time bound arithmetic") {
    GuardTransferMeasure m;
    m.guard_rounds = 2;
    m.transfer_rounds = 3;
    auto b0 = capture_time_bound(m, 0);
    CHECK(b0.bound == 2);  // g_T only
    CHECK_FALSE(b0.bound_odd.has_value());

    auto b3 = capture_time_bound(m, 3);
    CHECK(b3.bound == 12);  // 2*(2+1) + 3*2
    REQUIRE(b3.bound_odd.has_value());
    CHECK(*b3.bound_odd == 7);  // 2*(1+1) + 3*1
    CHECK(b3.applicable() == 7);
}

TEST_CASE("simulated capture rounds respect the capture-time bound on grids") {
    for (int n : {3, 4}) {
        auto grid = make_grid(n, n);
        auto td = grid_path_decomposition(n);
        auto covers = covers_for(grid, td);
        auto measure = measure_guard_transfer(grid, td, covers);
        auto [centres, diameter] = tree_centre_and_diameter(td);
        auto bound = capture_time_bound(measure, diameter);

        GreedyRobber greedy(grid);
        RandomRobber random(grid, 11);
        OptimalRobber optimal(solve_k_cop_game(grid, 2));
        for (RobberPolicy* policy : {(RobberPolicy*)&greedy, (RobberPolicy*)&random,
                                     (RobberPolicy*)&optimal}) {
            LeapController ctrl(grid, td, covers);
            auto trace = simulate(grid, ctrl, *policy, 4 * static_cast<int>(bound.bound) + 100);
            INFO("n=" << n << " policy=" << policy->name()
                      << " capture=" << trace.capture_round << " bound=" << bound.applicable());
            CHECK(trace.outcome == SimulationTrace::Outcome::captured);
            CHECK(trace.capture_round <= bound.applicable());
        }
    }
}
