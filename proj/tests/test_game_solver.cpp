#include <catch2/catch_amalgamated.hpp>

#include "pursuit/game_solver.hpp"
#include "pursuit/generators.hpp"

#include "support/corpus.hpp"

using namespace pursuit;

namespace {

// Follow both optimal strategies from the optimal opening; returns the round
// count of the replayed game.
int replay_optimal(const Graph& g, const GameSolution& sol) {
    std::vector<int> cops = sol.opening();
    int robber = sol.robber_best_start(cops);
    auto caught = [&] {
        return std::any_of(cops.begin(), cops.end(), [&](int c) { return c == robber; });
    };
    if (caught()) return 0;
    for (int round = 1;; ++round) {
        cops = sol.cop_strategy(cops, robber);
        REQUIRE(round <= 4 * g.vertex_count() * g.vertex_count());
        if (caught()) return round;
        robber = sol.robber_strategy(cops, robber);
        if (caught()) return round;
    }
}

}  // namespace

TEST_CASE("clique is cop-win") {
    auto sol = solve_k_cop_game(make_clique(5), 1);
    CHECK(sol.cops_win);
    CHECK(sol.capture_time == 1);
}

TEST_CASE("4x4 grid needs exactly two cops") {
    auto grid = make_grid(4, 4);
    CHECK_FALSE(solve_k_cop_game(grid, 1).cops_win);
    CHECK(solve_k_cop_game(grid, 2).cops_win);
}

TEST_CASE("P4 is caught in two rounds from a centre start") {
    auto sol = solve_k_cop_game(make_path(4), 1);
    REQUIRE(sol.cops_win);
    CHECK(sol.capture_time == 2);
    REQUIRE(sol.opening().size() == 1);
    int start = sol.opening()[0];
    CHECK((start == 1 || start == 2));
}

TEST_CASE("known cop numbers") {
    CHECK(cop_number(make_cycle(4)).cop_number == 2);
    CHECK(cop_number(make_cycle(6)).cop_number == 2);
    CHECK(cop_number(testsupport::petersen()).cop_number == 3);
    CHECK(cop_number(make_path(7)).cop_number == 1);
    CHECK(cop_number(make_k_tree(2, 9, 3)).cop_number == 1);
}

TEST_CASE("single vertex: robber is captured at placement") {
    auto sol = solve_k_cop_game(make_path(1), 1);
    CHECK(sol.cops_win);
    CHECK(sol.capture_time == 0);
}

TEST_CASE("solver rejects bad input") {
    Graph disconnected(4);
    disconnected.add_edge(0, 1);
    disconnected.add_edge(2, 3);
    CHECK_THROWS_AS(solve_k_cop_game(disconnected, 1), InvalidInput);
    CHECK_THROWS_AS(solve_k_cop_game(make_path(3), 0), InvalidInput);
}

TEST_CASE("state budget is enforced and named") {
    CHECK_THROWS_AS(solve_k_cop_game(make_grid(4, 4), 2, 100), ResourceExhausted);
    try {
        solve_k_cop_game(make_grid(4, 4), 2, 100);
    } catch (const ResourceExhausted& e) {
        CHECK(std::string(e.what()).find("100") != std::string::npos);
    }
}

TEST_CASE("cop win is monotone in the cop count") {
    for (std::uint64_t seed = 40; seed < 44; ++seed) {
        auto g = make_random_connected(8, 0.3, seed);
        bool prev = false;
        for (int k = 1; k <= 3; ++k) {
            bool win = solve_k_cop_game(g, k).cops_win;
            if (prev) CHECK(win);
            prev = win;
        }
    }
}

TEST_CASE("k_max exhaustion reports bound-not-found") {
    CHECK_THROWS_AS(cop_number(make_cycle(5), 1), BoundNotFound);
}

TEST_CASE("dismantlability oracle") {
    CHECK(is_copwin_dismantlable(make_clique(6)).cop_win);
    CHECK_FALSE(is_copwin_dismantlable(make_cycle(4)).cop_win);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto kt = make_k_tree(2, 8, seed);
        auto res = is_copwin_dismantlable(kt);
        CHECK(res.cop_win);
        CHECK(res.order.size() == 7);
    }
}

TEST_CASE("solver agrees with dismantlability on small graphs") {
    auto corpus = testsupport::seeded_connected_graphs(30, 4, 8, 500);
    for (const auto& g : corpus) {
        bool one_cop = solve_k_cop_game(g, 1).cops_win;
        CHECK(one_cop == is_copwin_dismantlable(g).cop_win);
    }
}

TEST_CASE("optimal replay reproduces the capture time exactly") {
    std::vector<Graph> graphs{make_path(4), make_cycle(6), make_grid(3, 3),
                              make_k_tree(2, 7, 11)};
    for (const auto& g : graphs) {
        auto res = cop_number(g, 3);
        REQUIRE(res.solution.capture_time.has_value());
        CHECK(replay_optimal(g, res.solution) ==
              static_cast<int>(*res.solution.capture_time));
    }
}

TEST_CASE("path capture time equals the radius") {
    // one cop opens at the path centre; the robber's best start is an end,
    // and every retreat shortens his own territory, so optimal play takes
    // exactly the centre-to-end distance
    for (int n = 2; n <= 9; ++n) {
        auto sol = solve_k_cop_game(make_path(n), 1);
        REQUIRE(sol.cops_win);
        CHECK(sol.capture_time == static_cast<std::uint32_t>(n / 2));
    }
}

TEST_CASE("clique capture time is one round") {
    for (int n : {2, 4, 7}) {
        auto sol = solve_k_cop_game(make_clique(n), 1);
        CHECK(sol.capture_time == 1);
    }
}

TEST_CASE("dismantling orders are genuine dismantlings") {
    auto corpus = testsupport::seeded_connected_graphs(20, 4, 9, 860000);
    for (const auto& g : corpus) {
        auto res = is_copwin_dismantlable(g);
        if (!res.cop_win) continue;
        const int n = g.vertex_count();
        std::vector<bool> alive(n, true);
        for (int doomed : res.order) {
            bool dominated = false;
            for (int v = 0; v < n && !dominated; ++v) {
                if (!alive[v] || v == doomed || !g.adjacent_or_equal(doomed, v)) continue;
                bool contained = true;
                for (int w : g.neighbors(doomed))
                    if (alive[w] && w != v && !g.adjacent_or_equal(w, v)) contained = false;
                dominated = contained;
            }
            CHECK(dominated);
            alive[doomed] = false;
        }
        CHECK(std::count(alive.begin(), alive.end(), true) == 1);
    }
}

TEST_CASE("cop number is isomorphism-invariant") {
    std::vector<Graph> graphs{make_cycle(5), testsupport::petersen(),
                              make_random_connected(8, 0.35, 77)};
    for (const auto& g : graphs) {
        int base = cop_number(g).cop_number;
        for (std::uint64_t s = 0; s < 3; ++s) {
            auto perm = testsupport::seeded_permutation(g.vertex_count(), 900 + s);
            CHECK(cop_number(testsupport::relabel(g, perm)).cop_number == base);
        }
    }
}
