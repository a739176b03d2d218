#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pursuit/generators.hpp"
#include "pursuit/graph_io.hpp"
#include "pursuit/solution_cache.hpp"
#include "pursuit/td_io.hpp"

using namespace pursuit;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_tool(const std::string& args, const std::string& out_file) {
    std::string cmd = std::string(PURSUIT_TOOL_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return {WEXITSTATUS(status), buf.str()};
}

}  // namespace

TEST_CASE("bound on a generated grid") {
    auto res = run_tool("bound --gen grid:4", "/tmp/pursuit_cli_grid.json");
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.output);
    CHECK(j["exact"]["cop_number"] == 2);
    CHECK(j["bounds"]["thm1"]["value"] == 2);
    CHECK(j["bounds"]["eq1"]["value"] == 3);
    CHECK(j["soundness"]["ok"] == true);
}

TEST_CASE("bound output is byte-identical across runs") {
    auto a = run_tool("bound --gen ktree:2,9,5", "/tmp/pursuit_cli_a.json");
    auto b = run_tool("bound --gen ktree:2,9,5", "/tmp/pursuit_cli_b.json");
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
    auto c = run_tool("bound --gen random:8,0.4,3 --format json", "/tmp/pursuit_cli_c.json");
    auto d = run_tool("bound --gen random:8,0.4,3 --format json", "/tmp/pursuit_cli_d.json");
    REQUIRE(c.exit_code == 0);
    CHECK(c.output == d.output);
}

TEST_CASE("bound accepts .gr and .td files") {
    {
        std::ofstream gr("/tmp/pursuit_cli_p4.gr");
        write_gr(gr, make_path(4));
    }
    {
        std::ofstream td("/tmp/pursuit_cli_p4.td");
        std::vector<std::pair<int, int>> edges;
        TreeDecomposition t;
        t.bags.emplace_back(std::vector<int>{0, 1});
        t.bags.emplace_back(std::vector<int>{1, 2});
        t.bags.emplace_back(std::vector<int>{2, 3});
        t.tree_edges = {{0, 1}, {1, 2}};
        write_td(td, t, make_path(4));
    }
    auto res = run_tool("bound --gr /tmp/pursuit_cli_p4.gr --td /tmp/pursuit_cli_p4.td",
                        "/tmp/pursuit_cli_p4.json");
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.output);
    CHECK(j["exact"]["cop_number"] == 1);
    CHECK(j["bounds"]["thm1"]["decomposition"] == "user");
}

TEST_CASE("invalid input exits with code 2") {
    CHECK(run_tool("bound --gen frobnicate:7", "/tmp/pursuit_cli_e1.txt").exit_code == 2);
    CHECK(run_tool("bound --gr /tmp/does_not_exist.gr", "/tmp/pursuit_cli_e2.txt").exit_code == 2);
    CHECK(run_tool("simulate --gen grid:3 --strategy thm-i", "/tmp/pursuit_cli_e3.txt").exit_code ==
          2);  // grids are not chordal
    CHECK(run_tool("bound --gen grid:3 --gr /tmp/x.gr", "/tmp/pursuit_cli_e4.txt").exit_code == 2);
    {
        std::ofstream gr("/tmp/pursuit_cli_disc.gr");
        gr << "p tw 4 2\n1 2\n3 4\n";
    }
    CHECK(run_tool("bound --gr /tmp/pursuit_cli_disc.gr", "/tmp/pursuit_cli_e6.txt").exit_code ==
          2);  // disconnected
}

TEST_CASE("resource budget exits with code 3") {
    auto res = run_tool("bound --gen grid:4 --budget-states 10", "/tmp/pursuit_cli_e5.txt");
    CHECK(res.exit_code == 3);
}

TEST_CASE("PURSUIT_TD_BUDGET overrides the default state budget") {
    std::string cmd = std::string("PURSUIT_TD_BUDGET=10 ") + PURSUIT_TOOL_PATH +
                      " bound --gen grid:4 > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 3);
    // an explicit flag wins over the environment
    cmd = std::string("PURSUIT_TD_BUDGET=10 ") + PURSUIT_TOOL_PATH +
          " bound --gen grid:4 --budget-states 50000000 > /dev/null 2>&1";
    status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 0);
}

TEST_CASE("simulate writes a trace and reports the outcome") {
    auto res = run_tool("simulate --gen grid:4 --robber greedy --seed 5 --out /tmp/pursuit_cli_t.jsonl",
                        "/tmp/pursuit_cli_sim.txt");
    REQUIRE(res.exit_code == 0);
    std::ifstream trace("/tmp/pursuit_cli_t.jsonl");
    std::string line, last;
    int lines = 0;
    while (std::getline(trace, line))
        if (!line.empty()) {
            last = line;
            ++lines;
        }
    REQUIRE(lines >= 2);
    auto tail = nlohmann::json::parse(last);
    CHECK(tail["outcome"] == "captured");
}

TEST_CASE("timeout on an undersized team is a normal outcome") {
    auto res = run_tool("simulate --gen cycle:4 --cops 1 --out /tmp/pursuit_cli_c4.jsonl",
                        "/tmp/pursuit_cli_c4.txt");
    CHECK(res.exit_code == 0);
    std::ifstream trace("/tmp/pursuit_cli_c4.jsonl");
    std::string line, last;
    while (std::getline(trace, line))
        if (!line.empty()) last = line;
    CHECK(nlohmann::json::parse(last)["outcome"] == "timeout");
}

TEST_CASE("play captures a stationary human") {
    // robber starts at vertex 8 and passes every round
    std::string cmd = std::string("printf '8\\npass\\npass\\npass\\npass\\npass\\npass\\npass\\n' | ") +
                      PURSUIT_TOOL_PATH +
                      " play --gen grid:3 --out /tmp/pursuit_cli_play.jsonl > /tmp/pursuit_cli_play.txt 2>&1";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 0);
    std::ifstream out("/tmp/pursuit_cli_play.txt");
    std::stringstream buf;
    buf << out.rdbuf();
    CHECK(buf.str().find("Captured") != std::string::npos);
}

TEST_CASE("play quit leaves an incomplete transcript and exit code 1") {
    std::string cmd = std::string("printf '8\\nquit\\n' | ") + PURSUIT_TOOL_PATH +
                      " play --gen grid:3 --out /tmp/pursuit_cli_quit.jsonl > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 1);
    std::ifstream trace("/tmp/pursuit_cli_quit.jsonl");
    CHECK(trace.good());
}

TEST_CASE("solution cache round trip") {
    auto g = make_grid(3, 3);
    auto sol = solve_k_cop_game(g, 2);
    std::stringstream file;
    save_solution(file, g, sol);
    auto loaded = load_solution(file, g, 2);
    REQUIRE(loaded.has_value());
    CHECK(loaded->cops_win == sol.cops_win);
    CHECK(loaded->capture_time == sol.capture_time);
    CHECK(loaded->opening() == sol.opening());
    // strategies replay identically
    auto cops = sol.opening();
    int robber = sol.robber_best_start(cops);
    CHECK(loaded->robber_best_start(cops) == robber);
    CHECK(loaded->cop_strategy(cops, robber) == sol.cop_strategy(cops, robber));

    // wrong graph or cop count is rejected
    std::stringstream again;
    save_solution(again, g, sol);
    CHECK_FALSE(load_solution(again, make_grid(3, 4), 2).has_value());
    std::stringstream once_more;
    save_solution(once_more, g, sol);
    CHECK_FALSE(load_solution(once_more, g, 3).has_value());
}

TEST_CASE("cache directory is honoured by the CLI") {
    [[maybe_unused]] int rc0 = std::system("rm -rf /tmp/pursuit_cli_cache");
    auto first = run_tool("simulate --gen grid:3 --robber optimal --cache /tmp/pursuit_cli_cache",
                          "/tmp/pursuit_cli_k1.txt");
    REQUIRE(first.exit_code == 0);
    int files = 0;
    std::string check_cmd = "ls /tmp/pursuit_cli_cache | wc -l > /tmp/pursuit_cli_count.txt";
    [[maybe_unused]] int rc1 = std::system(check_cmd.c_str());
    std::ifstream count("/tmp/pursuit_cli_count.txt");
    count >> files;
    CHECK(files >= 1);
    auto second = run_tool("simulate --gen grid:3 --robber optimal --cache /tmp/pursuit_cli_cache",
                           "/tmp/pursuit_cli_k2.txt");
    CHECK(second.exit_code == 0);
    CHECK(second.output == first.output);
}
