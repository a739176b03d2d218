// Command-line workbench: compute cop-number bounds from tree
// decompositions, run the synthesized strategies against robber policies,
// or play the robber yourself.
//
// Exit codes: 0 success, 1 interactive session quit early, 2 invalid input,
// 3 resource budget exceeded, 4 soundness or internal failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pursuit/report_json.hpp"
#include "pursuit/solution_cache.hpp"
#include "pursuit/strategy.hpp"
#include "pursuit/td_io.hpp"

namespace {

using namespace pursuit;

struct RunConfig {
    std::string gr_path;
    std::string td_path;
    std::string gen_spec;
    std::string strategy;  // thm1 | thm-i | thm-main2
    int cops = 0;          // optimal-table controller when set
    std::string robber = "greedy";
    std::uint64_t budget_states = kDefaultStateBudget;
    int budget_pool = 512;
    int budget_rounds = 1000;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "json";
    std::string cache_dir;
};

Graph load_graph(const RunConfig& cfg, std::optional<GenSpec>& gen_out) {
    if (cfg.gr_path.empty() == cfg.gen_spec.empty())
        throw InvalidInput("need exactly one graph source: --gr or --gen");
    if (!cfg.gr_path.empty()) {
        std::ifstream in(cfg.gr_path);
        if (!in) throw InvalidInput("cannot open " + cfg.gr_path);
        auto res = read_gr(in);
        for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
        return res.graph;
    }
    gen_out = GenSpec::parse(cfg.gen_spec);
    return gen_out->build();
}

std::vector<NamedDecomposition> assemble_decompositions(const Graph& g, const RunConfig& cfg,
                                                        const std::optional<GenSpec>& gen) {
    std::vector<NamedDecomposition> out;
    if (!cfg.td_path.empty()) {
        std::ifstream in(cfg.td_path);
        if (!in) throw InvalidInput("cannot open " + cfg.td_path);
        auto td = read_td(in, g);
        auto check = validate_td(g, td);
        if (!check.ok) throw InvalidInput("supplied decomposition invalid: " + check.summary());
        out.push_back({"user", std::move(td)});
        return out;
    }
    out.push_back({"tw-witness", treewidth_exact(g).witness});
    if (auto ct = clique_tree(g)) out.push_back({"clique-tree", std::move(*ct)});
    if (gen) {
        if (auto side = gen->square_grid_side(); side && *side >= 2)
            out.push_back({"grid-paths", grid_path_decomposition(*side)});
    }
    return out;
}

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out_path);
    if (!out) throw InvalidInput("cannot write " + cfg.out_path);
    out << text;
}

std::optional<GameSolution> cached_solve(const Graph& g, int k, const RunConfig& cfg) {
    if (cfg.cache_dir.empty()) return solve_k_cop_game(g, k, cfg.budget_states);
    std::filesystem::create_directories(cfg.cache_dir);
    auto file = std::filesystem::path(cfg.cache_dir) /
                (canonical_graph_hash(g) + "_k" + std::to_string(k) + ".sol");
    if (std::ifstream in(file); in) {
        if (auto sol = load_solution(in, g, k)) return sol;
    }
    auto sol = solve_k_cop_game(g, k, cfg.budget_states);
    std::ofstream out(file);
    save_solution(out, g, sol);
    return sol;
}

std::string bound_report_text(const ordered_json& j) {
    std::ostringstream os;
    os << "graph: n=" << j["graph"]["n"] << " m=" << j["graph"]["m"] << "\n";
    if (j["exact"].contains("cop_number"))
        os << "exact cop number: " << j["exact"]["cop_number"] << "\n";
    else
        os << "exact cop number: not computed (" << j["exact"]["reason"].get<std::string>()
           << ")\n";
    os << "bounds:\n";
    os << "  eq1 (treewidth): " << j["bounds"]["eq1"]["value"] << "\n";
    if (j["bounds"]["thm1"].is_null())
        os << "  thm1 (two teams): not computed\n";
    else
        os << "  thm1 (two teams): " << j["bounds"]["thm1"]["value"] << " via "
           << j["bounds"]["thm1"]["decomposition"] << "\n";
    os << "  thm-i (clique bags): "
       << (j["bounds"]["thm_i"]["cop_win"].get<bool>() ? "cop-win" : "not applicable") << "\n";
    os << "  thm-main2 (relay): " << j["bounds"]["thm_main2"] << "\n";
    if (j["bounds"].contains("capture_time_eq2"))
        os << "  capture-time bound: " << j["bounds"]["capture_time_eq2"]["bound"] << "\n";
    os << "soundness: " << (j["soundness"]["ok"].get<bool>() ? "ok" : "VIOLATED") << "\n";
    return os.str();
}

int cmd_bound(const RunConfig& cfg) {
    std::optional<GenSpec> gen;
    auto g = load_graph(cfg, gen);
    if (!is_connected(g))
        throw InvalidInput("cop-number bounds need a connected graph");
    auto decomps = assemble_decompositions(g, cfg, gen);

    BoundReportOptions options;
    options.state_budget = cfg.budget_states;
    options.pool.max_entries = cfg.budget_pool;
    options.pool.state_budget = cfg.budget_states;
    auto report = best_bound_report(g, decomps, options);

    // capture-time bound over the decomposition the two-team bound selected
    std::optional<CaptureTimeBound> capt;
    for (const auto& dr : report.decompositions) {
        if (dr.id != report.two_team_best_id) continue;
        auto measure = measure_guard_transfer(g, dr.td, dr.analysis.per_bag);
        auto [centres, diameter] = tree_centre_and_diameter(dr.td);
        capt = capture_time_bound(measure, diameter);
    }

    auto j = bound_report_to_json(report, capt);
    write_output(cfg, cfg.format == "text" ? bound_report_text(j) : j.dump(2) + "\n");
    if (!report.soundness_ok) throw SoundnessError("bound report failed soundness checks");
    // partial reports still print, but a swallowed sub-error is not a success
    if (!report.notes.empty())
        throw ResourceExhausted("incomplete report: " + report.notes.front());
    if (!report.exact_cop_number)
        throw ResourceExhausted("incomplete report: " + report.exact_note);
    return 0;
}

struct StrategySetup {
    std::unique_ptr<CopController> controller;
    TreeDecomposition td;
    std::optional<CaptureTimeBound> bound;
    bool leap = false;
};

StrategySetup make_controller(const Graph& g, const RunConfig& cfg,
                              const std::vector<NamedDecomposition>& decomps) {
    StrategySetup setup;
    if (cfg.cops > 0) {
        if (!cfg.strategy.empty())
            throw InvalidInput("--cops selects the optimal controller; drop --strategy");
        auto sol = cached_solve(g, cfg.cops, cfg);
        setup.controller = std::make_unique<OptimalController>(g, std::move(*sol));
        return setup;
    }
    std::string strategy = cfg.strategy.empty() ? "thm1" : cfg.strategy;
    PoolLimits pool;
    pool.max_entries = cfg.budget_pool;
    pool.state_budget = cfg.budget_states;

    if (strategy == "thm-i") {
        auto ct = clique_tree(g);
        if (!ct) throw InvalidInput("thm-i strategy needs a chordal graph");
        setup.td = *ct;
        setup.controller = std::make_unique<CliqueBagController>(g, *ct);
        return setup;
    }

    // pick the decomposition minimizing the relevant bound
    std::optional<int> best;
    DecompositionAnalysis best_analysis;
    GuardCertCache cache;
    for (const auto& nd : decomps) {
        auto analysis = analyze_decomposition(g, nd.td, pool, &cache);
        std::optional<int> value;
        if (strategy == "thm1") {
            value = analysis.two_team_bound();
        } else if (strategy == "thm-main2") {
            value = analysis.relay_bound();
        } else {
            throw InvalidInput("unknown strategy '" + strategy + "'");
        }
        if (value && (!best || *value < *best)) {
            best = value;
            best_analysis = std::move(analysis);
            setup.td = nd.td;
        }
    }
    if (!best)
        throw InvalidInput("no supplied decomposition supports strategy '" + strategy + "'");
    if (strategy == "thm1") {
        setup.leap = true;
        auto measure = measure_guard_transfer(g, setup.td, best_analysis.per_bag);
        auto [centres, diameter] = tree_centre_and_diameter(setup.td);
        setup.bound = capture_time_bound(measure, diameter);
        setup.controller = std::make_unique<LeapController>(g, setup.td, best_analysis.per_bag);
    } else {
        setup.controller =
            std::make_unique<RelayController>(g, setup.td, best_analysis.per_bag);
    }
    return setup;
}

std::unique_ptr<RobberPolicy> make_robber(const Graph& g, const RunConfig& cfg, int cop_count) {
    if (cfg.robber == "greedy") return std::make_unique<GreedyRobber>(g);
    if (cfg.robber == "random") return std::make_unique<RandomRobber>(g, cfg.seed);
    if (cfg.robber == "optimal") {
        auto sol = cached_solve(g, cop_count, cfg);
        return std::make_unique<OptimalRobber>(std::move(*sol));
    }
    throw InvalidInput("unknown robber policy '" + cfg.robber + "'");
}

int cmd_simulate(const RunConfig& cfg) {
    std::optional<GenSpec> gen;
    auto g = load_graph(cfg, gen);
    auto decomps = assemble_decompositions(g, cfg, gen);
    auto setup = make_controller(g, cfg, decomps);
    auto robber = make_robber(g, cfg, setup.controller->cop_count());

    auto trace = simulate(g, *setup.controller, *robber, cfg.budget_rounds);
    if (cfg.format == "text") {
        std::optional<std::pair<int, int>> shape;
        if (gen && gen->family == "grid") {
            int rows = static_cast<int>(gen->args.at(0));
            shape = {rows, gen->args.size() > 1 ? static_cast<int>(gen->args[1]) : rows};
        }
        write_output(cfg, render_trace_text(g, trace, shape));
    } else {
        write_output(cfg, trace_to_json_lines(trace));
    }

    std::ostringstream summary;
    summary << "outcome="
            << (trace.outcome == SimulationTrace::Outcome::captured ? "captured" : "timeout")
            << " capture_round=" << trace.capture_round;
    if (setup.bound) {
        summary << " eq2_bound=" << setup.bound->applicable()
                << (trace.outcome == SimulationTrace::Outcome::captured &&
                            trace.capture_round <= setup.bound->applicable()
                        ? " (within bound)"
                        : "");
    }
    std::cerr << summary.str() << "\n";
    return 0;
}

int cmd_play(const RunConfig& cfg) {
    std::optional<GenSpec> gen;
    auto g = load_graph(cfg, gen);
    auto decomps = assemble_decompositions(g, cfg, gen);
    auto setup = make_controller(g, cfg, decomps);
    auto& controller = *setup.controller;

    std::optional<std::pair<int, int>> grid_shape;
    if (gen && gen->family == "grid") {
        int rows = static_cast<int>(gen->args.at(0));
        int cols = gen->args.size() > 1 ? static_cast<int>(gen->args[1]) : rows;
        grid_shape = {rows, cols};
    }

    auto render = [&](const std::vector<int>& cops, int robber) {
        if (grid_shape)
            std::cout << render_grid_board(grid_shape->first, grid_shape->second, cops, robber);
        else
            std::cout << render_positions(g, cops, robber) << "\n";
    };

    SimulationTrace trace;
    trace.controller = controller.name();
    trace.robber_policy = "human";
    std::vector<int> cops = controller.initial_positions();
    trace.initial_cops = cops;

    std::cout << "You are the robber. Cops open at:";
    for (int c : cops) std::cout << " " << g.label(c);
    std::cout << "\nPick your start vertex (0.." << g.vertex_count() - 1 << "): " << std::flush;

    auto read_vertex = [&](int current, bool allow_pass) -> std::optional<int> {
        std::string tok;
        while (std::cin >> tok) {
            if (tok == "quit") return std::nullopt;
            if (allow_pass && tok == "pass") return current;
            try {
                int v = std::stoi(tok);
                if (v >= 0 && v < g.vertex_count() &&
                    (!allow_pass || g.adjacent_or_equal(current, v)))
                    return v;
            } catch (const std::exception&) {
            }
            std::cout << "illegal; enter a "
                      << (allow_pass ? "neighbouring vertex, 'pass' or 'quit'"
                                     : "vertex id or 'quit'")
                      << ": " << std::flush;
        }
        return std::nullopt;  // EOF ends the session
    };

    auto finish = [&](bool complete) {
        if (!cfg.out_path.empty()) write_output(cfg, trace_to_json_lines(trace));
        return complete ? 0 : 1;
    };

    auto start = read_vertex(0, false);
    if (!start) return finish(false);
    int robber = *start;
    trace.initial_robber = robber;

    for (int round = 1; round <= cfg.budget_rounds; ++round) {
        auto targets = controller.decide(cops, robber);
        cops = targets;
        controller.after_cop_move(cops, robber);
        TraceRound tr;
        tr.round = round;
        tr.cops = cops;
        tr.robber_before = robber;
        std::cout << "\nround " << round << "\n";
        render(cops, robber);
        if (std::find(cops.begin(), cops.end(), robber) != cops.end()) {
            tr.robber = robber;
            trace.rounds.push_back(tr);
            trace.outcome = SimulationTrace::Outcome::captured;
            trace.capture_round = round;
            std::cout << "Captured in round " << round << ".\n";
            return finish(true);
        }
        std::cout << "Your move from " << g.label(robber) << " (neighbours:";
        for (int w : g.neighbors(robber)) std::cout << " " << w;
        std::cout << ", or pass): " << std::flush;
        auto next = read_vertex(robber, true);
        if (!next) {
            trace.rounds.push_back(tr);
            std::cout << "\nSession ended.\n";
            return finish(false);
        }
        robber = *next;
        tr.robber = robber;
        trace.rounds.push_back(tr);
        if (std::find(cops.begin(), cops.end(), robber) != cops.end()) {
            trace.outcome = SimulationTrace::Outcome::captured;
            trace.capture_round = round;
            std::cout << "You walked into a cop. Captured in round " << round << ".\n";
            return finish(true);
        }
    }
    std::cout << "Round budget exhausted; you escaped.\n";
    trace.outcome = SimulationTrace::Outcome::timeout;
    return finish(true);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pursuit: cop-number bounds from tree decompositions, with playable strategies"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("PURSUIT_TD_BUDGET"))
        cfg.budget_states = std::strtoull(env, nullptr, 10);

    auto add_common = [&](CLI::App* sub, bool with_strategy) {
        sub->add_option("--gr", cfg.gr_path, "graph in PACE .gr format");
        sub->add_option("--gen", cfg.gen_spec,
                        "generator spec: path:N cycle:N clique:N grid:N[,M] ktree:K,N[,S] "
                        "random:N,P[,S]");
        sub->add_option("--td", cfg.td_path, "tree decomposition in PACE .td format");
        sub->add_option("--budget-states", cfg.budget_states, "solver state budget");
        sub->add_option("--budget-pool", cfg.budget_pool, "retract pool size budget");
        sub->add_option("--seed", cfg.seed, "seed for randomized robber policies");
        sub->add_option("--out", cfg.out_path, "output path (default stdout)");
        sub->add_option("--format", cfg.format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--cache", cfg.cache_dir, "directory for cached game solutions");
        if (with_strategy) {
            sub->add_option("--strategy", cfg.strategy, "thm1, thm-i or thm-main2")
                ->check(CLI::IsMember({"thm1", "thm-i", "thm-main2"}));
            sub->add_option("--cops", cfg.cops, "play the exact optimal controller with N cops");
            sub->add_option("--robber", cfg.robber, "optimal, greedy or random")
                ->check(CLI::IsMember({"optimal", "greedy", "random"}));
            sub->add_option("--budget-rounds", cfg.budget_rounds, "simulation round budget");
        }
    };

    auto* bound = app.add_subcommand("bound", "compute all cop-number bounds and the exact value");
    add_common(bound, false);
    auto* sim = app.add_subcommand("simulate", "run a synthesized strategy against a robber");
    add_common(sim, true);
    auto* play = app.add_subcommand("play", "play the robber against a synthesized strategy");
    add_common(play, true);

    try {
        app.parse(argc, argv);
        if (bound->parsed()) return cmd_bound(cfg);
        if (sim->parsed()) return cmd_simulate(cfg);
        if (play->parsed()) return cmd_play(cfg);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const SoundnessError& e) {
        std::cerr << "error: {\"kind\": \"soundness\", \"message\": \"" << e.what() << "\"}\n";
        return 4;
    } catch (const InternalError& e) {
        std::cerr << "error: {\"kind\": \"internal\", \"message\": \"" << e.what() << "\"}\n";
        return 4;
    } catch (const SimulationError& e) {
        std::cerr << "error: {\"kind\": \"strategy\", \"message\": \"" << e.what() << "\"}\n";
        return 4;
    } catch (const ResourceExhausted& e) {
        std::cerr << "error: {\"kind\": \"resource\", \"message\": \"" << e.what() << "\"}\n";
        return 3;
    } catch (const BoundNotFound& e) {
        std::cerr << "error: {\"kind\": \"bound-not-found\", \"message\": \"" << e.what()
                  << "\"}\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: {\"kind\": \"invalid-input\", \"message\": \"" << e.what() << "\"}\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: {\"kind\": \"internal\", \"message\": \"" << e.what() << "\"}\n";
        return 4;
    }
    return 0;
}
