#pragma once

// Structural checks on simulation traces, independent of the controllers.

#include <catch2/catch_amalgamated.hpp>

#include "pursuit/strategy.hpp"

namespace testsupport {

// Every cop and robber move must be to a neighbour or a pass.
inline void check_trace_legal(const pursuit::Graph& g, const pursuit::SimulationTrace& trace) {
    std::vector<int> prev = trace.initial_cops;
    int robber_prev = trace.initial_robber;
    for (const auto& round : trace.rounds) {
        REQUIRE(round.cops.size() == prev.size());
        for (std::size_t i = 0; i < prev.size(); ++i)
            CHECK(g.adjacent_or_equal(prev[i], round.cops[i]));
        CHECK(round.robber_before == robber_prev);
        CHECK(g.adjacent_or_equal(round.robber_before, round.robber));
        prev = round.cops;
        robber_prev = round.robber;
    }
}

// Once the frontier has advanced, the robber's bags must never again reach
// the sealed side behind it. The final capture round is exempt (the game is
// already over at that position).
inline void check_never_reenter(const pursuit::TreeDecomposition& td,
                                const pursuit::LeapController& ctrl,
                                const pursuit::SimulationTrace& trace) {
    const auto& frontier = ctrl.frontier_by_round();
    auto adj = pursuit::tree_adjacency(td);
    std::vector<bool> allowed(td.bag_count(), true);
    int current_frontier = -1;

    auto recompute_allowed = [&](int f, int robber_at) {
        // component of T - f containing the robber's bags, plus f itself
        auto subtree = pursuit::robber_subtree(td, robber_at);
        std::fill(allowed.begin(), allowed.end(), false);
        allowed[f] = true;
        std::vector<int> stack;
        for (int b : subtree)
            if (b != f && !allowed[b]) {
                allowed[b] = true;
                stack.push_back(b);
            }
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (w != f && !allowed[w]) {
                    allowed[w] = true;
                    stack.push_back(w);
                }
        }
    };

    for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
        if (i < frontier.size() && frontier[i] >= 0 && frontier[i] != current_frontier) {
            current_frontier = frontier[i];
            recompute_allowed(current_frontier, trace.rounds[i].robber_before);
        }
        if (current_frontier < 0) continue;
        bool final_capture = trace.outcome == pursuit::SimulationTrace::Outcome::captured &&
                             i + 1 == trace.rounds.size();
        if (final_capture) break;
        // Bags overlap, so a robber brushing the frontier bag may share a bag
        // with the sealed side; what must never happen is a position whose
        // every bag lies strictly behind the frontier.
        bool touches_allowed = false;
        for (int b : pursuit::robber_subtree(td, trace.rounds[i].robber))
            touches_allowed |= allowed[b];
        INFO("round " << trace.rounds[i].round << " robber " << trace.rounds[i].robber
                      << " is strictly behind frontier " << current_frontier);
        CHECK(touches_allowed);
    }
}

}  // namespace testsupport
