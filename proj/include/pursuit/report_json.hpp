#pragma once

// JSON views of reports and traces. Everything uses ordered_json and sorted
// containers so that identical runs produce byte-identical output.

#include <json.hpp>

#include "pursuit/cover_bounds.hpp"
#include "pursuit/graph_io.hpp"
#include "pursuit/strategy.hpp"

namespace pursuit {

using ordered_json = nlohmann::ordered_json;

inline ordered_json rcc_to_json(const RccResult& r) {
    ordered_json j;
    j["value"] = r.value;
    j["exact_over_pool"] = r.exact_over_pool;
    j["pool_complete"] = r.pool_complete;
    auto entries = ordered_json::array();
    for (const auto& cert : r.cover.entries) {
        ordered_json e;
        e["image"] = cert.retraction.image.ids();
        e["guards"] = cert.guards;
        e["opening"] = cert.opening;
        e["rounds_to_guard"] = cert.rounds_to_guard;
        entries.push_back(std::move(e));
    }
    j["cover"] = entries;
    return j;
}

inline ordered_json decomposition_report_to_json(const DecompositionReport& dr) {
    ordered_json j;
    j["id"] = dr.id;
    j["bags"] = dr.td.bag_count();
    j["width"] = width(dr.td);
    j["thm1"] = dr.two_team_value;
    if (dr.relay_value)
        j["thm_main2"] = *dr.relay_value;
    else
        j["thm_main2"] = nullptr;
    j["clique_intersections"] = dr.analysis.clique_intersections;
    j["pool_relative"] = dr.analysis.pool_relative;
    auto per_bag = ordered_json::array();
    for (const auto& r : dr.analysis.per_bag)
        per_bag.push_back({{"rcc", r.value}, {"exact_over_pool", r.exact_over_pool}});
    j["per_bag_rcc"] = per_bag;
    return j;
}

inline ordered_json bound_report_to_json(const BoundReport& report,
                                         const std::optional<CaptureTimeBound>& capt = {}) {
    ordered_json j;
    j["graph"] = {{"n", report.n}, {"m", report.m}};

    ordered_json exact;
    if (report.exact_cop_number) {
        exact["cop_number"] = *report.exact_cop_number;
        if (report.capture_time) exact["capture_time"] = *report.capture_time;
        if (report.exact_solution) exact["opening"] = report.exact_solution->opening();
    } else {
        exact["computed"] = false;
        exact["reason"] = report.exact_note;
    }
    j["exact"] = exact;

    ordered_json bounds;
    if (report.eq1) {
        bounds["eq1"] = {{"value", report.eq1->value},
                         {"treewidth", report.eq1->treewidth},
                         {"treewidth_optimal", report.eq1->treewidth_optimal}};
    } else {
        bounds["eq1"] = {{"value", nullptr}, {"reason", report.eq1_note}};
    }
    if (report.two_team_best) {
        bounds["thm1"] = {{"value", *report.two_team_best},
                          {"decomposition", report.two_team_best_id},
                          {"pool_relative", report.two_team_pool_relative}};
    } else {
        bounds["thm1"] = nullptr;
    }
    bounds["thm_i"] = report.clique_bags_copwin
                          ? ordered_json{{"cop_win", true}, {"decomposition", report.clique_tree_id}}
                          : ordered_json{{"cop_win", false}};
    if (report.relay_best) {
        bounds["thm_main2"] = {{"value", *report.relay_best},
                               {"decomposition", report.relay_best_id}};
    } else {
        bounds["thm_main2"] = nullptr;
    }
    if (capt) {
        bounds["capture_time_eq2"] = {{"g_T", capt->guard_rounds},
                                      {"tr_T", capt->transfer_rounds},
                                      {"diameter", capt->diameter},
                                      {"bound", capt->bound},
                                      {"bound_odd", capt->bound_odd
                                                        ? ordered_json(*capt->bound_odd)
                                                        : ordered_json(nullptr)}};
    }
    j["bounds"] = bounds;

    auto decomps = ordered_json::array();
    for (const auto& dr : report.decompositions) decomps.push_back(decomposition_report_to_json(dr));
    j["decompositions"] = decomps;

    // full cover witnesses for the decomposition that won the two-team bound
    for (const auto& dr : report.decompositions) {
        if (!report.two_team_best || dr.id != report.two_team_best_id) continue;
        ordered_json witness;
        witness["decomposition"] = dr.id;
        auto bags = ordered_json::array();
        for (std::size_t b = 0; b < dr.analysis.per_bag.size(); ++b) {
            ordered_json bag;
            bag["bag"] = dr.td.bags[b].ids();
            bag["rcc"] = rcc_to_json(dr.analysis.per_bag[b]);
            bags.push_back(std::move(bag));
        }
        witness["per_bag"] = bags;
        j["witnesses"] = witness;
    }

    j["soundness"] = {{"ok", report.soundness_ok}, {"violations", report.soundness_violations}};
    if (!report.notes.empty()) j["notes"] = report.notes;
    return j;
}

inline ordered_json trace_round_to_json(const TraceRound& r) {
    ordered_json j;
    j["round"] = r.round;
    j["cops"] = r.cops;
    j["robber"] = r.robber;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

// JSON lines: a header object, one object per round, a final summary line.
inline std::string trace_to_json_lines(const SimulationTrace& trace) {
    std::string out;
    ordered_json head;
    head["controller"] = trace.controller;
    head["robber_policy"] = trace.robber_policy;
    head["initial_cops"] = trace.initial_cops;
    head["initial_robber"] = trace.initial_robber;
    out += head.dump() + "\n";
    for (const auto& r : trace.rounds) out += trace_round_to_json(r).dump() + "\n";
    ordered_json tail;
    tail["outcome"] = trace.outcome == SimulationTrace::Outcome::captured ? "captured" : "timeout";
    tail["capture_round"] = trace.capture_round;
    tail["rounds_played"] = trace.rounds.size();
    out += tail.dump() + "\n";
    return out;
}

// Plain-text board for grid graphs: '.' empty, 'C' cop, 'R' robber, 'X' both.
inline std::string render_grid_board(int rows, int cols, const std::vector<int>& cops,
                                     int robber) {
    std::string out;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            int v = r * cols + c;
            bool cop = std::find(cops.begin(), cops.end(), v) != cops.end();
            bool rob = v == robber;
            out += cop && rob ? 'X' : cop ? 'C' : rob ? 'R' : '.';
            if (c + 1 < cols) out += ' ';
        }
        out += '\n';
    }
    return out;
}

inline std::string render_positions(const Graph& g, const std::vector<int>& cops, int robber) {
    std::string out = "cops:";
    for (int c : cops) out += " " + g.label(c);
    out += "  robber: " + g.label(robber);
    return out;
}

// Round-by-round text replay; grids render as boards.
inline std::string render_trace_text(const Graph& g, const SimulationTrace& trace,
                                     std::optional<std::pair<int, int>> grid_shape = {}) {
    std::ostringstream os;
    os << trace.controller << " vs " << trace.robber_policy << "\n";
    os << "round 0: " << render_positions(g, trace.initial_cops, trace.initial_robber) << "\n";
    for (const auto& r : trace.rounds) {
        os << "round " << r.round << ": " << render_positions(g, r.cops, r.robber);
        if (!r.note.empty()) os << "  [" << r.note << "]";
        os << "\n";
        if (grid_shape)
            os << render_grid_board(grid_shape->first, grid_shape->second, r.cops, r.robber);
    }
    os << (trace.outcome == SimulationTrace::Outcome::captured
               ? "captured in round " + std::to_string(trace.capture_round)
               : "timeout")
       << "\n";
    return os.str();
}

}  // namespace pursuit
