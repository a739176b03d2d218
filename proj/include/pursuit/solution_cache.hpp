#pragma once

// On-disk cache for solved games, keyed by a canonical content hash of the
// graph plus the cop count. Textual, binary-agnostic format:
//
//   p cache <hash> <k> <n>
//   o <cops_win> <capture_rounds or ->
//   c <multiset rank> <robber> <value>     (cop to move)
//   r <multiset rank> <robber> <value>     (robber to move)
//
// Only finite values are listed; absent states are unreachable for the cops.

#include <istream>
#include <ostream>
#include <sstream>

#include "pursuit/game_solver.hpp"

namespace pursuit {

// FNV-1a over the vertex count and the sorted edge list. Stable across runs
// and platforms; equal graphs (same ids) hash equal.
inline std::string canonical_graph_hash(const Graph& g) {
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&](std::uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint64_t>(g.vertex_count()));
    for (auto [u, v] : g.edges()) {
        mix(static_cast<std::uint64_t>(u));
        mix(static_cast<std::uint64_t>(v));
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

inline void save_solution(std::ostream& out, const Graph& g, const GameSolution& sol) {
    const auto& table = *sol.table;
    const auto& ix = table.indexer();
    const int n = g.vertex_count();
    out << "p cache " << canonical_graph_hash(g) << " " << sol.k << " " << n << "\n";
    out << "o " << (sol.cops_win ? 1 : 0) << " ";
    if (sol.capture_time)
        out << *sol.capture_time << "\n";
    else
        out << "-\n";
    for (std::uint64_t rank = 0; rank < ix.count(); ++rank) {
        auto cops = ix.unrank(rank);
        for (int r = 0; r < n; ++r) {
            auto vc = table.value(cops, r, true);
            auto vr = table.value(cops, r, false);
            if (vc != PursuitSolution::kInfinity)
                out << "c " << rank << " " << r << " " << vc << "\n";
            if (vr != PursuitSolution::kInfinity)
                out << "r " << rank << " " << r << " " << vr << "\n";
        }
    }
}

// Rebuilds the solution over the given graph; returns nullopt when the file
// is for a different graph or cop count.
inline std::optional<GameSolution> load_solution(std::istream& in, const Graph& g,
                                                 int expected_k) {
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line)) return std::nullopt;
    ++line_no;
    std::istringstream head(line);
    std::string p, cache, hash;
    int k = 0, n = 0;
    if (!(head >> p >> cache >> hash >> k >> n) || p != "p" || cache != "cache")
        throw ParseError(line_no, "expected 'p cache <hash> <k> <n>'");
    if (hash != canonical_graph_hash(g) || k != expected_k || n != g.vertex_count())
        return std::nullopt;

    auto solution = std::make_shared<PursuitSolution>(identity_arena(g), k);
    GameSolution sol;
    sol.k = k;

    std::uint64_t states = solution->indexer().count() * g.vertex_count();
    std::vector<std::uint32_t> val_cop(states, PursuitSolution::kInfinity);
    std::vector<std::uint32_t> val_rob(states, PursuitSolution::kInfinity);

    bool saw_outcome = false;
    bool cops_win = false;
    std::optional<std::uint32_t> capture;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        char tag;
        ss >> tag;
        if (tag == 'o') {
            int win;
            std::string cap;
            if (!(ss >> win >> cap)) throw ParseError(line_no, "bad outcome line");
            cops_win = win != 0;
            if (cap != "-") capture = static_cast<std::uint32_t>(std::stoul(cap));
            saw_outcome = true;
        } else if (tag == 'c' || tag == 'r') {
            std::uint64_t rank;
            int robber;
            std::uint32_t value;
            if (!(ss >> rank >> robber >> value)) throw ParseError(line_no, "bad state line");
            if (rank >= solution->indexer().count() || robber < 0 || robber >= g.vertex_count())
                throw ParseError(line_no, "state out of range");
            auto idx = rank * g.vertex_count() + robber;
            (tag == 'c' ? val_cop : val_rob)[idx] = value;
        } else {
            throw ParseError(line_no, "unknown line tag");
        }
    }
    if (!saw_outcome) throw ParseError(line_no, "missing outcome line");

    solution->adopt_tables(std::move(val_cop), std::move(val_rob));
    sol.cops_win = cops_win;
    sol.capture_time = capture;
    sol.table = solution;
    return sol;
}

}  // namespace pursuit
