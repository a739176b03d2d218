#pragma once

// Guard numbers via the shadow-pursuit game: cops move inside the image of a
// retraction, the robber moves on the whole host, and the cops win the moment
// one of them occupies the robber's shadow f(robber). Once the shadow is
// held, following the same tables keeps it held, so a robber who steps into
// the retract is standing on his own shadow and is caught by the next cop
// move.

#include <memory>
#include <sstream>

#include "pursuit/graph.hpp"
#include "pursuit/pursuit_game.hpp"
#include "pursuit/retraction.hpp"
#include "pursuit/robber_policy.hpp"

namespace pursuit {

struct GuardCertificate {
    Retraction retraction;
    int guards = 0;
    std::vector<int> opening;          // host ids, the designated cop start
    std::uint32_t rounds_to_guard = 0; // worst case over robber behaviour
    std::shared_ptr<const PursuitSolution> shadow_game;
    std::vector<int> to_local;  // host id -> image-local id, -1 outside

    int local_of(int host_v) const { return to_local[host_v]; }
    int host_of(int local_v) const { return retraction.image[local_v]; }
    int shadow_of(int robber_host) const { return retraction.map[robber_host]; }

    bool shadow_held(const std::vector<int>& cops_host, int robber_host) const {
        int target = shadow_of(robber_host);
        return std::find(cops_host.begin(), cops_host.end(), target) != cops_host.end();
    }

    // Table-following move, in host coordinates, aligned with the cop order.
    std::vector<int> strategy_move(const std::vector<int>& cops_host, int robber_host) const {
        std::vector<int> local(cops_host.size());
        for (std::size_t i = 0; i < cops_host.size(); ++i) {
            local[i] = local_of(cops_host[i]);
            if (local[i] < 0) throw ConfigError("guarding cop is outside the retract image");
        }
        auto targets = shadow_game->cop_move(local, robber_host);
        for (auto& t : targets) t = host_of(t);
        return targets;
    }

    std::uint32_t value(const std::vector<int>& cops_host, int robber_host) const {
        std::vector<int> local(cops_host.size());
        for (std::size_t i = 0; i < cops_host.size(); ++i) local[i] = local_of(cops_host[i]);
        return shadow_game->value(local, robber_host, /*cop_turn=*/true);
    }
};

inline PursuitArena shadow_arena(const Graph& g, const Retraction& r) {
    InducedSubgraph image(g, r.image);
    PursuitArena arena;
    arena.cop_moves = closed_neighborhoods(image.local());
    arena.robber_moves = closed_neighborhoods(g);
    arena.shadow.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) arena.shadow[v] = image.to_local(r.map[v]);
    return arena;
}

// Least k (up to k_max, default |image|) whose shadow game is a cop win;
// solves the game exactly and returns the playable certificate.
inline GuardCertificate guard_number(const Graph& g, const Retraction& r, int k_max = -1,
                                     std::uint64_t state_budget = kDefaultStateBudget) {
    if (auto bad = check_retraction(g, r)) throw InvalidInput("invalid retraction: " + *bad);
    if (k_max < 0) k_max = r.image.size();
    InducedSubgraph image(g, r.image);
    for (int k = 1; k <= k_max; ++k) {
        auto sol = solve_pursuit(shadow_arena(g, r), k, state_budget);
        if (!sol.cops_win()) continue;
        GuardCertificate cert;
        cert.retraction = r;
        cert.guards = k;
        cert.rounds_to_guard = sol.capture_rounds();
        cert.opening.reserve(k);
        for (int lv : sol.opening()) cert.opening.push_back(image.to_host(lv));
        cert.shadow_game = std::make_shared<PursuitSolution>(std::move(sol));
        cert.to_local.assign(g.vertex_count(), -1);
        for (int i = 0; i < r.image.size(); ++i) cert.to_local[r.image[i]] = i;
        return cert;
    }
    throw BoundNotFound("no guard count up to k_max=" + std::to_string(k_max) +
                        " wins the shadow game");
}

struct GuardCheck {
    bool ok = true;
    std::string message;
    std::vector<std::string> trace;
};

// Simulates the certificate against a robber policy. Each trial asserts that
// the shadow falls within rounds_to_guard and that afterwards the shadow is
// re-held every round, so a robber entering the image dies on the next cop
// move. Trials reseed the policy.
inline GuardCheck verify_guarding(const Graph& g, const GuardCertificate& cert,
                                  RobberPolicy& policy, int trials = 5, int max_rounds = 200) {
    if (static_cast<int>(cert.to_local.size()) != g.vertex_count())
        throw InvalidInput("certificate does not belong to this graph");
    GuardCheck result;
    for (int trial = 0; trial < trials && result.ok; ++trial) {
        policy.reset(0x5eed0000 + trial);
        std::vector<int> cops = cert.opening;
        int robber = policy.place(cops);
        std::vector<std::string> trace;
        auto log = [&](int round, const std::string& note) {
            std::ostringstream os;
            os << "round " << round << ": cops";
            for (int c : cops) os << ' ' << c;
            os << " robber " << robber << (note.empty() ? "" : " [" + note + "]");
            trace.push_back(os.str());
        };
        auto fail = [&](int round, const std::string& why) {
            log(round, why);
            result.ok = false;
            result.message = "trial " + std::to_string(trial) + ": " + why;
            result.trace = trace;
        };

        bool latched = cert.shadow_held(cops, robber);
        bool robber_in_image = cert.local_of(robber) >= 0;
        log(0, latched ? "shadow held at placement" : "");

        for (int round = 1; round <= max_rounds; ++round) {
            cops = cert.strategy_move(cops, robber);
            bool captured = std::find(cops.begin(), cops.end(), robber) != cops.end();
            bool held_now = cert.shadow_held(cops, robber);
            log(round, held_now ? "shadow held" : "");
            if (latched && !held_now) {
                fail(round, "shadow lost after it had been captured");
                break;
            }
            if (latched && robber_in_image && !captured) {
                fail(round, "robber stood inside the image but survived the cop move");
                break;
            }
            if (captured) break;  // robber caught: guarding worked
            if (!latched && held_now) {
                if (round > static_cast<int>(cert.rounds_to_guard)) {
                    fail(round, "shadow captured later than rounds_to_guard");
                    break;
                }
                latched = true;
            }
            if (!latched && round >= static_cast<int>(cert.rounds_to_guard)) {
                fail(round, "shadow not captured within rounds_to_guard");
                break;
            }
            robber = policy.move(cops, robber);
            robber_in_image = cert.local_of(robber) >= 0;
            if (std::find(cops.begin(), cops.end(), robber) != cops.end()) break;
        }
    }
    return result;
}

}  // namespace pursuit
