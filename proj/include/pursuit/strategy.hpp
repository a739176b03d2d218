#pragma once

// Executable cop strategies synthesized from tree decompositions, the
// simulation loop that plays them against robber policies, and the
// guard/transfer measurements behind the capture-time bound.
//
// Three controllers:
//  - LeapController: two teams of m cops (m = max-bag rcc). One team holds a
//    guarded cover of the frontier bag while the other leaps through it to
//    cover the next bag toward the robber's subtree, then the roles swap.
//  - CliqueBagController: one cop walks a clique tree; standing inside a
//    clique bag guards it, and stepping into the intersection with the next
//    bag advances the frontier without ever releasing it.
//  - RelayController: m cops guard the frontier bag while an extra relay cop
//    parks on the (clique) intersection with the next bag, freeing the team
//    to move up.
//
// All controllers capture opportunistically: a cop adjacent to the robber
// steps onto him, which is exactly the "enter a guarded retract and be
// caught by the next cop move" semantics.

#include <sstream>

#include "pursuit/cover_bounds.hpp"
#include "pursuit/robber_policy.hpp"

namespace pursuit {

struct TraceRound {
    int round = 0;
    std::vector<int> cops;  // after the cop move, aligned across rounds
    int robber_before = 0;  // robber position the cops moved against
    int robber = 0;         // after the robber move
    std::string note;
};

struct SimulationTrace {
    std::vector<int> initial_cops;
    int initial_robber = 0;
    std::vector<TraceRound> rounds;
    enum class Outcome { captured, timeout } outcome = Outcome::timeout;
    int capture_round = -1;
    std::string controller, robber_policy;
};

struct SimulationError : Error {
    SimulationError(const std::string& msg, SimulationTrace t)
        : Error(msg), trace(std::move(t)) {}
    SimulationTrace trace;
};

class CopController {
public:
    virtual ~CopController() = default;
    virtual int cop_count() const = 0;
    virtual std::vector<int> initial_positions() = 0;
    virtual std::vector<int> decide(const std::vector<int>& cops, int robber) = 0;
    virtual void after_cop_move(const std::vector<int>&, int) {}
    virtual std::string note() const { return {}; }
    virtual std::string name() const = 0;
};

// Alternating rounds from the controller's opening: cops first, capture
// checked after each half-move. Every controller move is legality-checked;
// an illegal move is a strategy bug and raises with the trace attached.
inline SimulationTrace simulate(const Graph& g, CopController& controller, RobberPolicy& policy,
                                int max_rounds = 1000) {
    SimulationTrace trace;
    trace.controller = controller.name();
    trace.robber_policy = policy.name();

    std::vector<int> cops = controller.initial_positions();
    if (static_cast<int>(cops.size()) != controller.cop_count())
        throw SimulationError("controller placed the wrong number of cops", trace);
    trace.initial_cops = cops;
    int robber = policy.place(cops);
    trace.initial_robber = robber;

    auto on_cop = [&] {
        return std::find(cops.begin(), cops.end(), robber) != cops.end();
    };
    if (on_cop()) {
        trace.outcome = SimulationTrace::Outcome::captured;
        trace.capture_round = 0;
        return trace;
    }

    for (int round = 1; round <= max_rounds; ++round) {
        auto targets = controller.decide(cops, robber);
        if (targets.size() != cops.size())
            throw SimulationError("controller changed the cop count", trace);
        for (std::size_t i = 0; i < cops.size(); ++i)
            if (!g.adjacent_or_equal(cops[i], targets[i]))
                throw SimulationError("illegal cop move " + std::to_string(cops[i]) + "->" +
                                          std::to_string(targets[i]) + " in round " +
                                          std::to_string(round),
                                      trace);
        int robber_before = robber;
        cops = targets;
        controller.after_cop_move(cops, robber);

        TraceRound tr;
        tr.round = round;
        tr.cops = cops;
        tr.robber_before = robber_before;
        tr.note = controller.note();

        if (on_cop()) {
            tr.robber = robber;
            trace.rounds.push_back(std::move(tr));
            trace.outcome = SimulationTrace::Outcome::captured;
            trace.capture_round = round;
            return trace;
        }

        int next = policy.move(cops, robber);
        if (!g.adjacent_or_equal(robber, next))
            throw SimulationError("illegal robber move in round " + std::to_string(round), trace);
        robber = next;
        tr.robber = robber;
        trace.rounds.push_back(std::move(tr));

        if (on_cop()) {
            trace.outcome = SimulationTrace::Outcome::captured;
            trace.capture_round = round;
            return trace;
        }
    }
    trace.outcome = SimulationTrace::Outcome::timeout;
    return trace;
}

// Travel/guard layout of one bag's cover: the designated opening positions
// of each entry, padded to the team size by repeating the first position.
struct BagConfig {
    std::vector<int> positions;
    std::vector<int> entry_of_position;  // -1 for pad slots
};

inline BagConfig bag_config(const RccResult& cover, int team_size) {
    BagConfig cfg;
    for (std::size_t e = 0; e < cover.cover.entries.size(); ++e)
        for (int pos : cover.cover.entries[e].opening) {
            cfg.positions.push_back(pos);
            cfg.entry_of_position.push_back(static_cast<int>(e));
        }
    while (!cfg.positions.empty() && static_cast<int>(cfg.positions.size()) < team_size) {
        cfg.positions.push_back(cfg.positions.front());
        cfg.entry_of_position.push_back(-1);
    }
    return cfg;
}

namespace detail {

// Assignment of cops to target slots minimizing the worst single-cop cost.
// Brute force over permutations; team sizes here are tiny.
inline std::vector<int> bottleneck_assignment(const std::vector<std::vector<int>>& cost) {
    const int m = static_cast<int>(cost.size());
    if (m > 8) throw ResourceExhausted("team too large for permutation assignment");
    std::vector<int> perm(m), best_perm;
    for (int i = 0; i < m; ++i) perm[i] = i;
    int best = 1 << 28;
    do {
        int worst = 0;
        for (int i = 0; i < m; ++i) worst = std::max(worst, cost[i][perm[i]]);
        if (worst < best) {
            best = worst;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best_perm;
}

inline int step_towards(const Graph& g, const std::vector<std::vector<int>>& dist, int from,
                        int to) {
    if (from == to) return from;
    for (int w : g.neighbors(from))
        if (dist[w][to] == dist[from][to] - 1) return w;
    throw InternalError("no step decreases the distance; graph disconnected?");
}

}  // namespace detail

// Shared machinery: a team that can travel to a bag's cover and then chase
// its entries' shadows by following the solved tables.
class CoverTeam {
public:
    enum class State { parked, travelling, chasing, holding };

    void init(std::vector<int> cop_slots) { cops_ = std::move(cop_slots); }
    const std::vector<int>& cop_slots() const { return cops_; }
    State state() const { return state_; }
    int bag() const { return bag_; }

    void park() { state_ = State::parked; }

    void travel_to(int bag_id, const BagConfig& cfg, const std::vector<int>& positions,
                   const std::vector<std::vector<int>>& dist) {
        bag_ = bag_id;
        config_ = cfg;
        state_ = config_.positions.empty() ? State::chasing : State::travelling;
        held_.clear();
        if (state_ == State::chasing) return;
        // bottleneck matching of this team's cops onto the config slots
        const int m = static_cast<int>(cops_.size());
        std::vector<std::vector<int>> cost(m, std::vector<int>(m, 0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) cost[i][j] = dist[positions[cops_[i]]][config_.positions[j]];
        slot_of_cop_ = detail::bottleneck_assignment(cost);
    }

    // Start chasing in place (already standing on the config positions).
    void chase_in_place(int bag_id, const BagConfig& cfg) {
        bag_ = bag_id;
        config_ = cfg;
        slot_of_cop_.resize(cops_.size());
        for (std::size_t i = 0; i < cops_.size(); ++i) slot_of_cop_[i] = static_cast<int>(i);
        state_ = State::chasing;
        held_.clear();
    }

    void apply_moves(const RccResult& cover, const Graph& g,
                     const std::vector<std::vector<int>>& dist, std::vector<int>& positions,
                     int robber) {
        if (state_ == State::parked) return;
        if (state_ == State::travelling) {
            bool arrived = true;
            for (std::size_t i = 0; i < cops_.size(); ++i) {
                int cop = cops_[i], target = config_.positions[slot_of_cop_[i]];
                positions[cop] = detail::step_towards(g, dist, positions[cop], target);
                arrived &= positions[cop] == target;
            }
            if (arrived) {
                state_ = State::chasing;
                held_.assign(cover.cover.entries.size(), false);
            }
            return;
        }
        // chasing or holding: every entry's sub-team follows its table
        for (std::size_t e = 0; e < cover.cover.entries.size(); ++e) {
            const auto& cert = cover.cover.entries[e];
            std::vector<int> members, member_pos;
            for (std::size_t i = 0; i < cops_.size(); ++i)
                if (slot_of_cop_[i] < static_cast<int>(config_.entry_of_position.size()) &&
                    config_.entry_of_position[slot_of_cop_[i]] == static_cast<int>(e)) {
                    members.push_back(cops_[i]);
                    member_pos.push_back(positions[cops_[i]]);
                }
            auto targets = cert.strategy_move(member_pos, robber);
            for (std::size_t i = 0; i < members.size(); ++i) positions[members[i]] = targets[i];
        }
    }

    // Latch update after a cop move; true when the whole cover is guarded.
    bool update_latches(const RccResult& cover, const std::vector<int>& positions, int robber) {
        if (state_ != State::chasing && state_ != State::holding) return false;
        if (held_.size() != cover.cover.entries.size())
            held_.assign(cover.cover.entries.size(), false);
        bool all = true;
        for (std::size_t e = 0; e < cover.cover.entries.size(); ++e) {
            const auto& cert = cover.cover.entries[e];
            int shadow = cert.shadow_of(robber);
            bool on_shadow = false;
            for (std::size_t i = 0; i < cops_.size(); ++i)
                if (slot_of_cop_[i] < static_cast<int>(config_.entry_of_position.size()) &&
                    config_.entry_of_position[slot_of_cop_[i]] == static_cast<int>(e))
                    on_shadow |= positions[cops_[i]] == shadow;
            if (on_shadow) held_[e] = true;
            if (held_[e] && !on_shadow)
                throw InternalError("a captured shadow escaped; guard tables are inconsistent");
            all &= held_[e];
        }
        if (all) state_ = State::holding;
        return all;
    }

    std::string describe() const {
        switch (state_) {
            case State::parked: return "parked";
            case State::travelling: return "travel->" + std::to_string(bag_);
            case State::chasing: return "guard(" + std::to_string(bag_) + ")";
            case State::holding: return "hold(" + std::to_string(bag_) + ")";
        }
        return {};
    }

private:
    std::vector<int> cops_;
    State state_ = State::parked;
    int bag_ = -1;
    BagConfig config_;
    std::vector<int> slot_of_cop_;
    std::vector<bool> held_;
};

// Two teams of m cops leap-frogging along the decomposition tree toward the
// robber's subtree. With an odd tree diameter the teams start on the covers
// of the two centre bags, which is what the floor variant of the capture
// bound counts.
class LeapController : public CopController {
public:
    LeapController(const Graph& g, TreeDecomposition td, std::vector<RccResult> per_bag)
        : g_(&g), td_(std::move(td)), per_bag_(std::move(per_bag)), dist_(distances(g)) {
        if (static_cast<int>(per_bag_.size()) != td_.bag_count())
            throw ConfigError("need one cover per bag");
        team_size_ = 1;
        for (const auto& r : per_bag_) team_size_ = std::max(team_size_, r.value);
        auto [centres, diameter] = tree_centre_and_diameter(td_);
        centres_ = centres;
        diameter_ = diameter;
        two_centre_start_ = diameter_ % 2 == 1 && centres_.size() == 2;
        std::vector<int> a(team_size_), b(team_size_);
        for (int i = 0; i < team_size_; ++i) a[i] = i, b[i] = team_size_ + i;
        teams_[0].init(a);
        teams_[1].init(b);
    }

    int cop_count() const override { return 2 * team_size_; }
    int team_size() const { return team_size_; }
    bool two_centre_start() const { return two_centre_start_; }
    const std::vector<int>& frontier_by_round() const { return frontier_by_round_; }

    std::vector<int> initial_positions() override {
        auto cfg0 = bag_config(per_bag_[centres_[0]], team_size_);
        positions_.assign(cop_count(), 0);
        if (two_centre_start_) {
            auto cfg1 = bag_config(per_bag_[centres_[1]], team_size_);
            place_team(0, cfg0, centres_[0]);
            place_team(1, cfg1, centres_[1]);
        } else {
            place_team(0, cfg0, centres_[0]);
            place_team(1, cfg0, centres_[0]);
            teams_[1].park();  // stacked behind team 0 until the first leap
        }
        return positions_;
    }

    std::vector<int> decide(const std::vector<int>& cops, int robber) override {
        positions_ = cops;
        // A robber next to a cop is taken immediately; in particular a robber
        // inside a held retract image is always adjacent to its shadow cop.
        if (int hunter = adjacent_cop(cops, robber); hunter >= 0) {
            positions_[hunter] = robber;
            note_ = "capture";
            frontier_by_round_.push_back(frontier_);
            return positions_;
        }
        advance_phases(robber);
        for (int t : {0, 1})
            teams_[t].apply_moves(per_bag_[teams_[t].bag() < 0 ? 0 : teams_[t].bag()], *g_, dist_,
                                  positions_, robber);
        note_ = teams_[0].describe() + " | " + teams_[1].describe() + " | frontier=" +
                std::to_string(frontier_);
        frontier_by_round_.push_back(frontier_);
        return positions_;
    }

    void after_cop_move(const std::vector<int>& cops, int robber) override {
        positions_ = cops;
        if (std::find(cops.begin(), cops.end(), robber) != cops.end()) return;
        for (int t : {0, 1})
            if (teams_[t].bag() >= 0) teams_[t].update_latches(per_bag_[teams_[t].bag()], positions_, robber);
    }

    std::string note() const override { return note_; }
    std::string name() const override { return "leap"; }

private:
    void place_team(int t, const BagConfig& cfg, int bag_id) {
        for (std::size_t i = 0; i < teams_[t].cop_slots().size(); ++i) {
            int cop = teams_[t].cop_slots()[i];
            positions_[cop] = cfg.positions.empty() ? 0 : cfg.positions[std::min(i, cfg.positions.size() - 1)];
        }
        teams_[t].chase_in_place(bag_id, cfg);
    }

    int adjacent_cop(const std::vector<int>& cops, int robber) const {
        for (std::size_t i = 0; i < cops.size(); ++i)
            if (g_->adjacent_or_equal(cops[i], robber)) return static_cast<int>(i);
        return -1;
    }

    void advance_phases(int robber) {
        auto subtree = robber_subtree(td_, robber);
        if (frontier_ < 0) {
            bool ready = teams_[0].state() == CoverTeam::State::holding &&
                         (!two_centre_start_ || teams_[1].state() == CoverTeam::State::holding);
            if (!ready) return;
            int leaper;
            if (two_centre_start_) {
                // frontier = the centre strictly closer to the robber's bags
                auto d0 = tree_distances_from(td_, centres_[0]);
                int best0 = 1 << 28, best1 = 1 << 28;
                for (int b : subtree) best0 = std::min(best0, d0[b]);
                auto d1 = tree_distances_from(td_, centres_[1]);
                for (int b : subtree) best1 = std::min(best1, d1[b]);
                frontier_ = best0 <= best1 ? centres_[0] : centres_[1];
                frontier_team_ = best0 <= best1 ? 0 : 1;
                leaper = 1 - frontier_team_;
            } else {
                frontier_ = centres_[0];
                frontier_team_ = 0;
                leaper = 1;
            }
            launch(leaper, subtree);
            return;
        }
        int other = 1 - frontier_team_;
        if (teams_[other].state() == CoverTeam::State::holding &&
            teams_[other].bag() != frontier_) {
            // the forward bag is fully guarded: advance and release the old team
            frontier_ = teams_[other].bag();
            frontier_team_ = other;
            launch(1 - other, subtree);
        }
    }

    void launch(int team, const std::vector<int>& subtree) {
        if (std::find(subtree.begin(), subtree.end(), frontier_) != subtree.end())
            throw InternalError("robber inside a fully guarded frontier bag");
        int next = next_bag_towards(td_, frontier_, subtree);
        teams_[team].travel_to(next, bag_config(per_bag_[next], team_size_), positions_, dist_);
    }

    const Graph* g_;
    TreeDecomposition td_;
    std::vector<RccResult> per_bag_;
    std::vector<std::vector<int>> dist_;
    int team_size_ = 1;
    std::vector<int> centres_;
    int diameter_ = 0;
    bool two_centre_start_ = false;
    CoverTeam teams_[2];
    std::vector<int> positions_;
    int frontier_ = -1, frontier_team_ = -1;
    std::vector<int> frontier_by_round_;
    std::string note_;
};

// One cop on a clique tree: standing inside a clique bag guards it; stepping
// into the intersection with the next bag advances the frontier while the
// old bag stays guarded for the duration of the move.
class CliqueBagController : public CopController {
public:
    CliqueBagController(const Graph& g, TreeDecomposition clique_tree)
        : g_(&g), td_(std::move(clique_tree)) {
        for (const auto& bag : td_.bags)
            if (!is_clique(g, bag)) throw ConfigError("controller needs clique bags");
        auto [centres, diameter] = tree_centre_and_diameter(td_);
        (void)diameter;
        bag_ = centres[0];
        if (td_.bags[bag_].empty()) throw ConfigError("empty centre bag");
    }

    int cop_count() const override { return 1; }

    std::vector<int> initial_positions() override {
        pos_ = td_.bags[bag_][0];
        return {pos_};
    }

    std::vector<int> decide(const std::vector<int>& cops, int robber) override {
        pos_ = cops[0];
        if (g_->adjacent_or_equal(pos_, robber)) {
            note_ = "capture";
            return {robber};
        }
        auto subtree = robber_subtree(td_, robber);
        if (std::find(subtree.begin(), subtree.end(), bag_) != subtree.end())
            throw InternalError("robber shares a clique bag with the cop but is not adjacent");
        int next = next_bag_towards(td_, bag_, subtree);
        auto door = td_.bags[bag_].intersect(td_.bags[next]);
        if (door.empty()) throw InternalError("adjacent clique-tree bags must intersect");
        pos_ = door[0];
        bag_ = next;
        note_ = "advance to bag " + std::to_string(bag_);
        return {pos_};
    }

    std::string note() const override { return note_; }
    std::string name() const override { return "clique-bag"; }

private:
    const Graph* g_;
    TreeDecomposition td_;
    int bag_ = 0, pos_ = 0;
    std::string note_;
};

// One team of m cops plus a relay cop. The relay parks on the clique
// intersection between the frontier bag and the next bag, which keeps the
// frontier sealed while the whole team moves up.
class RelayController : public CopController {
public:
    RelayController(const Graph& g, TreeDecomposition td, std::vector<RccResult> per_bag)
        : g_(&g), td_(std::move(td)), per_bag_(std::move(per_bag)), dist_(distances(g)) {
        if (!pairwise_clique_intersections(g, td_))
            throw ConfigError("relay strategy needs clique bag intersections");
        if (static_cast<int>(per_bag_.size()) != td_.bag_count())
            throw ConfigError("need one cover per bag");
        team_size_ = 1;
        for (const auto& r : per_bag_) team_size_ = std::max(team_size_, r.value);
        std::vector<int> slots(team_size_);
        for (int i = 0; i < team_size_; ++i) slots[i] = i;
        team_.init(slots);
        auto [centres, diameter] = tree_centre_and_diameter(td_);
        (void)diameter;
        start_bag_ = centres[0];
    }

    int cop_count() const override { return team_size_ + 1; }
    int team_size() const { return team_size_; }

    std::vector<int> initial_positions() override {
        auto cfg = bag_config(per_bag_[start_bag_], team_size_);
        positions_.assign(cop_count(), 0);
        for (int i = 0; i < team_size_; ++i)
            positions_[i] = cfg.positions.empty() ? 0 : cfg.positions[std::min<std::size_t>(i, cfg.positions.size() - 1)];
        positions_[team_size_] = positions_.empty() ? 0 : positions_[0];
        team_.chase_in_place(start_bag_, cfg);
        frontier_ = -1;
        phase_ = Phase::initial_guard;
        return positions_;
    }

    std::vector<int> decide(const std::vector<int>& cops, int robber) override {
        positions_ = cops;
        for (std::size_t i = 0; i < cops.size(); ++i)
            if (g_->adjacent_or_equal(cops[i], robber)) {
                positions_[i] = robber;
                note_ = "capture";
                return positions_;
            }
        advance_phases(robber);
        team_.apply_moves(per_bag_[team_.bag() < 0 ? start_bag_ : team_.bag()], *g_, dist_,
                          positions_, robber);
        if (phase_ == Phase::relay_travel) {
            int relay = team_size_;
            positions_[relay] = detail::step_towards(*g_, dist_, positions_[relay], relay_target_);
        }
        note_ = team_.describe() + " | relay " +
                (phase_ == Phase::relay_travel ? "travel" : "hold") + " | frontier=" +
                std::to_string(frontier_);
        return positions_;
    }

    void after_cop_move(const std::vector<int>& cops, int robber) override {
        positions_ = cops;
        if (std::find(cops.begin(), cops.end(), robber) != cops.end()) return;
        if (team_.bag() >= 0) team_.update_latches(per_bag_[team_.bag()], positions_, robber);
    }

    std::string note() const override { return note_; }
    std::string name() const override { return "relay"; }

private:
    enum class Phase { initial_guard, relay_travel, team_travel };

    void advance_phases(int robber) {
        auto subtree = robber_subtree(td_, robber);
        switch (phase_) {
            case Phase::initial_guard:
                if (team_.state() != CoverTeam::State::holding) return;
                frontier_ = team_.bag();
                start_relay(subtree);
                return;
            case Phase::relay_travel:
                if (positions_[team_size_] != relay_target_) return;
                // relay in place: the team is free to move up
                team_.travel_to(next_bag_, bag_config(per_bag_[next_bag_], team_size_), positions_,
                                dist_);
                phase_ = Phase::team_travel;
                return;
            case Phase::team_travel:
                if (team_.state() != CoverTeam::State::holding) return;
                frontier_ = team_.bag();
                start_relay(subtree);
                return;
        }
    }

    void start_relay(const std::vector<int>& subtree) {
        if (std::find(subtree.begin(), subtree.end(), frontier_) != subtree.end())
            throw InternalError("robber inside a fully guarded frontier bag");
        next_bag_ = next_bag_towards(td_, frontier_, subtree);
        auto door = td_.bags[frontier_].intersect(td_.bags[next_bag_]);
        if (door.empty()) throw InternalError("adjacent bags of a connected graph must intersect");
        relay_target_ = door[0];
        phase_ = Phase::relay_travel;
    }

    const Graph* g_;
    TreeDecomposition td_;
    std::vector<RccResult> per_bag_;
    std::vector<std::vector<int>> dist_;
    int team_size_ = 1;
    CoverTeam team_;
    std::vector<int> positions_;
    int start_bag_ = 0, frontier_ = -1, next_bag_ = -1, relay_target_ = -1;
    Phase phase_ = Phase::initial_guard;
    std::string note_;
};

// Plays the exact solver's tables; used for --cops N simulations and as the
// benchmark opponent. Falls back to a deterministic chase when losing.
class OptimalController : public CopController {
public:
    OptimalController(const Graph& g, GameSolution solution)
        : g_(&g), solution_(std::move(solution)), dist_(distances(g)) {}

    int cop_count() const override { return solution_.k; }
    std::vector<int> initial_positions() override { return solution_.opening(); }

    std::vector<int> decide(const std::vector<int>& cops, int robber) override {
        if (solution_.value(cops, robber, true) != PursuitSolution::kInfinity)
            return solution_.cop_strategy(cops, robber);
        auto targets = cops;
        for (auto& c : targets) c = detail::step_towards(*g_, dist_, c, robber);
        return targets;
    }

    std::string name() const override { return "optimal"; }

private:
    const Graph* g_;
    GameSolution solution_;
    std::vector<std::vector<int>> dist_;
};

struct GuardTransferMeasure {
    int guard_rounds = 0;     // worst rounds to guard any bag's cover
    int transfer_rounds = 0;  // worst relocation between covers <= 2 apart
};

// guard_rounds reads the certificates; transfer_rounds maximizes the
// bottleneck travel between cover configurations over ordered bag pairs at
// tree distance one or two. Sources are taken as worst case anywhere inside
// each entry's image, since holding cops drift inside their retract.
inline GuardTransferMeasure measure_guard_transfer(const Graph& g, const TreeDecomposition& td,
                                                   const std::vector<RccResult>& per_bag) {
    if (static_cast<int>(per_bag.size()) != td.bag_count())
        throw ConfigError("need one cover per bag");
    GuardTransferMeasure m;
    int team_size = 1;
    for (const auto& r : per_bag) team_size = std::max(team_size, r.value);
    for (const auto& r : per_bag)
        for (const auto& cert : r.cover.entries)
            m.guard_rounds = std::max(m.guard_rounds, static_cast<int>(cert.rounds_to_guard));

    auto dist = distances(g);
    // slot sources per bag: entry slots may start anywhere in the image,
    // pad slots sit on the first config position
    std::vector<BagConfig> configs;
    configs.reserve(td.bag_count());
    for (const auto& r : per_bag) configs.push_back(bag_config(r, team_size));

    auto slot_cost = [&](int bag, int slot, int target) {
        const auto& cfg = configs[bag];
        int entry = cfg.entry_of_position[slot];
        if (entry < 0) return dist[cfg.positions.front()][target];
        int worst = 0;
        for (int v : per_bag[bag].cover.entries[entry].retraction.image)
            worst = std::max(worst, dist[v][target]);
        return worst;
    };

    for (int a = 0; a < td.bag_count(); ++a) {
        if (configs[a].positions.empty()) continue;
        auto tree_dist = tree_distances_from(td, a);
        for (int b = 0; b < td.bag_count(); ++b) {
            if (tree_dist[b] < 1 || tree_dist[b] > 2) continue;
            if (configs[b].positions.empty()) continue;
            const int slots = static_cast<int>(configs[a].positions.size());
            std::vector<std::vector<int>> cost(slots, std::vector<int>(slots, 0));
            for (int i = 0; i < slots; ++i)
                for (int j = 0; j < slots; ++j) cost[i][j] = slot_cost(a, i, configs[b].positions[j]);
            auto perm = detail::bottleneck_assignment(cost);
            int worst = 0;
            for (int i = 0; i < slots; ++i) worst = std::max(worst, cost[i][perm[i]]);
            m.transfer_rounds = std::max(m.transfer_rounds, worst);
        }
    }
    return m;
}

struct CaptureTimeBound {
    int guard_rounds = 0;
    int transfer_rounds = 0;
    int diameter = 0;
    long bound = 0;                    // ceiling form
    std::optional<long> bound_odd;     // floor form, when the diameter is odd

    long applicable() const { return bound_odd ? *bound_odd : bound; }
};

inline CaptureTimeBound capture_time_bound(const GuardTransferMeasure& m, int diameter) {
    CaptureTimeBound b;
    b.guard_rounds = m.guard_rounds;
    b.transfer_rounds = m.transfer_rounds;
    b.diameter = diameter;
    long half_up = (diameter + 1) / 2;
    b.bound = static_cast<long>(m.guard_rounds) * (half_up + 1) +
              static_cast<long>(m.transfer_rounds) * half_up;
    if (diameter % 2 == 1) {
        long half_down = diameter / 2;
        b.bound_odd = static_cast<long>(m.guard_rounds) * (half_down + 1) +
                      static_cast<long>(m.transfer_rounds) * half_down;
    }
    return b;
}

}  // namespace pursuit
