#pragma once

// Robber behaviours for simulations: optimal (from solved game tables),
// greedy distance maximization, seeded random, plus simple adversaries used
// by the guard verifier.

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "pursuit/game_solver.hpp"
#include "pursuit/graph.hpp"

namespace pursuit {

class RobberPolicy {
public:
    virtual ~RobberPolicy() = default;
    virtual void reset(std::uint64_t /*seed*/) {}
    virtual int place(const std::vector<int>& cops) = 0;
    virtual int move(const std::vector<int>& cops, int robber) = 0;
    virtual std::string name() const = 0;
};

namespace detail {
inline int min_dist_to_cops(const std::vector<std::vector<int>>& dist,
                            const std::vector<int>& cops, int v) {
    int best = 1 << 28;
    for (int c : cops) best = std::min(best, dist[c][v]);
    return best;
}
}  // namespace detail

// Picks the start farthest from the cops, then never moves.
class StationaryRobber : public RobberPolicy {
public:
    explicit StationaryRobber(const Graph& g) : dist_(distances(g)) {}
    int place(const std::vector<int>& cops) override {
        int best = 0, best_d = -1;
        for (std::size_t v = 0; v < dist_.size(); ++v) {
            int d = detail::min_dist_to_cops(dist_, cops, static_cast<int>(v));
            if (d > best_d) best_d = d, best = static_cast<int>(v);
        }
        return best;
    }
    int move(const std::vector<int>&, int robber) override { return robber; }
    std::string name() const override { return "stationary"; }

private:
    std::vector<std::vector<int>> dist_;
};

// Maximizes the distance to the nearest cop each step; never steps onto a
// cop while an alternative exists. Ties break toward the lowest vertex id.
class GreedyRobber : public RobberPolicy {
public:
    explicit GreedyRobber(const Graph& g) : g_(&g), dist_(distances(g)) {}
    int place(const std::vector<int>& cops) override {
        int best = 0, best_d = -1;
        for (int v = 0; v < g_->vertex_count(); ++v) {
            int d = detail::min_dist_to_cops(dist_, cops, v);
            if (d > best_d) best_d = d, best = v;
        }
        return best;
    }
    int move(const std::vector<int>& cops, int robber) override {
        int best = robber, best_d = -1;
        auto consider = [&](int v) {
            int d = detail::min_dist_to_cops(dist_, cops, v);
            if (d > best_d) best_d = d, best = v;
        };
        consider(robber);
        for (int v : g_->neighbors(robber)) consider(v);
        return best;
    }
    std::string name() const override { return "greedy"; }

private:
    const Graph* g_;
    std::vector<std::vector<int>> dist_;
};

// Uniform over non-suicidal moves; passes when surrounded.
class RandomRobber : public RobberPolicy {
public:
    RandomRobber(const Graph& g, std::uint64_t seed) : g_(&g), rng_(seed) {}
    void reset(std::uint64_t seed) override { rng_.seed(seed); }
    int place(const std::vector<int>& cops) override {
        std::vector<int> options;
        for (int v = 0; v < g_->vertex_count(); ++v)
            if (std::find(cops.begin(), cops.end(), v) == cops.end()) options.push_back(v);
        if (options.empty()) return 0;
        std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
        return options[pick(rng_)];
    }
    int move(const std::vector<int>& cops, int robber) override {
        std::vector<int> options;
        auto safe = [&](int v) { return std::find(cops.begin(), cops.end(), v) == cops.end(); };
        if (safe(robber)) options.push_back(robber);
        for (int v : g_->neighbors(robber))
            if (safe(v)) options.push_back(v);
        if (options.empty()) return robber;
        std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
        return options[pick(rng_)];
    }
    std::string name() const override { return "random"; }

private:
    const Graph* g_;
    std::mt19937_64 rng_;
};

// Heads straight for the nearest vertex of a target set. Used to probe
// guarded retracts: entering must be fatal.
class RushRobber : public RobberPolicy {
public:
    RushRobber(const Graph& g, VertexSet targets)
        : g_(&g), targets_(std::move(targets)), dist_(distances(g)) {}
    int place(const std::vector<int>& cops) override {
        int best = 0, best_d = -1;
        for (int v = 0; v < g_->vertex_count(); ++v) {
            int d = detail::min_dist_to_cops(dist_, cops, v);
            if (d > best_d) best_d = d, best = v;
        }
        return best;
    }
    int move(const std::vector<int>&, int robber) override {
        if (targets_.contains(robber)) return robber;
        int goal = -1, goal_d = 1 << 28;
        for (int t : targets_)
            if (dist_[robber][t] < goal_d) goal_d = dist_[robber][t], goal = t;
        if (goal == -1) return robber;
        for (int v : g_->neighbors(robber))
            if (dist_[v][goal] == dist_[robber][goal] - 1) return v;
        return robber;
    }
    std::string name() const override { return "rush"; }

private:
    const Graph* g_;
    VertexSet targets_;
    std::vector<std::vector<int>> dist_;
};

// Plays the value-maximizing reply from exact game tables solved for the
// simulated cop count.
class OptimalRobber : public RobberPolicy {
public:
    explicit OptimalRobber(GameSolution solution) : solution_(std::move(solution)) {}
    int place(const std::vector<int>& cops) override {
        return solution_.robber_best_start(cops);
    }
    int move(const std::vector<int>& cops, int robber) override {
        return solution_.robber_strategy(cops, robber);
    }
    std::string name() const override { return "optimal"; }

private:
    GameSolution solution_;
};

}  // namespace pursuit
