#pragma once

// Deterministic graph generators for the test corpus and the CLI --gen flag.

#include <cstdint>
#include <random>
#include <sstream>
#include <string>

#include "pursuit/graph.hpp"

namespace pursuit {

inline Graph make_path(int n) {
    if (n < 1) throw InvalidInput("path needs n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph make_cycle(int n) {
    if (n < 3) throw InvalidInput("cycle needs n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph make_clique(int n) {
    if (n < 1) throw InvalidInput("clique needs n >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

// rows x cols Cartesian grid; vertex id = r*cols + c, labelled "(r+1,c+1)".
inline Graph make_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw InvalidInput("grid needs positive dimensions");
    Graph g(rows * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            int v = r * cols + c;
            g.set_label(v, "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")");
            if (c + 1 < cols) g.add_edge(v, v + 1);
            if (r + 1 < rows) g.add_edge(v, v + cols);
        }
    return g;
}

inline int grid_vertex(int cols, int row, int col) { return row * cols + col; }

// Iterated construction: start from a (k+1)-clique, then attach each new
// vertex to a uniformly random existing k-clique.
inline Graph make_k_tree(int k, int n, std::uint64_t seed) {
    if (k < 1) throw InvalidInput("k_tree needs k >= 1");
    if (k >= n) throw InvalidInput("k_tree needs k < n");
    Graph g(n);
    std::vector<std::vector<int>> k_cliques;
    for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) g.add_edge(i, j);
    {
        // all k-subsets of the root clique
        std::vector<int> root;
        for (int i = 0; i <= k; ++i) root.push_back(i);
        for (int skip = 0; skip <= k; ++skip) {
            std::vector<int> c;
            for (int i = 0; i <= k; ++i)
                if (i != skip) c.push_back(root[i]);
            k_cliques.push_back(c);
        }
    }
    std::mt19937_64 rng(seed);
    for (int v = k + 1; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, k_cliques.size() - 1);
        const std::vector<int> base = k_cliques[pick(rng)];
        for (int u : base) g.add_edge(v, u);
        for (int skip = 0; skip < k; ++skip) {
            std::vector<int> c;
            for (int i = 0; i < k; ++i)
                if (i != skip) c.push_back(base[i]);
            c.push_back(v);
            std::sort(c.begin(), c.end());
            k_cliques.push_back(c);
        }
    }
    return g;
}

// Erdos-Renyi G(n,p); fixed pair order makes it deterministic per seed.
inline Graph make_random(int n, double p, std::uint64_t seed) {
    if (n < 1) throw InvalidInput("random graph needs n >= 1");
    if (p < 0.0 || p > 1.0) throw InvalidInput("edge probability must be in [0,1]");
    Graph g(n);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p) g.add_edge(i, j);
    return g;
}

// Retries derived seeds until the sample is connected. Deterministic.
inline Graph make_random_connected(int n, double p, std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        Graph g = make_random(n, p, seed + attempt * 0x9e3779b97f4a7c15ULL);
        if (is_connected(g)) return g;
    }
}

// Parsed form of the CLI generator spec "family:arg1,arg2[,seed]".
struct GenSpec {
    std::string family;
    std::vector<double> args;

    static GenSpec parse(const std::string& text) {
        GenSpec spec;
        auto colon = text.find(':');
        spec.family = text.substr(0, colon);
        if (colon != std::string::npos) {
            std::stringstream ss(text.substr(colon + 1));
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                try {
                    spec.args.push_back(std::stod(tok));
                } catch (const std::exception&) {
                    throw InvalidInput("bad generator argument '" + tok + "' in '" + text + "'");
                }
            }
        }
        return spec;
    }

    Graph build() const {
        auto arg_int = [&](std::size_t i) { return static_cast<int>(args.at(i)); };
        auto arg_seed = [&](std::size_t i, std::uint64_t fallback) {
            return i < args.size() ? static_cast<std::uint64_t>(args[i]) : fallback;
        };
        try {
            if (family == "path") return make_path(arg_int(0));
            if (family == "cycle") return make_cycle(arg_int(0));
            if (family == "clique") return make_clique(arg_int(0));
            if (family == "grid")
                return make_grid(arg_int(0), args.size() > 1 ? arg_int(1) : arg_int(0));
            if (family == "ktree" || family == "k_tree")
                return make_k_tree(arg_int(0), arg_int(1), arg_seed(2, 0));
            if (family == "random") return make_random(arg_int(0), args.at(1), arg_seed(2, 0));
        } catch (const std::out_of_range&) {
            throw InvalidInput("missing argument for generator family '" + family + "'");
        }
        throw InvalidInput("unknown generator family '" + family + "'");
    }

    // Square grids get the dedicated path decomposition in the bound pipeline.
    std::optional<int> square_grid_side() const {
        if (family != "grid" || args.empty()) return std::nullopt;
        int n = static_cast<int>(args[0]);
        if (args.size() > 1 && static_cast<int>(args[1]) != n) return std::nullopt;
        return n;
    }
};

}  // namespace pursuit
