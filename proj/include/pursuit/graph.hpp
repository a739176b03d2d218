#pragma once

// Core graph representation and metric/structural queries.
//
// Graphs are finite, undirected and implicitly reflexive: every vertex can
// always "pass" (stay put) in the pursuit games, so self-loops are never
// stored. Vertex ids are dense integers 0..n-1. A Graph is immutable once
// built and safe to share across threads.

#include <algorithm>
#include <cassert>
#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "pursuit/errors.hpp"

namespace pursuit {

constexpr int kUnreachable = -1;

class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {
        if (n < 0) throw InvalidInput("vertex count must be non-negative");
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }

    int edge_count() const {
        std::size_t deg_sum = 0;
        for (const auto& nb : adj_) deg_sum += nb.size();
        return static_cast<int>(deg_sum / 2);
    }

    // Duplicate edges collapse silently; self-loops are rejected since
    // looping is modelled as the pass move.
    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InvalidInput("self-loop rejected (loops are implicit)");
        if (has_edge(u, v)) return;
        adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
        adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    // Adjacent or equal; the relation the reflexive game moves use.
    bool adjacent_or_equal(int u, int v) const { return u == v || has_edge(u, v); }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    void set_label(int v, std::string label) {
        check_vertex(v);
        if (labels_.empty()) labels_.resize(adj_.size());
        labels_[v] = std::move(label);
    }

    std::string label(int v) const {
        check_vertex(v);
        if (v < static_cast<int>(labels_.size()) && !labels_[v].empty()) return labels_[v];
        return std::to_string(v);
    }

    bool has_labels() const { return !labels_.empty(); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw InvalidInput("vertex id " + std::to_string(v) + " out of range 0.." +
                               std::to_string(vertex_count() - 1));
    }

    std::vector<std::vector<int>> adj_;  // sorted, symmetric, no loops
    std::vector<std::string> labels_;
};

// Sorted duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
        if (!ids_.empty() && ids_.front() < 0) throw InvalidInput("negative vertex id");
    }

    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    bool contains(int v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }
    const std::vector<int>& ids() const { return ids_; }
    int operator[](int i) const { return ids_[i]; }

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    bool is_subset_of(const VertexSet& other) const {
        return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
    }

    VertexSet intersect(const VertexSet& other) const {
        std::vector<int> out;
        std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                              std::back_inserter(out));
        return VertexSet(std::move(out));
    }

    VertexSet unite(const VertexSet& other) const {
        std::vector<int> out;
        std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                       std::back_inserter(out));
        return VertexSet(std::move(out));
    }

    bool operator==(const VertexSet& other) const { return ids_ == other.ids_; }
    bool operator<(const VertexSet& other) const { return ids_ < other.ids_; }

private:
    std::vector<int> ids_;
};

// A view of the subgraph induced by a support set, with a materialized local
// copy (dense ids 0..|support|-1) and maps in both directions.
class InducedSubgraph {
public:
    InducedSubgraph(const Graph& host, VertexSet support)
        : host_(&host), support_(std::move(support)), to_local_(host.vertex_count(), -1) {
        for (int i = 0; i < support_.size(); ++i) {
            if (support_[i] >= host.vertex_count())
                throw InvalidInput("support vertex out of range");
            to_local_[support_[i]] = i;
        }
        local_ = Graph(support_.size());
        for (int i = 0; i < support_.size(); ++i)
            for (int w : host.neighbors(support_[i]))
                if (to_local_[w] > i) local_.add_edge(i, to_local_[w]);
    }

    const Graph& host() const { return *host_; }
    const Graph& local() const { return local_; }
    const VertexSet& support() const { return support_; }
    int to_local(int host_v) const { return to_local_[host_v]; }
    int to_host(int local_v) const { return support_[local_v]; }

private:
    const Graph* host_;
    VertexSet support_;
    Graph local_;
    std::vector<int> to_local_;
};

inline std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u))
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

// All-pairs hop distances; kUnreachable marks disconnected pairs.
inline std::vector<std::vector<int>> distances(const Graph& g) {
    std::vector<std::vector<int>> d(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) d[v] = bfs_distances(g, v);
    return d;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreachable; });
}

// Canonical shortest path: from u walk toward v always picking the
// lowest-id neighbor that decreases the BFS distance to v. Deterministic.
inline std::vector<int> shortest_path(const Graph& g, int u, int v) {
    auto dist_to_v = bfs_distances(g, v);
    if (dist_to_v[u] == kUnreachable) throw InvalidInput("no path between requested vertices");
    std::vector<int> path{u};
    int cur = u;
    while (cur != v) {
        int next = -1;
        for (int w : g.neighbors(cur))
            if (dist_to_v[w] == dist_to_v[cur] - 1) {
                next = w;
                break;
            }
        assert(next != -1);
        path.push_back(next);
        cur = next;
    }
    return path;
}

// True iff consecutive vertices are adjacent and internal distances equal the
// host metric: d(seq[i], seq[j]) == |i-j| for all i, j.
inline bool is_isometric_path(const Graph& g, std::span<const int> seq) {
    if (seq.empty()) throw InvalidInput("empty vertex sequence");
    {
        std::vector<int> sorted(seq.begin(), seq.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidInput("duplicate vertex in path sequence");
    }
    const int len = static_cast<int>(seq.size());
    for (int i = 0; i + 1 < len; ++i)
        if (!g.has_edge(seq[i], seq[i + 1])) return false;
    for (int i = 0; i < len; ++i) {
        auto d = bfs_distances(g, seq[i]);
        for (int j = i + 1; j < len; ++j)
            if (d[seq[j]] != j - i) return false;
    }
    return true;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
    for (int i = 0; i < s.size(); ++i)
        for (int j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j])) return false;
    return true;
}

// If the subgraph induced by `support` is a simple path, returns its vertex
// order starting from the lower-id endpoint. Single vertices count as paths.
inline std::optional<std::vector<int>> induced_path_order(const Graph& g,
                                                          const VertexSet& support) {
    if (support.empty()) return std::nullopt;
    if (support.size() == 1) return std::vector<int>{support[0]};
    std::vector<int> ends;
    for (int v : support) {
        int deg = 0;
        for (int w : g.neighbors(v))
            if (support.contains(w)) ++deg;
        if (deg == 0 || deg > 2) return std::nullopt;
        if (deg == 1) ends.push_back(v);
    }
    if (ends.size() != 2) return std::nullopt;
    std::vector<int> order{std::min(ends[0], ends[1])};
    int prev = -1;
    while (static_cast<int>(order.size()) < support.size()) {
        int cur = order.back(), next = -1;
        for (int w : g.neighbors(cur))
            if (w != prev && support.contains(w)) {
                if (next != -1) return std::nullopt;
                next = w;
            }
        if (next == -1) return std::nullopt;
        prev = cur;
        order.push_back(next);
    }
    return order;
}

// All maximal cliques (Bron-Kerbosch with pivoting), returned sorted for
// deterministic downstream use. Intended for desk-scale graphs.
inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<std::vector<int>> found;
    std::vector<int> r, p, x;
    for (int v = 0; v < g.vertex_count(); ++v) p.push_back(v);

    auto intersect_nb = [&](const std::vector<int>& s, int v) {
        std::vector<int> out;
        const auto& nb = g.neighbors(v);
        std::set_intersection(s.begin(), s.end(), nb.begin(), nb.end(), std::back_inserter(out));
        return out;
    };

    std::function<void(std::vector<int>&, std::vector<int>, std::vector<int>)> expand =
        [&](std::vector<int>& cur, std::vector<int> cand, std::vector<int> excl) {
            if (cand.empty() && excl.empty()) {
                found.push_back(cur);
                return;
            }
            int pivot = -1, best = -1;
            for (int v : cand) {
                int c = static_cast<int>(intersect_nb(cand, v).size());
                if (c > best) best = c, pivot = v;
            }
            for (int v : excl) {
                int c = static_cast<int>(intersect_nb(cand, v).size());
                if (c > best) best = c, pivot = v;
            }
            std::vector<int> tried;
            for (int v : cand) {
                if (pivot != -1 && g.has_edge(pivot, v)) continue;
                tried.push_back(v);
            }
            for (int v : tried) {
                cur.push_back(v);
                expand(cur, intersect_nb(cand, v), intersect_nb(excl, v));
                cur.pop_back();
                cand.erase(std::find(cand.begin(), cand.end(), v));
                excl.insert(std::lower_bound(excl.begin(), excl.end(), v), v);
            }
        };
    expand(r, p, x);

    std::vector<VertexSet> out;
    out.reserve(found.size());
    for (auto& c : found) out.emplace_back(std::move(c));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pursuit
