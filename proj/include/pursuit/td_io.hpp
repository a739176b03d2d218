#pragma once

// PACE 2017 .td exchange format. Header "s td <#bags> <max bag size> <n>",
// bag lines "b <id> <v...>", remaining lines are tree edges; everything is
// 1-indexed on disk. Reading does not validate the decomposition properties;
// validation is an explicit separate step.

#include <istream>
#include <ostream>
#include <sstream>

#include "pursuit/tree_decomposition.hpp"

namespace pursuit {

inline TreeDecomposition read_td(std::istream& in, const Graph& host) {
    TreeDecomposition t;
    std::string line;
    int line_no = 0;
    long bag_count = -1, max_bag = -1, n = -1;
    std::vector<bool> bag_seen;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        if (!header_seen) {
            std::string s, td;
            if (!(ss >> s >> td >> bag_count >> max_bag >> n) || s != "s" || td != "td" ||
                bag_count < 0 || max_bag < 0 || n < 0)
                throw ParseError(line_no, "expected header 's td <#bags> <max bag size> <n>'");
            if (n != host.vertex_count())
                throw ParseError(line_no, "decomposition is for a graph with " + std::to_string(n) +
                                              " vertices, host has " +
                                              std::to_string(host.vertex_count()));
            header_seen = true;
            t.bags.resize(bag_count);
            bag_seen.assign(bag_count, false);
            continue;
        }
        if (line[0] == 'b') {
            char b;
            long id;
            std::istringstream bs(line);
            if (!(bs >> b >> id) || id < 1 || id > bag_count)
                throw ParseError(line_no, "bad bag id");
            if (bag_seen[id - 1]) throw ParseError(line_no, "duplicate bag id " + std::to_string(id));
            bag_seen[id - 1] = true;
            std::vector<int> verts;
            long v;
            while (bs >> v) {
                if (v < 1 || v > n)
                    throw ParseError(line_no, "bag vertex " + std::to_string(v) +
                                                  " out of range 1.." + std::to_string(n));
                verts.push_back(static_cast<int>(v) - 1);
            }
            if (static_cast<long>(verts.size()) > max_bag)
                throw ParseError(line_no, "bag larger than the announced maximum");
            t.bags[id - 1] = VertexSet(std::move(verts));
            continue;
        }
        long a, bqq;
        if (!(ss >> a >> bqq)) throw ParseError(line_no, "expected tree edge '<i> <j>'");
        if (a < 1 || a > bag_count || bqq < 1 || bqq > bag_count)
            throw ParseError(line_no, "tree edge endpoint out of range");
        t.tree_edges.emplace_back(static_cast<int>(a) - 1, static_cast<int>(bqq) - 1);
    }
    if (!header_seen) throw ParseError(line_no, "missing 's td' header");
    return t;
}

inline void write_td(std::ostream& out, const TreeDecomposition& t, const Graph& host) {
    int max_bag = 0;
    for (const auto& bag : t.bags) max_bag = std::max(max_bag, bag.size());
    out << "s td " << t.bag_count() << " " << max_bag << " " << host.vertex_count() << "\n";
    for (int i = 0; i < t.bag_count(); ++i) {
        out << "b " << i + 1;
        for (int v : t.bags[i]) out << " " << v + 1;
        out << "\n";
    }
    for (auto [a, b] : t.tree_edges) out << a + 1 << " " << b + 1 << "\n";
}

}  // namespace pursuit
