#pragma once

// Independent reference implementations used only by tests. Everything here
// works from first principles (explicit path enumeration, full subset scans)
// and deliberately avoids the library's sigma identities and pruning.

#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "meglab/graph.hpp"

namespace oracle {

using meglab::Edge;
using meglab::Graph;

inline std::vector<int> bfs_dist(const Graph& g, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

// Every shortest a-b path, found by bounded DFS over simple paths.
inline std::vector<std::vector<int>> all_shortest_paths(const Graph& g, int a, int b) {
    const auto dist = bfs_dist(g, a);
    std::vector<std::vector<int>> out;
    if (dist[b] < 0) return out;
    const int target = dist[b];
    std::vector<int> path{a};
    std::vector<char> used(g.vertex_count(), 0);
    used[a] = 1;
    auto dfs = [&](auto&& self, int v) -> void {
        if (static_cast<int>(path.size()) - 1 > target) return;
        if (v == b) {
            if (static_cast<int>(path.size()) - 1 == target) out.push_back(path);
            return;
        }
        for (int w : g.neighbors(v)) {
            if (used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            used[w] = 0;
        }
    };
    dfs(dfs, a);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool path_has_edge(const std::vector<int>& path, const Edge& e) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (Edge(path[i], path[i + 1]) == e) return true;
    return false;
}

inline bool pair_monitors(const Graph& g, int a, int b, const Edge& e) {
    const auto paths = all_shortest_paths(g, a, b);
    if (paths.empty()) return false;
    for (const auto& p : paths)
        if (!path_has_edge(p, e)) return false;
    return true;
}

inline bool is_meg_set(const Graph& g, const std::vector<int>& members) {
    for (const Edge& e : g.edges()) {
        bool hit = false;
        for (std::size_t i = 0; i < members.size() && !hit; ++i)
            for (std::size_t j = i + 1; j < members.size() && !hit; ++j)
                hit = pair_monitors(g, members[i], members[j], e);
        if (!hit) return false;
    }
    return true;
}

inline bool is_edge_geodetic_set(const Graph& g, const std::vector<int>& members) {
    for (const Edge& e : g.edges()) {
        bool hit = false;
        for (std::size_t i = 0; i < members.size() && !hit; ++i)
            for (std::size_t j = i + 1; j < members.size() && !hit; ++j)
                for (const auto& p : all_shortest_paths(g, members[i], members[j]))
                    if (path_has_edge(p, e)) {
                        hit = true;
                        break;
                    }
        if (!hit) return false;
    }
    return true;
}

inline bool is_geodetic_set(const Graph& g, const std::vector<int>& members) {
    std::vector<char> covered(g.vertex_count(), 0);
    for (int v : members) covered[v] = 1;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            for (const auto& p : all_shortest_paths(g, members[i], members[j]))
                for (int v : p) covered[v] = 1;
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

inline bool is_dem_set(const Graph& g, const std::vector<int>& members) {
    for (const Edge& e : g.edges()) {
        bool hit = false;
        for (std::size_t i = 0; i < members.size() && !hit; ++i)
            for (int y = 0; y < g.vertex_count() && !hit; ++y)
                if (y != members[i]) hit = pair_monitors(g, members[i], y, e);
        if (!hit) return false;
    }
    return true;
}

enum class Kind { Geodetic, EdgeGeodetic, Dem, Meg };

// Pruning-free minimum: cardinality ascending, combinations in lexicographic
// order over all vertices, first hit wins.
inline std::pair<int, std::vector<int>> min_set(const Graph& g, Kind kind) {
    const int n = g.vertex_count();
    auto qualifies = [&](const std::vector<int>& s) {
        switch (kind) {
            case Kind::Geodetic: return is_geodetic_set(g, s);
            case Kind::EdgeGeodetic: return is_edge_geodetic_set(g, s);
            case Kind::Dem: return is_dem_set(g, s);
            case Kind::Meg: return is_meg_set(g, s);
        }
        return false;
    };
    for (int k = 1; k <= n; ++k) {
        std::vector<int> combo(k);
        for (int i = 0; i < k; ++i) combo[i] = i;
        while (true) {
            if (qualifies(combo)) return {k, combo};
            int pos = k - 1;
            while (pos >= 0 && combo[pos] == n - k + pos) --pos;
            if (pos < 0) break;
            ++combo[pos];
            for (int i = pos + 1; i < k; ++i) combo[i] = combo[i - 1] + 1;
        }
    }
    return {-1, {}};
}

// v is in every MEG-set iff no subset avoiding v is an MEG-set; computed the
// slow way: collect all MEG-sets, intersect.
inline std::vector<int> forced_by_enumeration(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> in_all(n, 1);
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) members.push_back(v);
        if (!is_meg_set(g, members)) continue;
        for (int v = 0; v < n; ++v)
            if (!(mask >> v & 1)) in_all[v] = 0;
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (in_all[v]) out.push_back(v);
    return out;
}

// Shortest cycle by edge deletion: cycle length through edge (u,v) is
// dist_{G-uv}(u,v) + 1.
inline std::optional<int> girth(const Graph& g) {
    int best = -1;
    for (const Edge& e : g.edges()) {
        std::vector<std::pair<int, int>> edges;
        for (const Edge& f : g.edges())
            if (f != e) edges.emplace_back(f.u, f.v);
        Graph h(g.vertex_count(), edges);
        const auto dist = bfs_dist(h, e.u);
        if (dist[e.v] >= 0 && (best == -1 || dist[e.v] + 1 < best)) best = dist[e.v] + 1;
    }
    if (best == -1) return std::nullopt;
    return best;
}

// Exhaustive strong edge-geodetic number: try every subset (cardinality
// ascending), and for each subset every combination of one shortest path per
// pair. Tiny graphs only.
inline int seg(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    for (int k = 2; k <= n; ++k) {
        std::vector<int> combo(k);
        for (int i = 0; i < k; ++i) combo[i] = i;
        while (true) {
            std::vector<std::vector<std::vector<int>>> pair_paths;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    pair_paths.push_back(all_shortest_paths(g, combo[i], combo[j]));
            std::set<Edge> covered;
            auto assign = [&](auto&& self, std::size_t idx) -> bool {
                if (static_cast<int>(covered.size()) == m) return true;
                if (idx == pair_paths.size()) return false;
                for (const auto& path : pair_paths[idx]) {
                    std::vector<Edge> added;
                    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                        Edge e(path[i], path[i + 1]);
                        if (covered.insert(e).second) added.push_back(e);
                    }
                    if (self(self, idx + 1)) return true;
                    for (const Edge& e : added) covered.erase(e);
                }
                return false;
            };
            if (assign(assign, 0)) return k;
            int pos = k - 1;
            while (pos >= 0 && combo[pos] == n - k + pos) --pos;
            if (pos < 0) break;
            ++combo[pos];
            for (int i = pos + 1; i < k; ++i) combo[i] = combo[i - 1] + 1;
        }
    }
    return -1;
}

// Plain backtracking colorability check, no ordering heuristics.
inline bool colorable(const Graph& g, int k) {
    std::vector<int> color(g.vertex_count(), -1);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == g.vertex_count()) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int u : g.neighbors(v))
                if (color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (self(self, v + 1)) return true;
            color[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

inline int chromatic(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    for (int k = 1;; ++k)
        if (colorable(g, k)) return k;
}

}  // namespace oracle
