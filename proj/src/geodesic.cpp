#include "meglab/geodesic.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace meglab {

namespace {

PathCount checked_add(PathCount a, PathCount b) {
    PathCount s = a + b;
    if (s < a) throw OverflowError("shortest-path count overflow");
    return s;
}

void require_reachable(const DistanceTable& t, int a, int b, const char* what) {
    if (!t.reachable(a, b))
        throw DisconnectedError(std::string(what) + ": vertices " + std::to_string(a) + " and " +
                                std::to_string(b) + " are in different components");
}

}  // namespace

DistanceTable apsp(const Graph& g) {
    const int n = g.vertex_count();
    DistanceTable table(n);
    std::vector<int> dist(n);
    std::vector<PathCount> sigma(n);
    std::vector<int> order;
    order.reserve(n);

    for (int src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), PathCount{0});
        order.clear();
        dist[src] = 0;
        sigma[src] = 1;
        std::queue<int> q;
        q.push(src);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
                if (dist[w] == dist[v] + 1) sigma[w] = checked_add(sigma[w], sigma[v]);
            }
        }
        for (int v = 0; v < n; ++v) table.set(src, v, dist[v], sigma[v]);
    }
    return table;
}

bool pair_monitors_edge(const Graph& g, const DistanceTable& t, int a, int b, const Edge& e) {
    if (!g.has_edge(e)) throw Error("pair_monitors_edge: edge not in graph");
    require_reachable(t, a, b, "pair_monitors_edge");
    const PathCount total = t.sigma(a, b);
    const int d = t.dist(a, b);
    for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        if (t.dist(a, x) < 0 || t.dist(y, b) < 0) continue;
        if (t.dist(a, x) + 1 + t.dist(y, b) != d) continue;
        PathCount prod;
        if (__builtin_mul_overflow(t.sigma(a, x), t.sigma(y, b), &prod)) continue;
        if (prod == total) return true;
    }
    return false;
}

std::vector<Edge> monitored_edges(const Graph& g, const DistanceTable& t, const VertexSet& m) {
    std::vector<Edge> out;
    const auto members = m.to_vector();
    for (const Edge& e : g.edges()) {
        bool hit = false;
        for (std::size_t i = 0; i < members.size() && !hit; ++i) {
            for (std::size_t j = i + 1; j < members.size() && !hit; ++j) {
                if (!t.reachable(members[i], members[j])) continue;
                hit = pair_monitors_edge(g, t, members[i], members[j], e);
            }
        }
        if (hit) out.push_back(e);
    }
    return out;
}

VertexSet covered_vertices(const Graph& g, const DistanceTable& t, const VertexSet& s) {
    const int n = g.vertex_count();
    VertexSet out(n);
    const auto members = s.to_vector();
    for (int w = 0; w < n; ++w) {
        bool hit = false;
        for (std::size_t i = 0; i < members.size() && !hit; ++i) {
            for (std::size_t j = i; j < members.size() && !hit; ++j) {
                int u = members[i], v = members[j];
                if (!t.reachable(u, v) || !t.reachable(u, w)) continue;
                hit = t.dist(u, w) + t.dist(w, v) == t.dist(u, v);
            }
        }
        if (hit) out.add(w);
    }
    return out;
}

std::vector<Edge> covered_edges(const Graph& g, const DistanceTable& t, const VertexSet& s) {
    std::vector<Edge> out;
    const auto members = s.to_vector();
    for (const Edge& e : g.edges()) {
        bool hit = false;
        for (std::size_t i = 0; i < members.size() && !hit; ++i) {
            for (std::size_t j = i + 1; j < members.size() && !hit; ++j) {
                int u = members[i], v = members[j];
                if (!t.reachable(u, v)) continue;
                for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
                    if (t.reachable(u, x) && t.reachable(y, v) &&
                        t.dist(u, x) + 1 + t.dist(y, v) == t.dist(u, v)) {
                        hit = true;
                        break;
                    }
                }
            }
        }
        if (hit) out.push_back(e);
    }
    return out;
}

std::vector<Edge> dem_monitored_edges(const Graph& g, const DistanceTable& t, const VertexSet& s) {
    std::vector<Edge> out;
    const auto members = s.to_vector();
    const int n = g.vertex_count();
    for (const Edge& e : g.edges()) {
        bool hit = false;
        for (std::size_t i = 0; i < members.size() && !hit; ++i) {
            for (int y = 0; y < n && !hit; ++y) {
                int x = members[i];
                if (x == y || !t.reachable(x, y)) continue;
                hit = pair_monitors_edge(g, t, x, y, e);
            }
        }
        if (hit) out.push_back(e);
    }
    return out;
}

std::vector<std::vector<int>> enumerate_shortest_paths(const Graph& g, const DistanceTable& t,
                                                       int a, int b, std::uint64_t cap) {
    require_reachable(t, a, b, "enumerate_shortest_paths");
    if (t.sigma(a, b) > PathCount{cap})
        throw CapExceededError("shortest-path count for pair (" + std::to_string(a) + "," +
                               std::to_string(b) + ") exceeds cap " + std::to_string(cap));

    // Walk from a towards b, always decreasing dist(.,b); visiting neighbors in
    // ascending order yields lexicographic path order.
    std::vector<std::vector<int>> paths;
    std::vector<int> cur{a};
    std::vector<std::size_t> cursor{0};
    while (!cur.empty()) {
        int v = cur.back();
        if (v == b) {
            paths.push_back(cur);
            cur.pop_back();
            cursor.pop_back();
            continue;
        }
        const auto& nbrs = g.neighbors(v);
        bool advanced = false;
        for (std::size_t& i = cursor.back(); i < nbrs.size();) {
            int w = nbrs[i++];
            if (t.reachable(w, b) && t.dist(w, b) == t.dist(v, b) - 1) {
                cur.push_back(w);
                cursor.push_back(0);
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            cur.pop_back();
            cursor.pop_back();
        }
    }
    return paths;
}

bool check_strong_assignment(const Graph& g, const DistanceTable& t, const VertexSet& s,
                             const PathAssignment& assignment) {
    const auto members = s.to_vector();
    std::set<Edge> covered;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const std::pair<int, int> key{members[i], members[j]};
            auto it = assignment.find(key);
            if (it == assignment.end())
                throw Error("strong assignment misses pair (" + std::to_string(key.first) + "," +
                            std::to_string(key.second) + ")");
            const auto& path = it->second;
            if (path.empty() || path.front() != key.first || path.back() != key.second)
                throw Error("assigned path endpoints do not match its pair");
            require_reachable(t, key.first, key.second, "check_strong_assignment");
            if (static_cast<int>(path.size()) - 1 != t.dist(key.first, key.second))
                throw Error("assigned path for (" + std::to_string(key.first) + "," +
                            std::to_string(key.second) + ") is not shortest");
            for (std::size_t k = 0; k + 1 < path.size(); ++k) {
                if (!g.has_edge(path[k], path[k + 1]))
                    throw Error("assigned path uses a non-edge");
                covered.insert(Edge(path[k], path[k + 1]));
            }
        }
    }
    return static_cast<int>(covered.size()) == g.edge_count();
}

}  // namespace meglab
