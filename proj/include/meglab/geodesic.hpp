#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "meglab/graph.hpp"

namespace meglab {

using PathCount = unsigned __int128;

/// All-pairs hop distances plus shortest-path counts sigma(u,v).
/// dist = -1 across components; sigma additions are overflow-checked.
class DistanceTable {
public:
    DistanceTable() = default;
    explicit DistanceTable(int n) : n_(n), dist_(static_cast<std::size_t>(n) * n, -1),
                                    sigma_(static_cast<std::size_t>(n) * n, 0) {}

    int size() const { return n_; }
    int dist(int a, int b) const { return dist_[idx(a, b)]; }
    PathCount sigma(int a, int b) const { return sigma_[idx(a, b)]; }
    bool reachable(int a, int b) const { return dist(a, b) >= 0; }

    void set(int a, int b, int d, PathCount s) {
        dist_[idx(a, b)] = d;
        sigma_[idx(a, b)] = s;
    }

private:
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }
    int n_ = 0;
    std::vector<int> dist_;
    std::vector<PathCount> sigma_;
};

/// One chosen shortest path per unordered pair {u,v}; the seg certificate.
/// Keys are (min,max) pairs; values are vertex sequences from key.first to key.second.
using PathAssignment = std::map<std::pair<int, int>, std::vector<int>>;

DistanceTable apsp(const Graph& g);

/// True iff every shortest a-b path traverses e. Uses the sigma product
/// identity: for some orientation (x,y), d(a,x)+1+d(y,b) = d(a,b) and
/// sigma(a,x)*sigma(y,b) = sigma(a,b).
bool pair_monitors_edge(const Graph& g, const DistanceTable& t, int a, int b, const Edge& e);

/// Edges e such that some pair of M has e on all its shortest paths.
/// Pairs spanning components monitor nothing.
std::vector<Edge> monitored_edges(const Graph& g, const DistanceTable& t, const VertexSet& m);

/// Vertices on at least one shortest path between some pair of S.
VertexSet covered_vertices(const Graph& g, const DistanceTable& t, const VertexSet& s);

/// Edges on at least one shortest path between some pair of S.
std::vector<Edge> covered_edges(const Graph& g, const DistanceTable& t, const VertexSet& s);

/// Edges monitored by some pair (x, y) with x in S and y anywhere in V.
std::vector<Edge> dem_monitored_edges(const Graph& g, const DistanceTable& t, const VertexSet& s);

/// All distinct shortest a-b paths in lexicographic order of vertex sequences.
/// Throws CapExceededError (with the count in the message) if sigma(a,b) > cap.
std::vector<std::vector<int>> enumerate_shortest_paths(const Graph& g, const DistanceTable& t,
                                                       int a, int b,
                                                       std::uint64_t cap = 100000);

/// True iff the union of assigned paths' edges equals E(G). Throws if the
/// assignment misses a pair of S or stores a non-shortest path.
bool check_strong_assignment(const Graph& g, const DistanceTable& t, const VertexSet& s,
                             const PathAssignment& assignment);

}  // namespace meglab
