#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "meglab/errors.hpp"

namespace meglab {

/// Undirected edge stored with u < v.
struct Edge {
    int u;
    int v;

    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw Error("self-loop edge (" + std::to_string(a) + ")");
    }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Vertex subset over 0..n-1 as a 64-bit mask. Instances here are desk scale
/// (graph6 caps serializable graphs at 62 vertices), so one word is enough;
/// constructing a set over a larger universe throws GuardError.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe) {
        if (universe < 0 || universe > 64)
            throw GuardError("VertexSet universe must be 0..64, got " + std::to_string(universe));
    }

    static VertexSet all(int universe) {
        VertexSet s(universe);
        s.bits_ = universe == 64 ? ~0ULL : ((1ULL << universe) - 1);
        return s;
    }

    int universe() const { return n_; }
    std::uint64_t mask() const { return bits_; }

    bool contains(int v) const { return v >= 0 && v < n_ && (bits_ >> v & 1); }
    void add(int v) {
        check(v);
        bits_ |= 1ULL << v;
    }
    void remove(int v) {
        check(v);
        bits_ &= ~(1ULL << v);
    }

    int size() const { return __builtin_popcountll(bits_); }
    bool empty() const { return bits_ == 0; }

    VertexSet operator|(const VertexSet& o) const { return make(bits_ | o.bits_); }
    VertexSet operator&(const VertexSet& o) const { return make(bits_ & o.bits_); }
    VertexSet operator-(const VertexSet& o) const { return make(bits_ & ~o.bits_); }
    bool operator==(const VertexSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool is_subset_of(const VertexSet& o) const { return (bits_ & ~o.bits_) == 0; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(__builtin_ctzll(b));
        return out;
    }

    static VertexSet from_vector(int universe, const std::vector<int>& vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }

private:
    void check(int v) const {
        if (v < 0 || v >= n_)
            throw Error("vertex " + std::to_string(v) + " outside universe 0.." + std::to_string(n_ - 1));
    }
    VertexSet make(std::uint64_t bits) const {
        VertexSet s(n_);
        s.bits_ = bits;
        return s;
    }

    std::uint64_t bits_ = 0;
    int n_ = 0;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable after construction. Labels are generator metadata, never identity.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edge_pairs,
          std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool has_edge(int u, int v) const;
    bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

    /// Edges sorted lexicographically; index into this vector is the canonical
    /// edge id used by the solver bitmasks.
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_index(const Edge& e) const;

    /// Adjacency bitmask of v; only for graphs with <= 64 vertices.
    std::uint64_t adjacency_mask(int v) const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int v) const {
        return labels_.empty() ? std::to_string(v) : labels_.at(v);
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adj_mask_;  // empty when n_ > 64
    std::vector<std::string> labels_;
};

enum class GraphFormat { EdgeList, Graph6 };

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);
Graph parse_graph(const std::string& text, GraphFormat format);
std::string serialize(const Graph& g, GraphFormat format);

/// Connected components, as a component id per vertex (ids are 0-based and
/// assigned in order of the smallest vertex in each component).
std::vector<int> component_ids(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);

/// Induced subgraph on `vertices` (relabelled 0..k-1 in the given order).
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// Articulation vertices of a connected graph (DFS lowpoint).
VertexSet cut_vertices(const Graph& g);

/// Edges whose removal increases the component count.
std::vector<Edge> bridges(const Graph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Vertices whose neighborhood induces a clique (degree-1 vertices included;
/// isolated vertices count as simplicial, their neighborhood is the empty clique).
VertexSet simplicial_vertices(const Graph& g);

/// Partition of V into maximal twin classes: u,v share a class iff N(u)=N(v)
/// or N[u]=N[v]. Classes are sorted internally and by smallest member.
std::vector<std::vector<int>> twin_classes(const Graph& g);

/// Connected, n >= 3, and no cut vertex.
bool is_two_connected(const Graph& g);

}  // namespace meglab
