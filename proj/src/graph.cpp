#include "meglab/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace meglab {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_pairs,
             std::vector<std::string> labels)
    : n_(n), adj_(n), labels_(std::move(labels)) {
    if (n < 0) throw Error("negative vertex count");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
        throw Error("label vector size does not match vertex count");

    for (auto [a, b] : edge_pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw Error("edge endpoint out of range: (" + std::to_string(a) + "," +
                        std::to_string(b) + ") with n=" + std::to_string(n));
        if (a == b) throw Error("self-loop at vertex " + std::to_string(a));
        edges_.emplace_back(a, b);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    m_ = static_cast<int>(edges_.size());

    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());

    if (n_ <= 64) {
        adj_mask_.assign(n_, 0);
        for (const Edge& e : edges_) {
            adj_mask_[e.u] |= 1ULL << e.v;
            adj_mask_[e.v] |= 1ULL << e.u;
        }
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    if (!adj_mask_.empty()) return adj_mask_[u] >> v & 1;
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
        throw Error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                    ") not in graph");
    return static_cast<int>(it - edges_.begin());
}

std::uint64_t Graph::adjacency_mask(int v) const {
    if (adj_mask_.empty())
        throw GuardError("adjacency masks need <= 64 vertices, graph has " +
                         std::to_string(n_));
    return adj_mask_.at(v);
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph(n, edges);
}

// ---------------------------------------------------------------------------
// Formats.
// Edge list: "n m" header, then m lines "u v", '#' starts a comment line.
// Graph6: standard short form, n <= 62.
// ---------------------------------------------------------------------------

static Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;

    auto next_data_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            auto pos = line.find('#');
            if (pos != std::string::npos) line.erase(pos);
            std::istringstream probe(line);
            std::string tok;
            if (probe >> tok) {
                out = line;
                return true;
            }
        }
        return false;
    };

    std::string data;
    if (!next_data_line(data)) throw ParseError("edge list: empty input");
    {
        std::istringstream hdr(data);
        if (!(hdr >> n >> m) || n < 0 || m < 0)
            throw ParseError("edge list: malformed header '" + data + "'");
        std::string extra;
        if (hdr >> extra) throw ParseError("edge list: trailing tokens in header");
    }
    for (long i = 0; i < m; ++i) {
        if (!next_data_line(data))
            throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        std::istringstream es(data);
        long u, v;
        if (!(es >> u >> v)) throw ParseError("edge list: malformed edge line '" + data + "'");
        std::string extra;
        if (es >> extra) throw ParseError("edge list: trailing tokens in edge line");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge list: vertex index out of range in '" + data + "'");
        if (u == v) throw ParseError("edge list: self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_data_line(data)) throw ParseError("edge list: unexpected extra line '" + data + "'");
    return Graph(static_cast<int>(n), edges);
}

static std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

static Graph parse_graph6(const std::string& text) {
    std::string s = text;
    // strip whitespace and the optional format header
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s.erase(0, header.size());
    if (s.empty()) throw ParseError("graph6: empty input");

    const int c0 = static_cast<unsigned char>(s[0]);
    if (c0 == 126) throw ParseError("graph6: long form (n > 62) not supported");
    if (c0 < 63 || c0 > 125) throw ParseError("graph6: invalid size byte");
    const int n = c0 - 63;

    const long bits_needed = static_cast<long>(n) * (n - 1) / 2;
    const long bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<long>(s.size()) - 1 != bytes_needed)
        throw ParseError("graph6: body length mismatch (expected " +
                         std::to_string(bytes_needed) + " bytes)");

    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int byte = static_cast<unsigned char>(s[1 + bit / 6]);
            if (byte < 63 || byte > 126) throw ParseError("graph6: invalid body byte");
            const int val = byte - 63;
            if (val >> (5 - bit % 6) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

static std::string serialize_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62) throw GuardError("graph6 short form handles n <= 62, graph has " +
                                 std::to_string(n));
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    const long bits = static_cast<long>(n) * (n - 1) / 2;
    std::vector<int> body((bits + 5) / 6, 0);
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.has_edge(i, j)) body[bit / 6] |= 1 << (5 - bit % 6);
        }
    }
    for (int v : body) out.push_back(static_cast<char>(v + 63));
    return out;
}

Graph parse_graph(const std::string& text, GraphFormat format) {
    switch (format) {
        case GraphFormat::EdgeList: return parse_edge_list(text);
        case GraphFormat::Graph6: return parse_graph6(text);
    }
    throw Error("unknown graph format");
}

std::string serialize(const Graph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::EdgeList: return serialize_edge_list(g);
        case GraphFormat::Graph6: return serialize_graph6(g);
    }
    throw Error("unknown graph format");
}

// ---------------------------------------------------------------------------
// Structure queries.
// ---------------------------------------------------------------------------

std::vector<int> component_ids(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (comp[w] == -1) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

int component_count(const Graph& g) {
    const auto comp = component_ids(g);
    return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index.at(vertices[i]) = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges()) {
        if (index[e.u] >= 0 && index[e.v] >= 0) edges.emplace_back(index[e.u], index[e.v]);
    }
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.reserve(vertices.size());
        for (int v : vertices) labels.push_back(g.label(v));
    }
    return Graph(static_cast<int>(vertices.size()), edges, std::move(labels));
}

namespace {

struct ArticulationState {
    const Graph& g;
    std::vector<int> disc, low, parent;
    int timer = 0;
    VertexSet cuts;
    std::vector<Edge> bridge_edges;

    explicit ArticulationState(const Graph& graph)
        : g(graph),
          disc(graph.vertex_count(), -1),
          low(graph.vertex_count(), -1),
          parent(graph.vertex_count(), -1),
          cuts(graph.vertex_count() <= 64 ? graph.vertex_count() : 0) {}

    // Iterative DFS; recursion depth could hit n on subdivided paths.
    void run(int root) {
        struct Frame {
            int v;
            std::size_t next_idx = 0;
        };
        std::vector<Frame> stack{{root}};
        disc[root] = low[root] = timer++;
        int root_children = 0;

        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nbrs = g.neighbors(f.v);
            if (f.next_idx < nbrs.size()) {
                int w = nbrs[f.next_idx++];
                if (disc[w] == -1) {
                    parent[w] = f.v;
                    disc[w] = low[w] = timer++;
                    if (f.v == root) ++root_children;
                    stack.push_back({w});
                } else if (w != parent[f.v]) {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[p] = std::min(low[p], low[f.v]);
                    if (low[f.v] > disc[p]) bridge_edges.emplace_back(p, f.v);
                    if (p != root && low[f.v] >= disc[p] && cuts.universe() > 0) cuts.add(p);
                }
            }
        }
        if (root_children >= 2 && cuts.universe() > 0) cuts.add(root);
    }
};

}  // namespace

VertexSet cut_vertices(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError("cut_vertices requires a connected graph");
    ArticulationState st(g);
    if (g.vertex_count() > 64)
        throw GuardError("cut_vertices result set needs <= 64 vertices");
    if (g.vertex_count() > 0) st.run(0);
    return st.cuts;
}

std::vector<Edge> bridges(const Graph& g) {
    ArticulationState st(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (st.disc[v] == -1) st.run(v);
    }
    std::sort(st.bridge_edges.begin(), st.bridge_edges.end());
    return st.bridge_edges;
}

std::optional<int> girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), par(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(par.begin(), par.end(), -1);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    par[w] = v;
                    q.push(w);
                } else if (w != par[v] && v != par[w]) {
                    // non-tree edge closes a cycle through root of length <= d[v]+d[w]+1
                    int len = dist[v] + dist[w] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

VertexSet simplicial_vertices(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 64) throw GuardError("simplicial_vertices result set needs <= 64 vertices");
    VertexSet out(n);
    for (int v = 0; v < n; ++v) {
        const auto& nbrs = g.neighbors(v);
        bool clique = true;
        for (std::size_t i = 0; i < nbrs.size() && clique; ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                if (!g.has_edge(nbrs[i], nbrs[j])) {
                    clique = false;
                    break;
                }
        if (clique) out.add(v);
    }
    return out;
}

std::vector<std::vector<int>> twin_classes(const Graph& g) {
    const int n = g.vertex_count();
    // Open twins share N(v); closed twins share N[v]. A vertex cannot chain
    // one relation into the other, so merging both groupings is a partition.
    std::vector<int> leader(n);
    for (int v = 0; v < n; ++v) leader[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (leader[v] != v) v = leader[v] = leader[leader[v]];
        return v;
    };
    auto unite = [&](int a, int b) { leader[find(a)] = find(b); };

    auto group_by_key = [&](bool closed) {
        std::vector<std::pair<std::vector<int>, int>> keyed;
        keyed.reserve(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> key = g.neighbors(v);
            if (closed) {
                key.insert(std::lower_bound(key.begin(), key.end(), v), v);
            }
            keyed.emplace_back(std::move(key), v);
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 1; i < keyed.size(); ++i)
            if (keyed[i].first == keyed[i - 1].first) unite(keyed[i].second, keyed[i - 1].second);
    };
    group_by_key(false);
    group_by_key(true);

    std::vector<std::vector<int>> classes(n);
    for (int v = 0; v < n; ++v) classes[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& c : classes)
        if (!c.empty()) out.push_back(std::move(c));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

bool is_two_connected(const Graph& g) {
    if (g.vertex_count() < 3) return false;
    if (!is_connected(g)) return false;
    return cut_vertices(g).empty();
}

}  // namespace meglab
