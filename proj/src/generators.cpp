#include "meglab/generators.hpp"

#include <algorithm>
#include <numeric>

namespace meglab {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

void require(bool cond, const std::string& msg) {
    if (!cond) throw FamilyArgError(msg);
}

}  // namespace

Graph gen_G_abcd(int a, int b, int c, int d) {
    require(4 <= a && a <= b && b <= c && c <= d, "gen_G_abcd needs 4 <= a <= b <= c <= d");
    require(d != c + 1, "gen_G_abcd excludes d = c + 1");

    EdgeList edges;
    std::vector<std::string> labels;
    auto add_vertex = [&](const std::string& label) {
        labels.push_back(label);
        return static_cast<int>(labels.size()) - 1;
    };

    const int x1 = add_vertex("x_1");
    const int y = add_vertex("y");
    const int z1 = add_vertex("z_1");
    const int z2 = add_vertex("z_2");

    // biclique {x_1,y} x ({z_1,z_2} + clique W), plus the z_2 w_1 edge
    std::vector<int> w(b - a);
    for (int i = 0; i < b - a; ++i) w[i] = add_vertex("w_" + std::to_string(i + 1));
    for (int side : {x1, y}) {
        edges.emplace_back(side, z1);
        edges.emplace_back(side, z2);
        for (int wi : w) edges.emplace_back(side, wi);
    }
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) edges.emplace_back(w[i], w[j]);
    if (!w.empty()) edges.emplace_back(z2, w[0]);

    // c-b+1 internally disjoint 2-paths z_1 v_i z_2 (the subdivided parallel edges)
    for (int i = 1; i <= c - b + 1; ++i) {
        const int vi = add_vertex("v_" + std::to_string(i));
        edges.emplace_back(z1, vi);
        edges.emplace_back(z2, vi);
    }

    // pendants: u_1..u_{a-3} on y, u_{a-2} on z_1
    for (int i = 1; i <= a - 3; ++i) edges.emplace_back(y, add_vertex("u_" + std::to_string(i)));
    edges.emplace_back(z1, add_vertex("u_" + std::to_string(a - 2)));

    // tail path x_1 x_2 ... x_r u_{a-1} with false twins on the x_{3i}
    const int half = (d - c) / 2;
    const int r = 3 * half + 1;
    std::vector<int> x(r + 1);
    x[1] = x1;
    for (int i = 2; i <= r; ++i) {
        x[i] = add_vertex("x_" + std::to_string(i));
        edges.emplace_back(x[i - 1], x[i]);
    }
    const int u_last = add_vertex("u_" + std::to_string(a - 1));
    edges.emplace_back(x[r], u_last);
    for (int i = 1; i <= half; ++i) {
        const int twin = add_vertex("x'_" + std::to_string(3 * i));
        edges.emplace_back(x[3 * i - 1], twin);
        edges.emplace_back(x[3 * i + 1], twin);
    }
    if ((d - c) % 2 == 1) {
        const int twin = add_vertex("x''_3");
        edges.emplace_back(x[2], twin);
        edges.emplace_back(x[4], twin);
    }

    const int n = static_cast<int>(labels.size());
    return Graph(n, edges, std::move(labels));
}

Graph gen_G_pq(int p, int q) {
    require(1 <= p && p < q, "gen_G_pq needs 1 <= p < q");
    EdgeList edges;
    std::vector<std::string> labels;
    if (p == 1) {
        labels.push_back("y");
        for (int i = 1; i <= q; ++i) {
            labels.push_back("u_" + std::to_string(i));
            edges.emplace_back(0, i);
        }
        return Graph(q + 1, edges, std::move(labels));
    }
    for (int i = 1; i <= p + 1; ++i) labels.push_back("u_" + std::to_string(i));
    for (int i = 0; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j) edges.emplace_back(i, j);
    for (int i = 1; i <= q - p; ++i) {
        labels.push_back("v_" + std::to_string(i));
        edges.emplace_back(0, p + i);
    }
    return Graph(p + 1 + (q - p), edges, std::move(labels));
}

Graph gen_Kk_star(int k) {
    require(k >= 2, "gen_Kk_star needs k >= 2");
    EdgeList edges;
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) labels.push_back("v_" + std::to_string(i + 1));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
    for (int i = 0; i < k; ++i) {
        labels.push_back("u_" + std::to_string(i + 1));
        edges.emplace_back(i, k + i);
    }
    return Graph(2 * k, edges, std::move(labels));
}

Graph gen_Hk(int k) {
    require(k >= 2, "gen_Hk needs k >= 2");
    EdgeList edges;
    std::vector<std::string> labels;
    for (int i = 0; i <= k; ++i) labels.push_back("v_" + std::to_string(i));
    for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) edges.emplace_back(i, j);

    // 3-path v_{i,1} v_{i,2} v_{i,3} v_i per clique vertex
    auto path_vertex = [&](int i, int slot) { return (k + 1) + 3 * i + (slot - 1); };
    for (int i = 0; i <= k; ++i) {
        for (int slot = 1; slot <= 3; ++slot)
            labels.push_back("v_{" + std::to_string(i) + "," + std::to_string(slot) + "}");
        edges.emplace_back(path_vertex(i, 1), path_vertex(i, 2));
        edges.emplace_back(path_vertex(i, 2), path_vertex(i, 3));
        edges.emplace_back(path_vertex(i, 3), i);
    }

    // clique over the v_{i,2}, each edge subdivided once
    int next = (k + 1) * 4;
    for (int i = 0; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            labels.push_back("s_{" + std::to_string(i) + "," + std::to_string(j) + "}");
            edges.emplace_back(path_vertex(i, 2), next);
            edges.emplace_back(path_vertex(j, 2), next);
            ++next;
        }
    }
    return Graph(next, edges, std::move(labels));
}

Graph clique_sum(const Graph& g1, const VertexSet& c1, const Graph& g2, const VertexSet& c2,
                 const std::vector<std::pair<int, int>>* bijection) {
    const auto v1 = c1.to_vector();
    const auto v2 = c2.to_vector();
    require(v1.size() == v2.size(), "clique_sum: clique sizes differ");
    require(v1.size() >= 2, "clique_sum needs cliques of size >= 2");
    auto check_clique = [](const Graph& g, const std::vector<int>& vs, const char* which) {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                require(g.has_edge(vs[i], vs[j]),
                        std::string("clique_sum: ") + which + " does not induce a clique");
    };
    check_clique(g1, v1, "c1");
    check_clique(g2, v2, "c2");

    std::vector<int> map2(g2.vertex_count(), -1);
    if (bijection) {
        require(bijection->size() == v1.size(), "clique_sum: bijection size mismatch");
        for (auto [a, b] : *bijection) {
            require(c1.contains(a) && c2.contains(b), "clique_sum: bijection outside cliques");
            require(map2[b] == -1, "clique_sum: bijection not injective");
            map2[b] = a;
        }
    } else {
        for (std::size_t i = 0; i < v1.size(); ++i) map2[v2[i]] = v1[i];
    }

    const bool labelled = g1.has_labels() || g2.has_labels();
    std::vector<std::string> labels;
    if (labelled)
        for (int v = 0; v < g1.vertex_count(); ++v) labels.push_back(g1.label(v));
    int next = g1.vertex_count();
    for (int v = 0; v < g2.vertex_count(); ++v) {
        if (map2[v] != -1) continue;
        map2[v] = next++;
        if (labelled) labels.push_back(g2.label(v));
    }

    EdgeList edges;
    for (const Edge& e : g1.edges()) edges.emplace_back(e.u, e.v);
    for (const Edge& e : g2.edges()) edges.emplace_back(map2[e.u], map2[e.v]);
    return Graph(next, edges, std::move(labels));
}

Graph subdivide(const Graph& g, int ell) {
    require(ell >= 0, "subdivide needs ell >= 0");
    if (ell == 0) return g;
    EdgeList edges;
    const bool labelled = g.has_labels();
    std::vector<std::string> labels;
    if (labelled)
        for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
    int next = g.vertex_count();
    for (const Edge& e : g.edges()) {
        int prev = e.u;
        for (int j = 1; j <= ell; ++j) {
            if (labelled)
                labels.push_back(g.label(e.u) + "-" + g.label(e.v) + "/" + std::to_string(j));
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, e.v);
    }
    return Graph(next, edges, std::move(labels));
}

Graph product(const Graph& g, const Graph& h, ProductKind kind) {
    const int nh = h.vertex_count();
    auto id = [&](int a, int b) { return a * nh + b; };
    EdgeList edges;
    if (kind != ProductKind::Tensor) {
        for (int a = 0; a < g.vertex_count(); ++a)
            for (const Edge& e : h.edges()) edges.emplace_back(id(a, e.u), id(a, e.v));
        for (const Edge& e : g.edges())
            for (int b = 0; b < nh; ++b) edges.emplace_back(id(e.u, b), id(e.v, b));
    }
    if (kind != ProductKind::Cartesian) {
        for (const Edge& eg : g.edges()) {
            for (const Edge& eh : h.edges()) {
                edges.emplace_back(id(eg.u, eh.u), id(eg.v, eh.v));
                edges.emplace_back(id(eg.u, eh.v), id(eg.v, eh.u));
            }
        }
    }
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(g.vertex_count()) * nh);
    for (int a = 0; a < g.vertex_count(); ++a)
        for (int b = 0; b < nh; ++b) labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
    return Graph(g.vertex_count() * nh, edges, std::move(labels));
}

Graph gen_standard(const std::string& name, const std::vector<int>& params) {
    auto arg = [&](std::size_t i) {
        require(i < params.size(), "gen_standard '" + name + "': missing argument");
        return params[i];
    };
    if (name == "path") {
        const int n = arg(0);
        require(n >= 1, "path needs n >= 1");
        EdgeList edges;
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        return Graph(n, edges);
    }
    if (name == "cycle") {
        const int n = arg(0);
        require(n >= 3, "cycle needs n >= 3");
        EdgeList edges;
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
        return Graph(n, edges);
    }
    if (name == "complete") {
        const int n = arg(0);
        require(n >= 1, "complete needs n >= 1");
        EdgeList edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        return Graph(n, edges);
    }
    if (name == "star") {
        const int q = arg(0);
        require(q >= 1, "star needs q >= 1");
        EdgeList edges;
        for (int i = 1; i <= q; ++i) edges.emplace_back(0, i);
        return Graph(q + 1, edges);
    }
    if (name == "biclique") {
        const int a = arg(0), b = arg(1);
        require(a >= 1 && b >= 1, "biclique needs a, b >= 1");
        EdgeList edges;
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
        return Graph(a + b, edges);
    }
    if (name == "multipartite") {
        require(params.size() >= 2, "multipartite needs >= 2 part sizes");
        std::vector<int> start{0};
        for (int p : params) {
            require(p >= 1, "multipartite parts must be >= 1");
            start.push_back(start.back() + p);
        }
        EdgeList edges;
        for (std::size_t pa = 0; pa < params.size(); ++pa)
            for (std::size_t pb = pa + 1; pb < params.size(); ++pb)
                for (int i = start[pa]; i < start[pa + 1]; ++i)
                    for (int j = start[pb]; j < start[pb + 1]; ++j) edges.emplace_back(i, j);
        return Graph(start.back(), edges);
    }
    if (name == "hypercube") {
        const int d = arg(0);
        require(d >= 0 && d <= 6, "hypercube needs 0 <= d <= 6");
        const int n = 1 << d;
        EdgeList edges;
        for (int i = 0; i < n; ++i)
            for (int b = 0; b < d; ++b)
                if (i < (i ^ (1 << b))) edges.emplace_back(i, i ^ (1 << b));
        return Graph(n, edges);
    }
    if (name == "grid2") {
        const int k = arg(0);
        require(k >= 1, "grid2 needs k >= 1");
        return product(gen_standard("path", {k}), gen_standard("path", {2}),
                       ProductKind::Cartesian);
    }
    if (name == "petersen") {
        EdgeList edges;
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(i, i + 5);
            edges.emplace_back(i + 5, (i + 2) % 5 + 5);
        }
        return Graph(10, edges);
    }
    if (name == "fan") {
        const int k = arg(0);
        require(k >= 2, "fan needs path length >= 2");
        EdgeList edges;
        for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
        for (int i = 1; i < k; ++i) edges.emplace_back(i, i + 1);
        return Graph(k + 1, edges);
    }
    if (name == "fig1") {
        // 5-cycle v_1..v_5 plus chords v_1 v_3 and v_2 v_5
        EdgeList edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}, {1, 4}};
        std::vector<std::string> labels{"v_1", "v_2", "v_3", "v_4", "v_5"};
        return Graph(5, edges, std::move(labels));
    }
    throw FamilyArgError("gen_standard: unknown family '" + name + "'");
}

const char* graph_class_name(GraphClass c) {
    switch (c) {
        case GraphClass::Cograph: return "cograph";
        case GraphClass::Block: return "block";
        case GraphClass::WpChordal: return "wp_chordal";
        case GraphClass::Split: return "split";
        case GraphClass::ProperInterval: return "proper_interval";
    }
    return "?";
}

namespace {

// cograph via a random cotree; a join at the root keeps it connected
void cograph_rec(int n, bool join, int base, Rng& rng, EdgeList& edges) {
    if (n == 1) return;
    const int left = rng.range(1, n - 1);
    const int right = n - left;
    cograph_rec(left, !join, base, rng, edges);
    cograph_rec(right, !join, base + left, rng, edges);
    if (join) {
        for (int i = 0; i < left; ++i)
            for (int j = 0; j < right; ++j) edges.emplace_back(base + i, base + left + j);
    }
}

Graph gen_cograph(int size, Rng& rng) {
    EdgeList edges;
    cograph_rec(size, true, 0, rng, edges);
    return Graph(size, edges);
}

Graph gen_block(int size, Rng& rng) {
    EdgeList edges;
    int used = std::min(size, rng.range(2, 4));
    for (int i = 0; i < used; ++i)
        for (int j = i + 1; j < used; ++j) edges.emplace_back(i, j);
    while (used < size) {
        const int attach = rng.range(0, used - 1);
        const int grow = std::min(size - used, rng.range(1, 3));
        std::vector<int> clique{attach};
        for (int i = 0; i < grow; ++i) clique.push_back(used++);
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                edges.emplace_back(clique[i], clique[j]);
    }
    return Graph(size, edges);
}

Graph gen_wp_chordal(int size, Rng& rng) {
    std::vector<std::vector<int>> bags;
    int used = 0;
    while (used < size) {
        const int bag = std::min(size - used, rng.range(1, 4));
        std::vector<int> members(bag);
        std::iota(members.begin(), members.end(), used);
        used += bag;
        bags.push_back(std::move(members));
    }
    EdgeList edges;
    for (const auto& bag : bags)
        for (std::size_t i = 0; i < bag.size(); ++i)
            for (std::size_t j = i + 1; j < bag.size(); ++j) edges.emplace_back(bag[i], bag[j]);
    auto boundary = [&](const std::vector<int>& bag) {
        std::vector<int> out;
        for (int v : bag)
            if (rng.chance(0.5)) out.push_back(v);
        if (out.empty()) out.push_back(bag[rng.range(0, static_cast<int>(bag.size()) - 1)]);
        return out;
    };
    for (std::size_t i = 1; i < bags.size(); ++i) {
        const std::size_t parent = rng.below(i);
        for (int u : boundary(bags[i]))
            for (int v : boundary(bags[parent])) edges.emplace_back(u, v);
    }
    return Graph(size, edges);
}

Graph gen_split(int size, Rng& rng) {
    const int clique = std::min(size, rng.range(2, std::max(2, size - 1)));
    EdgeList edges;
    for (int i = 0; i < clique; ++i)
        for (int j = i + 1; j < clique; ++j) edges.emplace_back(i, j);
    for (int v = clique; v < size; ++v) {
        const int deg = rng.range(1, clique);
        std::vector<int> picks(clique);
        std::iota(picks.begin(), picks.end(), 0);
        for (int i = 0; i < deg; ++i) {
            const int j = i + static_cast<int>(rng.below(clique - i));
            std::swap(picks[i], picks[j]);
            edges.emplace_back(v, picks[i]);
        }
    }
    return Graph(size, edges);
}

Graph gen_proper_interval(int size, Rng& rng) {
    // unit intervals laid left to right; consecutive gaps below 1 keep it
    // connected, gap size controls density
    std::vector<double> left(size);
    for (int i = 1; i < size; ++i) left[i] = left[i - 1] + 0.02 + 0.95 * rng.unit();
    EdgeList edges;
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j)
            if (left[j] - left[i] <= 1.0) edges.emplace_back(i, j);
    return Graph(size, edges);
}

}  // namespace

Graph gen_class_random(GraphClass cls, int size, std::uint64_t seed) {
    require(size >= 2, "gen_class_random needs size >= 2");
    Rng rng(seed);
    switch (cls) {
        case GraphClass::Cograph: return gen_cograph(size, rng);
        case GraphClass::Block: return gen_block(size, rng);
        case GraphClass::WpChordal: return gen_wp_chordal(size, rng);
        case GraphClass::Split: return gen_split(size, rng);
        case GraphClass::ProperInterval: return gen_proper_interval(size, rng);
    }
    throw FamilyArgError("unknown graph class");
}

Graph gen_random_connected(int n, double edge_prob, std::uint64_t seed) {
    require(n >= 2, "gen_random_connected needs n >= 2");
    require(edge_prob > 0.0 && edge_prob <= 1.0, "edge probability must be in (0, 1]");
    Rng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        EdgeList edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.chance(edge_prob)) edges.emplace_back(i, j);
        Graph g(n, edges);
        if (is_connected(g)) return g;
    }
    throw Error("gen_random_connected: no connected sample within 1000 attempts");
}

Graph gen_random_tree(int n, std::uint64_t seed) {
    require(n >= 1, "gen_random_tree needs n >= 1");
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{0, 1}});
    Rng rng(seed);
    std::vector<int> pruefer(n - 2);
    for (int& x : pruefer) x = static_cast<int>(rng.below(n));

    std::vector<int> degree(n, 1);
    for (int x : pruefer) ++degree[x];
    EdgeList edges;
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : pruefer) {
        edges.emplace_back(leaf, x);
        if (--degree[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return Graph(n, edges);
}

}  // namespace meglab
