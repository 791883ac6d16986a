#include "meglab/solvers.hpp"

#include <algorithm>
#include <numeric>

namespace meglab {

namespace {

// ---------------------------------------------------------------------------
// Flat multi-word bitmask storage for per-pair coverage masks.
// ---------------------------------------------------------------------------

struct MaskStore {
    int words = 1;
    std::vector<std::uint64_t> buf;

    void init(std::size_t count, int w) {
        words = w;
        buf.assign(count * w, 0);
    }
    std::uint64_t* at(std::size_t i) { return buf.data() + i * words; }
    const std::uint64_t* at(std::size_t i) const { return buf.data() + i * words; }
};

inline void mask_or(std::uint64_t* dst, const std::uint64_t* src, int w) {
    for (int i = 0; i < w; ++i) dst[i] |= src[i];
}

inline bool mask_eq(const std::uint64_t* a, const std::uint64_t* b, int w) {
    for (int i = 0; i < w; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

inline void mask_set_bit(std::uint64_t* m, int bit) { m[bit >> 6] |= 1ULL << (bit & 63); }

// ---------------------------------------------------------------------------
// Cardinality-ascending subset scan. Contributions are either per-pair masks
// (geodetic/edge-geodetic/MEG) or per-vertex masks (dem). Monotone coverage
// lets two prunes stay exact: an early-full prefix completes with the next
// free vertices (still the lexicographically first hit), and a prefix whose
// remaining potential cannot reach full is abandoned.
// ---------------------------------------------------------------------------

struct ScanSetup {
    int n = 0;
    int words = 1;
    std::vector<std::uint64_t> full;    // target mask
    MaskStore pair_masks;               // n*n entries when pair-based, else empty
    MaskStore row_masks;                // n entries when row-based, else empty
    std::vector<int> forced;            // ascending
    std::vector<int> free_vertices;     // ascending, disjoint from forced
    bool pair_based = true;

    const std::uint64_t* pm(int a, int b) const {
        return pair_masks.at(static_cast<std::size_t>(a) * n + b);
    }
};

struct ScanResult {
    bool found = false;
    std::vector<int> members;
    std::uint64_t examined = 0;
};

class SubsetScanner {
public:
    explicit SubsetScanner(const ScanSetup& s) : s_(s) {
        const int w = s_.words;
        rowany_.init(s_.n, w);
        if (s_.pair_based) {
            std::vector<int> allowed = s_.forced;
            allowed.insert(allowed.end(), s_.free_vertices.begin(), s_.free_vertices.end());
            for (int v : allowed)
                for (int u : allowed)
                    if (u != v) mask_or(rowany_.at(v), s_.pm(std::min(u, v), std::max(u, v)), w);
        } else {
            for (int v = 0; v < s_.n; ++v) mask_or(rowany_.at(v), s_.row_masks.at(v), w);
        }
        suffix_potential_.init(s_.free_vertices.size() + 1, w);
        for (int i = static_cast<int>(s_.free_vertices.size()) - 1; i >= 0; --i) {
            mask_or(suffix_potential_.at(i), suffix_potential_.at(i + 1), w);
            mask_or(suffix_potential_.at(i), rowany_.at(s_.free_vertices[i]), w);
        }
        base_.assign(w, 0);
        members_ = s_.forced;
        if (s_.pair_based) {
            for (std::size_t i = 0; i < members_.size(); ++i)
                for (std::size_t j = i + 1; j < members_.size(); ++j)
                    mask_or(base_.data(), s_.pm(members_[i], members_[j]), w);
        } else {
            for (int v : members_) mask_or(base_.data(), s_.row_masks.at(v), w);
        }
    }

    // Smallest qualifying subset of exactly `size` members (forced included).
    ScanResult run(int size) {
        result_ = ScanResult{};
        const int extra = size - static_cast<int>(s_.forced.size());
        if (extra < 0 || extra > static_cast<int>(s_.free_vertices.size())) return result_;
        acc_stack_.assign(static_cast<std::size_t>(extra + 1) * s_.words, 0);
        std::copy(base_.begin(), base_.end(), acc_stack_.begin());
        members_.resize(s_.forced.size());
        if (extra == 0) {
            ++result_.examined;
            if (mask_eq(base_.data(), s_.full.data(), s_.words)) {
                result_.found = true;
                result_.members = members_;
            }
            return result_;
        }
        descend(0, extra, 0);
        return result_;
    }

private:
    bool descend(int from, int remaining, int depth) {
        const int w = s_.words;
        const std::uint64_t* acc = acc_stack_.data() + static_cast<std::size_t>(depth) * w;

        if (mask_eq(acc, s_.full.data(), w)) {
            // monotone: any completion qualifies; take the next free vertices
            ++result_.examined;
            result_.found = true;
            result_.members = members_;
            for (int i = from, need = remaining; need > 0; ++i, --need)
                result_.members.push_back(s_.free_vertices[i]);
            std::sort(result_.members.begin(), result_.members.end());
            return true;
        }
        if (remaining == 0) {
            ++result_.examined;
            return false;
        }
        // potential prune: even taking every remaining free vertex cannot help
        scratch_.assign(acc, acc + w);
        mask_or(scratch_.data(), suffix_potential_.at(from), w);
        if (!mask_eq(scratch_.data(), s_.full.data(), w)) return false;
        const int last = static_cast<int>(s_.free_vertices.size()) - remaining;
        for (int i = from; i <= last; ++i) {
            const int v = s_.free_vertices[i];
            std::uint64_t* next = acc_stack_.data() + static_cast<std::size_t>(depth + 1) * w;
            std::copy(acc, acc + w, next);
            if (s_.pair_based) {
                for (int u : members_) mask_or(next, s_.pm(std::min(u, v), std::max(u, v)), w);
            } else {
                mask_or(next, s_.row_masks.at(v), w);
            }
            members_.push_back(v);
            if (descend(i + 1, remaining - 1, depth + 1)) return true;
            members_.pop_back();
        }
        return false;
    }

    const ScanSetup& s_;
    MaskStore rowany_;
    MaskStore suffix_potential_;
    std::vector<std::uint64_t> base_;
    std::vector<std::uint64_t> acc_stack_;
    std::vector<std::uint64_t> scratch_;
    std::vector<int> members_;
    ScanResult result_;
};

// Pair masks for one kind.
void fill_pair_masks(const Graph& g, const DistanceTable& t, SetKind kind, ScanSetup& setup) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    setup.n = n;
    setup.pair_based = true;
    setup.words = kind == SetKind::Geodetic ? (n + 63) / 64 : std::max(1, (m + 63) / 64);
    setup.full.assign(setup.words, 0);
    if (kind == SetKind::Geodetic) {
        for (int v = 0; v < n; ++v) mask_set_bit(setup.full.data(), v);
    } else {
        for (int e = 0; e < m; ++e) mask_set_bit(setup.full.data(), e);
    }
    setup.pair_masks.init(static_cast<std::size_t>(n) * n, setup.words);

    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (!t.reachable(a, b)) continue;
            std::uint64_t* mask = setup.pair_masks.at(static_cast<std::size_t>(a) * n + b);
            switch (kind) {
                case SetKind::Geodetic:
                    for (int w = 0; w < n; ++w)
                        if (t.reachable(a, w) && t.dist(a, w) + t.dist(w, b) == t.dist(a, b))
                            mask_set_bit(mask, w);
                    break;
                case SetKind::EdgeGeodetic:
                    for (int e = 0; e < m; ++e) {
                        const Edge& edge = g.edges()[e];
                        for (auto [x, y] : {std::pair{edge.u, edge.v}, std::pair{edge.v, edge.u}}) {
                            if (t.reachable(a, x) && t.reachable(y, b) &&
                                t.dist(a, x) + 1 + t.dist(y, b) == t.dist(a, b)) {
                                mask_set_bit(mask, e);
                                break;
                            }
                        }
                    }
                    break;
                case SetKind::Meg:
                case SetKind::Dem:
                    for (int e = 0; e < m; ++e)
                        if (pair_monitors_edge(g, t, a, b, g.edges()[e])) mask_set_bit(mask, e);
                    break;
            }
        }
    }
}

VertexSet locally_forced(const Graph& g) {
    const int n = g.vertex_count();
    VertexSet out(n);
    for (int v = 0; v < n; ++v) {
        for (int u : g.neighbors(v)) {
            bool ok = true;
            for (int x : g.neighbors(v)) {
                if (x == u || g.has_edge(u, x)) continue;
                // induced 2-path u-v-x: need a 4-cycle u-v-x-w-u
                const std::uint64_t common =
                    g.adjacency_mask(u) & g.adjacency_mask(x) & ~(1ULL << v);
                if (common == 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                out.add(v);
                break;
            }
        }
    }
    return out;
}

}  // namespace

VertexSet forced_meg_vertices(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError("forced_meg_vertices requires a connected graph");
    return locally_forced(g);
}

VertexSet excluded_min_meg_vertices(const Graph& g) {
    if (!is_connected(g))
        throw DisconnectedError("excluded_min_meg_vertices requires a connected graph");
    if (g.vertex_count() == 2 && g.edge_count() == 1)
        throw Error("excluded_min_meg_vertices is undefined for K2");
    VertexSet out = cut_vertices(g);
    // bridge-only vertices of degree >= 2 (singleton case of the cut-edge
    // region rule; larger regions add nothing beyond their vertices)
    const auto bridge_list = bridges(g);
    std::set<Edge> bridge_set(bridge_list.begin(), bridge_list.end());
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < 2) continue;
        bool all_bridges = true;
        for (int w : g.neighbors(v)) {
            if (!bridge_set.count(Edge(v, w))) {
                all_bridges = false;
                break;
            }
        }
        if (all_bridges) out.add(v);
    }
    return out;
}

bool is_meg_extremal(const Graph& g) {
    const auto comp = component_ids(g);
    const int k = component_count(g);
    std::vector<std::vector<int>> parts(k);
    for (int v = 0; v < g.vertex_count(); ++v) parts[comp[v]].push_back(v);
    for (const auto& part : parts) {
        Graph sub = induced_subgraph(g, part);
        if (sub.edge_count() == 0)
            throw Error("is_meg_extremal: component without an edge (isolated vertex)");
        if (locally_forced(sub).size() != sub.vertex_count()) return false;
    }
    return true;
}

SolveResult minimum_set(const Graph& g, SetKind kind) {
    const int n = g.vertex_count();
    if (n == 0) throw Error("minimum_set on empty graph");
    if (!is_connected(g)) throw DisconnectedError("minimum_set requires a connected graph");
    if (kind == SetKind::Geodetic && n == 1)
        return {1, VertexSet::from_vector(1, {0}), 1};
    if (g.edge_count() == 0)
        throw Error("minimum_set: this parameter needs at least one edge");
    if (n > 64) throw GuardError("minimum_set handles up to 64 vertices");

    const DistanceTable table = apsp(g);
    ScanSetup setup;
    if (kind == SetKind::Dem) {
        // row masks: everything vertex x monitors against any y
        ScanSetup pair_setup;
        fill_pair_masks(g, table, SetKind::Meg, pair_setup);
        setup.n = n;
        setup.pair_based = false;
        setup.words = pair_setup.words;
        setup.full = pair_setup.full;
        setup.row_masks.init(n, setup.words);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (y != x)
                    mask_or(setup.row_masks.at(x),
                            pair_setup.pm(std::min(x, y), std::max(x, y)), setup.words);
    } else {
        fill_pair_masks(g, table, kind, setup);
    }

    VertexSet forced(n), excluded(n);
    if (kind == SetKind::Meg) {
        forced = forced_meg_vertices(g);
        if (n > 2) excluded = excluded_min_meg_vertices(g);
        if (!(forced & excluded).empty())
            throw std::logic_error("forced and excluded MEG vertices overlap");
    } else if (kind == SetKind::EdgeGeodetic) {
        forced = simplicial_vertices(g);
    }
    setup.forced = forced.to_vector();
    for (int v = 0; v < n; ++v)
        if (!forced.contains(v) && !excluded.contains(v)) setup.free_vertices.push_back(v);

    int lower = kind == SetKind::Dem ? 1 : 2;
    lower = std::max(lower, static_cast<int>(setup.forced.size()));

    SubsetScanner scanner(setup);
    SolveResult res;
    for (int k = lower; k <= n; ++k) {
        ScanResult sr = scanner.run(k);
        res.subsets_examined += sr.examined;
        if (sr.found) {
            res.size = k;
            res.witness = VertexSet::from_vector(n, sr.members);
            return res;
        }
    }
    throw std::logic_error("minimum_set: no qualifying set found (V must qualify)");
}

// ---------------------------------------------------------------------------
// Strong edge-geodetic search.
// ---------------------------------------------------------------------------

namespace {

struct SegPair {
    std::pair<int, int> key;
    std::vector<std::vector<int>> paths;        // vertex sequences
    std::vector<std::vector<std::uint64_t>> masks;  // edge mask per path
};

struct SegInner {
    int words;
    const std::vector<std::uint64_t>& full;
    std::vector<SegPair*> multi;  // pairs with >= 2 paths, fewest-paths first
    MaskStore suffix_any;
    std::vector<int> picks;
    std::set<std::pair<std::uint64_t, std::uint32_t>> seen;  // (acc, depth) failure memo

    SegInner(int w, const std::vector<std::uint64_t>& f) : words(w), full(f) {}

    bool search(std::size_t i, std::vector<std::uint64_t>& acc) {
        if (mask_eq(acc.data(), full.data(), words)) {
            for (std::size_t j = i; j < multi.size(); ++j) picks[j] = 0;
            return true;
        }
        if (i == multi.size()) return false;
        std::vector<std::uint64_t> reach = acc;
        mask_or(reach.data(), suffix_any.at(i), words);
        if (!mask_eq(reach.data(), full.data(), words)) return false;
        if (words == 1) {
            // memoized covered-set per pair prefix
            if (!seen.emplace(acc[0], static_cast<std::uint32_t>(i)).second) return false;
        }
        for (std::size_t p = 0; p < multi[i]->masks.size(); ++p) {
            std::vector<std::uint64_t> next = acc;
            mask_or(next.data(), multi[i]->masks[p].data(), words);
            picks[i] = static_cast<int>(p);
            if (search(i + 1, next)) return true;
        }
        return false;
    }
};

}  // namespace

SegResult minimum_seg(const Graph& g, std::uint64_t path_cap) {
    const int n = g.vertex_count();
    if (!is_connected(g)) throw DisconnectedError("minimum_seg requires a connected graph");
    if (g.edge_count() == 0) throw Error("minimum_seg needs at least one edge");
    if (n > 64) throw GuardError("minimum_seg handles up to 64 vertices");

    const DistanceTable table = apsp(g);
    const int m = g.edge_count();
    const int words = (m + 63) / 64;
    std::vector<std::uint64_t> full(words, 0);
    for (int e = 0; e < m; ++e) mask_set_bit(full.data(), e);

    // existential edge coverage per pair, the cheap necessary filter
    ScanSetup cov;
    fill_pair_masks(g, table, SetKind::EdgeGeodetic, cov);

    std::map<std::pair<int, int>, SegPair> pair_cache;
    auto pair_paths = [&](int u, int v) -> SegPair& {
        auto key = std::make_pair(u, v);
        auto it = pair_cache.find(key);
        if (it != pair_cache.end()) return it->second;
        SegPair sp;
        sp.key = key;
        sp.paths = enumerate_shortest_paths(g, table, u, v, path_cap);
        for (const auto& path : sp.paths) {
            std::vector<std::uint64_t> mask(words, 0);
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                mask_set_bit(mask.data(), g.edge_index(Edge(path[i], path[i + 1])));
            sp.masks.push_back(std::move(mask));
        }
        return pair_cache.emplace(key, std::move(sp)).first->second;
    };

    SegResult res;
    std::vector<int> combo;
    for (int k = 2; k <= n; ++k) {
        combo.assign(k, 0);
        std::iota(combo.begin(), combo.end(), 0);
        while (true) {
            ++res.subsets_examined;
            // existential coverage filter
            std::vector<std::uint64_t> reach(words, 0);
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    mask_or(reach.data(), cov.pm(combo[i], combo[j]), words);
            if (mask_eq(reach.data(), full.data(), words)) {
                // inner decision: pick one path per pair so the union is E
                std::vector<SegPair*> pairs;
                for (int i = 0; i < k; ++i)
                    for (int j = i + 1; j < k; ++j)
                        pairs.push_back(&pair_paths(combo[i], combo[j]));

                std::vector<std::uint64_t> acc(words, 0);
                SegInner inner(words, full);
                for (SegPair* sp : pairs) {
                    if (sp->masks.size() == 1)
                        mask_or(acc.data(), sp->masks[0].data(), words);
                    else
                        inner.multi.push_back(sp);
                }
                std::stable_sort(inner.multi.begin(), inner.multi.end(),
                                 [](const SegPair* a, const SegPair* b) {
                                     return a->masks.size() < b->masks.size();
                                 });
                inner.suffix_any.init(inner.multi.size() + 1, words);
                for (int i = static_cast<int>(inner.multi.size()) - 1; i >= 0; --i) {
                    mask_or(inner.suffix_any.at(i), inner.suffix_any.at(i + 1), words);
                    for (const auto& pm : inner.multi[i]->masks)
                        mask_or(inner.suffix_any.at(i), pm.data(), words);
                }
                inner.picks.assign(inner.multi.size(), 0);
                if (inner.search(0, acc)) {
                    res.size = k;
                    res.witness = VertexSet::from_vector(n, combo);
                    for (SegPair* sp : pairs) {
                        if (sp->masks.size() == 1) res.assignment[sp->key] = sp->paths[0];
                    }
                    for (std::size_t i = 0; i < inner.multi.size(); ++i)
                        res.assignment[inner.multi[i]->key] =
                            inner.multi[i]->paths[inner.picks[i]];
                    return res;
                }
            }
            // next lexicographic combination of size k from 0..n-1
            int pos = k - 1;
            while (pos >= 0 && combo[pos] == n - k + pos) --pos;
            if (pos < 0) break;
            ++combo[pos];
            for (int i = pos + 1; i < k; ++i) combo[i] = combo[i - 1] + 1;
        }
    }
    throw std::logic_error("minimum_seg: no qualifying set found (V must qualify)");
}

// ---------------------------------------------------------------------------
// Constructive bounds.
// ---------------------------------------------------------------------------

VertexSet vertex_cover_meg_set(const Graph& g) {
    const int n = g.vertex_count();
    if (!is_connected(g)) throw DisconnectedError("vertex_cover_meg_set requires a connected graph");
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < 2) throw Error("vertex_cover_meg_set requires minimum degree 2");
    const auto gr = girth(g);
    if (!gr || *gr < 5) throw Error("vertex_cover_meg_set requires girth >= 5");

    VertexSet independent(n);
    for (int v = 0; v < n; ++v) {
        bool free = true;
        for (int u : g.neighbors(v))
            if (independent.contains(u)) {
                free = false;
                break;
            }
        if (free) independent.add(v);
    }
    VertexSet cover = VertexSet::all(n) - independent;

    const DistanceTable table = apsp(g);
    if (static_cast<int>(monitored_edges(g, table, cover).size()) != g.edge_count())
        throw std::logic_error("vertex cover failed MEG verification (theorem contract breach)");
    return cover;
}

VertexSet girth_greedy_meg(const Graph& g) {
    const int n = g.vertex_count();
    if (!is_two_connected(g)) throw Error("girth_greedy_meg requires a 2-connected graph");
    const auto gr = girth(g);
    if (!gr || *gr < 4) throw Error("girth_greedy_meg requires girth >= 4");
    const int gth = *gr;

    const DistanceTable table = apsp(g);
    VertexSet m(n);
    std::vector<int> dist_to_m(n, -1);  // -1 = infinite (empty set)
    auto add = [&](int v) {
        m.add(v);
        for (int w = 0; w < n; ++w) {
            int d = table.dist(v, w);
            if (dist_to_m[w] == -1 || d < dist_to_m[w]) dist_to_m[w] = d;
        }
    };
    add(0);
    while (true) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (m.contains(v)) continue;
            if (4 * dist_to_m[v] >= gth - 3) {  // dist >= (g-3)/4, exact in integers
                pick = v;
                break;
            }
        }
        if (pick == -1) break;
        add(pick);
    }

    if (static_cast<int>(monitored_edges(g, table, m).size()) != g.edge_count())
        throw std::logic_error("girth greedy set failed MEG verification (theorem contract breach)");
    const int bound = (4 * n + gth - 4) / (gth - 3);  // ceil(4n/(g-3))
    if (m.size() > bound)
        throw std::logic_error("girth greedy set exceeds ceil(4n/(g-3)) (theorem contract breach)");
    return m;
}

// ---------------------------------------------------------------------------
// Exact chromatic number.
// ---------------------------------------------------------------------------

namespace {

struct ColorSearch {
    const Graph& g;
    int n;
    std::vector<int> color;
    int best;
    std::vector<int> best_assignment;

    explicit ColorSearch(const Graph& graph, int ub)
        : g(graph), n(graph.vertex_count()), color(n, -1), best(ub) {}

    int pick_vertex() const {
        int chosen = -1, sat = -1, deg = -1;
        std::vector<char> used(n + 1, 0);
        for (int v = 0; v < n; ++v) {
            if (color[v] != -1) continue;
            std::fill(used.begin(), used.end(), 0);
            int s = 0;
            for (int u : g.neighbors(v))
                if (color[u] != -1 && !used[color[u]]) {
                    used[color[u]] = 1;
                    ++s;
                }
            if (s > sat || (s == sat && g.degree(v) > deg)) {
                chosen = v;
                sat = s;
                deg = g.degree(v);
            }
        }
        return chosen;
    }

    void dfs(int colored, int used_colors) {
        if (used_colors >= best) return;
        if (colored == n) {
            best = used_colors;
            best_assignment = color;
            return;
        }
        const int v = pick_vertex();
        for (int c = 0; c <= used_colors && c < best; ++c) {
            if (c == used_colors && used_colors + 1 >= best) break;
            bool ok = true;
            for (int u : g.neighbors(v))
                if (color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            dfs(colored + 1, std::max(used_colors, c + 1));
            color[v] = -1;
        }
    }
};

int greedy_clique_size(const Graph& g) {
    int best = g.vertex_count() > 0 ? 1 : 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        std::vector<int> clique{s};
        std::vector<int> cands = g.neighbors(s);
        while (!cands.empty()) {
            // extend by the candidate with most remaining candidates as neighbors
            int pick = -1, score = -1;
            for (int c : cands) {
                int deg = 0;
                for (int d : cands)
                    if (d != c && g.has_edge(c, d)) ++deg;
                if (deg > score) {
                    score = deg;
                    pick = c;
                }
            }
            clique.push_back(pick);
            std::vector<int> next;
            for (int c : cands)
                if (c != pick && g.has_edge(c, pick)) next.push_back(c);
            cands = std::move(next);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

}  // namespace

int chromatic_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 30) throw GuardError("chromatic_number guarded to n <= 30");
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;

    // greedy upper bound on degree-descending order
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b)
                                                                    : a < b; });
    std::vector<int> greedy(n, -1);
    int ub = 0;
    for (int v : order) {
        std::vector<char> used(n + 1, 0);
        for (int u : g.neighbors(v))
            if (greedy[u] != -1) used[greedy[u]] = 1;
        int c = 0;
        while (used[c]) ++c;
        greedy[v] = c;
        ub = std::max(ub, c + 1);
    }
    const int lb = greedy_clique_size(g);
    if (lb == ub) return ub;

    ColorSearch search(g, ub);
    search.dfs(0, 0);
    return std::max(search.best, lb);
}

// ---------------------------------------------------------------------------
// Reports.
// ---------------------------------------------------------------------------

const char* param_name(Param p) {
    switch (p) {
        case Param::G: return "g";
        case Param::EG: return "eg";
        case Param::SEG: return "seg";
        case Param::DEM: return "dem";
        case Param::MEG: return "meg";
    }
    return "?";
}

ParameterReport compute_report(const Graph& g, const std::set<Param>& params,
                               std::uint64_t path_cap) {
    ParameterReport rep;
    const DistanceTable table = apsp(g);
    auto validate_full_edges = [&](const std::vector<Edge>& es) {
        return static_cast<int>(es.size()) == g.edge_count();
    };

    for (Param p : params) {
        switch (p) {
            case Param::G: {
                auto r = minimum_set(g, SetKind::Geodetic);
                if (covered_vertices(g, table, r.witness).size() != g.vertex_count())
                    throw std::logic_error("geodetic witness failed engine validation");
                rep.values[p] = r.size;
                rep.witnesses[p] = r.witness;
                rep.subsets_examined += r.subsets_examined;
                break;
            }
            case Param::EG: {
                auto r = minimum_set(g, SetKind::EdgeGeodetic);
                if (!validate_full_edges(covered_edges(g, table, r.witness)))
                    throw std::logic_error("edge-geodetic witness failed engine validation");
                rep.values[p] = r.size;
                rep.witnesses[p] = r.witness;
                rep.subsets_examined += r.subsets_examined;
                break;
            }
            case Param::SEG: {
                auto r = minimum_seg(g, path_cap);
                if (!check_strong_assignment(g, table, r.witness, r.assignment))
                    throw std::logic_error("seg witness failed engine validation");
                rep.values[p] = r.size;
                rep.witnesses[p] = r.witness;
                rep.seg_assignment = r.assignment;
                rep.subsets_examined += r.subsets_examined;
                break;
            }
            case Param::DEM: {
                auto r = minimum_set(g, SetKind::Dem);
                if (!validate_full_edges(dem_monitored_edges(g, table, r.witness)))
                    throw std::logic_error("dem witness failed engine validation");
                rep.values[p] = r.size;
                rep.witnesses[p] = r.witness;
                rep.subsets_examined += r.subsets_examined;
                break;
            }
            case Param::MEG: {
                auto r = minimum_set(g, SetKind::Meg);
                if (!validate_full_edges(monitored_edges(g, table, r.witness)))
                    throw std::logic_error("meg witness failed engine validation");
                rep.values[p] = r.size;
                rep.witnesses[p] = r.witness;
                rep.subsets_examined += r.subsets_examined;
                break;
            }
        }
    }

    auto has = [&](Param p) { return rep.values.count(p) != 0; };
    auto chain = [&](Param lo, Param hi) {
        if (has(lo) && has(hi) && rep.values[lo] > rep.values[hi])
            throw std::logic_error(std::string("parameter chain violated: ") + param_name(lo) +
                                   " > " + param_name(hi));
    };
    chain(Param::G, Param::EG);
    chain(Param::EG, Param::SEG);
    chain(Param::SEG, Param::MEG);
    if (has(Param::DEM) && has(Param::MEG) && rep.values[Param::DEM] >= rep.values[Param::MEG])
        throw std::logic_error("parameter chain violated: dem >= meg");
    return rep;
}

}  // namespace meglab
