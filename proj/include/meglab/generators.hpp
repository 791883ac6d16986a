#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "meglab/graph.hpp"

namespace meglab {

/// Deterministic 64-bit generator (splitmix64). All harness randomness flows
/// through this so campaigns replay bit-for-bit across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, bound) by rejection sampling.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

private:
    std::uint64_t state_;
};

/// Prescribed-parameter family: g=a, eg=b, seg=c, meg=d.
/// Requires 4 <= a <= b <= c <= d and d != c+1.
Graph gen_G_abcd(int a, int b, int c, int d);

/// Prescribed dem=p, meg=q family (1 <= p < q): star for p=1, otherwise
/// K_{p+1} with q-p pendants on one clique vertex.
Graph gen_G_pq(int p, int q);

/// K_k with one pendant per clique vertex (k >= 2).
Graph gen_Kk_star(int k);

/// Clique-sum tightness family: K_{k+1}, a 3-path hung on each clique vertex,
/// and a once-subdivided clique over the path midpoints (k >= 2).
Graph gen_Hk(int k);

/// Identify the cliques c1 of g1 and c2 of g2 (equal size k >= 2, both must
/// induce cliques). Matching defaults to sorted order; a bijection maps
/// vertices of c1 to vertices of c2.
Graph clique_sum(const Graph& g1, const VertexSet& c1, const Graph& g2, const VertexSet& c2,
                 const std::vector<std::pair<int, int>>* bijection = nullptr);

/// Replace every edge with a path of ell internal vertices (ell >= 0).
Graph subdivide(const Graph& g, int ell);

enum class ProductKind { Cartesian, Strong, Tensor };

/// Product on V(G) x V(H), vertex (a,b) numbered a*|V(H)|+b.
Graph product(const Graph& g, const Graph& h, ProductKind kind);

/// Named fixtures: path n | cycle n | complete n | star q | biclique a b |
/// multipartite p1 p2 ... | hypercube d | grid2 k | petersen | fan k | fig1.
Graph gen_standard(const std::string& name, const std::vector<int>& params);

enum class GraphClass { Cograph, Block, WpChordal, Split, ProperInterval };

const char* graph_class_name(GraphClass c);

/// Random member of the class, connected, membership by construction.
Graph gen_class_random(GraphClass cls, int size, std::uint64_t seed);

/// Erdos-Renyi G(n, p) resampled until connected (bounded retries).
Graph gen_random_connected(int n, double edge_prob, std::uint64_t seed);

/// Uniform random labelled tree (Pruefer sequence).
Graph gen_random_tree(int n, std::uint64_t seed);

}  // namespace meglab
