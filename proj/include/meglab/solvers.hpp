#pragma once

#include <cstdint>
#include <map>
#include <set>

#include "meglab/geodesic.hpp"
#include "meglab/graph.hpp"

namespace meglab {

enum class SetKind { Geodetic, EdgeGeodetic, Dem, Meg };

enum class Param { G, EG, SEG, DEM, MEG };

struct SolveResult {
    int size = 0;
    VertexSet witness;
    std::uint64_t subsets_examined = 0;
};

/// Exact minimum set for the given kind. Search iterates cardinality upward;
/// within a cardinality, subsets are visited in lexicographic order over
/// forced <= S <= V \ excluded, and the first hit is the witness. Pruning:
/// MEG uses forced_meg_vertices / excluded_min_meg_vertices (both directions
/// proven), EDGE_GEODETIC forces simplicial vertices, GEODETIC and DEM use
/// no structural pruning.
SolveResult minimum_set(const Graph& g, SetKind kind);

struct SegResult {
    int size = 0;
    VertexSet witness;
    PathAssignment assignment;
    std::uint64_t subsets_examined = 0;
};

/// Exact strong edge-geodetic number with one valid path assignment.
SegResult minimum_seg(const Graph& g, std::uint64_t path_cap = 100000);

/// Vertices in every MEG-set: v such that some neighbor u has every induced
/// 2-path u-v-x closed by a 4-cycle u-v-x-w-u.
VertexSet forced_meg_vertices(const Graph& g);

/// Vertices provably outside every minimum MEG-set: cut vertices, plus
/// degree->=2 vertices whose incident edges are all bridges.
VertexSet excluded_min_meg_vertices(const Graph& g);

/// meg(G) = |V(G)|, decided by the local forced-vertex condition alone,
/// componentwise. Throws on isolated vertices.
bool is_meg_extremal(const Graph& g);

/// Complement of the greedy (lowest-index-first) maximal independent set,
/// verified to be an MEG-set before returning. Requires connected, min degree
/// >= 2, girth >= 5.
VertexSet vertex_cover_meg_set(const Graph& g);

/// Greedy spaced set from the girth bound: repeatedly add the lowest-index
/// vertex at distance >= (g-3)/4 from the set (exact rational comparison).
/// Verified as an MEG-set; size obeys ceil(4n/(g-3)). Requires 2-connected,
/// girth >= 4.
VertexSet girth_greedy_meg(const Graph& g);

/// Exact chromatic number (branch and bound, clique lower bound, greedy upper
/// bound). Guarded to n <= 30.
int chromatic_number(const Graph& g);

struct ParameterReport {
    std::map<Param, int> values;
    std::map<Param, VertexSet> witnesses;
    PathAssignment seg_assignment;
    std::uint64_t subsets_examined = 0;
};

/// Compute the requested parameters with witnesses; every witness is
/// re-validated through the geodesic engine and the inequality chain
/// g <= eg <= seg <= meg, dem < meg is enforced on the result.
ParameterReport compute_report(const Graph& g, const std::set<Param>& params,
                               std::uint64_t path_cap = 100000);

const char* param_name(Param p);

}  // namespace meglab
