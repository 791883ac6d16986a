#pragma once

#include <string>

#include "json.hpp"
#include "meglab/generators.hpp"
#include "meglab/graph.hpp"
#include "meglab/solvers.hpp"

namespace meglab {

/// Outcome of testing one theorem on one instance. Observed values always
/// come from the solvers, never from the formula under test.
struct TheoremVerdict {
    std::string theorem;
    std::string instance;
    std::string expected;
    nlohmann::json observed;
    bool pass = false;
    bool observed_only = false;  // precondition waived ("observe mode")
    nlohmann::json witness;      // failure data

    nlohmann::json to_json() const;
};

struct CheckOptions {
    int exact_guard = 18;        // max n for exact meg/seg solver calls
    bool observe = false;        // downgrade precondition failures to observations
    std::uint64_t path_cap = 100000;
};

/// g <= eg <= seg <= meg and dem < meg, all five computed exactly.
TheoremVerdict check_chain(const Graph& g, const CheckOptions& opt = {});

/// meg equals the class formula: cograph n-1/n by cut vertex, block /
/// well-partitioned chordal / proper interval n - #cut vertices, split
/// n - #vertices with a pendant neighbor.
TheoremVerdict check_class_formula(const Graph& g, GraphClass cls, const CheckOptions& opt = {});

/// Cartesian/strong products of an extremal graph (tensor: two extremal
/// graphs) are extremal, via the local condition only.
TheoremVerdict check_product_extremality(const Graph& g, const Graph& h, ProductKind kind,
                                         const CheckOptions& opt = {});

/// meg <= 4n/(g-3) for 2-connected girth >= 4: greedy set verified and sized,
/// exact meg compared when within guard.
TheoremVerdict check_girth_bound(const Graph& g, const CheckOptions& opt = {});

/// Chromatic refinements for girth >= 5: chi*meg <= n(chi-1) at min degree 2,
/// else chi*meg <= n(chi-1) + #pendants.
TheoremVerdict check_chromatic_bound(const Graph& g, const CheckOptions& opt = {});

/// meg(G1)+meg(G2)-2k <= meg(G1 +k G2) <= meg(G1)+meg(G2).
TheoremVerdict check_cliquesum_bounds(const Graph& g1, const VertexSet& c1, const Graph& g2,
                                      const VertexSet& c2, const CheckOptions& opt = {});

/// meg(S_ell) <= meg(G) <= 2 meg(S_ell) for ell >= 2.
TheoremVerdict check_subdivision_bounds(const Graph& g, int ell, const CheckOptions& opt = {});

}  // namespace meglab
