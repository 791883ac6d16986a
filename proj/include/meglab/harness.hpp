#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "meglab/generators.hpp"
#include "meglab/solvers.hpp"
#include "meglab/theorems.hpp"

namespace meglab {

/// One line of a campaign or compute report. CSV column order is fixed:
/// instance_id,n,m,girth,cut_vertices,g,eg,seg,dem,meg,verdict,millis.
struct ReportRow {
    std::string id;
    int n = 0;
    int m = 0;
    std::optional<int> girth_value;  // nullopt = acyclic
    int cut_count = 0;
    std::optional<int> g, eg, seg, dem, meg;
    nlohmann::json witnesses;  // param -> vertex list (JSON object)
    std::string verdict;       // "pass" | "fail" | "observe" | "" for plain compute
    std::int64_t millis = 0;   // 0 unless timing was requested (reports stay byte-stable)
    nlohmann::json detail;     // theorem verdict record, when applicable

    std::string to_csv() const;
    nlohmann::json to_json() const;
    static std::string csv_header();
};

ReportRow stat_row(const std::string& id, const Graph& g);
ReportRow row_from_report(const std::string& id, const Graph& g, const ParameterReport& rep);
ReportRow row_from_verdict(const std::string& id, const Graph& g, const TheoremVerdict& v);

struct CampaignConfig {
    std::string selector = "all";  // chain thm4.1 classes products girth chromatic cliquesum subdivision all
    int n_max = 0;                 // 0 = selector default
    int samples = 0;               // 0 = selector default
    std::uint64_t seed = 0;
    int exact_guard = 18;
    bool observe = false;
    std::string pairs;  // products override, e.g. "k3:p4,k33:k2"
    std::uint64_t path_cap = 100000;
};

struct CampaignResult {
    std::vector<ReportRow> rows;
    int failures = 0;
    std::vector<nlohmann::json> failure_dumps;  // serialized counterexamples

    std::string to_jsonl() const;
    std::string to_csv() const;
};

/// Run the selected theorem campaign. Deterministic given the config.
CampaignResult run_campaign(const CampaignConfig& cfg);

/// Double computation for the forced-vertex characterization: enumerate every
/// subset, keep the MEG-sets, intersect. Exponential; n <= ~16.
VertexSet forced_meg_by_enumeration(const Graph& g);

/// Tiny graph spec tokens for the CLI: petersen, fig1, fanK, pN, cN, qD,
/// starQ, kN (complete), kAB (two digits: biclique), grid2xK.
Graph parse_graph_spec(const std::string& token);

}  // namespace meglab
