#include "doctest.h"
#include "meglab/harness.hpp"
#include "oracles.hpp"

using namespace meglab;

TEST_CASE("report rows") {
    CHECK(ReportRow::csv_header() ==
          "instance_id,n,m,girth,cut_vertices,g,eg,seg,dem,meg,verdict,millis");

    const Graph p4 = gen_standard("path", {4});
    const auto rep = compute_report(p4, {Param::MEG});
    const ReportRow row = row_from_report("p4", p4, rep);
    CHECK(row.to_csv() == "p4,4,3,inf,2,,,,,2,,0");

    const auto j = row.to_json();
    CHECK(j["girth"].is_null());
    CHECK(j["meg"] == 2);
    CHECK(j["witnesses"]["meg"] == nlohmann::json::array({0, 3}));

    const Graph c5 = gen_standard("cycle", {5});
    const ReportRow crow = stat_row("c5", c5);
    CHECK(crow.to_csv() == "c5,5,5,5,0,,,,,,,0");
}

TEST_CASE("forced_meg_by_enumeration matches the test oracle") {
    Rng rng(31001);
    for (int i = 0; i < 15; ++i) {
        const Graph g = gen_random_connected(rng.range(2, 7), 0.3 + 0.5 * rng.unit(), rng.next());
        CHECK(forced_meg_by_enumeration(g).to_vector() == oracle::forced_by_enumeration(g));
    }
}

TEST_CASE("graph spec tokens") {
    CHECK(parse_graph_spec("k4").edge_count() == 6);
    CHECK(parse_graph_spec("k33").edge_count() == 9);  // two digits: biclique
    CHECK(parse_graph_spec("p5").vertex_count() == 5);
    CHECK(parse_graph_spec("c6").edge_count() == 6);
    CHECK(parse_graph_spec("q3").vertex_count() == 8);
    CHECK(parse_graph_spec("petersen").vertex_count() == 10);
    CHECK(parse_graph_spec("grid2x4").vertex_count() == 8);
    CHECK(parse_graph_spec("star4").degree(0) == 4);
    CHECK(parse_graph_spec("fan6").vertex_count() == 7);
    CHECK_THROWS_AS(parse_graph_spec("blob"), FamilyArgError);
    CHECK_THROWS_AS(parse_graph_spec("kx"), FamilyArgError);
}

TEST_CASE("campaigns are deterministic and pass") {
    CampaignConfig cfg;
    cfg.selector = "chain";
    cfg.samples = 25;
    cfg.n_max = 6;
    cfg.seed = 20240917;
    const auto first = run_campaign(cfg);
    const auto second = run_campaign(cfg);
    CHECK(first.failures == 0);
    CHECK(first.to_jsonl() == second.to_jsonl());
    CHECK(first.to_csv() == second.to_csv());
    CHECK(first.rows.size() == 27);  // two fixtures + 25 samples

    cfg.seed = 99;
    const auto third = run_campaign(cfg);
    CHECK(third.to_jsonl() != first.to_jsonl());
}

TEST_CASE("thm4.1 campaign cross-validates forced sets") {
    CampaignConfig cfg;
    cfg.selector = "thm4.1";
    cfg.samples = 20;
    cfg.n_max = 6;
    cfg.seed = 7;
    const auto res = run_campaign(cfg);
    CHECK(res.failures == 0);
    for (const auto& row : res.rows) CHECK(row.verdict == "pass");
}

TEST_CASE("products campaign includes the deliberate counterexample") {
    CampaignConfig cfg;
    cfg.selector = "products";
    const auto res = run_campaign(cfg);
    CHECK(res.failures == 0);
    bool saw_observe = false, saw_fig4 = false;
    for (const auto& row : res.rows) {
        if (row.verdict == "observe") saw_observe = true;
        if (row.id == "products/fixture/fig4") {
            saw_fig4 = true;
            CHECK(row.verdict == "pass");
        }
    }
    CHECK(saw_observe);
    CHECK(saw_fig4);
}

TEST_CASE("girth and chromatic campaigns") {
    CampaignConfig cfg;
    cfg.selector = "girth";
    CHECK(run_campaign(cfg).failures == 0);
    cfg.selector = "chromatic";
    CHECK(run_campaign(cfg).failures == 0);
}

TEST_CASE("unknown selector is rejected") {
    CampaignConfig cfg;
    cfg.selector = "nonsense";
    CHECK_THROWS_AS(run_campaign(cfg), FamilyArgError);
}
