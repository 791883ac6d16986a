#include "meglab/harness.hpp"

#include <algorithm>
#include <sstream>

namespace meglab {

namespace {

using nlohmann::json;

std::string opt_str(const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string();
}

json vertex_list(const VertexSet& s) {
    json arr = json::array();
    for (int v : s.to_vector()) arr.push_back(v);
    return arr;
}

}  // namespace

std::string ReportRow::csv_header() {
    return "instance_id,n,m,girth,cut_vertices,g,eg,seg,dem,meg,verdict,millis";
}

std::string ReportRow::to_csv() const {
    std::ostringstream out;
    out << id << ',' << n << ',' << m << ','
        << (girth_value ? std::to_string(*girth_value) : std::string("inf")) << ',' << cut_count
        << ',' << opt_str(g) << ',' << opt_str(eg) << ',' << opt_str(seg) << ',' << opt_str(dem)
        << ',' << opt_str(meg) << ',' << verdict << ',' << millis;
    return out.str();
}

json ReportRow::to_json() const {
    json j;
    j["instance_id"] = id;
    j["n"] = n;
    j["m"] = m;
    j["girth"] = girth_value ? json(*girth_value) : json(nullptr);
    j["cut_vertices"] = cut_count;
    auto put = [&](const char* k, const std::optional<int>& v) {
        if (v) j[k] = *v;
    };
    put("g", g);
    put("eg", eg);
    put("seg", seg);
    put("dem", dem);
    put("meg", meg);
    if (!witnesses.is_null()) j["witnesses"] = witnesses;
    j["verdict"] = verdict;
    j["millis"] = millis;
    if (!detail.is_null()) j["detail"] = detail;
    return j;
}

ReportRow stat_row(const std::string& id, const Graph& g) {
    ReportRow row;
    row.id = id;
    row.n = g.vertex_count();
    row.m = g.edge_count();
    row.girth_value = girth(g);
    row.cut_count = is_connected(g) && g.vertex_count() <= 64 ? cut_vertices(g).size() : 0;
    return row;
}

ReportRow row_from_report(const std::string& id, const Graph& g, const ParameterReport& rep) {
    ReportRow row = stat_row(id, g);
    json wit = json::object();
    for (const auto& [param, value] : rep.values) {
        switch (param) {
            case Param::G: row.g = value; break;
            case Param::EG: row.eg = value; break;
            case Param::SEG: row.seg = value; break;
            case Param::DEM: row.dem = value; break;
            case Param::MEG: row.meg = value; break;
        }
        wit[param_name(param)] = vertex_list(rep.witnesses.at(param));
    }
    if (!rep.seg_assignment.empty()) {
        json paths = json::object();
        for (const auto& [key, path] : rep.seg_assignment)
            paths[std::to_string(key.first) + "-" + std::to_string(key.second)] = path;
        wit["seg_paths"] = paths;
    }
    row.witnesses = wit;
    return row;
}

ReportRow row_from_verdict(const std::string& id, const Graph& g, const TheoremVerdict& v) {
    ReportRow row = stat_row(id, g);
    row.verdict = v.observed_only ? "observe" : (v.pass ? "pass" : "fail");
    row.detail = v.to_json();
    auto pull = [&](const char* key, std::optional<int>& slot) {
        if (v.observed.contains(key)) slot = v.observed[key].get<int>();
    };
    pull("g", row.g);
    pull("eg", row.eg);
    pull("seg", row.seg);
    pull("dem", row.dem);
    pull("meg", row.meg);
    return row;
}

std::string CampaignResult::to_jsonl() const {
    std::string out;
    for (const auto& row : rows) {
        out += row.to_json().dump();
        out += '\n';
    }
    return out;
}

std::string CampaignResult::to_csv() const {
    std::string out = ReportRow::csv_header() + "\n";
    for (const auto& row : rows) {
        out += row.to_csv();
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force double computation for thm4.1 campaigns.
// ---------------------------------------------------------------------------

VertexSet forced_meg_by_enumeration(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 16) throw GuardError("forced_meg_by_enumeration: wants n <= 16");
    const DistanceTable table = apsp(g);
    const int m = g.edge_count();

    // monitor mask per pair, then intersect every subset that covers all edges
    std::vector<std::uint64_t> pair_mask(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!table.reachable(a, b)) continue;
            std::uint64_t mask = 0;
            for (int e = 0; e < m; ++e)
                if (pair_monitors_edge(g, table, a, b, g.edges()[e])) mask |= 1ULL << e;
            pair_mask[static_cast<std::size_t>(a) * n + b] = mask;
        }
    const std::uint64_t full = m == 64 ? ~0ULL : (1ULL << m) - 1;

    std::uint64_t intersection = n == 64 ? ~0ULL : (1ULL << n) - 1;
    for (std::uint64_t subset = 0; subset < (1ULL << n); ++subset) {
        std::uint64_t covered = 0;
        for (std::uint64_t rest = subset; rest; rest &= rest - 1) {
            const int a = __builtin_ctzll(rest);
            for (std::uint64_t rest2 = rest & (rest - 1); rest2; rest2 &= rest2 - 1)
                covered |= pair_mask[static_cast<std::size_t>(a) * n + __builtin_ctzll(rest2)];
        }
        if (covered == full) intersection &= subset;
    }
    VertexSet out(n);
    for (int v = 0; v < n; ++v)
        if (intersection >> v & 1) out.add(v);
    return out;
}

// ---------------------------------------------------------------------------
// Graph spec tokens.
// ---------------------------------------------------------------------------

Graph parse_graph_spec(const std::string& token) {
    if (token == "petersen") return gen_standard("petersen", {});
    if (token == "fig1") return gen_standard("fig1", {});
    auto num = [&](std::size_t from) {
        if (from >= token.size()) throw FamilyArgError("graph spec '" + token + "': missing number");
        for (std::size_t i = from; i < token.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(token[i])))
                throw FamilyArgError("graph spec '" + token + "': bad number");
        return std::stoi(token.substr(from));
    };
    if (token.rfind("grid2x", 0) == 0) return gen_standard("grid2", {num(6)});
    if (token.rfind("star", 0) == 0) return gen_standard("star", {num(4)});
    if (token.rfind("fan", 0) == 0) return gen_standard("fan", {num(3)});
    if (token.size() >= 2) {
        const char head = token[0];
        if (head == 'p') return gen_standard("path", {num(1)});
        if (head == 'c') return gen_standard("cycle", {num(1)});
        if (head == 'q') return gen_standard("hypercube", {num(1)});
        if (head == 'k') {
            if (token.size() == 3 && isdigit(static_cast<unsigned char>(token[1])) &&
                isdigit(static_cast<unsigned char>(token[2])))
                return gen_standard("biclique", {token[1] - '0', token[2] - '0'});
            return gen_standard("complete", {num(1)});
        }
    }
    throw FamilyArgError("unknown graph spec '" + token + "'");
}

// ---------------------------------------------------------------------------
// Campaigns.
// ---------------------------------------------------------------------------

namespace {

struct CampaignRunner {
    const CampaignConfig& cfg;
    CampaignResult result;

    void add_verdict(const std::string& id, const Graph& g, const TheoremVerdict& v) {
        result.rows.push_back(row_from_verdict(id, g, v));
        if (!v.pass && !v.observed_only) {
            ++result.failures;
            json dump;
            dump["instance_id"] = id;
            dump["theorem"] = v.theorem;
            dump["graph_edgelist"] = serialize(g, GraphFormat::EdgeList);
            result.failure_dumps.push_back(dump);
        }
    }

    CheckOptions opts(int guard_floor = 0) const {
        CheckOptions o;
        o.exact_guard = std::max(cfg.exact_guard, guard_floor);
        o.observe = cfg.observe;
        o.path_cap = cfg.path_cap;
        return o;
    }

    std::string seq_id(const std::string& stem, int i) const {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%04d", i);
        return stem + "/" + buf;
    }

    void chain() {
        add_verdict("chain/fixture/k5", gen_standard("complete", {5}),
                    check_chain(gen_standard("complete", {5}), opts()));
        add_verdict("chain/fixture/fig1", gen_standard("fig1", {}),
                    check_chain(gen_standard("fig1", {}), opts()));
        const int n_max = cfg.n_max ? cfg.n_max : 8;
        const int samples = cfg.samples ? cfg.samples : 200;
        Rng rng(cfg.seed);
        for (int i = 0; i < samples; ++i) {
            const int n = rng.range(2, n_max);
            const double p = 0.25 + 0.55 * rng.unit();
            const Graph g = gen_random_connected(n, p, rng.next());
            add_verdict(seq_id("chain/random", i), g, check_chain(g, opts()));
        }
    }

    void thm41_instance(const std::string& id, const Graph& g) {
        TheoremVerdict v;
        v.theorem = "thm4.1";
        v.instance = "n=" + std::to_string(g.vertex_count()) + " m=" +
                     std::to_string(g.edge_count());
        v.expected = "local forced set equals enumeration over all MEG-sets";
        const VertexSet local = forced_meg_vertices(g);
        const VertexSet brute = forced_meg_by_enumeration(g);
        v.observed = {{"forced", vertex_list(local)}, {"enumerated", vertex_list(brute)}};
        v.pass = local == brute;
        if (!v.pass) {
            v.witness = json{{"graph_edgelist", serialize(g, GraphFormat::EdgeList)}};
        }
        add_verdict(id, g, v);
    }

    void thm41() {
        const std::vector<std::pair<std::string, Graph>> fixtures = {
            {"star3", gen_standard("star", {3})},   {"c4", gen_standard("cycle", {4})},
            {"c5", gen_standard("cycle", {5})},     {"fig1", gen_standard("fig1", {})},
            {"p5", gen_standard("path", {5})},      {"k4", gen_standard("complete", {4})},
            {"k23", gen_standard("biclique", {2, 3})}, {"gpq24", gen_G_pq(2, 4)},
        };
        for (const auto& [name, g] : fixtures) thm41_instance("thm4.1/fixture/" + name, g);
        const int n_max = cfg.n_max ? cfg.n_max : 7;
        const int samples = cfg.samples ? cfg.samples : 300;
        Rng rng(cfg.seed);
        for (int i = 0; i < samples; ++i) {
            const int n = rng.range(2, n_max);
            const double p = 0.25 + 0.55 * rng.unit();
            const Graph g = gen_random_connected(n, p, rng.next());
            thm41_instance(seq_id("thm4.1/random", i), g);
        }
    }

    void classes() {
        const int n_max = cfg.n_max ? cfg.n_max : 14;
        const int samples = cfg.samples ? cfg.samples : 25;
        Rng rng(cfg.seed);
        for (GraphClass cls : {GraphClass::Cograph, GraphClass::Block, GraphClass::WpChordal,
                               GraphClass::Split, GraphClass::ProperInterval}) {
            for (int i = 0; i < samples; ++i) {
                const int size = rng.range(5, n_max);
                const Graph g = gen_class_random(cls, size, rng.next());
                add_verdict(seq_id(std::string("classes/") + graph_class_name(cls), i), g,
                            check_class_formula(g, cls, opts()));
            }
        }
        // 2-connected interval graph that is not extremal (fan fixture)
        const Graph fan = gen_standard("fan", {6});
        TheoremVerdict v;
        v.theorem = "class:interval_counterexample";
        v.instance = "fan n=7";
        v.expected = "meg = n-1 < n";
        const int meg = minimum_set(fan, SetKind::Meg).size;
        v.observed = {{"meg", meg}, {"n", fan.vertex_count()}};
        v.pass = meg == fan.vertex_count() - 1;
        add_verdict("classes/fixture/fan7", fan, v);
    }

    void product_pair(const std::string& id, const Graph& a, const Graph& b, ProductKind kind) {
        add_verdict(id, product(a, b, kind), check_product_extremality(a, b, kind, opts()));
    }

    void products() {
        if (!cfg.pairs.empty()) {
            std::istringstream in(cfg.pairs);
            std::string item;
            int idx = 0;
            while (std::getline(in, item, ',')) {
                const auto colon = item.find(':');
                if (colon == std::string::npos)
                    throw FamilyArgError("products pair '" + item + "' must be A:B");
                const Graph a = parse_graph_spec(item.substr(0, colon));
                const Graph b = parse_graph_spec(item.substr(colon + 1));
                product_pair(seq_id("products/cartesian/" + item, idx), a, b,
                             ProductKind::Cartesian);
                product_pair(seq_id("products/strong/" + item, idx), a, b, ProductKind::Strong);
                ++idx;
            }
            return;
        }
        const std::vector<std::pair<std::string, Graph>> lhs = {
            {"k3", gen_standard("complete", {3})},
            {"k23", gen_standard("biclique", {2, 3})},
            {"q2", gen_standard("hypercube", {2})},
        };
        const std::vector<std::pair<std::string, Graph>> rhs = {
            {"p3", gen_standard("path", {3})},
            {"p4", gen_standard("path", {4})},
            {"c5", gen_standard("cycle", {5})},
        };
        for (const auto& [la, a] : lhs) {
            for (const auto& [lb, b] : rhs) {
                product_pair("products/cartesian/" + la + ":" + lb, a, b, ProductKind::Cartesian);
                product_pair("products/strong/" + la + ":" + lb, a, b, ProductKind::Strong);
            }
        }
        product_pair("products/tensor/k3:k4", gen_standard("complete", {3}),
                     gen_standard("complete", {4}), ProductKind::Tensor);

        // deliberate counterexample, observe mode: K2 x P3 is not extremal and
        // its degree-1 vertices form an MEG-set
        CheckOptions obs = opts();
        obs.observe = true;
        const Graph k2 = gen_standard("complete", {2});
        const Graph p3 = gen_standard("path", {3});
        add_verdict("products/tensor/k2:p3", product(k2, p3, ProductKind::Tensor),
                    check_product_extremality(k2, p3, ProductKind::Tensor, obs));
        {
            const Graph t = product(k2, p3, ProductKind::Tensor);
            TheoremVerdict v;
            v.theorem = "product:tensor_deg1";
            v.instance = "K2 x P3";
            v.expected = "degree-1 vertices form an MEG-set; product not extremal";
            VertexSet deg1(t.vertex_count());
            for (int u = 0; u < t.vertex_count(); ++u)
                if (t.degree(u) == 1) deg1.add(u);
            const DistanceTable table = apsp(t);
            const bool covers =
                static_cast<int>(monitored_edges(t, table, deg1).size()) == t.edge_count();
            const bool extremal = is_meg_extremal(t);
            v.observed = {{"deg1_is_meg_set", covers}, {"extremal", extremal}};
            v.pass = covers && !extremal;
            add_verdict("products/fixture/fig4", t, v);
        }
    }

    void girth_campaign() {
        for (int g = 8; g <= 14; ++g) {
            const Graph c = gen_standard("cycle", {g});
            add_verdict("girth/cycle/" + std::to_string(g), c, check_girth_bound(c, opts()));
        }
        const Graph k4s = subdivide(gen_standard("complete", {4}), 3);
        add_verdict("girth/k4_subdiv3", k4s, check_girth_bound(k4s, opts()));
        const Graph q3s = subdivide(gen_standard("hypercube", {3}), 3);
        add_verdict("girth/q3_subdiv3", q3s, check_girth_bound(q3s, opts()));
    }

    void chromatic() {
        for (int n : {5, 7}) {
            const Graph c = gen_standard("cycle", {n});
            add_verdict("chromatic/cycle/" + std::to_string(n), c,
                        check_chromatic_bound(c, opts()));
        }
        const Graph pet = gen_standard("petersen", {});
        add_verdict("chromatic/petersen", pet, check_chromatic_bound(pet, opts()));
        // girth-5 fixture with a pendant exercises the pendant-aware corollary
        Graph c5p = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}});
        add_verdict("chromatic/c5_pendant", c5p, check_chromatic_bound(c5p, opts()));
    }

    void cliquesum() {
        // tightness families: pendant-forced search collapses, so the guard is
        // lifted to the family sizes
        for (int k : {3, 4}) {
            const Graph ks = gen_Kk_star(k);
            VertexSet core(ks.vertex_count());
            for (int v = 0; v < k; ++v) core.add(v);
            const auto verdict = check_cliquesum_bounds(ks, core, ks, core, opts(64));
            add_verdict("cliquesum/kkstar/" + std::to_string(k),
                        clique_sum(ks, core, ks, core), verdict);

            TheoremVerdict tight;
            tight.theorem = "cliquesum:tight_upper";
            tight.instance = "K" + std::to_string(k) + "* + K" + std::to_string(k) + "*";
            tight.expected = "meg(sum) = 2k";
            tight.observed = verdict.observed;
            tight.pass = verdict.observed.contains("meg_sum") &&
                         verdict.observed["meg_sum"].get<int>() == 2 * k;
            add_verdict("cliquesum/kkstar_tight/" + std::to_string(k),
                        clique_sum(ks, core, ks, core), tight);

            const Graph hk = gen_Hk(k);
            VertexSet hcore(hk.vertex_count());
            for (int v = 1; v <= k; ++v) hcore.add(v);
            const auto hverdict = check_cliquesum_bounds(hk, hcore, hk, hcore, opts(64));
            add_verdict("cliquesum/hk/" + std::to_string(k), clique_sum(hk, hcore, hk, hcore),
                        hverdict);

            TheoremVerdict htight;
            htight.theorem = "cliquesum:tight_lower";
            htight.instance = "H" + std::to_string(k) + " + H" + std::to_string(k);
            htight.expected = "meg(sum) = 2k+2";
            htight.observed = hverdict.observed;
            htight.pass = hverdict.observed.contains("meg_sum") &&
                          hverdict.observed["meg_sum"].get<int>() == 2 * k + 2;
            add_verdict("cliquesum/hk_tight/" + std::to_string(k),
                        clique_sum(hk, hcore, hk, hcore), htight);
        }
        // seeded random pairs with a planted shared clique
        const int samples = cfg.samples ? cfg.samples : 10;
        Rng rng(cfg.seed);
        for (int i = 0; i < samples; ++i) {
            const int k = rng.range(2, 3);
            auto make = [&](int n_lo, int n_hi) {
                const int n = rng.range(n_lo, n_hi);
                Graph g = gen_random_connected(n, 0.35 + 0.3 * rng.unit(), rng.next());
                std::vector<std::pair<int, int>> edges;
                for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
                for (int a = 0; a < k; ++a)
                    for (int b = a + 1; b < k; ++b) edges.emplace_back(a, b);
                return build_graph(n, edges);
            };
            const Graph g1 = make(4, 7);
            const Graph g2 = make(4, 7);
            VertexSet c1(g1.vertex_count()), c2(g2.vertex_count());
            for (int v = 0; v < k; ++v) {
                c1.add(v);
                c2.add(v);
            }
            add_verdict(seq_id("cliquesum/random", i), clique_sum(g1, c1, g2, c2),
                        check_cliquesum_bounds(g1, c1, g2, c2, opts()));
        }
    }

    void subdivision() {
        const std::vector<std::pair<std::string, Graph>> bases = {
            {"c5", gen_standard("cycle", {5})},
            {"k4", gen_standard("complete", {4})},
            {"grid2x4", gen_standard("grid2", {4})},
        };
        for (const auto& [name, g] : bases) {
            for (int ell : {2, 3}) {
                add_verdict("subdivision/" + name + "/ell" + std::to_string(ell), subdivide(g, ell),
                            check_subdivision_bounds(g, ell, opts(40)));
            }
        }
        // grid ratio: meg(G)/meg(S) = 2 - 2/(k+1) exactly when meg(S) = k+1
        for (int k : {3, 4, 5}) {
            const Graph g = gen_standard("grid2", {k});
            const Graph s = subdivide(g, 2);
            TheoremVerdict v;
            v.theorem = "subdivision:grid_ratio";
            v.instance = "P" + std::to_string(k) + "xP2 ell=2";
            v.expected = "meg(G) = 2k and meg(S) = k+1";
            const int mg = minimum_set(g, SetKind::Meg).size;
            const int ms = minimum_set(s, SetKind::Meg).size;
            v.observed = {{"meg", mg}, {"meg_subdivided", ms}, {"k", k}};
            v.pass = mg == 2 * k && ms == k + 1;
            if (!v.pass) v.witness = json{{"graph_edgelist", serialize(s, GraphFormat::EdgeList)}};
            add_verdict("subdivision/grid_ratio/" + std::to_string(k), s, v);
        }
    }

    void run() {
        const std::string& s = cfg.selector;
        bool all = s == "all";
        if (all || s == "chain") chain();
        if (all || s == "thm4.1") thm41();
        if (all || s == "classes") classes();
        if (all || s == "products") products();
        if (all || s == "girth") girth_campaign();
        if (all || s == "chromatic") chromatic();
        if (all || s == "cliquesum") cliquesum();
        if (all || s == "subdivision") subdivision();
        if (!all && result.rows.empty() &&
            !(s == "chain" || s == "thm4.1" || s == "classes" || s == "products" || s == "girth" ||
              s == "chromatic" || s == "cliquesum" || s == "subdivision"))
            throw FamilyArgError("unknown campaign selector '" + s + "'");
    }
};

}  // namespace

CampaignResult run_campaign(const CampaignConfig& cfg) {
    CampaignRunner runner{cfg, {}};
    runner.run();
    return std::move(runner.result);
}

}  // namespace meglab
