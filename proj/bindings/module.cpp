#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "meglab/harness.hpp"

namespace py = pybind11;
using namespace meglab;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: return py::none();
        case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

VertexSet to_set(const Graph& g, const std::vector<int>& members) {
    return VertexSet::from_vector(g.vertex_count(), members);
}

SetKind kind_from_name(const std::string& name) {
    if (name == "g" || name == "geodetic") return SetKind::Geodetic;
    if (name == "eg" || name == "edge_geodetic") return SetKind::EdgeGeodetic;
    if (name == "dem") return SetKind::Dem;
    if (name == "meg") return SetKind::Meg;
    throw Error("unknown set kind '" + name + "'");
}

ProductKind product_from_name(const std::string& name) {
    if (name == "cartesian") return ProductKind::Cartesian;
    if (name == "strong") return ProductKind::Strong;
    if (name == "tensor") return ProductKind::Tensor;
    throw Error("unknown product kind '" + name + "'");
}

GraphClass class_from_name(const std::string& name) {
    if (name == "cograph") return GraphClass::Cograph;
    if (name == "block") return GraphClass::Block;
    if (name == "wp_chordal" || name == "wpchordal") return GraphClass::WpChordal;
    if (name == "split") return GraphClass::Split;
    if (name == "proper_interval" || name == "properinterval") return GraphClass::ProperInterval;
    throw Error("unknown graph class '" + name + "'");
}

py::dict verdict_to_py(const TheoremVerdict& v) {
    py::dict out;
    out["theorem"] = v.theorem;
    out["instance"] = v.instance;
    out["expected"] = v.expected;
    out["observed"] = json_to_py(v.observed);
    out["pass"] = v.pass;
    out["observed_only"] = v.observed_only;
    return out;
}

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact solvers for monitoring edge-geodetic sets and related parameters";

    py::register_exception<Error>(m, "MeglabError");

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return build_graph(n, edges);
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v); })
        .def("degree", &Graph::degree)
        .def("has_edge", py::overload_cast<int, int>(&Graph::has_edge, py::const_))
        .def("edges", &edge_pairs)
        .def("label", &Graph::label)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("parse", [](const std::string& text, const std::string& fmt) {
        return parse_graph(text, fmt == "graph6" ? GraphFormat::Graph6 : GraphFormat::EdgeList);
    }, py::arg("text"), py::arg("format") = "edgelist");
    m.def("to_edgelist", [](const Graph& g) { return serialize(g, GraphFormat::EdgeList); });
    m.def("to_graph6", [](const Graph& g) { return serialize(g, GraphFormat::Graph6); });

    m.def("is_connected", &is_connected);
    m.def("cut_vertices", [](const Graph& g) { return cut_vertices(g).to_vector(); });
    m.def("bridges", [](const Graph& g) {
        std::vector<std::pair<int, int>> out;
        for (const Edge& e : bridges(g)) out.emplace_back(e.u, e.v);
        return out;
    });
    m.def("girth", [](const Graph& g) -> py::object {
        const auto v = girth(g);
        return v ? py::cast(*v) : py::none();
    });
    m.def("simplicial_vertices", [](const Graph& g) { return simplicial_vertices(g).to_vector(); });
    m.def("twin_classes", [](const Graph& g) { return twin_classes(g); });
    m.def("is_two_connected", &is_two_connected);

    m.def("distances", [](const Graph& g) {
        const auto t = apsp(g);
        std::vector<std::vector<int>> out(g.vertex_count(), std::vector<int>(g.vertex_count()));
        for (int a = 0; a < g.vertex_count(); ++a)
            for (int b = 0; b < g.vertex_count(); ++b) out[a][b] = t.dist(a, b);
        return out;
    });
    m.def("sigma", [](const Graph& g, int a, int b) {
        const auto t = apsp(g);
        const PathCount s = t.sigma(a, b);
        if (s > PathCount(UINT64_MAX)) throw OverflowError("sigma does not fit in 64 bits");
        return static_cast<std::uint64_t>(s);
    });
    m.def("pair_monitors_edge", [](const Graph& g, int a, int b, std::pair<int, int> e) {
        const auto t = apsp(g);
        return pair_monitors_edge(g, t, a, b, Edge(e.first, e.second));
    });
    m.def("monitored_edges", [](const Graph& g, const std::vector<int>& members) {
        const auto t = apsp(g);
        std::vector<std::pair<int, int>> out;
        for (const Edge& e : monitored_edges(g, t, to_set(g, members))) out.emplace_back(e.u, e.v);
        return out;
    });
    m.def("covered_vertices", [](const Graph& g, const std::vector<int>& members) {
        const auto t = apsp(g);
        return covered_vertices(g, t, to_set(g, members)).to_vector();
    });
    m.def("covered_edges", [](const Graph& g, const std::vector<int>& members) {
        const auto t = apsp(g);
        std::vector<std::pair<int, int>> out;
        for (const Edge& e : covered_edges(g, t, to_set(g, members))) out.emplace_back(e.u, e.v);
        return out;
    });
    m.def("shortest_paths", [](const Graph& g, int a, int b, std::uint64_t cap) {
        const auto t = apsp(g);
        return enumerate_shortest_paths(g, t, a, b, cap);
    }, py::arg("g"), py::arg("a"), py::arg("b"), py::arg("cap") = 100000);

    m.def("minimum_set", [](const Graph& g, const std::string& kind) {
        const auto res = minimum_set(g, kind_from_name(kind));
        return py::make_tuple(res.size, res.witness.to_vector());
    }, py::arg("g"), py::arg("kind"));
    m.def("minimum_seg", [](const Graph& g, std::uint64_t cap) {
        const auto res = minimum_seg(g, cap);
        py::dict assignment;
        for (const auto& [key, path] : res.assignment)
            assignment[py::make_tuple(key.first, key.second)] = path;
        return py::make_tuple(res.size, res.witness.to_vector(), assignment);
    }, py::arg("g"), py::arg("cap") = 100000);
    m.def("forced_meg_vertices", [](const Graph& g) { return forced_meg_vertices(g).to_vector(); });
    m.def("excluded_min_meg_vertices",
          [](const Graph& g) { return excluded_min_meg_vertices(g).to_vector(); });
    m.def("is_meg_extremal", &is_meg_extremal);
    m.def("vertex_cover_meg_set",
          [](const Graph& g) { return vertex_cover_meg_set(g).to_vector(); });
    m.def("girth_greedy_meg", [](const Graph& g) { return girth_greedy_meg(g).to_vector(); });
    m.def("chromatic_number", &chromatic_number);

    m.def("compute_parameters", [](const Graph& g, const std::vector<std::string>& names) {
        std::set<Param> wanted;
        for (const auto& name : names) {
            if (name == "g") wanted.insert(Param::G);
            else if (name == "eg") wanted.insert(Param::EG);
            else if (name == "seg") wanted.insert(Param::SEG);
            else if (name == "dem") wanted.insert(Param::DEM);
            else if (name == "meg") wanted.insert(Param::MEG);
            else throw Error("unknown parameter '" + name + "'");
        }
        const auto rep = compute_report(g, wanted);
        py::dict out;
        for (const auto& [param, value] : rep.values) {
            py::dict entry;
            entry["value"] = value;
            entry["witness"] = rep.witnesses.at(param).to_vector();
            out[param_name(param)] = entry;
        }
        return out;
    }, py::arg("g"), py::arg("params") = std::vector<std::string>{"g", "eg", "seg", "dem", "meg"});

    m.def("gen_g_abcd", &gen_G_abcd);
    m.def("gen_g_pq", &gen_G_pq);
    m.def("gen_kk_star", &gen_Kk_star);
    m.def("gen_hk", &gen_Hk);
    m.def("clique_sum", [](const Graph& g1, const std::vector<int>& c1, const Graph& g2,
                           const std::vector<int>& c2) {
        return clique_sum(g1, to_set(g1, c1), g2, to_set(g2, c2));
    });
    m.def("subdivide", &subdivide);
    m.def("product", [](const Graph& g, const Graph& h, const std::string& kind) {
        return product(g, h, product_from_name(kind));
    });
    m.def("gen_standard", &gen_standard, py::arg("name"),
          py::arg("params") = std::vector<int>{});
    m.def("gen_class_random", [](const std::string& cls, int size, std::uint64_t seed) {
        return gen_class_random(class_from_name(cls), size, seed);
    });
    m.def("gen_random_connected", &gen_random_connected);
    m.def("gen_random_tree", &gen_random_tree);

    m.def("check_chain", [](const Graph& g) { return verdict_to_py(check_chain(g)); });
    m.def("check_class_formula", [](const Graph& g, const std::string& cls) {
        return verdict_to_py(check_class_formula(g, class_from_name(cls)));
    });
    m.def("check_product_extremality",
          [](const Graph& g, const Graph& h, const std::string& kind, bool observe) {
              CheckOptions opt;
              opt.observe = observe;
              return verdict_to_py(check_product_extremality(g, h, product_from_name(kind), opt));
          },
          py::arg("g"), py::arg("h"), py::arg("kind"), py::arg("observe") = false);
    m.def("check_girth_bound", [](const Graph& g) { return verdict_to_py(check_girth_bound(g)); });
    m.def("check_chromatic_bound",
          [](const Graph& g) { return verdict_to_py(check_chromatic_bound(g)); });
    m.def("check_subdivision_bounds", [](const Graph& g, int ell, int guard) {
        CheckOptions opt;
        opt.exact_guard = guard;
        return verdict_to_py(check_subdivision_bounds(g, ell, opt));
    }, py::arg("g"), py::arg("ell"), py::arg("guard") = 18);

    m.def("campaign_jsonl", [](const std::string& selector, int n_max, int samples,
                               std::uint64_t seed, int guard) {
        CampaignConfig cfg;
        cfg.selector = selector;
        cfg.n_max = n_max;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.exact_guard = guard;
        const auto res = run_campaign(cfg);
        return py::make_tuple(res.to_jsonl(), res.failures);
    }, py::arg("selector"), py::arg("n_max") = 0, py::arg("samples") = 0, py::arg("seed") = 0,
       py::arg("guard") = 18);
}
