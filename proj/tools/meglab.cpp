#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "meglab/harness.hpp"

namespace {

using namespace meglab;

constexpr int kExitTheoremFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;
constexpr int kExitDisconnected = 4;
constexpr int kExitFamilyArgs = 5;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file '" + path + "'");
    out << data;
}

GraphFormat parse_format(const std::string& name) {
    if (name == "edgelist") return GraphFormat::EdgeList;
    if (name == "graph6") return GraphFormat::Graph6;
    throw ParseError("unknown format '" + name + "' (expected edgelist or graph6)");
}

int default_guard() {
    if (const char* env = std::getenv("MEGLAB_GUARD_N")) {
        try {
            return std::stoi(env);
        } catch (...) {
            throw Error("MEGLAB_GUARD_N must be an integer");
        }
    }
    return 18;
}

std::set<Param> parse_params(const std::string& list) {
    std::set<Param> out;
    std::istringstream in(list);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item == "all") {
            return {Param::G, Param::EG, Param::SEG, Param::DEM, Param::MEG};
        } else if (item == "g") {
            out.insert(Param::G);
        } else if (item == "eg") {
            out.insert(Param::EG);
        } else if (item == "seg") {
            out.insert(Param::SEG);
        } else if (item == "dem") {
            out.insert(Param::DEM);
        } else if (item == "meg") {
            out.insert(Param::MEG);
        } else {
            throw Error("unknown parameter '" + item + "' (expected g,eg,seg,dem,meg,all)");
        }
    }
    if (out.empty()) throw Error("empty parameter list");
    return out;
}

int cmd_compute(const std::string& input, const std::string& format, const std::string& params,
                const std::string& out_json, const std::string& out_csv, bool timing, int guard) {
    const Graph g = parse_graph(read_input(input), parse_format(format));
    const std::set<Param> wanted = parse_params(params);
    if (g.vertex_count() > guard)
        throw GuardError("graph has n=" + std::to_string(g.vertex_count()) +
                         " beyond solver guard " + std::to_string(guard) +
                         " (raise --guard or MEGLAB_GUARD_N; may take long)");

    const auto start = std::chrono::steady_clock::now();
    const ParameterReport rep = compute_report(g, wanted);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();

    ReportRow row = row_from_report(input, g, rep);
    if (timing) row.millis = elapsed;

    for (const auto& [param, value] : rep.values) {
        std::cout << param_name(param) << " = " << value << "   witness {";
        bool first = true;
        for (int v : rep.witnesses.at(param).to_vector()) {
            if (!first) std::cout << ", ";
            first = false;
            std::cout << g.label(v);
        }
        std::cout << "}\n";
    }
    if (!out_json.empty()) write_output(out_json, row.to_json().dump() + "\n");
    if (!out_csv.empty())
        write_output(out_csv, ReportRow::csv_header() + "\n" + row.to_csv() + "\n");
    return 0;
}

Graph generate_family(const std::string& family, const std::vector<std::string>& args,
                      std::uint64_t seed) {
    auto iarg = [&](std::size_t i) {
        if (i >= args.size())
            throw FamilyArgError("family '" + family + "' is missing argument " +
                                 std::to_string(i + 1));
        try {
            return std::stoi(args[i]);
        } catch (...) {
            throw FamilyArgError("family '" + family + "': argument '" + args[i] +
                                 "' is not an integer");
        }
    };
    auto ints = [&] {
        std::vector<int> out;
        for (std::size_t i = 0; i < args.size(); ++i) out.push_back(iarg(i));
        return out;
    };

    if (family == "gabcd") return gen_G_abcd(iarg(0), iarg(1), iarg(2), iarg(3));
    if (family == "gpq") return gen_G_pq(iarg(0), iarg(1));
    if (family == "kkstar") return gen_Kk_star(iarg(0));
    if (family == "hk") return gen_Hk(iarg(0));
    if (family == "cograph") return gen_class_random(GraphClass::Cograph, iarg(0), seed);
    if (family == "block") return gen_class_random(GraphClass::Block, iarg(0), seed);
    if (family == "wpchordal") return gen_class_random(GraphClass::WpChordal, iarg(0), seed);
    if (family == "split") return gen_class_random(GraphClass::Split, iarg(0), seed);
    if (family == "properinterval")
        return gen_class_random(GraphClass::ProperInterval, iarg(0), seed);
    if (family == "tree") return gen_random_tree(iarg(0), seed);
    if (family == "random") {
        if (args.size() < 2) throw FamilyArgError("random needs n and edge probability");
        double p = 0;
        try {
            p = std::stod(args[1]);
        } catch (...) {
            throw FamilyArgError("random: bad probability '" + args[1] + "'");
        }
        return gen_random_connected(iarg(0), p, seed);
    }
    if (family == "product") {
        if (args.size() != 3) throw FamilyArgError("product needs: kind specA specB");
        ProductKind kind;
        if (args[0] == "cartesian")
            kind = ProductKind::Cartesian;
        else if (args[0] == "strong")
            kind = ProductKind::Strong;
        else if (args[0] == "tensor")
            kind = ProductKind::Tensor;
        else
            throw FamilyArgError("product kind must be cartesian|strong|tensor");
        return product(parse_graph_spec(args[1]), parse_graph_spec(args[2]), kind);
    }
    if (family == "subdivide") {
        if (args.size() != 2) throw FamilyArgError("subdivide needs: spec ell");
        return subdivide(parse_graph_spec(args[0]), iarg(1));
    }
    // remaining names go straight to the standard fixture table
    return gen_standard(family, ints());
}

int cmd_generate(const std::string& family, const std::vector<std::string>& args,
                 std::uint64_t seed, const std::string& out, const std::string& format,
                 const std::string& labels_out) {
    const Graph g = generate_family(family, args, seed);
    write_output(out, serialize(g, parse_format(format)));

    nlohmann::json labels = nlohmann::json::object();
    for (int v = 0; v < g.vertex_count(); ++v) labels[std::to_string(v)] = g.label(v);
    if (!labels_out.empty()) {
        write_output(labels_out, labels.dump(2) + "\n");
    } else if (g.has_labels()) {
        std::cerr << labels.dump() << "\n";
    }
    return 0;
}

int cmd_verify(CampaignConfig cfg, const std::string& out_base, bool timing) {
    const auto start = std::chrono::steady_clock::now();
    CampaignResult result = run_campaign(cfg);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    if (timing && !result.rows.empty()) result.rows.front().millis = elapsed;

    if (out_base.empty()) {
        std::cout << result.to_jsonl();
    } else {
        write_output(out_base + ".jsonl", result.to_jsonl());
        write_output(out_base + ".csv", result.to_csv());
    }
    std::cerr << "verify " << cfg.selector << ": " << result.rows.size() << " rows, "
              << result.failures << " failures\n";
    if (result.failures > 0) {
        nlohmann::json dumps = result.failure_dumps;
        if (!out_base.empty()) write_output(out_base + ".failures.json", dumps.dump(2) + "\n");
        std::cerr << dumps.dump(2) << "\n";
        return kExitTheoremFailure;
    }
    return 0;
}

int cmd_formats() {
    std::cout <<
        R"(edge list
  First data line: "n m". Then m lines "u v" with 0 <= u,v < n, whitespace
  separated. Lines starting with '#' (and inline '#' tails) are comments.
  Canonical serialization sorts edges lexicographically with u < v.

graph6
  Standard short form: byte n+63, then the upper triangle packed 6 bits per
  byte (columns j=1..n-1, rows i<j), each byte offset by 63. Limited to
  n <= 62; the optional ">>graph6<<" prefix is accepted on input.

reports
  CSV columns: instance_id,n,m,girth,cut_vertices,g,eg,seg,dem,meg,verdict,millis
  (girth prints "inf" on forests; unrequested parameters stay empty).
  JSONL: one report row object per line, with witness sets and verdict detail.
  The millis column is 0 unless --timing is given, keeping reports
  byte-identical across runs with the same seed.
)";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"meglab: exact workbench for monitoring edge-geodetic sets"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "compute parameters of a graph file");
    std::string in_path, format = "edgelist", params = "all", out_json, out_csv;
    bool timing = false;
    int guard = -1;
    compute->add_option("input", in_path, "input graph file ('-' for stdin)")->required();
    compute->add_option("--format", format, "edgelist|graph6");
    compute->add_option("--params", params, "comma list of g,eg,seg,dem,meg or 'all'");
    compute->add_option("--out", out_json, "write the JSONL report row here");
    compute->add_option("--csv", out_csv, "write a CSV report here");
    compute->add_flag("--timing", timing, "record real milliseconds in the report");
    compute->add_option("--guard", guard, "solver size guard (default MEGLAB_GUARD_N or 18)");

    // generate
    auto* generate = app.add_subcommand("generate", "emit a generated family member");
    std::string family, gen_out, gen_format = "edgelist", labels_out;
    std::vector<std::string> fam_args;
    std::uint64_t seed = 0;
    bool seed_given = false;
    generate->add_option("family", family, "family name")->required();
    generate->add_option("args", fam_args, "family arguments");
    generate->add_option("--seed", seed, "random seed")->each([&](const std::string&) {
        seed_given = true;
    });
    generate->add_option("--out", gen_out, "output path (default stdout)");
    generate->add_option("--format", gen_format, "edgelist|graph6");
    generate->add_option("--labels-out", labels_out, "write the vertex-label map here");

    // verify
    auto* verify = app.add_subcommand("verify", "run a theorem-verification campaign");
    CampaignConfig cfg;
    std::string out_base;
    bool verify_timing = false;
    int verify_guard = -1;
    std::uint64_t verify_seed = 0;
    bool verify_seed_given = false;
    verify->add_option("selector", cfg.selector,
                       "chain|thm4.1|classes|products|girth|chromatic|cliquesum|subdivision|all")
        ->required();
    verify->add_option("--n-max", cfg.n_max, "instance size cap for random sources");
    verify->add_option("--samples", cfg.samples, "sample count for random sources");
    verify->add_option("--seed", verify_seed, "campaign seed")->each([&](const std::string&) {
        verify_seed_given = true;
    });
    verify->add_option("--out", out_base, "report base path (writes .jsonl and .csv)");
    verify->add_flag("--observe", cfg.observe, "downgrade precondition failures to observations");
    verify->add_option("--pairs", cfg.pairs, "products: comma list of specA:specB");
    verify->add_option("--guard", verify_guard, "exact solver guard (default MEGLAB_GUARD_N or 18)");
    verify->add_flag("--timing", verify_timing, "record campaign wall time in the first row");

    auto* formats = app.add_subcommand("formats", "describe file formats and report schema");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compute->parsed())
            return cmd_compute(in_path, format, params, out_json, out_csv, timing,
                               guard >= 0 ? guard : default_guard());
        if (generate->parsed()) {
            const bool is_random = family == "cograph" || family == "block" ||
                                   family == "wpchordal" || family == "split" ||
                                   family == "properinterval" || family == "tree" ||
                                   family == "random";
            if (is_random && !seed_given)
                throw FamilyArgError("family '" + family + "' needs --seed");
            return cmd_generate(family, fam_args, seed, gen_out, gen_format, labels_out);
        }
        if (verify->parsed()) {
            const bool random_source = cfg.selector == "chain" || cfg.selector == "thm4.1" ||
                                       cfg.selector == "classes" || cfg.selector == "cliquesum" ||
                                       cfg.selector == "all";
            if (random_source && !verify_seed_given)
                throw Error("verify " + cfg.selector + " needs --seed");
            cfg.seed = verify_seed;
            cfg.exact_guard = verify_guard >= 0 ? verify_guard : default_guard();
            return cmd_verify(cfg, out_base, verify_timing);
        }
        if (formats->parsed()) return cmd_formats();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const GuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const DisconnectedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDisconnected;
    } catch (const FamilyArgError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFamilyArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
