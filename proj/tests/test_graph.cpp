#include "doctest.h"
#include "meglab/graph.hpp"
#include "meglab/generators.hpp"
#include "oracles.hpp"

using namespace meglab;

TEST_CASE("build_graph basics") {
    const Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.has_edge(0, 1));
    CHECK(!p3.has_edge(0, 2));

    const Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(c4.edge_count() == 4);
    CHECK(c4.neighbors(0) == std::vector<int>{1, 3});

    CHECK_THROWS_AS(build_graph(1, {{0, 0}}), Error);
    CHECK_THROWS_AS(build_graph(2, {{0, 5}}), Error);

    // duplicate edges collapse
    const Graph dup = build_graph(2, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);
}

TEST_CASE("edge list parsing") {
    const Graph p3 = parse_graph("3 2\n0 1\n1 2", GraphFormat::EdgeList);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.has_edge(1, 2));

    const Graph commented = parse_graph("# header\n3 1 # counts\n0 2\n", GraphFormat::EdgeList);
    CHECK(commented.has_edge(0, 2));

    CHECK_THROWS_AS(parse_graph("2 1\n0 5", GraphFormat::EdgeList), ParseError);
    CHECK_THROWS_AS(parse_graph("", GraphFormat::EdgeList), ParseError);
    CHECK_THROWS_AS(parse_graph("nonsense", GraphFormat::EdgeList), ParseError);
    CHECK_THROWS_AS(parse_graph("3 2\n0 1", GraphFormat::EdgeList), ParseError);
    CHECK_THROWS_AS(parse_graph("1 1\n0 0", GraphFormat::EdgeList), ParseError);
}

TEST_CASE("graph6 round trips and the K4 constant") {
    // K4 encodes to 'C~': size byte 4+63, upper triangle all ones
    const Graph k4 = gen_standard("complete", {4});
    CHECK(serialize(k4, GraphFormat::Graph6) == "C~");
    const Graph back = parse_graph("C~", GraphFormat::Graph6);
    CHECK(back.vertex_count() == 4);
    CHECK(back.edge_count() == 6);

    CHECK(parse_graph(">>graph6<<C~\n", GraphFormat::Graph6).edge_count() == 6);
    CHECK_THROWS_AS(parse_graph("~???", GraphFormat::Graph6), ParseError);
    CHECK_THROWS_AS(parse_graph("C~~", GraphFormat::Graph6), ParseError);
    CHECK_THROWS_AS(serialize(Graph(63, {}), GraphFormat::Graph6), GuardError);
}

TEST_CASE("parse then serialize is identity on canonical form") {
    Rng rng(20240917);
    for (int i = 0; i < 40; ++i) {
        const int n = rng.range(2, 14);
        const Graph g = gen_random_connected(n, 0.2 + 0.6 * rng.unit(), rng.next());
        for (GraphFormat fmt : {GraphFormat::EdgeList, GraphFormat::Graph6}) {
            const Graph round = parse_graph(serialize(g, fmt), fmt);
            CHECK(round.vertex_count() == g.vertex_count());
            CHECK(round.edges() == g.edges());
        }
    }
}

TEST_CASE("cut vertices") {
    const Graph p4 = gen_standard("path", {4});
    CHECK(cut_vertices(p4).to_vector() == std::vector<int>{1, 2});
    CHECK(cut_vertices(gen_standard("cycle", {5})).empty());
    CHECK(cut_vertices(gen_standard("star", {3})).to_vector() == std::vector<int>{0});
    CHECK_THROWS_AS(cut_vertices(Graph(3, {{0, 1}})), DisconnectedError);
}

TEST_CASE("bridges") {
    CHECK(bridges(gen_standard("path", {4})).size() == 3);
    CHECK(bridges(gen_standard("cycle", {4})).empty());
    const Graph tri_pendant = build_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    const auto b = bridges(tri_pendant);
    REQUIRE(b.size() == 1);
    CHECK(b[0] == Edge(0, 3));
}

TEST_CASE("girth") {
    CHECK(girth(gen_standard("cycle", {7})) == 7);
    CHECK(!girth(gen_standard("path", {5})).has_value());
    CHECK(girth(gen_standard("petersen", {})) == 5);  // matches the cycle-enumeration oracle
    CHECK(girth(gen_standard("petersen", {})) == oracle::girth(gen_standard("petersen", {})));
    CHECK(girth(gen_standard("complete", {4})) == 3);
    CHECK(girth(gen_standard("biclique", {2, 3})) == 4);

    Rng rng(77);
    for (int i = 0; i < 30; ++i) {
        const Graph g = gen_random_connected(rng.range(3, 10), 0.2 + 0.5 * rng.unit(), rng.next());
        CHECK(girth(g) == oracle::girth(g));
    }
}

TEST_CASE("girth is infinite exactly on forests") {
    Rng rng(4242);
    for (int i = 0; i < 20; ++i) {
        const Graph t = gen_random_tree(rng.range(2, 12), rng.next());
        CHECK(!girth(t).has_value());
        CHECK(t.edge_count() == t.vertex_count() - component_count(t));
    }
}

TEST_CASE("simplicial vertices") {
    CHECK(simplicial_vertices(gen_standard("complete", {4})).size() == 4);
    CHECK(simplicial_vertices(gen_standard("path", {3})).to_vector() == std::vector<int>{0, 2});
    CHECK(simplicial_vertices(gen_standard("cycle", {4})).empty());
}

TEST_CASE("twin classes") {
    const auto k23 = twin_classes(gen_standard("biclique", {2, 3}));
    REQUIRE(k23.size() == 2);
    CHECK(k23[0] == std::vector<int>{0, 1});
    CHECK(k23[1] == std::vector<int>{2, 3, 4});

    const auto k4 = twin_classes(gen_standard("complete", {4}));
    REQUIRE(k4.size() == 1);
    CHECK(k4[0].size() == 4);

    CHECK(twin_classes(gen_standard("path", {4})).size() == 4);
}

TEST_CASE("twin classes partition V and share degrees") {
    Rng rng(99);
    for (int i = 0; i < 25; ++i) {
        const Graph g = gen_random_connected(rng.range(2, 12), 0.2 + 0.6 * rng.unit(), rng.next());
        const auto classes = twin_classes(g);
        std::vector<char> seen(g.vertex_count(), 0);
        for (const auto& cls : classes) {
            for (int v : cls) {
                CHECK(!seen[v]);
                seen[v] = 1;
                CHECK(g.degree(v) == g.degree(cls.front()));
            }
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; }));
    }
}

TEST_CASE("two-connectivity") {
    CHECK(is_two_connected(gen_standard("cycle", {5})));
    CHECK(!is_two_connected(gen_standard("path", {4})));
    CHECK(!is_two_connected(gen_standard("complete", {2})));  // n < 3

    Rng rng(123);
    for (int i = 0; i < 25; ++i) {
        const Graph g = gen_random_connected(rng.range(3, 10), 0.3 + 0.5 * rng.unit(), rng.next());
        CHECK(is_two_connected(g) == cut_vertices(g).empty());
        if (is_two_connected(g)) CHECK(bridges(g).empty());
    }
}

TEST_CASE("vertex set algebra") {
    VertexSet a(6), b(6);
    a.add(1);
    a.add(4);
    b.add(4);
    b.add(5);
    CHECK((a | b).to_vector() == std::vector<int>{1, 4, 5});
    CHECK((a & b).to_vector() == std::vector<int>{4});
    CHECK((a - b).to_vector() == std::vector<int>{1});
    CHECK(a.is_subset_of(a | b));
    CHECK(VertexSet::all(3).size() == 3);
    CHECK_THROWS_AS(VertexSet(65), GuardError);
    CHECK_THROWS_AS(a.add(6), Error);
}
