#include "doctest.h"
#include "meglab/generators.hpp"
#include "meglab/solvers.hpp"
#include "oracles.hpp"

using namespace meglab;

TEST_CASE("G_{a,b,c,d} construction shape") {
    CHECK_THROWS_AS(gen_G_abcd(3, 4, 5, 6), FamilyArgError);   // a < 4
    CHECK_THROWS_AS(gen_G_abcd(4, 5, 6, 7), FamilyArgError);   // d = c+1
    CHECK_THROWS_AS(gen_G_abcd(5, 4, 6, 8), FamilyArgError);   // not sorted

    const Graph g = gen_G_abcd(4, 5, 6, 8);
    CHECK(is_connected(g));
    // x_1,y,z_1,z_2 + W(1) + V(2) + pendants u_1,u_2,u_3 + tail x_2..x_4 + twin x'_3
    CHECK(g.vertex_count() == 14);
    CHECK(g.has_labels());

    const Graph degenerate = gen_G_abcd(4, 4, 4, 4);
    CHECK(is_connected(degenerate));
    CHECK(degenerate.vertex_count() == 8);  // W empty, single v_1, bare tail
}

TEST_CASE("G_{a,b,c,d} solves to its prescribed parameters") {
    // the (4,4,4,4) instance is small enough to check all four values here;
    // bigger tuples are covered by the acceptance suite
    const Graph g = gen_G_abcd(4, 4, 4, 4);
    CHECK(minimum_set(g, SetKind::Geodetic).size == 4);
    CHECK(minimum_set(g, SetKind::EdgeGeodetic).size == 4);
    CHECK(minimum_seg(g).size == 4);
    CHECK(minimum_set(g, SetKind::Meg).size == 4);
}

TEST_CASE("G_{p,q} construction") {
    const Graph star = gen_G_pq(1, 4);
    CHECK(star.vertex_count() == 5);
    CHECK(star.degree(0) == 4);
    CHECK(minimum_set(star, SetKind::Dem).size == 1);
    CHECK(minimum_set(star, SetKind::Meg).size == 4);

    const Graph g35 = gen_G_pq(3, 5);
    CHECK(g35.vertex_count() == 6);  // K4 plus two pendants
    CHECK(g35.degree(0) == 5);

    CHECK_THROWS_AS(gen_G_pq(2, 2), FamilyArgError);
    CHECK_THROWS_AS(gen_G_pq(0, 3), FamilyArgError);
}

TEST_CASE("K_k^* and H_k") {
    const Graph k3s = gen_Kk_star(3);
    CHECK(k3s.vertex_count() == 6);
    for (int v = 3; v < 6; ++v) CHECK(k3s.degree(v) == 1);
    CHECK(minimum_set(k3s, SetKind::Meg).size == 3);

    const Graph h3 = gen_Hk(3);
    CHECK(h3.vertex_count() == 4 + 12 + 6);  // clique, paths, subdivision points
    int pendants = 0;
    for (int v = 0; v < h3.vertex_count(); ++v)
        if (h3.degree(v) == 1) ++pendants;
    CHECK(pendants == 4);
    CHECK(minimum_set(h3, SetKind::Meg).size == 7);

    CHECK_THROWS_AS(gen_Hk(1), FamilyArgError);
    CHECK_THROWS_AS(gen_Kk_star(1), FamilyArgError);
}

TEST_CASE("clique sums") {
    const Graph k3s = gen_Kk_star(3);
    VertexSet core(6);
    for (int v = 0; v < 3; ++v) core.add(v);
    const Graph sum = clique_sum(k3s, core, k3s, core);
    CHECK(sum.vertex_count() == 6 + 6 - 3);
    // two pendants per core vertex now
    for (int v = 0; v < 3; ++v) CHECK(sum.degree(v) == 2 + 2);
    CHECK(minimum_set(sum, SetKind::Meg).size == 6);

    const Graph h3 = gen_Hk(3);
    VertexSet hcore(h3.vertex_count());
    for (int v = 1; v <= 3; ++v) hcore.add(v);
    const Graph hsum = clique_sum(h3, hcore, h3, hcore);
    CHECK(hsum.vertex_count() == 22 + 22 - 3);
    CHECK(minimum_set(hsum, SetKind::Meg).size == 8);

    // non-clique rejection
    const Graph p4 = gen_standard("path", {4});
    VertexSet bad(4);
    bad.add(0);
    bad.add(2);
    CHECK_THROWS_AS(clique_sum(p4, bad, p4, bad), FamilyArgError);
    VertexSet single(4);
    single.add(0);
    CHECK_THROWS_AS(clique_sum(p4, single, p4, single), FamilyArgError);
}

TEST_CASE("subdivision") {
    const Graph c15 = subdivide(gen_standard("cycle", {5}), 2);
    CHECK(c15.vertex_count() == 15);
    CHECK(c15.edge_count() == 15);
    CHECK(girth(c15) == 15);
    CHECK(minimum_set(c15, SetKind::Meg).size == 3);

    const Graph g = gen_standard("grid2", {4});
    CHECK(subdivide(g, 0).edges() == g.edges());
    const Graph s = subdivide(g, 2);
    CHECK(s.vertex_count() == g.vertex_count() + 2 * g.edge_count());
    CHECK(s.edge_count() == 3 * g.edge_count());
    CHECK(minimum_set(s, SetKind::Meg).size <= 5);  // k+1 construction bound
}

TEST_CASE("products") {
    // K2 x K2 is a 4-cycle in row-major numbering: 0-1, 0-2, 1-3, 2-3
    const Graph c4 = product(gen_standard("complete", {2}), gen_standard("complete", {2}),
                             ProductKind::Cartesian);
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(girth(c4) == 4);

    // K2 x P3 is two disjoint paths; degree-1 vertices form an MEG-set
    const Graph t = product(gen_standard("complete", {2}), gen_standard("path", {3}),
                            ProductKind::Tensor);
    CHECK(t.vertex_count() == 6);
    CHECK(component_count(t) == 2);
    std::vector<int> deg1;
    for (int v = 0; v < 6; ++v)
        if (t.degree(v) == 1) deg1.push_back(v);
    CHECK(deg1.size() == 4);
    CHECK(oracle::is_meg_set(t, deg1));
    CHECK(!is_meg_extremal(t));

    CHECK(is_meg_extremal(product(gen_standard("complete", {3}), gen_standard("path", {3}),
                                  ProductKind::Strong)));

    // |V| and degree sums sanity
    const Graph a = gen_standard("cycle", {4});
    const Graph b = gen_standard("path", {3});
    const Graph cart = product(a, b, ProductKind::Cartesian);
    const Graph strong = product(a, b, ProductKind::Strong);
    const Graph tensor = product(a, b, ProductKind::Tensor);
    CHECK(cart.vertex_count() == 12);
    CHECK(cart.edge_count() == 4 * 2 + 3 * 4);
    CHECK(tensor.edge_count() == 2 * 4 * 2);
    CHECK(strong.edge_count() == cart.edge_count() + tensor.edge_count());
}

TEST_CASE("standard fixtures") {
    CHECK(gen_standard("grid2", {4}).vertex_count() == 8);
    CHECK(gen_standard("grid2", {4}).edge_count() == 10);
    CHECK(is_meg_extremal(gen_standard("hypercube", {3})));
    CHECK(minimum_set(gen_standard("cycle", {4}), SetKind::Meg).size == 4);
    CHECK(gen_standard("petersen", {}).edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(gen_standard("petersen", {}).degree(v) == 3);
    CHECK(gen_standard("fan", {6}).vertex_count() == 7);
    CHECK(gen_standard("fan", {6}).degree(0) == 6);
    CHECK(gen_standard("fig1", {}).edge_count() == 7);
    CHECK(gen_standard("multipartite", {2, 2, 2}).edge_count() == 12);
    CHECK_THROWS_AS(gen_standard("mystery", {3}), FamilyArgError);
    CHECK_THROWS_AS(gen_standard("cycle", {}), FamilyArgError);
}

TEST_CASE("random classes are members by construction") {
    Rng seeds(7070);
    for (int i = 0; i < 10; ++i) {
        const std::uint64_t s = seeds.next();

        const Graph block = gen_class_random(GraphClass::Block, 12, s);
        CHECK(is_connected(block));
        // every 2-connected component of a block graph is a clique: check via
        // the simplicial/cut dichotomy
        for (int v = 0; v < block.vertex_count(); ++v) {
            const bool cut = cut_vertices(block).contains(v);
            const bool simp = simplicial_vertices(block).contains(v);
            CHECK((cut || simp));
        }

        const Graph split = gen_class_random(GraphClass::Split, 10, s);
        CHECK(is_connected(split));

        const Graph cog = gen_class_random(GraphClass::Cograph, 10, s);
        CHECK(is_connected(cog));
        // no induced P4
        const int n = cog.vertex_count();
        bool has_p4 = false;
        for (int a = 0; a < n && !has_p4; ++a)
            for (int b = 0; b < n && !has_p4; ++b)
                for (int c = 0; c < n && !has_p4; ++c)
                    for (int d = 0; d < n && !has_p4; ++d) {
                        if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                        has_p4 = cog.has_edge(a, b) && cog.has_edge(b, c) && cog.has_edge(c, d) &&
                                 !cog.has_edge(a, c) && !cog.has_edge(a, d) && !cog.has_edge(b, d);
                    }
        CHECK(!has_p4);

        const Graph pint = gen_class_random(GraphClass::ProperInterval, 10, s);
        CHECK(is_connected(pint));

        const Graph wpc = gen_class_random(GraphClass::WpChordal, 12, s);
        CHECK(is_connected(wpc));
    }
}

TEST_CASE("random generation is deterministic under the seed") {
    const Graph a = gen_random_connected(5, 0.5, 42);
    const Graph b = gen_random_connected(5, 0.5, 42);
    CHECK(a.edges() == b.edges());
    CHECK(gen_random_connected(2, 1.0, 7).edge_count() == 1);
    CHECK_THROWS_AS(gen_random_connected(8, 0.01, 3), Error);  // bounded retries
    CHECK_THROWS_AS(gen_random_connected(1, 0.5, 3), FamilyArgError);
    CHECK_THROWS_AS(gen_random_connected(4, 0.0, 3), FamilyArgError);

    const Graph t1 = gen_random_tree(9, 11);
    const Graph t2 = gen_random_tree(9, 11);
    CHECK(t1.edges() == t2.edges());
    CHECK(t1.edge_count() == 8);
    CHECK(is_connected(t1));

    for (GraphClass cls : {GraphClass::Cograph, GraphClass::Block, GraphClass::WpChordal,
                           GraphClass::Split, GraphClass::ProperInterval}) {
        const Graph x = gen_class_random(cls, 9, 1337);
        const Graph y = gen_class_random(cls, 9, 1337);
        CHECK(x.edges() == y.edges());
    }
}

TEST_CASE("generated labels reference the construction names") {
    const Graph g = gen_G_abcd(4, 5, 6, 8);
    CHECK(g.label(0) == "x_1");
    CHECK(g.label(1) == "y");
    const Graph h = gen_Hk(2);
    CHECK(h.label(0) == "v_0");
}
