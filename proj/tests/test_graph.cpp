#include "doctest.h"

#include "cflr/error.hpp"
#include "cflr/graph.hpp"
#include "cflr/source_graphs.hpp"

using namespace cflr;

TEST_CASE("vertices and edges are interned") {
    LabeledGraph g;
    CHECK(g.add_edge("u", "v", "a"));
    CHECK_FALSE(g.add_edge("u", "v", "a"));
    CHECK(g.add_edge("u", "v", "b"));
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 2);
    CHECK(g.vertex_id("v") == 1);
    CHECK_THROWS_AS(g.vertex_id("w"), LookupError);
    CHECK_THROWS_AS(g.add_path({"a", "b"}, {}), PreconditionError);
}

TEST_CASE("text format round trip with bracket aliases and isolated nodes") {
    auto g = parse_graph("# demo\nnode z\nu x lp\nx v rp\nv v [\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.alphabet() == std::set<std::string>{"(", ")", "["});
    auto back = parse_graph(serialize_graph(g));
    CHECK(back == g);
    CHECK(back.vertex_names() == g.vertex_names());
    CHECK_THROWS_AS(parse_graph("u v\n"), ParseError);
}

TEST_CASE("reverse, filter and unions") {
    auto g = parse_graph("a b x\nb c y\n");
    auto r = reverse(g);
    CHECK(r.edge_count() == 2);
    CHECK(r.edges()[0].src == r.vertex_id("b"));
    auto f = filter_by_label(g, {"x"});
    CHECK(f.edge_count() == 1);
    CHECK(f.vertex_count() == 3);
    auto u = disjoint_union(g, g, "L.", "R.");
    CHECK(u.vertex_count() == 6);
    CHECK(u.edge_count() == 4);
}

TEST_CASE("pair sets are sorted and serialize") {
    auto g = parse_graph("a b x\n");
    VertexPairSet s({{1, 0}, {0, 1}, {0, 1}});
    CHECK(s.size() == 2);
    CHECK(s.contains(1, 0));
    CHECK(serialize_pairs(s, g) == "a b\nb a\n");
    CHECK(parse_pairs("a b\nb a\n", g) == s);
}

TEST_CASE("scc condensation is topologically ordered") {
    auto g = parse_graph("a b x\nb a x\nb c x\nc d y\nd d x\n");
    auto c = scc_condense(g, "x");
    CHECK(c.component[g.vertex_id("a")] == c.component[g.vertex_id("b")]);
    CHECK(c.cyclic[c.component[g.vertex_id("a")]]);
    CHECK(c.cyclic[c.component[g.vertex_id("d")]]);
    CHECK_FALSE(c.cyclic[c.component[g.vertex_id("c")]]);
    CHECK(c.component[g.vertex_id("a")] < c.component[g.vertex_id("c")]);
    auto none = scc_condense(g, "zzz");
    CHECK(none.size() == g.vertex_count());
}

TEST_CASE("source graph formats") {
    auto sg = parse_simple_graph("node 4\n1 2\n2 3\n");
    CHECK(sg.size() == 4);
    CHECK(sg.adjacent(sg.index("1"), sg.index("2")));
    CHECK(sg.adjacent(sg.index("2"), sg.index("1")));
    CHECK_FALSE(sg.adjacent(sg.index("4"), sg.index("1")));
    CHECK(parse_simple_graph(serialize_simple_graph(sg)).edge_count() == 2);

    auto tg = parse_tripartite("part A a1\npart B b1\npart C c1\na1 b1\nb1 c1\nc1 a1\n");
    CHECK(tg.ab[0][0]);
    CHECK(tg.ca[0][0]);
    CHECK_THROWS_AS(parse_tripartite("part A a1 a2\npart B b1\npart C c1\na1 a2\n"), ParseError);

    auto kg = parse_kpartite("part 1 x\npart 2 y\npart 3 z\nx y\ny z\nz x\n");
    CHECK(kg.k() == 3);
    CHECK(kg.arcs[2][0][0]);

    auto m = parse_matrix("1 0\n0 1\n");
    CHECK(parse_matrix(serialize_matrix(m)) == m);
}

TEST_CASE("seeded generators are deterministic") {
    Rng a(42), b(42);
    CHECK(serialize_simple_graph(random_simple_graph(8, 0.4, a)) == serialize_simple_graph(random_simple_graph(8, 0.4, b)));
    CHECK(hex_digest(fnv1a("")) == hex_digest(0xcbf29ce484222325ULL));
}
