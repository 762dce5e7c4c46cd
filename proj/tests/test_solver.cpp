#include "doctest.h"

#include "cflr/error.hpp"
#include "cflr/oracle.hpp"
#include "cflr/solver.hpp"
#include "support.hpp"

using namespace cflr;

TEST_CASE("dyck-1 on a small graph") {
    auto g = parse_graph("u x lp\nx y lp\ny z rp\nz v rp\n");
    auto cnf = to_cnf(preset("dyck:1"));
    CHECK(on_demand(cnf, g, "u", "v"));
    CHECK(on_demand(cnf, g, "x", "z"));
    CHECK_FALSE(on_demand(cnf, g, "u", "z"));
    auto pairs = all_pairs(cnf, g);
    CHECK(pairs.contains(g.vertex_id("u"), g.vertex_id("v")));
    CHECK(pairs.contains(g.vertex_id("u"), g.vertex_id("u")));
}

TEST_CASE("inert labels are reported") {
    auto g = parse_graph("u v a\nv w q\n");
    SolveStats stats;
    all_pairs(to_cnf(preset("anbn")), g, &stats);
    CHECK(stats.inert_labels == std::vector<std::string>{"q"});
}

TEST_CASE("generic, on-demand and linear agree with the oracle") {
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        auto gram = testing::random_cnf_grammar(rng, 4, 2);
        auto graph = testing::random_graph(rng, 5, 0.3, testing::alphabet(2));
        auto cnf = to_cnf(gram);
        auto expect = oracle::bar_hillel_all_pairs(cnf, graph);
        CHECK(all_pairs(cnf, graph) == expect);
        for (VertexId s = 0; s < 5; ++s)
            for (VertexId t = 0; t < 5; ++t) CHECK(on_demand(cnf, graph, s, t) == expect.contains(s, t));
    }
    for (const char* name : {"anbn", "palindrome", "anbn_mid:ab"}) {
        for (int trial = 0; trial < 20; ++trial) {
            auto graph = testing::random_graph(rng, 6, 0.35, testing::alphabet(2));
            auto gram = preset(name);
            CHECK(all_pairs_linear(gram, graph) == all_pairs(to_cnf(gram), graph));
        }
    }
    CHECK_THROWS_AS(all_pairs_linear(preset("dyck:1"), parse_graph("u v a\n")), NotLinear);
}

TEST_CASE("join-free scan") {
    auto g = parse_graph("u v a\nv w b\nw w c\n");
    auto pairs = join_free_all_pairs(parse_grammar("S -> 'a' | 'c' | eps"), g);
    CHECK(pairs == all_pairs(to_cnf(parse_grammar("S -> 'a' | 'c' | eps")), g));
    CHECK(pairs.size() == 4);
    CHECK_THROWS_AS(join_free_all_pairs(preset("anbn"), g), JoinInducing);
}

TEST_CASE("geq algorithms") {
    auto g = parse_graph("s v a\nv t b\n");
    CHECK(geq_on_demand(g, g.vertex_id("s"), g.vertex_id("t")));
    auto h = parse_graph("s v a\nv w b\nw t b\n");
    CHECK_FALSE(geq_on_demand(h, h.vertex_id("s"), h.vertex_id("t")));
    auto cyc = parse_graph("s s a\ns v b\nv t b\n");
    CHECK(geq_on_demand(cyc, cyc.vertex_id("s"), cyc.vertex_id("t")));
    CHECK(geq_all_pairs_dominance(cyc) == all_pairs(to_cnf(preset("geq")), cyc));

    auto lp = longest_paths_from(cyc, "a", cyc.vertex_id("s"));
    CHECK(lp[cyc.vertex_id("s")] == kPosInf);
    CHECK(lp[cyc.vertex_id("v")] == kNegInf);
    auto sp = shortest_paths_to(cyc, "b", cyc.vertex_id("t"));
    CHECK(sp[cyc.vertex_id("s")] == 2);
}

TEST_CASE("strategy selection") {
    auto graph = parse_graph("s v a\nv t b\n");
    CHECK(choose_strategy(parse_grammar("S -> 'a'"), graph, false).strategy == Strategy::joinfree);
    CHECK(choose_strategy(preset("geq"), graph, true).strategy == Strategy::geq_od);
    CHECK(choose_strategy(preset("geq"), graph, false).strategy == Strategy::geq_dom);
    CHECK(choose_strategy(preset("anbn"), graph, false).strategy == Strategy::linear);
    CHECK(choose_strategy(preset("dyck:1"), graph, false).strategy == Strategy::generic);
    CHECK(is_geq_grammar(parse_grammar("X -> P Q\nP -> eps | 'a' P\nQ -> eps | 'a' Q 'b'")));
    CHECK_FALSE(is_geq_grammar(preset("anbn")));
    CHECK_THROWS_AS(check_strategy(Strategy::linear, preset("dyck:1"), graph, false), PreconditionError);
    CHECK(parse_strategy("geq-od") == Strategy::geq_od);
}

TEST_CASE("strategies give identical answers") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto graph = testing::random_graph(rng, 7, 0.3, testing::alphabet(2));
        auto gram = preset("geq");
        auto ref = solve_all_pairs(Strategy::generic, gram, graph);
        for (auto s : {Strategy::automatic, Strategy::geq_dom})
            CHECK(solve_all_pairs(s, gram, graph) == ref);
        for (VertexId u = 0; u < 7; ++u)
            CHECK(solve_pair(Strategy::geq_od, gram, graph, u, 6) == ref.contains(u, 6));
    }
}
