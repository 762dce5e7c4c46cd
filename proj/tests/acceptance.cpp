// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "cflr/andersen.hpp"
#include "cflr/bench.hpp"
#include "cflr/error.hpp"
#include "cflr/oracle.hpp"
#include "cflr/reductions.hpp"
#include "cflr/solver.hpp"
#include "support.hpp"

using namespace cflr;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void fail(const std::string& why) {
        if (pass) detail << why;
        pass = false;
    }
};

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool query(const ReductionInstance& inst) {
    return on_demand(to_cnf(inst.grammar), inst.graph, inst.query->first, inst.query->second);
}

// --- 1 ----------------------------------------------------------------------
void solver_vs_oracle(Outcome& o) {
    Rng rng(1001);
    std::size_t mismatches = 0, pairs = 0;
    for (int i = 0; i < 1000; ++i) {
        std::size_t sigma = pick(rng, 1, 3);
        auto g = testing::random_cnf_grammar(rng, 6, sigma);
        auto graph = testing::random_graph(rng, pick(rng, 1, 8), uniform(rng, 0.1, 0.6), testing::alphabet(sigma));
        auto cnf = to_cnf(g);
        auto got = all_pairs(cnf, graph);
        oracle::BarHillelTable table(cnf, graph);
        auto n = static_cast<VertexId>(graph.vertex_count());
        for (VertexId s = 0; s < n; ++s)
            for (VertexId t = 0; t < n; ++t) {
                bool expect = cnf.empty_language() ? false
                                                   : table.productive(cnf.start(), s, t) ||
                                                         (s == t && cnf.accepts_empty());
                if (got.contains(s, t) != expect) ++mismatches;
                pairs += expect;
            }
        if (got != oracle::bar_hillel_all_pairs(cnf, graph)) ++mismatches;
    }
    o.detail << "1000 instances, " << pairs << " reachable pairs, " << mismatches << " mismatches";
    if (mismatches) o.pass = false;
}

// --- 2 ----------------------------------------------------------------------
void classifier(Outcome& o) {
    for (const char* name : {"dyck:1", "dyck:2", "geq", "anbn", "eqcount", "palindrome", "apa"}) {
        auto g = preset(name);
        auto r = classify(g);
        if (!r.join_inducing || !r.witness || r.witness->size() < 2 || !oracle::cyk(to_cnf(g), *r.witness))
            o.fail(std::string("bad report for ") + name + "; ");
    }
    std::vector<std::pair<std::string, Grammar>> flat = {{"S <- a | b", parse_grammar("S -> 'a' | 'b'")},
                                                          {"S <- eps", parse_grammar("S -> eps")},
                                                          {"empty language", Grammar("S", {})},
                                                          {"empty language (unproductive)", parse_grammar("S -> 'a' S")}};
    for (const auto& [label, g] : flat)
        if (classify(g).join_inducing) o.fail("join_inducing for " + label + "; ");
    o.detail << "7 join-inducing presets, 4 join-free grammars";
}

// --- 3 ----------------------------------------------------------------------
void triangle_reduction(Outcome& o) {
    Rng rng(3003);
    std::size_t mismatches = 0, positives = 0;
    for (int i = 0; i < 200; ++i) {
        auto g3 = random_tripartite(pick(rng, 1, 15), pick(rng, 1, 15), pick(rng, 1, 15), uniform(rng, 0.02, 0.3), rng);
        auto inst = triangle_to_dyck1(g3, true);
        bool got = query(inst);
        positives += *inst.truth;
        if (got != *inst.truth) ++mismatches;
    }
    TripartiteGraph fig(3, 3, 3);
    fig.ab[2][1] = fig.bc[1][1] = fig.ca[1][2] = true;
    auto inst = triangle_to_dyck1(fig, true);
    auto s = inst.graph.vertex_id(inst.query->first), t = inst.graph.vertex_id(inst.query->second);
    bool word = oracle::enumerate_paths(inst.graph, s, t, 8).count(split_terminal_list("(((())))")) == 1;
    bool accepted = oracle::cyk(to_cnf(inst.grammar), split_terminal_list("(((())))"));
    if (!word || !accepted || !query(inst)) o.fail("planted a3-b2-c2 example not accepted via (((()))); ");
    o.detail << "200 graphs, " << positives << " with triangles, " << mismatches
             << " mismatches; planted a3-b2-c2 word (((()))) " << (word && accepted ? "found" : "missing");
    if (mismatches) o.pass = false;
}

// --- 4 ----------------------------------------------------------------------
void clique_reduction(Outcome& o) {
    Rng rng(4004);
    std::size_t mismatches = 0, structural = 0, pos1 = 0, pos2 = 0;
    for (int i = 0; i < 100; ++i) {
        auto g = random_simple_graph(pick(rng, 3, 10), uniform(rng, 0.2, 0.8), rng);
        auto inst = kclique_to_dyck2(g, 1, true);
        pos1 += *inst.truth;
        if (query(inst) != *inst.truth) ++mismatches;
        if (!check_neighbor_gadgets(inst)) ++structural;
    }
    for (int i = 0; i < 50; ++i) {
        auto g = random_simple_graph(pick(rng, 6, 10), uniform(rng, 0.6, 0.95), rng);
        auto inst = kclique_to_dyck2(g, 2, true);
        pos2 += *inst.truth;
        if (query(inst) != *inst.truth) ++mismatches;
        if (!check_neighbor_gadgets(inst)) ++structural;
    }
    o.detail << "k=1: 100 graphs (" << pos1 << " with 3-cliques), k=2: 50 graphs (" << pos2 << " with 6-cliques); "
             << mismatches << " mismatches, " << structural << " neighbor-gadget violations";
    if (mismatches || structural) o.pass = false;
}

// --- 5 ----------------------------------------------------------------------
void bmm_reduction(Outcome& o) {
    Rng rng(5005);
    std::vector<std::string> presets = {"anbn", "dyck:1", "dyck:2", "eqcount", "palindrome", "anbn_mid:c"};
    std::set<std::size_t> lengths;
    std::size_t mismatches = 0;
    for (int i = 0; i < 100; ++i) {
        const auto& name = presets[static_cast<std::size_t>(i) % presets.size()];
        auto g = preset(name);
        lengths.insert(classify(g).witness->size());
        std::size_t d = pick(rng, 1, 10);
        double p = uniform(rng, 0.1, 0.6);
        auto a = random_matrix(d, d, p, rng), b = random_matrix(d, d, p, rng);
        auto inst = bmm_to_cfg(a, b, g, name);
        auto pairs = solve_all_pairs(Strategy::automatic, inst.grammar, inst.graph);
        if (decode_bmm(inst, pairs) != oracle::naive_bmm(a, b)) ++mismatches;
    }
    if (!lengths.count(2) || !lengths.count(3)) o.fail("witness lengths 2 and 3 not both covered; ");
    o.detail << "100 matrix pairs over " << presets.size() << " presets, " << mismatches << " mismatches";
    if (mismatches) o.pass = false;
}

// --- 6 ----------------------------------------------------------------------
void output_law(Outcome& o) {
    std::size_t checked = 0;
    for (const char* name : {"anbn", "anbn_mid:c"}) {
        auto g = preset(name);
        std::size_t k = classify(g).witness->size();
        for (std::size_t n : {3, 10, 50, 200}) {
            auto inst = worst_case_family(g, n, name);
            auto pairs = solve_all_pairs(Strategy::automatic, inst.grammar, inst.graph);
            std::size_t out = filtered_count(inst, pairs);
            if (inst.graph.edge_count() != k * n || out != n * n) {
                std::ostringstream s;
                s << name << " n=" << n << ": m=" << inst.graph.edge_count() << " output=" << out << "; ";
                o.fail(s.str());
            }
            ++checked;
        }
    }
    o.detail << checked << " instances (witness lengths 2 and 3), m = k n and output = n^2";
}

// --- 7 ----------------------------------------------------------------------
void geq_on_demand_check(Outcome& o) {
    Rng rng(7007);
    auto cnf = to_cnf(preset("geq"));
    std::size_t mismatches = 0, positives = 0, cyclic = 0;
    for (int i = 0; i < 200; ++i) {
        std::size_t n = pick(rng, 2, 50);
        double d = uniform(rng, 0.5, 3.0) / static_cast<double>(n);
        auto g = testing::random_graph(rng, n, d, {"a", "b"});
        if (i % 4 == 0) {
            // force an a-cycle
            std::size_t x = pick(rng, 0, n - 1), y = pick(rng, 0, n - 1);
            g.add_edge(g.vertex_name(x), g.vertex_name(y), "a");
            g.add_edge(g.vertex_name(y), g.vertex_name(x), "a");
        }
        auto c = scc_condense(g, "a");
        if (std::find(c.cyclic.begin(), c.cyclic.end(), true) != c.cyclic.end()) ++cyclic;
        for (int q = 0; q < 5; ++q) {
            auto s = static_cast<VertexId>(pick(rng, 0, n - 1)), t = static_cast<VertexId>(pick(rng, 0, n - 1));
            bool expect = on_demand(cnf, g, s, t);
            positives += expect;
            if (geq_on_demand(g, s, t) != expect) ++mismatches;
        }
    }
    auto single = parse_graph("s v a\nv t b\n");
    bool edge_case = geq_on_demand(single, single.vertex_id("s"), single.vertex_id("t"));
    if (!edge_case) o.fail("s -a-> v -b-> t answered false; ");
    o.detail << "200 graphs (" << cyclic << " with a-cycles), 1000 queries, " << positives << " true, " << mismatches
             << " mismatches; single-edge case " << (edge_case ? "true" : "false");
    if (mismatches) o.pass = false;
}

// --- 8 ----------------------------------------------------------------------
void dominance_check(Outcome& o) {
    Rng rng(8008);
    auto cnf = to_cnf(preset("geq"));
    std::size_t mismatches = 0, total = 0;
    for (int i = 0; i < 50; ++i) {
        std::size_t n = pick(rng, 1, 30);
        auto g = testing::random_graph(rng, n, uniform(rng, 0.5, 3.0) / static_cast<double>(n), {"a", "b"});
        auto expect = all_pairs(cnf, g);
        total += expect.size();
        if (geq_all_pairs_dominance(g) != expect) ++mismatches;
    }
    o.detail << "50 graphs, " << total << " pairs, " << mismatches << " mismatching graphs";
    if (mismatches) o.pass = false;
}

// --- 9 ----------------------------------------------------------------------
void variants_check(Outcome& o) {
    Rng rng(9009);
    std::size_t mismatches = 0;
    for (const char* target : {"anbn_mid", "eqcount", "palindrome"}) {
        std::size_t positives = 0;
        for (int i = 0; i < 100; ++i) {
            auto g3 = random_tripartite(pick(rng, 1, 8), pick(rng, 1, 8), pick(rng, 1, 8), uniform(rng, 0.05, 0.4), rng);
            auto inst = variant_reduction(g3, target, true);
            positives += *inst.truth;
            if (query(inst) != *inst.truth) ++mismatches;
        }
        o.detail << target << " " << positives << "/100 positive; ";
    }
    std::vector<std::string> targets = {"dyck:1", "anbn", "eqcount", "palindrome"};
    for (std::size_t k : {5, 7}) {
        std::size_t positives = 0;
        for (int i = 0; i < 50; ++i) {
            std::size_t part = pick(rng, 1, k == 5 ? 6 : 4);
            auto g = random_kpartite(k, part, uniform(rng, 0.05, 0.3), rng);
            if (i % 2 == 0) {
                std::vector<std::size_t> at(k);
                for (auto& x : at) x = pick(rng, 0, part - 1);
                for (std::size_t j = 0; j < k; ++j) g.arcs[j][at[j]][at[(j + 1) % k]] = true;
            }
            for (const auto& target : targets) {
                auto inst = kcycle_on_demand(g, target, true);
                if (query(inst) != *inst.truth) ++mismatches;
                if (target == targets.front()) positives += *inst.truth;
            }
        }
        o.detail << "k=" << k << " " << positives << "/50 with cycles; ";
    }
    o.detail << mismatches << " mismatches";
    if (mismatches) o.pass = false;
}

// --- 10 ---------------------------------------------------------------------
Grammar substitute(const Grammar& g, const Homomorphism& h) {
    // letter-to-letter h: every terminal b becomes the alternatives {a : h(a) = b}
    std::vector<Production> out;
    std::map<std::string, std::vector<std::string>> pre;
    for (const auto& [a, img] : h) pre[img.at(0)].push_back(a);
    for (const auto& p : g.productions()) {
        std::vector<Production> partial = {{p.head, {}}};
        for (const auto& s : p.body) {
            std::vector<Production> next;
            for (const auto& q : partial) {
                if (s.is_nonterminal()) {
                    auto r = q;
                    r.body.push_back(s);
                    next.push_back(r);
                    continue;
                }
                for (const auto& a : pre[s.name]) {
                    auto r = q;
                    r.body.push_back(Symbol::terminal(a));
                    next.push_back(r);
                }
            }
            partial = std::move(next);
        }
        out.insert(out.end(), partial.begin(), partial.end());
    }
    return Grammar(g.start(), std::move(out));
}

void transforms_check(Outcome& o) {
    Rng rng(10010);
    std::size_t mismatches = 0, rq_pairs = 0, ih_pairs = 0, word_mismatch = 0;
    std::vector<std::string> presets = {"anbn", "dyck:1", "eqcount", "palindrome", "anbn_mid:c", "geq"};
    for (int i = 0; i < 50; ++i) {
        Grammar g = i % 3 == 2 ? testing::random_cnf_grammar(rng, 5, 3)
                               : preset(presets[static_cast<std::size_t>(i) % presets.size()]);
        auto sigma = g.terminals();
        if (sigma.empty()) sigma = {"a"};
        std::size_t n = pick(rng, 1, 8);
        auto graph = testing::random_graph(rng, n, uniform(rng, 0.1, 0.5), sigma);
        auto cnf = to_cnf(g);

        // right quotient
        const auto& alpha = sigma[pick(rng, 0, sigma.size() - 1)];
        auto ext = right_quotient_extend(graph, alpha);
        auto quotient = right_quotient_grammar(g, alpha);
        auto direct = all_pairs(to_cnf(quotient), graph);
        auto via = decode_right_quotient(ext, n, all_pairs(cnf, ext.graph));
        rq_pairs += direct.size();
        if (direct != via) ++mismatches;
        // the quotient grammar against membership of w alpha
        auto qcnf = to_cnf(quotient);
        for (int j = 0; j < 30; ++j) {
            Word w;
            for (std::size_t l = pick(rng, 0, 6); l > 0; --l) w.push_back(sigma[pick(rng, 0, sigma.size() - 1)]);
            Word wa = w;
            wa.push_back(alpha);
            if (oracle::cyk(qcnf, w) != oracle::cyk(cnf, wa)) ++word_mismatch;
        }

        // inverse homomorphism: letter-to-letter map from a fresh alphabet onto sigma
        Homomorphism h;
        std::vector<std::string> src = {"x", "y", "z", "w"};
        for (const auto& s : src) h[s] = {sigma[pick(rng, 0, sigma.size() - 1)]};
        auto src_graph = testing::random_graph(rng, n, uniform(rng, 0.1, 0.5), src);
        auto t = inverse_hom_transform(src_graph, h);
        auto lhs = all_pairs(to_cnf(substitute(g, h)), src_graph);
        auto rhs = pull_back(t, n, all_pairs(cnf, t.graph));
        ih_pairs += lhs.size();
        if (lhs != rhs) ++mismatches;
    }
    // the worked example: h(a)=ad, h(b)=b, h(c)=c, L1 = (ad)^i c b^i, preimage a^i c b^i
    Homomorphism ex{{"a", {"a", "d"}}, {"b", {"b"}}, {"c", {"c"}}};
    auto l1 = parse_grammar("S -> 'a' 'd' S 'b' | 'c'");
    for (int i = 0; i < 50; ++i) {
        std::size_t n = pick(rng, 1, 8);
        auto graph = testing::random_graph(rng, n, uniform(rng, 0.1, 0.5), {"a", "b", "c"});
        auto t = inverse_hom_transform(graph, ex);
        auto lhs = all_pairs(to_cnf(preset("anbn_mid:c")), graph);
        auto rhs = pull_back(t, n, all_pairs(to_cnf(l1), t.graph));
        ih_pairs += lhs.size();
        if (lhs != rhs) ++mismatches;
    }
    o.detail << "right quotient 50 graphs (" << rq_pairs << " pairs), inverse homomorphism 100 graphs (" << ih_pairs
             << " pairs); " << mismatches << " mismatches, " << word_mismatch << " quotient-membership mismatches";
    if (mismatches || word_mismatch) o.pass = false;
}

// --- 11 ---------------------------------------------------------------------
void apa_check(Outcome& o) {
    Rng rng(11011);
    std::vector<std::string> labels(apa_labels().begin(), apa_labels().end());
    std::size_t fix_mismatch = 0;
    for (int i = 0; i < 500; ++i) {
        std::size_t n = pick(rng, 1, 12);
        auto g = testing::random_graph(rng, n, uniform(rng, 0.05, 0.4), labels);
        if (apa_fixpoint(ApaInstance(g)).pairs() != oracle::naive_apa(g)) ++fix_mismatch;
    }

    std::size_t false_pos = 0, false_neg = 0, positives = 0;
    std::string smallest;
    for (int i = 0; i < 100; ++i) {
        auto g = random_simple_graph(pick(rng, 3, 12), uniform(rng, 0.2, 0.7), rng);
        auto inst = apa_clique_gadget(g, 1, true);
        bool got = apa_on_demand(ApaInstance(inst.graph), inst.query->first, inst.query->second);
        positives += *inst.truth;
        if (got && !*inst.truth) {
            ++false_pos;
            if (smallest.empty()) smallest = serialize_simple_graph(g);
        }
        if (!got && *inst.truth) ++false_neg;
    }

    // word corpus: all words up to length 5 over the barred alphabet, random
    // longer words, and planted gadget words
    std::vector<std::string> toks = {"alpha", "e", "beta", "gamma", "alpha_bar", "e_bar", "beta_bar", "gamma_bar"};
    std::vector<Word> corpus = {{}};
    for (std::size_t len = 1, begin = 0; len <= 5; ++len) {
        std::size_t end = corpus.size();
        for (std::size_t i = begin; i < end; ++i)
            for (const auto& t : toks) {
                auto w = corpus[i];
                w.push_back(t);
                corpus.push_back(std::move(w));
            }
        begin = end;
    }
    for (int i = 0; i < 20000; ++i) {
        Word w;
        for (std::size_t l = pick(rng, 6, 14); l > 0; --l) w.push_back(toks[pick(rng, 0, toks.size() - 1)]);
        corpus.push_back(std::move(w));
    }
    for (std::size_t a = 1; a <= 5; ++a)
        for (std::size_t b = 1; b <= 5; ++b)
            for (std::size_t c = 1; c <= 5; ++c) corpus.push_back(apa_gadget_word({a}, {b}, {c}));
    std::size_t accepted = 0, violations = 0;
    for (const auto& w : corpus) {
        if (!apa_word_check(w)) continue;
        ++accepted;
        if (w.empty() || w.front() != "alpha") ++violations;
    }

    o.detail << "fixpoint vs naive: 500 instances, " << fix_mismatch << " mismatches; gadget k=1: 100 graphs ("
             << positives << " with triangles), " << false_pos << " false positives, " << false_neg
             << " false negatives; word corpus " << corpus.size() << " words, " << accepted << " accepted, "
             << violations << " not starting with alpha";
    if (!smallest.empty()) {
        std::string flat = smallest;
        std::replace(flat.begin(), flat.end(), '\n', ';');
        o.detail << "; first false positive source graph: " << flat;
    }
    if (fix_mismatch || false_pos || false_neg || violations) o.pass = false;
}

// --- 12 ---------------------------------------------------------------------
void bench_law(Outcome& o) {
    bench::BenchPlan plan;
    plan.family = bench::Family::worst_case_output;
    plan.preset = "anbn";
    plan.ladder = {10, 20, 40, 80, 160};
    auto result = bench::run_bench(plan);
    std::vector<double> ns, outs;
    for (const auto& r : result.rows) {
        if (r.output_size != r.n * r.n) o.fail("row n=" + std::to_string(r.n) + " output " + std::to_string(r.output_size) + "; ");
        ns.push_back(static_cast<double>(r.n));
        outs.push_back(static_cast<double>(r.output_size));
    }
    if (result.rows.size() != plan.ladder.size()) o.fail("missing rows; ");
    auto fit = bench::fit_slope(ns, outs);
    if (std::abs(fit.slope - 2.0) > 1e-9) o.fail("output slope " + std::to_string(fit.slope) + "; ");
    o.detail.precision(12);
    o.detail << result.rows.size() << " rows with output n^2, output slope " << fit.slope;
    o.detail.precision(3);
    if (result.has_slope) o.detail << "; time slope " << result.time_slope.slope << " (informational)";
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Outcome&)> run;
    };
    std::vector<Criterion> criteria = {
        {1, "solver equals Bar-Hillel oracle on random instances", solver_vs_oracle},
        {2, "join-inducing classifier with CYK-checked witnesses", classifier},
        {3, "triangle to Dyck-1 reduction", triangle_reduction},
        {4, "3k-clique to Dyck-2 gadgets", clique_reduction},
        {5, "matrix product reduction", bmm_reduction},
        {6, "output-size family m = k n, n^2 pairs", output_law},
        {7, "a^i b^j (i >= j) on-demand algorithm", geq_on_demand_check},
        {8, "dominance-product all-pairs pipeline", dominance_check},
        {9, "variant and k-cycle reductions", variants_check},
        {10, "right-quotient and inverse-homomorphism transforms", transforms_check},
        {11, "Andersen fixpoint, clique gadget, alpha prefix", apa_check},
        {12, "bench output-cardinality law", bench_law},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " -- " << o.detail.str()
                  << " [" << std::fixed;
        std::cout.precision(2);
        std::cout << secs << "s]" << std::defaultfloat << std::endl;
        failed += !o.pass;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
