#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cflr/andersen.hpp"
#include "cflr/bench.hpp"
#include "cflr/error.hpp"
#include "cflr/oracle.hpp"
#include "cflr/reductions.hpp"
#include "cflr/solver.hpp"

namespace fs = std::filesystem;
using namespace cflr;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Grammar load_grammar(const std::string& spec) {
    if (fs::is_regular_file(spec)) return parse_grammar(read_file(spec));
    return grammar_from_preset_or_text(spec);
}

LabeledGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

Word parse_word(const std::string& text) {
    if (text.find_first_of(" \t") == std::string::npos) return split_terminal_list(text);
    Word w;
    std::istringstream in(text);
    for (std::string tok; in >> tok;) w.push_back(tok);
    return w;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

void warn_inert(const Grammar& g, const LabeledGraph& graph) {
    std::vector<std::string> inert;
    for (const auto& l : graph.alphabet())
        if (!g.has_terminal(l)) inert.push_back(l);
    if (inert.empty()) return;
    std::cerr << "warning: no grammar rule matches label(s)";
    for (const auto& l : inert) std::cerr << ' ' << label_to_file(l);
    std::cerr << "; those edges are ignored\n";
}

fs::path default_out(const std::string& name) {
    if (const char* env = std::getenv("CFLR_OUT_DIR"); env && *env) return fs::path(env) / name;
    return fs::path("instance-" + name);
}

struct Options {
    std::string grammar, graph, form = "cnf", strategy = "auto", word, in, a, b, out, target, plan, hom, alpha;
    std::vector<std::string> pair;
    bool explain = false, verify = false, no_verify = false;
    std::size_t k = 0, n = 8, maxlen = 8, c = 3;
    double p = 0.5;
    std::uint64_t seed = 1;
    std::string generator, method;
};

int cmd_classify(const Options& o) {
    Grammar g = load_grammar(o.grammar);
    auto r = classify(g);
    std::cout << "join_inducing=" << yes_no(r.join_inducing) << '\n';
    std::cout << "witness=" << (r.witness ? word_to_string(*r.witness) : "-") << '\n';
    std::cout << "linear=" << yes_no(r.linear) << '\n';
    std::cout << "right_regular=" << yes_no(r.right_regular) << '\n';
    std::cout << "left_regular=" << yes_no(r.left_regular) << '\n';
    std::cout << "accepts_empty=" << yes_no(r.accepts_empty) << '\n';
    std::cout << "empty_language=" << yes_no(r.empty_language) << '\n';
    return 0;
}

int cmd_normalize(const Options& o) {
    Grammar g = load_grammar(o.grammar);
    if (o.form == "proper") std::cout << serialize_grammar(to_proper(g));
    else std::cout << serialize_grammar(to_cnf(g).grammar());
    return 0;
}

int cmd_solve(const Options& o) {
    Grammar g = load_grammar(o.grammar);
    LabeledGraph graph = load_graph(o.graph);
    Strategy s = parse_strategy(o.strategy);
    const bool pair = !o.pair.empty();
    check_strategy(s, g, graph, pair);
    if (o.explain) {
        auto choice = choose_strategy(g, graph, pair);
        std::cout << "# join_inducing=" << yes_no(choice.report.join_inducing)
                  << " linear=" << yes_no(choice.report.linear) << " geq=" << yes_no(choice.geq) << '\n';
        if (s == Strategy::automatic)
            std::cout << "# strategy=" << strategy_name(choice.strategy) << " (" << choice.reason << ")\n";
        else
            std::cout << "# strategy=" << strategy_name(s) << " (requested)\n";
    }
    warn_inert(g, graph);
    SolveStats stats;
    if (pair) {
        bool ok = solve_pair(s, g, graph, graph.vertex_id(o.pair[0]), graph.vertex_id(o.pair[1]), &stats);
        std::cout << (ok ? "reachable" : "unreachable") << '\n';
        return ok ? 0 : 1;
    }
    std::cout << serialize_pairs(solve_all_pairs(s, g, graph, &stats), graph);
    return 0;
}

int cmd_reduce(const Options& o) {
    Rng rng(o.seed);
    const bool have_in = !o.in.empty();
    ReductionInstance inst;
    auto verify_default = [&](bool dflt) { return o.verify || (dflt && !o.no_verify); };
    const std::string& gen = o.generator;

    if (gen == "triangle-dyck1" || gen == "variant") {
        TripartiteGraph g3 = have_in ? parse_tripartite(read_file(o.in)) : random_tripartite(o.n, o.n, o.n, o.p, rng);
        bool v = verify_default(false);
        if (gen == "variant" && o.target.empty()) throw PreconditionError("variant needs --target");
        inst = gen == "variant" ? variant_reduction(g3, o.target, v) : triangle_to_dyck1(g3, v);
    } else if (gen == "kclique-dyck2" || gen == "apa-clique") {
        SimpleGraph g = have_in ? parse_simple_graph(read_file(o.in)) : random_simple_graph(o.n, o.p, rng);
        std::size_t k = o.k ? o.k : 1;
        bool v = verify_default(k <= 2);
        inst = gen == "apa-clique" ? apa_clique_gadget(g, k, v) : kclique_to_dyck2(g, k, v);
    } else if (gen == "kcycle") {
        KPartiteDigraph g = have_in ? parse_kpartite(read_file(o.in)) : random_kpartite(o.k ? o.k : 5, o.n, o.p, rng);
        inst = kcycle_on_demand(g, o.target.empty() ? "dyck:1" : o.target, verify_default(false));
    } else if (gen == "bmm") {
        if (o.a.empty() != o.b.empty()) throw PreconditionError("bmm needs both --a and --b, or neither");
        BoolMatrix a = o.a.empty() ? random_matrix(o.n, o.n, o.p, rng) : parse_matrix(read_file(o.a));
        BoolMatrix b = o.b.empty() ? random_matrix(o.n, o.n, o.p, rng) : parse_matrix(read_file(o.b));
        std::string spec = o.grammar.empty() ? "anbn" : o.grammar;
        inst = bmm_to_cfg(a, b, load_grammar(spec), fs::is_regular_file(spec) ? "" : spec, verify_default(false));
    } else if (gen == "worst-case") {
        std::string spec = o.grammar.empty() ? "anbn" : o.grammar;
        inst = worst_case_family(load_grammar(spec), o.n, fs::is_regular_file(spec) ? "" : spec);
    } else {
        throw LookupError("unknown generator '" + gen +
                          "' (expected triangle-dyck1, variant, kclique-dyck2, apa-clique, kcycle, bmm, worst-case)");
    }
    inst.provenance.params.emplace_back("seed", std::to_string(o.seed));

    fs::path dir = o.out.empty() ? default_out(gen) : fs::path(o.out);
    write_bundle(inst, dir);
    std::cout << "wrote " << dir.string() << ": " << inst.graph.vertex_count() << " vertices, "
              << inst.graph.edge_count() << " edges, digest " << instance_digest(inst) << '\n';
    if (inst.truth) std::cout << "truth=" << yes_no(*inst.truth) << '\n';
    if (inst.truth_matrix) std::cout << "truth=matrix (" << inst.truth_matrix->size() << "x" << inst.truth_matrix->size() << ")\n";
    if (!inst.gadgets.empty() && inst.bit_width)
        std::cout << "neighbor_gadgets=" << (check_neighbor_gadgets(inst) ? "ok" : "violated") << '\n';
    return 0;
}

Homomorphism parse_hom(const std::string& text) {
    Homomorphism h;
    std::istringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw PreconditionError("homomorphism items look like a=xy (got '" + item + "')");
        h[item.substr(0, eq)] = split_terminal_list(item.substr(eq + 1));
    }
    return h;
}

int cmd_transform(const Options& o) {
    LabeledGraph graph = load_graph(o.graph);
    LabeledGraph out;
    if (o.generator == "right-quotient") out = right_quotient_extend(graph, o.alpha).graph;
    else out = inverse_hom_transform(graph, parse_hom(o.hom)).graph;
    if (o.out.empty()) {
        std::cout << serialize_graph(out);
    } else {
        std::ofstream f(o.out);
        if (!f) throw Error("cannot write '" + o.out + "'");
        f << serialize_graph(out);
    }
    return 0;
}

int cmd_oracle(const Options& o) {
    const std::string& m = o.method;
    auto verdict = [](bool b) {
        std::cout << (b ? "true" : "false") << '\n';
        return b ? 0 : 1;
    };
    if (m == "bar-hillel") {
        CnfGrammar cnf = to_cnf(load_grammar(o.grammar));
        LabeledGraph graph = load_graph(o.graph);
        if (o.pair.empty()) {
            std::cout << serialize_pairs(oracle::bar_hillel_all_pairs(cnf, graph), graph);
            return 0;
        }
        bool ok = oracle::bar_hillel_reachability(cnf, graph, graph.vertex_id(o.pair[0]), graph.vertex_id(o.pair[1]));
        std::cout << (ok ? "reachable" : "unreachable") << '\n';
        return ok ? 0 : 1;
    }
    if (m == "path-enum") {
        if (o.pair.empty()) throw PreconditionError("path-enum needs --pair");
        CnfGrammar cnf = to_cnf(load_grammar(o.grammar));
        LabeledGraph graph = load_graph(o.graph);
        auto words = oracle::enumerate_paths(graph, graph.vertex_id(o.pair[0]), graph.vertex_id(o.pair[1]), o.maxlen);
        for (const auto& w : words)
            if (oracle::cyk(cnf, w)) {
                std::cout << "reachable (word: " << (w.empty() ? "eps" : word_to_string(w)) << ")\n";
                return 0;
            }
        std::cout << "unknown (no accepted word up to length " << o.maxlen << ")\n";
        return 1;
    }
    if (m == "cyk") return verdict(oracle::cyk(to_cnf(load_grammar(o.grammar)), parse_word(o.word)));
    if (m == "triangle") return verdict(oracle::brute_triangle(parse_tripartite(read_file(o.in))));
    if (m == "kclique") return verdict(oracle::brute_kclique(parse_simple_graph(read_file(o.in)), o.c));
    if (m == "kcycle") {
        KPartiteDigraph g = parse_kpartite(read_file(o.in));
        return verdict(oracle::brute_kcycle(g, o.k ? o.k : g.k()));
    }
    if (m == "bmm") {
        std::cout << serialize_matrix(oracle::naive_bmm(parse_matrix(read_file(o.a)), parse_matrix(read_file(o.b))));
        return 0;
    }
    if (m == "naive-apa") {
        LabeledGraph graph = load_graph(o.graph);
        std::cout << serialize_pairs(oracle::naive_apa(graph), graph);
        return 0;
    }
    throw LookupError("unknown oracle method '" + m +
                      "' (expected bar-hillel, path-enum, cyk, triangle, kclique, kcycle, bmm, naive-apa)");
}

int cmd_bench(const Options& o) {
    auto plans = bench::parse_plans(read_file(o.plan));
    fs::path dir = o.out.empty() ? default_out("bench") : fs::path(o.out);
    fs::create_directories(dir);
    std::vector<bench::BenchRow> all;
    for (const auto& plan : plans) {
        auto result = bench::run_bench(plan);
        all.insert(all.end(), result.rows.begin(), result.rows.end());
        std::ofstream dat(dir / (std::string(bench::family_name(plan.family)) + ".dat"));
        bench::write_dat(result, dat);
        if (!result.aborted.empty())
            std::cerr << "warning: " << bench::family_name(plan.family) << " stopped early: " << result.aborted << '\n';
        if (result.has_slope)
            std::cerr << "# " << bench::family_name(plan.family) << ": time ~ n^" << result.time_slope.slope
                      << " (rms residual " << result.time_slope.residual << ")\n";
    }
    std::ofstream csv(dir / "bench.csv");
    bench::write_csv(all, csv);
    bench::write_csv(all, std::cout);
    return 0;
}

int cmd_apa(const Options& o) {
    if (!o.word.empty()) {
        bool ok = apa_word_check(parse_apa_word(o.word));
        std::cout << (ok ? "accepted" : "rejected") << '\n';
        return ok ? 0 : 1;
    }
    if (o.graph.empty()) throw PreconditionError("apa needs --graph or --word");
    ApaInstance inst(load_graph(o.graph));
    if (!o.pair.empty()) {
        bool ok = apa_on_demand(inst, o.pair[0], o.pair[1]);
        std::cout << (ok ? "reachable" : "unreachable") << '\n';
        return ok ? 0 : 1;
    }
    std::cout << serialize_pairs(apa_fixpoint(inst).pairs(), inst.graph());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CFL reachability toolkit: solvers, oracles, reduction generators and benchmarks"};
    app.require_subcommand(1, 1);
    Options o;

    auto* classify_cmd = app.add_subcommand("classify", "Classify a grammar (join-inducing, linear, regular)");
    classify_cmd->add_option("--grammar", o.grammar, "Grammar file or preset")->required();

    auto* normalize_cmd = app.add_subcommand("normalize", "Print the proper or Chomsky normal form");
    normalize_cmd->add_option("--grammar", o.grammar, "Grammar file or preset")->required();
    normalize_cmd->add_option("--form", o.form, "proper | cnf")->check(CLI::IsMember({"proper", "cnf"}));

    auto* solve_cmd = app.add_subcommand("solve", "All-pairs or single-pair CFL reachability");
    solve_cmd->add_option("--grammar", o.grammar, "Grammar file or preset")->required();
    solve_cmd->add_option("--graph", o.graph, "Edge-list graph file")->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("--pair", o.pair, "Source and target vertex")->expected(2);
    solve_cmd->add_option("--strategy", o.strategy, "auto | generic | linear | joinfree | geq-od | geq-dom")
        ->check(CLI::IsMember({"auto", "generic", "linear", "joinfree", "geq-od", "geq-dom"}));
    solve_cmd->add_flag("--explain", o.explain, "Print the classification and chosen strategy");

    auto* reduce_cmd = app.add_subcommand("reduce", "Generate a reduction instance bundle");
    reduce_cmd->add_option("generator", o.generator,
                           "triangle-dyck1 | variant | kclique-dyck2 | apa-clique | kcycle | bmm | worst-case")
        ->required();
    auto* in_opt = reduce_cmd->add_option("--in", o.in, "Source instance file")->check(CLI::ExistingFile);
    reduce_cmd->add_option("--k", o.k, "Clique block size or cycle length");
    reduce_cmd->add_option("--seed", o.seed, "Seed for random sources");
    reduce_cmd->add_option("--n", o.n, "Size of a random source");
    reduce_cmd->add_option("--p", o.p, "Edge probability of a random source")->check(CLI::Range(0.0, 1.0));
    reduce_cmd->add_option("--target", o.target, "Target language preset");
    reduce_cmd->add_option("--grammar", o.grammar, "Grammar for bmm / worst-case (default anbn)");
    reduce_cmd->add_option("--a", o.a, "Left matrix file (bmm)")->check(CLI::ExistingFile)->excludes(in_opt);
    reduce_cmd->add_option("--b", o.b, "Right matrix file (bmm)")->check(CLI::ExistingFile)->excludes(in_opt);
    reduce_cmd->add_option("--out", o.out, "Output directory (default $CFLR_OUT_DIR/<generator>)");
    auto* verify_flag = reduce_cmd->add_flag("--verify", o.verify, "Compute ground truth with a brute-force oracle");
    reduce_cmd->add_flag("--no-verify", o.no_verify, "Skip ground truth")->excludes(verify_flag);

    auto* transform_cmd = app.add_subcommand("transform", "Right-quotient or inverse-homomorphism graph transform");
    transform_cmd->add_option("kind", o.generator, "right-quotient | inverse-hom")
        ->required()
        ->check(CLI::IsMember({"right-quotient", "inverse-hom"}));
    transform_cmd->add_option("--graph", o.graph, "Edge-list graph file")->required()->check(CLI::ExistingFile);
    auto* alpha_opt = transform_cmd->add_option("--alpha", o.alpha, "Quotient symbol");
    transform_cmd->add_option("--hom", o.hom, "Images, e.g. a=ad,b=b,c=")->excludes(alpha_opt);
    transform_cmd->add_option("--out", o.out, "Output graph file (default stdout)");

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference answers");
    oracle_cmd->add_option("method", o.method, "bar-hillel | path-enum | cyk | triangle | kclique | kcycle | bmm | naive-apa")
        ->required();
    oracle_cmd->add_option("--grammar", o.grammar, "Grammar file or preset");
    oracle_cmd->add_option("--graph", o.graph, "Edge-list graph file")->check(CLI::ExistingFile);
    oracle_cmd->add_option("--pair", o.pair, "Source and target vertex")->expected(2);
    oracle_cmd->add_option("--word", o.word, "Word: whitespace separated, comma separated or one symbol per character");
    oracle_cmd->add_option("--in", o.in, "Source instance file")->check(CLI::ExistingFile);
    oracle_cmd->add_option("--a", o.a, "Left matrix file")->check(CLI::ExistingFile);
    oracle_cmd->add_option("--b", o.b, "Right matrix file")->check(CLI::ExistingFile);
    oracle_cmd->add_option("--c", o.c, "Clique size");
    oracle_cmd->add_option("--k", o.k, "Cycle length");
    oracle_cmd->add_option("--maxlen", o.maxlen, "Walk length bound for path-enum");

    auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark plan");
    bench_cmd->add_option("--plan", o.plan, "Plan file")->required()->check(CLI::ExistingFile);
    bench_cmd->add_option("--out", o.out, "Output directory (default $CFLR_OUT_DIR/bench)");

    auto* apa_cmd = app.add_subcommand("apa", "Andersen inclusion analysis over alpha/e/beta/gamma edges");
    auto* graph_opt = apa_cmd->add_option("--graph", o.graph, "Edge-list graph file")->check(CLI::ExistingFile);
    apa_cmd->add_option("--pair", o.pair, "Query T(p, q)")->expected(2)->needs(graph_opt);
    apa_cmd->add_option("--word", o.word, "Check a word against the T grammar")->excludes(graph_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*classify_cmd) return cmd_classify(o);
        if (*normalize_cmd) return cmd_normalize(o);
        if (*solve_cmd) return cmd_solve(o);
        if (*reduce_cmd) return cmd_reduce(o);
        if (*transform_cmd) return cmd_transform(o);
        if (*oracle_cmd) return cmd_oracle(o);
        if (*bench_cmd) return cmd_bench(o);
        if (*apa_cmd) return cmd_apa(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
