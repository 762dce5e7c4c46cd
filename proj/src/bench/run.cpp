#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>

#include "cflr/andersen.hpp"
#include "cflr/bench.hpp"
#include "cflr/error.hpp"
#include "cflr/reductions.hpp"
#include "cflr/solver.hpp"

namespace cflr::bench {

namespace {

struct Prepared {
    LabeledGraph graph;
    Grammar grammar = Grammar("S", {});
    std::optional<std::pair<VertexId, VertexId>> query;
    std::optional<ReductionInstance> inst;
    bool apa = false;
    std::string digest;
};

struct Outcome {
    std::size_t output = 0;
    std::size_t facts = 0;
};

LabeledGraph random_labeled(std::size_t n, std::size_t edges, double p, const Grammar& g, Rng& rng) {
    LabeledGraph graph;
    for (std::size_t v = 0; v < n; ++v) graph.add_vertex("n" + std::to_string(v));
    const auto& sigma = g.terminals();
    if (sigma.empty() || n == 0) return graph;
    if (edges == 0) {
        std::bernoulli_distribution coin(p);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                for (const auto& a : sigma)
                    if (coin(rng)) graph.add_edge(graph.vertex_name(u), graph.vertex_name(v), a);
    } else {
        std::uniform_int_distribution<std::size_t> pick(0, n - 1), label(0, sigma.size() - 1);
        for (std::size_t i = 0; i < edges; ++i) {
            auto u = pick(rng), v = pick(rng);
            graph.add_edge(graph.vertex_name(u), graph.vertex_name(v), sigma[label(rng)]);
        }
    }
    return graph;
}

Prepared prepare(const BenchPlan& plan, std::size_t n) {
    Prepared out;
    Rng rng(plan.seed * 0x9e3779b97f4a7c15ULL + n);
    auto from_instance = [&](ReductionInstance inst) {
        out.graph = inst.graph;
        out.grammar = inst.grammar;
        if (inst.query)
            out.query = std::make_pair(out.graph.vertex_id(inst.query->first), out.graph.vertex_id(inst.query->second));
        out.digest = instance_digest(inst);
        out.inst = std::move(inst);
    };
    switch (plan.family) {
        case Family::dense_random:
        case Family::sparse_random: {
            out.grammar = grammar_from_preset_or_text(plan.preset);
            double p = 0.5 / static_cast<double>(std::max<std::size_t>(1, out.grammar.terminals().size()));
            std::size_t edges = plan.family == Family::sparse_random ? 2 * n : 0;
            out.graph = random_labeled(n, edges, p, out.grammar, rng);
            if (plan.on_demand && n > 0) out.query = std::make_pair(VertexId{0}, static_cast<VertexId>(n - 1));
            out.digest = hex_digest(fnv1a(serialize_graph(out.graph) + serialize_grammar(out.grammar)));
            break;
        }
        case Family::worst_case_output:
            from_instance(worst_case_family(grammar_from_preset_or_text(plan.preset), n, plan.preset));
            break;
        case Family::dyck2_clique_gadget:
            from_instance(kclique_to_dyck2(random_simple_graph(n, 0.5, rng), 1));
            break;
        case Family::apa_gadget:
            from_instance(apa_clique_gadget(random_simple_graph(n, 0.5, rng), 1));
            out.apa = true;
            break;
    }
    return out;
}

Outcome solve(const Prepared& p) {
    Outcome o;
    if (p.apa) {
        TRelation t = apa_fixpoint(ApaInstance(p.graph));
        o.facts = t.size();
        o.output = t.contains(p.query->first, p.query->second) ? 1 : 0;
        return o;
    }
    SolveStats stats;
    if (p.query && !(p.inst && p.inst->mode == InstanceMode::all_pairs_filtered)) {
        o.output = solve_pair(Strategy::automatic, p.grammar, p.graph, p.query->first, p.query->second, &stats) ? 1 : 0;
    } else {
        VertexPairSet pairs = solve_all_pairs(Strategy::automatic, p.grammar, p.graph, &stats);
        o.output = (p.inst && p.inst->mode == InstanceMode::all_pairs_filtered) ? filtered_count(*p.inst, pairs)
                                                                                 : pairs.size();
    }
    o.facts = stats.facts;
    return o;
}

double time_ms(const std::function<void()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

std::vector<std::string> plan_digests(const BenchPlan& plan) {
    validate(plan);
    std::vector<std::string> out;
    for (std::size_t n : plan.ladder) out.push_back(prepare(plan, n).digest);
    return out;
}

BenchResult run_bench(const BenchPlan& plan) {
    validate(plan);
    BenchResult result;
    for (std::size_t n : plan.ladder) {
        std::optional<Prepared> prepared;
        try {
            prepared = prepare(plan, n);
        } catch (const GuardrailError& e) {
            result.aborted = e.what();
            break;
        } catch (const PreconditionError& e) {
            result.aborted = e.what();
            break;
        }
        BenchRow row;
        row.family = family_name(plan.family);
        row.preset = plan.family == Family::apa_gadget      ? "apa"
                     : plan.family == Family::dyck2_clique_gadget ? "dyck:2"
                                                                  : plan.preset;
        row.n = n;
        row.m = prepared->graph.edge_count();
        row.digest = prepared->digest;

        Outcome outcome;
        double warm = time_ms([&] { outcome = solve(*prepared); });
        row.output_size = outcome.output;
        row.facts = outcome.facts;
        if (warm > plan.timeout_ms) {
            row.median_ms = row.min_ms = warm;
            row.timed_out = true;
            result.rows.push_back(row);
            break;
        }
        std::vector<double> times;
        for (std::size_t r = 0; r < plan.repetitions; ++r) times.push_back(time_ms([&] { solve(*prepared); }));
        std::sort(times.begin(), times.end());
        row.min_ms = times.front();
        row.median_ms = times.size() % 2 ? times[times.size() / 2]
                                         : (times[times.size() / 2 - 1] + times[times.size() / 2]) / 2;
        row.timed_out = row.median_ms > plan.timeout_ms;
        result.rows.push_back(row);
        if (row.timed_out) break;
    }

    std::vector<double> xs, ys;
    for (const auto& r : result.rows)
        if (!r.timed_out && r.median_ms > 0) {
            xs.push_back(static_cast<double>(r.n));
            ys.push_back(r.median_ms);
        }
    if (xs.size() >= 4) {
        result.time_slope = fit_slope(xs, ys);
        result.has_slope = true;
    }
    return result;
}

}  // namespace cflr::bench
