#include "cflr/solver.hpp"

namespace cflr {

Strategy parse_strategy(std::string_view name) {
    if (name == "auto") return Strategy::automatic;
    if (name == "generic") return Strategy::generic;
    if (name == "linear") return Strategy::linear;
    if (name == "joinfree") return Strategy::joinfree;
    if (name == "geq-od") return Strategy::geq_od;
    if (name == "geq-dom") return Strategy::geq_dom;
    throw LookupError("unknown strategy '" + std::string(name) + "'");
}

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::automatic: return "auto";
        case Strategy::generic: return "generic";
        case Strategy::linear: return "linear";
        case Strategy::joinfree: return "joinfree";
        case Strategy::geq_od: return "geq-od";
        case Strategy::geq_dom: return "geq-dom";
    }
    return "?";
}

bool is_geq_grammar(const Grammar& g) {
    static const Grammar reference = canonical_form(preset("geq"));
    return canonical_form(g) == reference;
}

namespace {

bool ab_only(const LabeledGraph& graph) {
    for (const auto& l : graph.alphabet())
        if (l != "a" && l != "b") return false;
    return true;
}

}  // namespace

StrategyChoice choose_strategy(const Grammar& g, const LabeledGraph& graph, bool pair_query) {
    StrategyChoice c;
    c.report = classify(g);
    c.geq = is_geq_grammar(g);
    if (!c.report.join_inducing) {
        c.strategy = Strategy::joinfree;
        c.reason = "join-free grammar: only length-1 words, single edge scan";
    } else if (c.geq && ab_only(graph)) {
        c.strategy = pair_query ? Strategy::geq_od : Strategy::geq_dom;
        c.reason = pair_query ? "a^i b^j (i >= j) grammar: longest a-path / shortest b-path test"
                              : "a^i b^j (i >= j) grammar: existence-dominance product";
    } else if (c.report.linear) {
        c.strategy = Strategy::linear;
        c.reason = "linear grammar: facts extended one edge at a time";
    } else {
        c.strategy = Strategy::generic;
        c.reason = "general grammar: cubic worklist";
    }
    return c;
}

void check_strategy(Strategy s, const Grammar& g, const LabeledGraph& graph, bool pair_query) {
    switch (s) {
        case Strategy::automatic:
        case Strategy::generic:
            return;
        case Strategy::linear:
            if (!is_linear(g)) throw NotLinear();
            return;
        case Strategy::joinfree:
            if (classify(g).join_inducing) throw JoinInducing();
            return;
        case Strategy::geq_od:
        case Strategy::geq_dom:
            if (!is_geq_grammar(g)) throw PreconditionError("strategy needs the a^i b^j (i >= j) grammar");
            if (!ab_only(graph)) throw PreconditionError("strategy needs a graph labeled only with a and b");
            if (s == Strategy::geq_od && !pair_query) throw PreconditionError("geq-od answers a single --pair query");
            return;
    }
}

VertexPairSet solve_all_pairs(Strategy s, const Grammar& g, const LabeledGraph& graph, SolveStats* stats) {
    if (s == Strategy::automatic) s = choose_strategy(g, graph, false).strategy;
    check_strategy(s, g, graph, false);
    switch (s) {
        case Strategy::linear: return all_pairs_linear(g, graph, stats);
        case Strategy::joinfree: return join_free_all_pairs(g, graph);
        case Strategy::geq_dom: return geq_all_pairs_dominance(graph);
        default: return all_pairs(to_cnf(g), graph, stats);
    }
}

bool solve_pair(Strategy s, const Grammar& g, const LabeledGraph& graph, VertexId src, VertexId dst,
                SolveStats* stats) {
    if (s == Strategy::automatic) s = choose_strategy(g, graph, true).strategy;
    check_strategy(s, g, graph, true);
    switch (s) {
        case Strategy::linear: return all_pairs_linear(g, graph, stats).contains(src, dst);
        case Strategy::joinfree: return join_free_all_pairs(g, graph).contains(src, dst);
        case Strategy::geq_od: return geq_on_demand(graph, src, dst);
        case Strategy::geq_dom: return geq_all_pairs_dominance(graph).contains(src, dst);
        default: return on_demand(to_cnf(g), graph, src, dst, stats);
    }
}

}  // namespace cflr
