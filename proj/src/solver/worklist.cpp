#include <deque>
#include <optional>
#include <set>

#include "cflr/solver.hpp"

namespace cflr {

FactSet::FactSet(std::size_t nonterminals, std::size_t vertices)
    : vertices_(vertices), out_(nonterminals * vertices), in_(nonterminals * vertices) {}

bool FactSet::insert(NonterminalId a, VertexId u, VertexId v) {
    if (!facts_.insert(key(a, u, v)).second) return false;
    out_[slot(a, u)].push_back(v);
    in_[slot(a, v)].push_back(u);
    return true;
}

bool FactSet::contains(NonterminalId a, VertexId u, VertexId v) const { return facts_.count(key(a, u, v)) > 0; }

VertexPairSet FactSet::pairs_of(NonterminalId a) const {
    std::vector<VertexPairSet::Pair> out;
    for (VertexId u = 0; u < vertices_; ++u)
        for (VertexId v : out_[slot(a, u)]) out.emplace_back(u, v);
    return VertexPairSet(std::move(out));
}

namespace {

struct Fact {
    NonterminalId a;
    VertexId u, v;
};

struct RuleIndex {
    // by_left[B] = {(A, C)} for A <- B C; by_right[C] = {(A, B)} for A <- B C
    std::vector<std::vector<std::pair<NonterminalId, NonterminalId>>> by_left, by_right;
    // heads[label id in graph] = {A : A <- label}
    std::vector<std::vector<NonterminalId>> heads;
};

RuleIndex index_rules(const CnfGrammar& g, const LabeledGraph& graph, SolveStats* stats) {
    RuleIndex idx;
    idx.by_left.resize(g.nonterminal_count());
    idx.by_right.resize(g.nonterminal_count());
    for (const auto& r : g.binary_rules()) {
        idx.by_left[r.left].emplace_back(r.head, r.right);
        idx.by_right[r.right].emplace_back(r.head, r.left);
    }
    idx.heads.resize(graph.label_names().size());
    for (LabelId l = 0; l < graph.label_names().size(); ++l) {
        auto t = g.terminal_id(graph.label_name(l));
        if (!t) continue;
        for (const auto& r : g.terminal_rules())
            if (r.terminal == *t) idx.heads[l].push_back(r.head);
    }
    if (stats) {
        std::set<std::string> inert;
        for (const auto& e : graph.edges())
            if (!g.terminal_id(graph.label_name(e.label))) inert.insert(graph.label_name(e.label));
        stats->inert_labels.assign(inert.begin(), inert.end());
    }
    return idx;
}

// Runs the worklist to completion, or until `goal` is derived.
FactSet run(const CnfGrammar& g, const LabeledGraph& graph, const std::vector<Edge>& edges,
            const std::vector<char>* live, std::optional<Fact> goal, SolveStats* stats, bool& reached) {
    const std::size_t n = graph.vertex_count();
    FactSet facts(g.nonterminal_count(), n);
    reached = false;
    if (g.empty_language()) {
        if (stats) stats->facts = 0;
        return facts;
    }
    RuleIndex idx = index_rules(g, graph, stats);
    std::deque<Fact> work;
    auto add = [&](NonterminalId a, VertexId u, VertexId v) {
        if (!facts.insert(a, u, v)) return;
        work.push_back({a, u, v});
        if (goal && goal->a == a && goal->u == u && goal->v == v) reached = true;
    };

    for (const auto& e : edges)
        for (NonterminalId a : idx.heads[e.label]) add(a, e.src, e.dst);
    if (g.accepts_empty()) {
        for (VertexId v = 0; v < n; ++v)
            if (!live || (*live)[v]) add(g.start(), v, v);
    }

    while (!work.empty() && !reached) {
        Fact f = work.front();
        work.pop_front();
        // f = (B, u, v): A <- B C with (C, v, w) gives (A, u, w)
        for (auto [a, c] : idx.by_left[f.a]) {
            const auto& next = facts.targets(c, f.v);
            for (std::size_t i = 0; i < next.size(); ++i) add(a, f.u, next[i]);
        }
        // f = (C, v, w): A <- B C with (B, u, v) gives (A, u, w)
        for (auto [a, b] : idx.by_right[f.a]) {
            const auto& prev = facts.sources(b, f.u);
            for (std::size_t i = 0; i < prev.size(); ++i) add(a, prev[i], f.v);
        }
    }
    if (stats) stats->facts = facts.size();
    return facts;
}

std::vector<char> reach(const LabeledGraph& graph, VertexId from, bool forward) {
    auto adj = forward ? graph.out_adjacency() : graph.in_adjacency();
    std::vector<char> seen(graph.vertex_count(), 0);
    std::vector<VertexId> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (auto [w, l] : adj[v]) {
            (void)l;
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

}  // namespace

FactSet derive_facts(const CnfGrammar& g, const LabeledGraph& graph, SolveStats* stats) {
    bool reached = false;
    return run(g, graph, graph.edges(), nullptr, std::nullopt, stats, reached);
}

VertexPairSet all_pairs(const CnfGrammar& g, const LabeledGraph& graph, SolveStats* stats) {
    return derive_facts(g, graph, stats).pairs_of(g.start());
}

bool on_demand(const CnfGrammar& g, const LabeledGraph& graph, VertexId s, VertexId t, SolveStats* stats) {
    if (s >= graph.vertex_count() || t >= graph.vertex_count()) throw LookupError("vertex id out of range");
    if (g.empty_language()) return false;
    if (s == t && g.accepts_empty()) return true;

    auto fwd = reach(graph, s, true);
    auto bwd = reach(graph, t, false);
    std::vector<char> live(graph.vertex_count(), 0);
    for (std::size_t v = 0; v < live.size(); ++v) live[v] = fwd[v] && bwd[v];
    std::vector<Edge> edges;
    for (const auto& e : graph.edges())
        if (live[e.src] && live[e.dst]) edges.push_back(e);

    bool reached = false;
    auto facts = run(g, graph, edges, &live, Fact{g.start(), s, t}, stats, reached);
    return reached || facts.contains(g.start(), s, t);
}

bool on_demand(const CnfGrammar& g, const LabeledGraph& graph, std::string_view s, std::string_view t,
               SolveStats* stats) {
    return on_demand(g, graph, graph.vertex_id(s), graph.vertex_id(t), stats);
}

}  // namespace cflr
