#include <algorithm>
#include <deque>
#include <set>

#include "cflr/solver.hpp"

namespace cflr {

VertexPairSet join_free_all_pairs(const Grammar& g, const LabeledGraph& graph) {
    CnfGrammar cnf = to_cnf(g);
    if (!cnf.binary_rules().empty()) throw JoinInducing();

    std::vector<char> accepted(graph.label_names().size(), 0);
    for (const auto& r : cnf.terminal_rules()) {
        if (r.head != cnf.start()) continue;
        if (auto l = graph.find_label(cnf.terminals()[r.terminal])) accepted[*l] = 1;
    }
    std::vector<VertexPairSet::Pair> out;
    for (const auto& e : graph.edges())
        if (accepted[e.label]) out.emplace_back(e.src, e.dst);
    if (cnf.accepts_empty())
        for (VertexId v = 0; v < graph.vertex_count(); ++v) out.emplace_back(v, v);
    return VertexPairSet(std::move(out));
}

namespace {

void require_ab(const LabeledGraph& g) {
    for (const auto& l : g.alphabet())
        if (l != "a" && l != "b") throw PreconditionError("label '" + l + "' is outside {a, b}");
}

// Longest walk values per component, propagated in topological order.
std::vector<std::int64_t> longest_over(const Condensation& c, std::uint32_t from) {
    std::vector<std::int64_t> val(c.size(), kNegInf);
    val[from] = c.cyclic[from] ? kPosInf : 0;
    for (std::uint32_t x = from; x < c.size(); ++x) {
        if (val[x] == kNegInf) continue;
        for (std::uint32_t y : c.successors[x]) {
            std::int64_t cand = (val[x] == kPosInf || c.cyclic[y]) ? kPosInf : val[x] + 1;
            val[y] = std::max(val[y], cand);
        }
    }
    return val;
}

std::vector<std::int64_t> bfs(const LabeledGraph& g, std::string_view label, VertexId from, bool forward) {
    std::vector<std::int64_t> dist(g.vertex_count(), kPosInf);
    auto l = g.find_label(label);
    dist[from] = 0;
    if (!l) return dist;
    auto adj = forward ? g.out_adjacency() : g.in_adjacency();
    std::deque<VertexId> q{from};
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop_front();
        for (auto [w, lab] : adj[v]) {
            if (lab != *l || dist[w] != kPosInf) continue;
            dist[w] = dist[v] + 1;
            q.push_back(w);
        }
    }
    return dist;
}

}  // namespace

std::vector<std::int64_t> longest_paths_from(const LabeledGraph& g, std::string_view label, VertexId s) {
    Condensation c = scc_condense(g, label);
    auto val = longest_over(c, c.component[s]);
    std::vector<std::int64_t> out(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) out[v] = val[c.component[v]];
    return out;
}

std::vector<std::int64_t> shortest_paths_to(const LabeledGraph& g, std::string_view label, VertexId t) {
    return bfs(g, label, t, false);
}

ExtremalPathMatrix longest_path_matrix(const LabeledGraph& g, std::string_view label) {
    ExtremalPathMatrix m{PathMode::longest, std::string(label), g.vertex_count(), {}};
    m.cells.assign(m.n * m.n, kNegInf);
    Condensation c = scc_condense(g, label);
    for (VertexId i = 0; i < m.n; ++i) {
        auto val = longest_over(c, c.component[i]);
        for (VertexId k = 0; k < m.n; ++k) m.cells[i * m.n + k] = val[c.component[k]];
    }
    return m;
}

ExtremalPathMatrix shortest_path_matrix(const LabeledGraph& g, std::string_view label) {
    ExtremalPathMatrix m{PathMode::shortest, std::string(label), g.vertex_count(), {}};
    m.cells.assign(m.n * m.n, kPosInf);
    for (VertexId k = 0; k < m.n; ++k) {
        auto d = bfs(g, label, k, true);
        std::copy(d.begin(), d.end(), m.cells.begin() + static_cast<std::ptrdiff_t>(k * m.n));
    }
    return m;
}

bool geq_on_demand(const LabeledGraph& graph, VertexId s, VertexId t) {
    if (s >= graph.vertex_count() || t >= graph.vertex_count()) throw LookupError("vertex id out of range");
    require_ab(graph);
    auto la = longest_paths_from(graph, "a", s);
    auto lb = shortest_paths_to(graph, "b", t);
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        if (la[v] != kNegInf && lb[v] != kPosInf && la[v] >= lb[v]) return true;
    }
    return false;
}

VertexPairSet geq_all_pairs_dominance(const LabeledGraph& graph) {
    require_ab(graph);
    const std::size_t n = graph.vertex_count();
    auto ma = longest_path_matrix(graph, "a");
    auto mb = shortest_path_matrix(graph, "b");
    std::vector<VertexPairSet::Pair> out;
    std::vector<char> hit(n);
    for (VertexId i = 0; i < n; ++i) {
        std::fill(hit.begin(), hit.end(), 0);
        for (VertexId k = 0; k < n; ++k) {
            std::int64_t a = ma.at(i, k);
            if (a == kNegInf) continue;
            for (VertexId j = 0; j < n; ++j) {
                std::int64_t b = mb.at(k, j);
                if (b != kPosInf && a >= b) hit[j] = 1;
            }
        }
        for (VertexId j = 0; j < n; ++j)
            if (hit[j]) out.emplace_back(i, j);
    }
    return VertexPairSet(std::move(out));
}

}  // namespace cflr
