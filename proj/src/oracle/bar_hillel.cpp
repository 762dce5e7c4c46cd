#include <set>

#include "cflr/error.hpp"
#include "cflr/oracle.hpp"

namespace cflr::oracle {

BarHillelTable::BarHillelTable(const CnfGrammar& g, const LabeledGraph& graph)
    : n_(graph.vertex_count()), start_(g.start()) {
    const std::size_t k = g.nonterminal_count();
    cells_.assign(k * n_ * n_, 0);
    if (g.empty_language()) return;
    auto cell = [&](NonterminalId a, std::size_t p, std::size_t q) -> char& { return cells_[(a * n_ + p) * n_ + q]; };

    // (p, A, q) <- a  for every edge p -a-> q and rule A <- a
    for (const auto& e : graph.edges()) {
        const std::string& label = graph.label_name(e.label);
        for (const auto& r : g.terminal_rules()) {
            if (g.terminals()[r.terminal] == label) cell(r.head, e.src, e.dst) = 1;
        }
    }
    // (p, S, p) <- eps
    if (g.accepts_empty()) {
        for (std::size_t p = 0; p < n_; ++p) cell(g.start(), p, p) = 1;
    }
    // (p, A, r) <- (p, B, q) (q, C, r), until no triple becomes productive
    bool changed = true;
    while (changed) {
        changed = false;
        ++rounds_;
        for (const auto& r : g.binary_rules()) {
            for (std::size_t p = 0; p < n_; ++p) {
                for (std::size_t q = 0; q < n_; ++q) {
                    if (!cell(r.left, p, q)) continue;
                    for (std::size_t t = 0; t < n_; ++t) {
                        if (cell(r.right, q, t) && !cell(r.head, p, t)) {
                            cell(r.head, p, t) = 1;
                            changed = true;
                        }
                    }
                }
            }
        }
    }
}

VertexPairSet BarHillelTable::start_pairs() const {
    std::vector<VertexPairSet::Pair> out;
    for (std::size_t p = 0; p < n_; ++p)
        for (std::size_t q = 0; q < n_; ++q)
            if (productive(start_, static_cast<VertexId>(p), static_cast<VertexId>(q)))
                out.emplace_back(static_cast<VertexId>(p), static_cast<VertexId>(q));
    return VertexPairSet(std::move(out));
}

bool bar_hillel_reachability(const CnfGrammar& g, const LabeledGraph& graph, VertexId s, VertexId t) {
    if (s >= graph.vertex_count() || t >= graph.vertex_count()) throw LookupError("vertex id out of range");
    return BarHillelTable(g, graph).productive(g.start(), s, t);
}

VertexPairSet bar_hillel_all_pairs(const CnfGrammar& g, const LabeledGraph& graph) {
    return BarHillelTable(g, graph).start_pairs();
}

std::set<Word> enumerate_paths(const LabeledGraph& graph, VertexId s, VertexId t, std::size_t maxlen,
                               std::size_t max_words) {
    if (maxlen > 16) throw GuardrailError("enumerate_paths: maxlen " + std::to_string(maxlen) + " exceeds 16");
    if (s >= graph.vertex_count() || t >= graph.vertex_count()) throw LookupError("vertex id out of range");

    std::set<Word> result;
    std::vector<std::set<Word>> frontier(graph.vertex_count());
    frontier[s].insert(Word{});
    if (s == t) result.insert(Word{});
    auto out = graph.out_adjacency();
    std::size_t total = 0;
    for (std::size_t len = 1; len <= maxlen; ++len) {
        std::vector<std::set<Word>> next(graph.vertex_count());
        for (VertexId v = 0; v < graph.vertex_count(); ++v) {
            for (const auto& w : frontier[v]) {
                for (auto [dst, label] : out[v]) {
                    Word x = w;
                    x.push_back(graph.label_name(label));
                    if (next[dst].insert(std::move(x)).second && ++total > max_words)
                        throw GuardrailError("enumerate_paths: more than " + std::to_string(max_words) + " words");
                }
            }
        }
        result.insert(next[t].begin(), next[t].end());
        frontier.swap(next);
    }
    return result;
}

}  // namespace cflr::oracle
