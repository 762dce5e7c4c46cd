#pragma once

// Brute-force reference implementations. Everything here depends only on the
// grammar and graph data types; none of it shares code with the solvers.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cflr/grammar.hpp"
#include "cflr/graph.hpp"
#include "cflr/source_graphs.hpp"

namespace cflr::oracle {

enum class Method { bar_hillel, path_enum, cyk, naive_fixpoint, exhaustive_search };

const char* method_name(Method m);

struct OracleReport {
    Method method = Method::bar_hillel;
    std::optional<bool> verdict;
    std::optional<VertexPairSet> pairs;
    /// Size bound the method worked under (path length, product size, ...).
    std::size_t work_bound = 0;
    /// True when a negative verdict is not conclusive (bounded enumeration).
    bool bounded = false;
};

/// CYK membership; ε is decided by accepts_empty, unknown symbols reject.
bool cyk(const CnfGrammar& g, const Word& w);

/// Membership for an arbitrary grammar by a least-fixpoint over
/// (nonterminal, substring) facts, without any normal-form conversion.
bool exhaustive_member(const Grammar& g, const Word& w);

/// Productive triples (p, A, q) of the Bar-Hillel product of `g` with the
/// graph read as an automaton, computed by a naive round-based fixpoint.
class BarHillelTable {
public:
    BarHillelTable(const CnfGrammar& g, const LabeledGraph& graph);

    bool productive(NonterminalId a, VertexId p, VertexId q) const {
        return cells_[(static_cast<std::size_t>(a) * n_ + p) * n_ + q] != 0;
    }
    /// Pairs (p, q) with (p, S, q) productive.
    VertexPairSet start_pairs() const;
    std::size_t rounds() const noexcept { return rounds_; }

private:
    std::size_t n_ = 0;
    NonterminalId start_ = 0;
    std::vector<char> cells_;
    std::size_t rounds_ = 0;
};

bool bar_hillel_reachability(const CnfGrammar& g, const LabeledGraph& graph, VertexId s, VertexId t);
VertexPairSet bar_hillel_all_pairs(const CnfGrammar& g, const LabeledGraph& graph);

/// Label words of all s -> t walks with at most `maxlen` edges. Throws
/// GuardrailError for maxlen > 16 or more than `max_words` distinct words.
std::set<Word> enumerate_paths(const LabeledGraph& graph, VertexId s, VertexId t, std::size_t maxlen,
                               std::size_t max_words = 2'000'000);

/// Triangle a -> b -> c -> a along the three cross-part relations.
bool brute_triangle(const TripartiteGraph& g);
/// Clique of exactly c vertices; guardrail c <= 6, n <= 20.
bool brute_kclique(const SimpleGraph& g, std::size_t c);
/// Simple directed cycle with exactly k edges; guardrail n <= 40.
bool brute_kcycle(const KPartiteDigraph& g, std::size_t k);

/// Guardrail: dimension <= 64.
BoolMatrix naive_bmm(const BoolMatrix& a, const BoolMatrix& b);

/// Andersen's four rules iterated round-robin over the raw edge lists until
/// nothing changes. Labels other than alpha, e, beta, gamma are ignored.
VertexPairSet naive_apa(const LabeledGraph& graph);

}  // namespace cflr::oracle
