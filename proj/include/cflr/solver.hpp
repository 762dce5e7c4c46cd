#pragma once

// CFL-reachability solvers: the generic cubic worklist, the linear-grammar
// solver, the join-free scan, and the two specialised algorithms for the
// language { a^i b^j : i >= j } (on-demand longest/shortest paths and the
// all-pairs dominance pipeline).

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "cflr/error.hpp"
#include "cflr/grammar.hpp"
#include "cflr/graph.hpp"

namespace cflr {

class NotLinear : public PreconditionError {
public:
    NotLinear() : PreconditionError("grammar is not linear") {}
};

class JoinInducing : public PreconditionError {
public:
    JoinInducing() : PreconditionError("grammar is join-inducing; use the generic solver") {}
};

struct SolveStats {
    std::size_t facts = 0;
    /// Edge labels that no grammar rule can match (those edges are inert).
    std::vector<std::string> inert_labels;
};

/// The derived relation {(A, u, v)}, indexed by (A, u) and by (A, v).
class FactSet {
public:
    FactSet(std::size_t nonterminals, std::size_t vertices);

    /// Returns false if already present.
    bool insert(NonterminalId a, VertexId u, VertexId v);
    bool contains(NonterminalId a, VertexId u, VertexId v) const;
    std::size_t size() const noexcept { return facts_.size(); }

    /// Targets v with (a, u, v); sources u with (a, u, v). Insertion order.
    const std::vector<VertexId>& targets(NonterminalId a, VertexId u) const { return out_[slot(a, u)]; }
    const std::vector<VertexId>& sources(NonterminalId a, VertexId v) const { return in_[slot(a, v)]; }

    VertexPairSet pairs_of(NonterminalId a) const;

private:
    std::size_t slot(NonterminalId a, VertexId x) const { return static_cast<std::size_t>(a) * vertices_ + x; }
    std::uint64_t key(NonterminalId a, VertexId u, VertexId v) const {
        return (static_cast<std::uint64_t>(a) * vertices_ + u) * vertices_ + v;
    }

    std::size_t vertices_;
    std::unordered_set<std::uint64_t> facts_;
    std::vector<std::vector<VertexId>> out_;
    std::vector<std::vector<VertexId>> in_;
};

/// Least fixpoint of the CNF rules over the graph (FIFO worklist).
FactSet derive_facts(const CnfGrammar& g, const LabeledGraph& graph, SolveStats* stats = nullptr);

/// All (u, v) with v L(g)-reachable from u; (v, v) for every v when the
/// grammar accepts the empty string.
VertexPairSet all_pairs(const CnfGrammar& g, const LabeledGraph& graph, SolveStats* stats = nullptr);

/// Single-pair query; prunes to vertices on some s -> t walk and stops as
/// soon as (S, s, t) is derived.
bool on_demand(const CnfGrammar& g, const LabeledGraph& graph, VertexId s, VertexId t, SolveStats* stats = nullptr);
bool on_demand(const CnfGrammar& g, const LabeledGraph& graph, std::string_view s, std::string_view t,
               SolveStats* stats = nullptr);

/// O(m n) solver for linear grammars; throws NotLinear otherwise.
VertexPairSet all_pairs_linear(const Grammar& g, const LabeledGraph& graph, SolveStats* stats = nullptr);

/// Single pass over the edges for join-free grammars; throws JoinInducing
/// otherwise.
VertexPairSet join_free_all_pairs(const Grammar& g, const LabeledGraph& graph);

// --- a^i b^j, i >= j ---------------------------------------------------------

/// Extended integers: kNegInf / kPosInf mark "no path" / "unbounded".
inline constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
inline constexpr std::int64_t kPosInf = std::numeric_limits<std::int64_t>::max();

enum class PathMode { longest, shortest };

struct ExtremalPathMatrix {
    PathMode mode = PathMode::longest;
    std::string label;
    std::size_t n = 0;
    std::vector<std::int64_t> cells;

    std::int64_t at(std::size_t i, std::size_t j) const { return cells[i * n + j]; }
};

/// Longest `label`-walk length from s to every vertex: kNegInf if
/// unreachable, kPosInf if the walk can pass through a label cycle.
std::vector<std::int64_t> longest_paths_from(const LabeledGraph& g, std::string_view label, VertexId s);
/// Shortest `label`-path length from every vertex to t (kPosInf if none).
std::vector<std::int64_t> shortest_paths_to(const LabeledGraph& g, std::string_view label, VertexId t);

ExtremalPathMatrix longest_path_matrix(const LabeledGraph& g, std::string_view label);
ExtremalPathMatrix shortest_path_matrix(const LabeledGraph& g, std::string_view label);

/// O(m) on-demand query for { a^i b^j : i >= j }. Edge labels must be a or b.
bool geq_on_demand(const LabeledGraph& graph, VertexId s, VertexId t);
/// All pairs for the same language via the existence-dominance product of
/// the longest-a and shortest-b matrices.
VertexPairSet geq_all_pairs_dominance(const LabeledGraph& graph);

// --- strategy selection -----------------------------------------------------

enum class Strategy { automatic, generic, linear, joinfree, geq_od, geq_dom };

Strategy parse_strategy(std::string_view name);
const char* strategy_name(Strategy s);

/// True when g is the a^i b^j (i >= j) grammar up to renaming of nonterminals.
bool is_geq_grammar(const Grammar& g);

struct StrategyChoice {
    Strategy strategy = Strategy::generic;
    ClassificationReport report;
    bool geq = false;
    std::string reason;
};

/// Picks the cheapest applicable algorithm: join-free scan, then the a/b
/// algorithms, then the linear solver, then the generic worklist.
StrategyChoice choose_strategy(const Grammar& g, const LabeledGraph& graph, bool pair_query);

/// Throws PreconditionError when `s` does not apply to (g, graph, query kind).
void check_strategy(Strategy s, const Grammar& g, const LabeledGraph& graph, bool pair_query);

VertexPairSet solve_all_pairs(Strategy s, const Grammar& g, const LabeledGraph& graph, SolveStats* stats = nullptr);
bool solve_pair(Strategy s, const Grammar& g, const LabeledGraph& graph, VertexId src, VertexId dst,
                SolveStats* stats = nullptr);

}  // namespace cflr
