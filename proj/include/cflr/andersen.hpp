#pragma once

// Andersen-style inclusion analysis as the four-rule Datalog program over the
// edge relations alpha, e, beta, gamma:
//   T(x,y) <- alpha(x,y)
//   T(x,y) <- T(x,z), e(z,y)
//   T(w,y) <- T(w,z), T(z,x), beta(x,y)
//   T(w,z) <- T(w,x), gamma(x,y), T(z,y)

#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "cflr/grammar.hpp"
#include "cflr/graph.hpp"

namespace cflr {

const std::set<std::string>& apa_labels();

/// A graph whose labels are all among alpha, e, beta, gamma.
class ApaInstance {
public:
    /// Throws PreconditionError on any other label.
    explicit ApaInstance(LabeledGraph graph);

    const LabeledGraph& graph() const noexcept { return graph_; }

private:
    LabeledGraph graph_;
};

/// Binary relation over the instance's vertices, indexed by both columns.
class TRelation {
public:
    explicit TRelation(std::size_t n) : n_(n), succ_(n), pred_(n) {}

    bool insert(VertexId x, VertexId y);
    bool contains(VertexId x, VertexId y) const;
    std::size_t size() const noexcept { return keys_.size(); }

    /// {y : T(x, y)} and {x : T(x, y)}, in insertion order.
    const std::vector<VertexId>& successors(VertexId x) const { return succ_[x]; }
    const std::vector<VertexId>& predecessors(VertexId y) const { return pred_[y]; }

    VertexPairSet pairs() const;

private:
    std::size_t n_;
    std::unordered_set<std::uint64_t> keys_;
    std::vector<std::vector<VertexId>> succ_, pred_;
};

/// Least fixpoint, evaluated semi-naively: every new T fact is joined once
/// against the indexes as they stand when it is taken off the worklist.
TRelation apa_fixpoint(const ApaInstance& inst);

bool apa_on_demand(const ApaInstance& inst, VertexId p, VertexId q);
bool apa_on_demand(const ApaInstance& inst, std::string_view p, std::string_view q);

/// Token spellings: alpha, alpha_bar, e, e_bar, beta, beta_bar, gamma,
/// gamma_bar (also the Greek letters, with a combining macron or the
/// precomposed alpha-with-macron for barred forms). Whitespace separated.
Word parse_apa_word(std::string_view text);

/// Membership of a word in L(T) for T <- alpha | T e | T T beta | T gamma Tbar,
/// where Tbar generates the reversed, bar-swapped words of T.
bool apa_word_check(const Word& word);

}  // namespace cflr
