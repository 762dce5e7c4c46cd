#pragma once

// Random instance helpers shared by the unit tests and the acceptance run.

#include <random>
#include <string>
#include <vector>

#include "cflr/grammar.hpp"
#include "cflr/graph.hpp"
#include "cflr/source_graphs.hpp"

namespace cflr::testing {

inline std::vector<std::string> alphabet(std::size_t k) {
    static const std::vector<std::string> letters = {"a", "b", "c", "d"};
    return {letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(k)};
}

/// Grammar already in CNF shape: A <- B C | a, optionally S <- eps.
inline Grammar random_cnf_grammar(Rng& rng, std::size_t max_nonterminals, std::size_t sigma) {
    std::uniform_int_distribution<std::size_t> count(1, max_nonterminals);
    const std::size_t n = count(rng);
    std::vector<std::string> names{"S"};
    for (std::size_t i = 1; i < n; ++i) names.push_back("N" + std::to_string(i));
    auto letters = alphabet(sigma);
    std::uniform_int_distribution<std::size_t> pick_nt(0, n - 1), pick_t(0, sigma - 1);
    std::bernoulli_distribution coin(0.5), eps(0.2);

    std::vector<Production> ps;
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t terms = 1 + (coin(rng) ? 1 : 0);
        for (std::size_t i = 0; i < terms; ++i)
            if (coin(rng) || i == 0) ps.push_back({names[a], {Symbol::terminal(letters[pick_t(rng)])}});
        std::size_t bins = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
        for (std::size_t i = 0; i < bins; ++i)
            ps.push_back({names[a], {Symbol::nonterminal(names[pick_nt(rng)]), Symbol::nonterminal(names[pick_nt(rng)])}});
    }
    if (eps(rng)) ps.push_back({"S", {}});
    return Grammar("S", std::move(ps));
}

/// Each ordered pair (self-loops included) gets one edge with probability
/// `density`, labeled uniformly from `labels`.
inline LabeledGraph random_graph(Rng& rng, std::size_t n, double density, const std::vector<std::string>& labels) {
    LabeledGraph g;
    for (std::size_t v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
    std::bernoulli_distribution coin(density);
    std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (coin(rng)) g.add_edge(g.vertex_name(u), g.vertex_name(v), labels[pick(rng)]);
    return g;
}

}  // namespace cflr::testing
