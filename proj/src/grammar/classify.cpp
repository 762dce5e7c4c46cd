#include "cflr/grammar.hpp"

namespace cflr {

bool is_linear(const Grammar& g) {
    for (const auto& p : g.productions()) {
        if (p.nonterminal_count() > 1) return false;
    }
    return true;
}

bool is_right_regular(const Grammar& g) {
    for (const auto& p : g.productions()) {
        const auto& b = p.body;
        bool ok = b.empty() || (b.size() == 1 && b[0].is_terminal()) ||
                  (b.size() == 2 && b[0].is_terminal() && b[1].is_nonterminal());
        if (!ok) return false;
    }
    return true;
}

bool is_left_regular(const Grammar& g) {
    for (const auto& p : g.productions()) {
        const auto& b = p.body;
        bool ok = b.empty() || (b.size() == 1 && b[0].is_terminal()) ||
                  (b.size() == 2 && b[0].is_nonterminal() && b[1].is_terminal());
        if (!ok) return false;
    }
    return true;
}

ClassificationReport classify(const Grammar& g) {
    ClassificationReport r;
    r.linear = is_linear(g);
    r.right_regular = is_right_regular(g);
    r.left_regular = is_left_regular(g);

    CnfGrammar cnf = to_cnf(g);
    if (cnf.empty_language()) {
        r.empty_language = true;
        return r;
    }
    r.accepts_empty = cnf.accepts_empty();

    // every binary rule of a proper grammar yields a word of length >= 2 from the
    // start; the start's own binary rules are enough to find the shortest one
    std::optional<Word> best;
    for (const auto& rule : cnf.binary_rules()) {
        if (rule.head != cnf.start()) continue;
        auto left = shortest_word(cnf, rule.left);
        auto right = shortest_word(cnf, rule.right);
        if (!left || !right) continue;
        Word w = *left;
        w.insert(w.end(), right->begin(), right->end());
        if (!best || w.size() < best->size() || (w.size() == best->size() && w < *best)) best = std::move(w);
    }
    r.join_inducing = !cnf.binary_rules().empty();
    r.witness = best;
    return r;
}

}  // namespace cflr
