#include <algorithm>
#include <unordered_map>

#include "cflr/oracle.hpp"

namespace cflr::oracle {

const char* method_name(Method m) {
    switch (m) {
        case Method::bar_hillel: return "bar_hillel";
        case Method::path_enum: return "path_enum";
        case Method::cyk: return "cyk";
        case Method::naive_fixpoint: return "naive_fixpoint";
        case Method::exhaustive_search: return "exhaustive_search";
    }
    return "?";
}

bool cyk(const CnfGrammar& g, const Word& w) {
    if (g.empty_language()) return false;
    const std::size_t n = w.size();
    if (n == 0) return g.accepts_empty();
    const std::size_t k = g.nonterminal_count();

    std::vector<TerminalId> ids;
    for (const auto& sym : w) {
        auto id = g.terminal_id(sym);
        if (!id) return false;
        ids.push_back(*id);
    }

    // table[(len - 1) * n + i] holds the nonterminals deriving w[i, i + len)
    std::vector<std::vector<char>> table(n * n, std::vector<char>(k, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& r : g.terminal_rules()) {
            if (r.terminal == ids[i]) table[i][r.head] = 1;
        }
    }
    for (std::size_t len = 2; len <= n; ++len) {
        for (std::size_t i = 0; i + len <= n; ++i) {
            auto& cell = table[(len - 1) * n + i];
            for (std::size_t split = 1; split < len; ++split) {
                const auto& left = table[(split - 1) * n + i];
                const auto& right = table[(len - split - 1) * n + i + split];
                for (const auto& r : g.binary_rules()) {
                    if (left[r.left] && right[r.right]) cell[r.head] = 1;
                }
            }
        }
    }
    return table[(n - 1) * n][g.start()] != 0;
}

bool exhaustive_member(const Grammar& g, const Word& w) {
    const std::size_t n = w.size();
    const auto& nts = g.nonterminals();
    std::unordered_map<std::string, std::size_t> id;
    for (std::size_t i = 0; i < nts.size(); ++i) id.emplace(nts[i], i);

    // derives[(A * (n + 1) + i) * (n + 1) + j]: A =>* w[i, j)
    const std::size_t span = n + 1;
    std::vector<char> derives(nts.size() * span * span, 0);
    auto at = [&](std::size_t a, std::size_t i, std::size_t j) -> char& { return derives[(a * span + i) * span + j]; };

    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.productions()) {
            const std::size_t head = id.at(p.head);
            for (std::size_t i = 0; i <= n; ++i) {
                std::vector<char> pos(span, 0), next(span, 0);
                pos[i] = 1;
                for (const auto& sym : p.body) {
                    std::fill(next.begin(), next.end(), 0);
                    for (std::size_t q = 0; q <= n; ++q) {
                        if (!pos[q]) continue;
                        if (sym.is_terminal()) {
                            if (q < n && w[q] == sym.name) next[q + 1] = 1;
                        } else {
                            std::size_t x = id.at(sym.name);
                            for (std::size_t r = q; r <= n; ++r)
                                if (at(x, q, r)) next[r] = 1;
                        }
                    }
                    pos.swap(next);
                }
                for (std::size_t j = i; j <= n; ++j) {
                    if (pos[j] && !at(head, i, j)) {
                        at(head, i, j) = 1;
                        changed = true;
                    }
                }
            }
        }
    }
    return at(id.at(g.start()), 0, n) != 0;
}

}  // namespace cflr::oracle
