#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cflr/error.hpp"
#include "cflr/grammar.hpp"

namespace cflr {

namespace {

using Prods = std::vector<Production>;

class NameAllocator {
public:
    explicit NameAllocator(const Grammar& g) {
        used_.insert(g.nonterminals().begin(), g.nonterminals().end());
        used_.insert(g.terminals().begin(), g.terminals().end());
    }

    std::string fresh(const std::string& base) {
        auto& counter = next_[base];
        while (true) {
            std::string name = base + "#" + std::to_string(++counter);
            if (used_.insert(name).second) return name;
        }
    }

    std::string exact_or_fresh(const std::string& wanted, const std::string& base) {
        if (is_valid_nonterminal_name(wanted) && used_.insert(wanted).second) return wanted;
        return fresh(base);
    }

private:
    std::unordered_set<std::string> used_;
    std::unordered_map<std::string, int> next_;
};

std::set<std::string> productive_set(const Prods& ps) {
    std::set<std::string> prod;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : ps) {
            if (prod.count(p.head)) continue;
            bool ok = std::all_of(p.body.begin(), p.body.end(),
                                  [&](const Symbol& s) { return s.is_terminal() || prod.count(s.name); });
            if (ok) {
                prod.insert(p.head);
                changed = true;
            }
        }
    }
    return prod;
}

// Drops unproductive, then unreachable symbols. Empty result iff start is unproductive.
Prods trim(const std::string& start, const Prods& ps) {
    auto prod = productive_set(ps);
    if (!prod.count(start)) return {};
    Prods useful;
    for (const auto& p : ps) {
        if (!prod.count(p.head)) continue;
        bool ok = std::all_of(p.body.begin(), p.body.end(),
                              [&](const Symbol& s) { return s.is_terminal() || prod.count(s.name); });
        if (ok) useful.push_back(p);
    }

    std::multimap<std::string, const Production*> by_head;
    for (const auto& p : useful) by_head.emplace(p.head, &p);
    std::set<std::string> reach{start};
    std::deque<std::string> work{start};
    while (!work.empty()) {
        auto a = work.front();
        work.pop_front();
        auto [lo, hi] = by_head.equal_range(a);
        for (auto it = lo; it != hi; ++it) {
            for (const auto& s : it->second->body) {
                if (s.is_nonterminal() && reach.insert(s.name).second) work.push_back(s.name);
            }
        }
    }
    Prods out;
    for (const auto& p : useful) {
        if (reach.count(p.head)) out.push_back(p);
    }
    return out;
}

std::set<std::string> nullable_set(const Prods& ps) {
    std::set<std::string> null;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : ps) {
            if (null.count(p.head)) continue;
            bool ok = std::all_of(p.body.begin(), p.body.end(),
                                  [&](const Symbol& s) { return s.is_nonterminal() && null.count(s.name); });
            if (ok) {
                null.insert(p.head);
                changed = true;
            }
        }
    }
    return null;
}

bool in_some_body(const Prods& ps, const std::string& name) {
    for (const auto& p : ps) {
        for (const auto& s : p.body) {
            if (s.is_nonterminal() && s.name == name) return true;
        }
    }
    return false;
}

Prods remove_epsilon(const Prods& ps, const std::set<std::string>& nullable) {
    Prods out;
    for (const auto& p : ps) {
        std::vector<std::size_t> positions;
        for (std::size_t i = 0; i < p.body.size(); ++i) {
            if (p.body[i].is_nonterminal() && nullable.count(p.body[i].name)) positions.push_back(i);
        }
        if (positions.size() > 20) throw PreconditionError("production with too many nullable symbols");
        std::uint32_t variants = 1u << positions.size();
        for (std::uint32_t mask = 0; mask < variants; ++mask) {
            Production q{p.head, {}};
            std::size_t next = 0;
            for (std::size_t i = 0; i < p.body.size(); ++i) {
                if (next < positions.size() && positions[next] == i) {
                    bool drop = (mask >> next) & 1u;
                    ++next;
                    if (drop) continue;
                }
                q.body.push_back(p.body[i]);
            }
            if (!q.body.empty()) out.push_back(std::move(q));
        }
    }
    return out;
}

bool is_unit(const Production& p) { return p.body.size() == 1 && p.body[0].is_nonterminal(); }

Prods remove_units(const std::string& start, const std::vector<std::string>& order, const Prods& ps) {
    std::map<std::string, std::vector<const Production*>> by_head;
    for (const auto& p : ps) by_head[p.head].push_back(&p);

    Prods out;
    for (const auto& a : order) {
        std::vector<std::string> closure{a};
        std::set<std::string> seen{a};
        for (std::size_t i = 0; i < closure.size(); ++i) {
            for (const auto* p : by_head[closure[i]]) {
                if (is_unit(*p) && seen.insert(p->body[0].name).second) closure.push_back(p->body[0].name);
            }
        }
        for (const auto& b : closure) {
            for (const auto* p : by_head[b]) {
                if (is_unit(*p)) continue;
                if (p->body.empty() && a != start) continue;
                out.push_back({a, p->body});
            }
        }
    }
    return out;
}

}  // namespace

Grammar to_proper(const Grammar& g) {
    std::string start = g.start();
    Prods ps = trim(start, g.productions());
    if (ps.empty()) return Grammar(start, {});

    auto nullable = nullable_set(ps);
    bool start_nullable = nullable.count(start) > 0;
    ps = remove_epsilon(ps, nullable);

    NameAllocator names(g);
    if (start_nullable) {
        if (in_some_body(ps, start)) {
            std::string s0 = names.fresh(start);
            ps.insert(ps.begin(), {{s0, {Symbol::nonterminal(start)}}, {s0, {}}});
            start = s0;
        } else {
            ps.insert(ps.begin(), Production{start, {}});
        }
    }

    Grammar staged(start, ps);
    ps = remove_units(start, staged.nonterminals(), staged.productions());
    ps = trim(start, ps);
    if (ps.empty()) return Grammar(start, {});
    return Grammar(start, std::move(ps));
}

CnfGrammar to_cnf(const Grammar& g) {
    Grammar p = to_proper(g);
    if (p.is_degenerate()) return CnfGrammar(std::move(p));

    NameAllocator names(p);
    std::string start = p.start();
    Prods ps = p.productions();

    if (in_some_body(ps, start)) {
        std::string s0 = names.fresh(start);
        Prods copied;
        for (const auto& q : ps) {
            if (q.head == start) copied.push_back({s0, q.body});
        }
        copied.insert(copied.end(), ps.begin(), ps.end());
        ps = std::move(copied);
        start = s0;
    }

    std::map<std::string, std::string> lifted;
    Prods terminal_rules;
    auto lift = [&](const std::string& t) {
        auto it = lifted.find(t);
        if (it != lifted.end()) return it->second;
        std::string name = names.exact_or_fresh("T#" + t, "T");
        lifted.emplace(t, name);
        terminal_rules.push_back({name, {Symbol::terminal(t)}});
        return name;
    };

    Prods out;
    for (auto& q : ps) {
        if (q.body.size() >= 2) {
            for (auto& s : q.body) {
                if (s.is_terminal()) s = Symbol::nonterminal(lift(s.name));
            }
        }
        if (q.body.size() <= 2) {
            out.push_back(std::move(q));
            continue;
        }
        std::string head = q.head;
        for (std::size_t i = 0; i + 2 < q.body.size(); ++i) {
            std::string rest = names.fresh(q.head);
            out.push_back({head, {q.body[i], Symbol::nonterminal(rest)}});
            head = rest;
        }
        out.push_back({head, {q.body[q.body.size() - 2], q.body.back()}});
    }
    out.insert(out.end(), terminal_rules.begin(), terminal_rules.end());
    return CnfGrammar(Grammar(start, std::move(out)));
}

CnfGrammar::CnfGrammar(Grammar g) : grammar_(std::move(g)) {
    const auto& nts = grammar_.nonterminals();
    const auto& ts = grammar_.terminals();
    for (std::size_t i = 0; i < nts.size(); ++i) nonterminal_ids_.emplace(nts[i], static_cast<NonterminalId>(i));
    for (std::size_t i = 0; i < ts.size(); ++i) terminal_ids_.emplace(ts[i], static_cast<TerminalId>(i));

    for (const auto& p : grammar_.productions()) {
        for (const auto& s : p.body) {
            if (s.is_nonterminal() && s.name == grammar_.start())
                throw PreconditionError("CNF: start symbol occurs in a body");
        }
        if (p.body.empty()) {
            if (p.head != grammar_.start()) throw PreconditionError("CNF: epsilon rule on non-start symbol " + p.head);
            accepts_empty_ = true;
        } else if (p.body.size() == 1 && p.body[0].is_terminal()) {
            unary_.push_back({nonterminal_ids_.at(p.head), terminal_ids_.at(p.body[0].name)});
        } else if (p.body.size() == 2 && p.body[0].is_nonterminal() && p.body[1].is_nonterminal()) {
            binary_.push_back({nonterminal_ids_.at(p.head), nonterminal_ids_.at(p.body[0].name),
                               nonterminal_ids_.at(p.body[1].name)});
        } else {
            throw PreconditionError("CNF: production of " + p.head + " is not A -> B C or A -> a");
        }
    }
}

std::optional<NonterminalId> CnfGrammar::nonterminal_id(std::string_view name) const {
    auto it = nonterminal_ids_.find(std::string(name));
    if (it == nonterminal_ids_.end()) return std::nullopt;
    return it->second;
}

std::optional<TerminalId> CnfGrammar::terminal_id(std::string_view name) const {
    auto it = terminal_ids_.find(std::string(name));
    if (it == terminal_ids_.end()) return std::nullopt;
    return it->second;
}

namespace {

bool shorter(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

std::optional<Word> shortest_word(const CnfGrammar& g, NonterminalId from, bool nonempty) {
    if (from >= g.nonterminal_count()) throw LookupError("nonterminal id out of range");
    if (from == g.start() && g.accepts_empty() && !nonempty) return Word{};

    std::vector<std::optional<Word>> best(g.nonterminal_count());
    for (const auto& r : g.terminal_rules()) {
        Word w{g.terminals()[r.terminal]};
        if (!best[r.head] || shorter(w, *best[r.head])) best[r.head] = std::move(w);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : g.binary_rules()) {
            if (!best[r.left] || !best[r.right]) continue;
            Word w = *best[r.left];
            w.insert(w.end(), best[r.right]->begin(), best[r.right]->end());
            if (!best[r.head] || shorter(w, *best[r.head])) {
                best[r.head] = std::move(w);
                changed = true;
            }
        }
    }
    return best[from];
}

Grammar canonical_form(const Grammar& g) {
    std::map<std::string, std::vector<const Production*>> by_head;
    for (const auto& p : g.productions()) by_head[p.head].push_back(&p);

    std::unordered_map<std::string, std::string> rename;
    std::deque<std::string> work;
    auto assign = [&](const std::string& name) {
        if (rename.count(name)) return;
        rename.emplace(name, "N" + std::to_string(rename.size()));
        work.push_back(name);
    };
    assign(g.start());
    while (!work.empty()) {
        auto a = work.front();
        work.pop_front();
        for (const auto* p : by_head[a]) {
            for (const auto& s : p->body) {
                if (s.is_nonterminal()) assign(s.name);
            }
        }
    }
    for (const auto& nt : g.nonterminals()) assign(nt);

    Prods out;
    for (const auto& p : g.productions()) {
        Production q{rename.at(p.head), {}};
        for (const auto& s : p.body)
            q.body.push_back(s.is_nonterminal() ? Symbol::nonterminal(rename.at(s.name)) : s);
        out.push_back(std::move(q));
    }
    return Grammar(rename.at(g.start()), std::move(out));
}

}  // namespace cflr
