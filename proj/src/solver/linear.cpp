#include <deque>
#include <optional>
#include <tuple>
#include <unordered_set>
#include <set>
#include <unordered_map>

#include "cflr/solver.hpp"

namespace cflr {

namespace {

// Linear rules after peeling: A <- eps | a | a B | B a | B.
enum class Kind { epsilon, terminal, left_terminal, right_terminal, unit };

struct LinearRule {
    Kind kind;
    std::uint32_t head;
    std::uint32_t body = 0;  // nonterminal, when present
    std::string terminal;
    std::optional<LabelId> label;
};

LinearRule make_rule(Kind kind, std::uint32_t head, std::uint32_t body = 0, std::string terminal = {}) {
    return LinearRule{kind, head, body, std::move(terminal), std::nullopt};
}

struct LinearGrammar {
    std::uint32_t count = 0;
    std::uint32_t start = 0;
    std::vector<LinearRule> rules;
};

LinearGrammar peel(const Grammar& g) {
    LinearGrammar lg;
    std::unordered_map<std::string, std::uint32_t> id;
    for (const auto& nt : g.nonterminals()) id.emplace(nt, lg.count++);
    lg.start = id.at(g.start());

    for (const auto& p : g.productions()) {
        std::uint32_t head = id.at(p.head);
        std::size_t lo = 0, hi = p.body.size();
        std::optional<std::size_t> nt_pos;
        for (std::size_t i = 0; i < p.body.size(); ++i)
            if (p.body[i].is_nonterminal()) nt_pos = i;

        if (!nt_pos) {
            if (hi == 0) {
                lg.rules.push_back(make_rule(Kind::epsilon, head));
                continue;
            }
            // a1 ... ak: peel from the left down to the last terminal
            while (hi - lo > 1) {
                std::uint32_t rest = lg.count++;
                lg.rules.push_back(make_rule(Kind::left_terminal, head, rest, p.body[lo].name));
                head = rest;
                ++lo;
            }
            lg.rules.push_back(make_rule(Kind::terminal, head, 0, p.body[lo].name));
            continue;
        }
        while (lo < *nt_pos) {
            std::uint32_t rest = lg.count++;
            lg.rules.push_back(make_rule(Kind::left_terminal, head, rest, p.body[lo].name));
            head = rest;
            ++lo;
        }
        while (hi > *nt_pos + 1) {
            std::uint32_t rest = lg.count++;
            lg.rules.push_back(make_rule(Kind::right_terminal, head, rest, p.body[hi - 1].name));
            head = rest;
            --hi;
        }
        lg.rules.push_back(make_rule(Kind::unit, head, id.at(p.body[*nt_pos].name)));
    }
    return lg;
}

}  // namespace

VertexPairSet all_pairs_linear(const Grammar& g, const LabeledGraph& graph, SolveStats* stats) {
    if (!is_linear(g)) throw NotLinear();
    LinearGrammar lg = peel(g);
    const std::size_t n = graph.vertex_count();

    // labels absent from the graph never match
    for (auto& r : lg.rules)
        if (!r.terminal.empty()) r.label = graph.find_label(r.terminal);

    std::vector<std::vector<const LinearRule*>> by_body(lg.count);
    for (const auto& r : lg.rules)
        if (r.kind != Kind::epsilon && r.kind != Kind::terminal) by_body[r.body].push_back(&r);

    auto out = graph.out_adjacency();
    auto in = graph.in_adjacency();

    std::unordered_set<std::uint64_t> seen;
    std::deque<std::tuple<std::uint32_t, VertexId, VertexId>> work;
    auto add = [&](std::uint32_t a, VertexId u, VertexId v) {
        std::uint64_t key = (static_cast<std::uint64_t>(a) * n + u) * n + v;
        if (seen.insert(key).second) work.emplace_back(a, u, v);
    };

    for (const auto& r : lg.rules) {
        if (r.kind == Kind::epsilon) {
            for (VertexId v = 0; v < n; ++v) add(r.head, v, v);
        } else if (r.kind == Kind::terminal) {
            if (!r.label) continue;
            for (const auto& e : graph.edges())
                if (e.label == *r.label) add(r.head, e.src, e.dst);
        }
    }

    std::vector<VertexPairSet::Pair> result;
    while (!work.empty()) {
        auto [b, u, v] = work.front();
        work.pop_front();
        if (b == lg.start) result.emplace_back(u, v);
        for (const auto* r : by_body[b]) {
            switch (r->kind) {
                case Kind::unit:
                    add(r->head, u, v);
                    break;
                case Kind::left_terminal: {
                    if (!r->label) break;
                    for (auto [x, lab] : in[u])
                        if (lab == *r->label) add(r->head, x, v);
                    break;
                }
                case Kind::right_terminal: {
                    if (!r->label) break;
                    for (auto [y, lab] : out[v])
                        if (lab == *r->label) add(r->head, u, y);
                    break;
                }
                default:
                    break;
            }
        }
    }
    if (stats) {
        stats->facts = seen.size();
        std::set<std::string> inert;
        for (const auto& e : graph.edges())
            if (!g.has_terminal(graph.label_name(e.label))) inert.insert(graph.label_name(e.label));
        stats->inert_labels.assign(inert.begin(), inert.end());
    }
    return VertexPairSet(std::move(result));
}

}  // namespace cflr
