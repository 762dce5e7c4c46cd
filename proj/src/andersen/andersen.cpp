#include "cflr/andersen.hpp"

#include <deque>
#include <sstream>

#include "cflr/error.hpp"
#include "cflr/oracle.hpp"

namespace cflr {

const std::set<std::string>& apa_labels() {
    static const std::set<std::string> labels = {"alpha", "e", "beta", "gamma"};
    return labels;
}

ApaInstance::ApaInstance(LabeledGraph graph) : graph_(std::move(graph)) {
    for (const auto& l : graph_.alphabet())
        if (!apa_labels().count(l)) throw PreconditionError("label '" + l + "' is not one of alpha, e, beta, gamma");
}

bool TRelation::insert(VertexId x, VertexId y) {
    if (!keys_.insert(static_cast<std::uint64_t>(x) * n_ + y).second) return false;
    succ_[x].push_back(y);
    pred_[y].push_back(x);
    return true;
}

bool TRelation::contains(VertexId x, VertexId y) const {
    return keys_.count(static_cast<std::uint64_t>(x) * n_ + y) > 0;
}

VertexPairSet TRelation::pairs() const {
    std::vector<VertexPairSet::Pair> out;
    for (VertexId x = 0; x < n_; ++x)
        for (VertexId y : succ_[x]) out.emplace_back(x, y);
    return VertexPairSet(std::move(out));
}

TRelation apa_fixpoint(const ApaInstance& inst) {
    const auto& g = inst.graph();
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<VertexId>> e_out(n), beta_out(n), gamma_out(n), gamma_in(n);
    std::vector<std::pair<VertexId, VertexId>> alpha;
    for (const auto& ed : g.edges()) {
        const auto& l = g.label_name(ed.label);
        if (l == "alpha") alpha.emplace_back(ed.src, ed.dst);
        else if (l == "e") e_out[ed.src].push_back(ed.dst);
        else if (l == "beta") beta_out[ed.src].push_back(ed.dst);
        else if (l == "gamma") {
            gamma_out[ed.src].push_back(ed.dst);
            gamma_in[ed.dst].push_back(ed.src);
        }
    }

    TRelation t(n);
    std::deque<std::pair<VertexId, VertexId>> delta;
    auto add = [&](VertexId x, VertexId y) {
        if (t.insert(x, y)) delta.emplace_back(x, y);
    };
    for (auto [x, y] : alpha) add(x, y);

    while (!delta.empty()) {
        auto [a, b] = delta.front();
        delta.pop_front();

        // rule 2 with T(a,b) as T(x,z)
        for (VertexId y : e_out[b]) add(a, y);

        // rule 3 with T(a,b) as T(w,z): T(b,x), beta(x,y) gives T(a,y)
        const auto& from_b = t.successors(b);
        for (std::size_t i = 0; i < from_b.size(); ++i)
            for (VertexId y : beta_out[from_b[i]]) add(a, y);
        // rule 3 with T(a,b) as T(z,x): T(w,a), beta(b,y) gives T(w,y)
        if (!beta_out[b].empty()) {
            const auto& into_a = t.predecessors(a);
            for (std::size_t i = 0; i < into_a.size(); ++i)
                for (VertexId y : beta_out[b]) add(into_a[i], y);
        }

        // rule 4 with T(a,b) as T(w,x): gamma(b,y), T(z,y) gives T(a,z)
        for (VertexId y : gamma_out[b]) {
            const auto& zs = t.predecessors(y);
            for (std::size_t i = 0; i < zs.size(); ++i) add(a, zs[i]);
        }
        // rule 4 with T(a,b) as T(z,y): T(w,x), gamma(x,b) gives T(w,a)
        for (VertexId x : gamma_in[b]) {
            const auto& ws = t.predecessors(x);
            for (std::size_t i = 0; i < ws.size(); ++i) add(ws[i], a);
        }
    }
    return t;
}

bool apa_on_demand(const ApaInstance& inst, VertexId p, VertexId q) {
    if (p >= inst.graph().vertex_count() || q >= inst.graph().vertex_count())
        throw LookupError("vertex id out of range");
    return apa_fixpoint(inst).contains(p, q);
}

bool apa_on_demand(const ApaInstance& inst, std::string_view p, std::string_view q) {
    return apa_on_demand(inst, inst.graph().vertex_id(p), inst.graph().vertex_id(q));
}

Word parse_apa_word(std::string_view text) {
    static const std::vector<std::pair<std::string, std::string>> aliases = {
        {"\xCE\xB1\xCC\x84", "alpha_bar"},  // alpha + combining macron
        {"\xE1\xBE\xB1", "alpha_bar"},      // precomposed alpha with macron
        {"\xCE\xB2\xCC\x84", "beta_bar"},
        {"\xCE\xB3\xCC\x84", "gamma_bar"},
        {"e\xCC\x84", "e_bar"},
        {"\xCE\xB1", "alpha"},
        {"\xCE\xB2", "beta"},
        {"\xCE\xB3", "gamma"},
    };
    static const std::set<std::string> plain = {"alpha", "alpha_bar", "e",     "e_bar",
                                                "beta",  "beta_bar",  "gamma", "gamma_bar"};
    Word out;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        if (plain.count(tok)) {
            out.push_back(tok);
            continue;
        }
        // a run of Greek letters without spaces
        std::size_t i = 0;
        while (i < tok.size()) {
            bool matched = false;
            for (const auto& [spelling, name] : aliases) {
                if (tok.compare(i, spelling.size(), spelling) == 0) {
                    out.push_back(name);
                    i += spelling.size();
                    matched = true;
                    break;
                }
            }
            if (!matched) {
                if (tok[i] == 'e') {
                    out.push_back("e");
                    ++i;
                    continue;
                }
                throw ParseError("unknown word token '" + tok + "'", 0, 0);
            }
        }
    }
    return out;
}

bool apa_word_check(const Word& word) {
    static const CnfGrammar cnf = to_cnf(preset("apa"));
    return oracle::cyk(cnf, word);
}

}  // namespace cflr
