#include <algorithm>
#include <numeric>
#include <set>

#include "cflr/error.hpp"
#include "cflr/reductions.hpp"
#include "detail.hpp"

namespace cflr {

QuotientExtension right_quotient_extend(const LabeledGraph& g, const std::string& alpha) {
    if (!is_valid_terminal_name(alpha)) throw PreconditionError("'" + alpha + "' is not a terminal name");
    QuotientExtension ext;
    ext.graph = g;
    const std::size_t n = g.vertex_count();
    for (VertexId v = 0; v < n; ++v) {
        std::string t = detail::unique_vertex(ext.graph, "rq:" + g.vertex_name(v));
        VertexId id = ext.graph.add_vertex(t);
        ext.graph.add_edge(v, id, ext.graph.add_label(alpha));
        ext.sink.push_back(id);
    }
    return ext;
}

VertexPairSet decode_right_quotient(const QuotientExtension& ext, std::size_t original_vertices,
                                    const VertexPairSet& pairs) {
    std::vector<VertexPairSet::Pair> out;
    for (VertexId u = 0; u < original_vertices; ++u)
        for (VertexId v = 0; v < original_vertices; ++v)
            if (pairs.contains(u, ext.sink[v])) out.emplace_back(u, v);
    return VertexPairSet(std::move(out));
}

Grammar right_quotient_grammar(const Grammar& g, const std::string& alpha) {
    CnfGrammar cnf = to_cnf(g);
    const Grammar& base = cnf.grammar();
    std::set<std::string> taken(base.nonterminals().begin(), base.nonterminals().end());
    std::vector<std::string> primed;
    for (const auto& a : base.nonterminals()) {
        std::string name = a + "#q";
        while (taken.count(name)) name += "q";
        taken.insert(name);
        primed.push_back(name);
    }
    std::vector<Production> prods;
    for (const auto& r : cnf.terminal_rules())
        if (cnf.terminals()[r.terminal] == alpha) prods.push_back({primed[r.head], {}});
    for (const auto& r : cnf.binary_rules())
        prods.push_back({primed[r.head], {Symbol::nonterminal(cnf.nonterminals()[r.left]),
                                          Symbol::nonterminal(primed[r.right])}});
    for (const auto& p : base.productions()) prods.push_back(p);
    return Grammar(primed[cnf.start()], std::move(prods));
}

HomTransform inverse_hom_transform(const LabeledGraph& g, const Homomorphism& h) {
    for (const auto& l : g.alphabet())
        if (!h.count(l)) throw PreconditionError("homomorphism has no image for label '" + l + "'");
    const std::size_t n = g.vertex_count();

    std::vector<VertexId> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](VertexId x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges()) {
        if (!h.at(g.label_name(e.label)).empty()) continue;
        VertexId a = find(e.src), b = find(e.dst);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

    HomTransform t;
    t.image.resize(n);
    for (VertexId v = 0; v < n; ++v)
        if (find(v) == v) t.graph.add_vertex(g.vertex_name(v));
    for (VertexId v = 0; v < n; ++v) t.image[v] = t.graph.vertex_id(g.vertex_name(find(v)));

    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const auto& e = g.edges()[i];
        const Word& img = h.at(g.label_name(e.label));
        if (img.empty()) continue;
        std::string from = t.graph.vertex_name(t.image[e.src]);
        std::string to = t.graph.vertex_name(t.image[e.dst]);
        if (img.size() == 1) {
            t.graph.add_edge(from, to, img[0]);
            continue;
        }
        std::string prefix = detail::unique_vertex(t.graph, "ih:" + std::to_string(i + 1));
        detail::walk(t.graph, from, to, detail::forward(img), prefix);
    }
    return t;
}

VertexPairSet pull_back(const HomTransform& t, std::size_t original_vertices, const VertexPairSet& pairs) {
    std::vector<VertexPairSet::Pair> out;
    for (VertexId u = 0; u < original_vertices; ++u)
        for (VertexId v = 0; v < original_vertices; ++v)
            if (pairs.contains(t.image[u], t.image[v])) out.emplace_back(u, v);
    return VertexPairSet(std::move(out));
}

}  // namespace cflr
