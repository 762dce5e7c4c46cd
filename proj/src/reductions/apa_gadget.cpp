#include "cflr/error.hpp"
#include "cflr/oracle.hpp"
#include "cflr/reductions.hpp"
#include "detail.hpp"

namespace cflr {

namespace {

using detail::Step;

// L(v) = alpha^v alpha gamma
std::vector<Step> line_l(std::size_t v) {
    std::vector<Step> s(v + 1, Step{"alpha", false});
    s.push_back({"gamma", false});
    return s;
}

// L^R(v) = gamma_bar alpha_bar beta^v
std::vector<Step> line_r(std::size_t v) {
    std::vector<Step> s{{"gamma", true}, {"alpha", true}};
    for (std::size_t i = 0; i < v; ++i) s.push_back({"beta", false});
    return s;
}

void append(std::vector<Step>& out, const std::vector<Step>& more) { out.insert(out.end(), more.begin(), more.end()); }

void append_word(Word& out, const std::vector<Step>& steps) {
    for (const auto& s : steps) out.push_back(s.backward ? s.label + "_bar" : s.label);
}

}  // namespace

Word apa_gadget_word(const std::vector<std::size_t>& t1, const std::vector<std::size_t>& t2,
                     const std::vector<std::size_t>& t3) {
    Word w{"alpha"};
    for (auto v : t1) append_word(w, line_l(v));
    for (auto v : t2) append_word(w, line_l(v));
    w.push_back("alpha");
    for (auto it = t2.rbegin(); it != t2.rend(); ++it) append_word(w, line_r(*it));
    w.push_back("gamma");
    for (auto v : t3) append_word(w, line_l(v));
    w.push_back("alpha");
    for (auto it = t3.rbegin(); it != t3.rend(); ++it) append_word(w, line_r(*it));
    w.push_back("gamma_bar");
    w.push_back("alpha_bar");
    for (auto it = t1.rbegin(); it != t1.rend(); ++it) append_word(w, line_r(*it));
    w.push_back("beta");
    return w;
}

ReductionInstance apa_clique_gadget(const SimpleGraph& src, std::size_t k, bool verify) {
    const std::size_t n = src.size();
    if (k == 0 || 3 * k > n)
        throw PreconditionError("k out of range: need 1 <= k and 3k <= n (k=" + std::to_string(k) +
                                ", n=" + std::to_string(n) + ")");
    auto cliques = enumerate_cliques(src, k);

    ReductionInstance inst;
    LabeledGraph& g = inst.graph;
    const std::string p = "p", A = "A", B = "B", q = "q";
    for (const auto& name : {p, A, B, q}) g.add_vertex(name);

    auto cng = [&](const std::string& tag, const std::vector<std::size_t>& nbrs, const std::string& first,
                   const std::string& last, bool reversed, const std::vector<std::size_t>& clique) {
        CngRecord rec;
        rec.reversed = reversed;
        for (std::size_t v : clique) rec.clique.push_back(v + 1);
        rec.hubs.push_back(first);
        for (std::size_t j = 1; j < k; ++j) rec.hubs.push_back(tag + ":h" + std::to_string(j));
        rec.hubs.push_back(last);
        for (std::size_t w : nbrs)
            for (std::size_t j = 1; j <= k; ++j)
                detail::walk(g, rec.hubs[j - 1], rec.hubs[j], reversed ? line_r(w + 1) : line_l(w + 1),
                             tag + ":w" + std::to_string(w + 1) + ":c" + std::to_string(j));
        inst.gadgets.push_back(std::move(rec));
    };

    for (std::size_t ti = 0; ti < cliques.size(); ++ti) {
        const auto& t = cliques[ti];
        std::vector<std::size_t> nbrs;
        for (std::size_t w = 0; w < n; ++w) {
            bool common = true;
            for (std::size_t v : t) common = common && w != v && src.adjacent(v, w);
            if (common) nbrs.push_back(w);
        }
        const std::string tt = ":t" + std::to_string(ti + 1);

        std::vector<Step> cl{{"alpha", false}}, cl2{{"alpha", false}}, cl3{{"alpha", false}};
        for (std::size_t v : t) append(cl, line_l(v + 1));
        for (auto it = t.rbegin(); it != t.rend(); ++it) append(cl2, line_r(*it + 1));
        cl3 = cl2;
        cl2.push_back({"gamma", false});
        cl3.push_back({"gamma", true});
        cl3.push_back({"alpha", true});

        // p -alpha-> CL1(t) -> CNG1(t) -> A
        std::string end1 = detail::walk(g, p, "", cl, "CL1" + tt + ":s");
        cng("CNG1" + tt, nbrs, end1, A, false, t);
        // A -alpha-> reversed CL2(t) -gamma-> CNG2(t) -> B
        std::string end2 = detail::walk(g, A, "", cl2, "CL2" + tt + ":s");
        cng("CNG2" + tt, nbrs, end2, B, false, t);
        // B -alpha-> reversed CL3(t) -gamma_bar alpha_bar-> reversed CNG3(t) -beta-> q
        std::string end3 = detail::walk(g, B, "", cl3, "CL3" + tt + ":s");
        std::string last = "CNG3" + tt + ":end";
        cng("CNG3" + tt, nbrs, end3, last, true, t);
        g.add_edge(last, q, "beta");
    }

    inst.grammar_preset = "apa";
    inst.grammar = preset("apa");
    inst.query = std::make_pair(p, q);
    inst.size_constant = 8 * k + 2;
    inst.provenance = {"apa-clique", {{"k", std::to_string(k)}, {"cliques", std::to_string(cliques.size())}},
                       hex_digest(fnv1a(serialize_simple_graph(src)))};
    if (verify) inst.truth = oracle::brute_kclique(src, 3 * k);
    return inst;
}

}  // namespace cflr
