#include <functional>
#include <map>

#include "cflr/error.hpp"
#include "cflr/oracle.hpp"
#include "cflr/reductions.hpp"
#include "detail.hpp"

namespace cflr {

namespace {

using detail::Step;

// Cyclic parts V1 -> V2 -> ... -> Vk -> V1', a chain into V1 and a chain out
// of the copy V1'.
struct CrossingSpec {
    std::vector<std::vector<std::string>> parts;
    std::vector<std::vector<std::vector<bool>>> arcs;
    std::vector<Word> step_words;
    std::string chain_in, chain_out;
    std::string sink_label;  // empty: no sink
};

struct Skeleton {
    LabeledGraph graph;
    std::string u, first, first_prime, sink;
};

Skeleton build_crossing(const CrossingSpec& spec) {
    const std::size_t k = spec.parts.size();
    const auto& v1 = spec.parts[0];
    if (v1.empty()) throw PreconditionError("first part is empty");
    Skeleton s;
    LabeledGraph& g = s.graph;
    for (const auto& part : spec.parts)
        for (const auto& name : part) g.add_vertex(name);

    s.u = detail::unique_vertex(g, "u");
    g.add_vertex(s.u);
    std::vector<std::string> prime;
    for (const auto& name : v1) {
        prime.push_back(detail::unique_vertex(g, name + "'"));
        g.add_vertex(prime.back());
    }

    g.add_edge(s.u, v1[0], spec.chain_in);
    for (std::size_t i = 0; i + 1 < v1.size(); ++i) g.add_edge(v1[i], v1[i + 1], spec.chain_in);

    for (std::size_t step = 0; step < k; ++step) {
        const auto& from = spec.parts[step];
        const auto& to = step + 1 == k ? prime : spec.parts[step + 1];
        const Word& word = spec.step_words[step];
        for (std::size_t x = 0; x < from.size(); ++x)
            for (std::size_t y = 0; y < to.size(); ++y) {
                if (!spec.arcs[step][x][y]) continue;
                if (word.size() == 1) g.add_edge(from[x], to[y], word[0]);
                else detail::walk(g, from[x], to[y], detail::forward(word), "mid:" + from[x] + ":" + to[y]);
            }
    }

    for (std::size_t i = v1.size(); i-- > 1;) g.add_edge(prime[i], prime[i - 1], spec.chain_out);
    s.first = v1[0];
    s.first_prime = prime[0];
    if (!spec.sink_label.empty()) {
        s.sink = detail::unique_vertex(g, "v");
        g.add_edge(prime[0], s.sink, spec.sink_label);
    }
    return s;
}

CrossingSpec from_tripartite(const TripartiteGraph& g3) {
    CrossingSpec spec;
    spec.parts = {g3.a, g3.b, g3.c};
    spec.arcs = {g3.ab, g3.bc, g3.ca};
    return spec;
}

ReductionInstance finish(Skeleton s, const std::string& preset_name, std::string query_src, std::string query_dst) {
    ReductionInstance inst;
    inst.graph = std::move(s.graph);
    inst.grammar_preset = preset_name;
    inst.grammar = preset(preset_name);
    inst.query = std::make_pair(std::move(query_src), std::move(query_dst));
    inst.mode = InstanceMode::on_demand;
    return inst;
}

std::string open_label(int bit) { return bit ? "(" : "["; }
std::string close_label(int bit) { return bit ? ")" : "]"; }

}  // namespace

ReductionInstance triangle_to_dyck1(const TripartiteGraph& g3, bool verify) {
    CrossingSpec spec = from_tripartite(g3);
    spec.step_words = {{"("}, {")"}, {")"}};
    spec.chain_in = "(";
    spec.chain_out = ")";
    Skeleton s = build_crossing(spec);
    std::string u = s.u, target = s.first_prime;
    ReductionInstance inst = finish(std::move(s), "dyck:1", u, target);
    inst.provenance = {"triangle-dyck1", {}, hex_digest(fnv1a(serialize_tripartite(g3)))};
    if (verify) inst.truth = oracle::brute_triangle(g3);
    return inst;
}

ReductionInstance variant_reduction(const TripartiteGraph& g3, const std::string& target, bool verify) {
    CrossingSpec spec = from_tripartite(g3);
    std::string preset_name;
    enum { from_u, from_first } src = from_u;
    if (target == "eqcount") {
        spec.step_words = {{"a"}, {"b"}, {"b"}};
        spec.chain_in = "a";
        spec.chain_out = "b";
        preset_name = "eqcount";
    } else if (target == "palindrome") {
        spec.step_words = {{"b"}, {"b"}, {"b"}};
        spec.chain_in = spec.chain_out = spec.sink_label = "a";
        preset_name = "palindrome";
    } else if (target.rfind("anbn_mid", 0) == 0) {
        std::string mid;
        if (target == "anbn_mid") mid = "c";
        else if (target.size() > 9 && target[8] == ':') mid = target.substr(9);
        else if (target != "anbn_mid:") throw LookupError("unknown target '" + target + "'");
        if (mid.empty()) mid = "ab";
        Word s = split_terminal_list(mid);
        spec.step_words = {{"a"}, s, {"b"}};
        spec.chain_in = "a";
        spec.chain_out = "b";
        preset_name = "anbn_mid:" + mid;
        src = from_first;
    } else {
        throw LookupError("unknown target '" + target + "' (expected anbn_mid[:s], eqcount or palindrome)");
    }
    Skeleton s = build_crossing(spec);
    std::string qs = src == from_u ? s.u : s.first;
    std::string qt = spec.sink_label.empty() ? s.first_prime : s.sink;
    ReductionInstance inst = finish(std::move(s), preset_name, qs, qt);
    inst.provenance = {"variant", {{"target", target}}, hex_digest(fnv1a(serialize_tripartite(g3)))};
    if (verify) inst.truth = oracle::brute_triangle(g3);
    return inst;
}

ReductionInstance kcycle_on_demand(const KPartiteDigraph& g, const std::string& target, bool verify) {
    const std::size_t k = g.k();
    if (k < 3 || k % 2 == 0) throw PreconditionError("k must be odd and at least 3 (got " + std::to_string(k) + ")");
    CrossingSpec spec;
    spec.parts = g.parts;
    spec.arcs = g.arcs;
    std::string open, close, preset_name;
    if (target == "dyck:1") {
        open = "(";
        close = ")";
        preset_name = "dyck:1";
    } else if (target == "anbn" || target == "eqcount") {
        open = "a";
        close = "b";
        preset_name = target;
    } else if (target == "palindrome") {
        preset_name = "palindrome";
    } else {
        throw LookupError("unknown target '" + target + "' (expected dyck:1, anbn, eqcount or palindrome)");
    }
    if (target == "palindrome") {
        spec.step_words.assign(k, Word{"b"});
        spec.chain_in = spec.chain_out = spec.sink_label = "a";
    } else {
        for (std::size_t i = 0; i < k; ++i) spec.step_words.push_back({i < k / 2 ? open : close});
        spec.chain_in = open;
        spec.chain_out = close;
    }
    Skeleton s = build_crossing(spec);
    std::string qs = s.u;
    std::string qt = spec.sink_label.empty() ? s.first_prime : s.sink;
    ReductionInstance inst = finish(std::move(s), preset_name, qs, qt);
    inst.provenance = {"kcycle", {{"k", std::to_string(k)}, {"target", target}},
                       hex_digest(fnv1a(serialize_kpartite(g)))};
    if (verify) inst.truth = oracle::brute_kcycle(g, k);
    return inst;
}

ReductionInstance kclique_to_dyck2(const SimpleGraph& src, std::size_t k, bool verify) {
    const std::size_t n = src.size();
    if (k == 0 || 3 * k > n)
        throw PreconditionError("k out of range: need 1 <= k and 3k <= n (k=" + std::to_string(k) +
                                ", n=" + std::to_string(n) + ")");
    const std::size_t width = bit_width_for(n);
    auto cliques = enumerate_cliques(src, k);

    auto lword = [&](std::size_t v) {
        Word w;
        for (int b : vertex_bits(v + 1, width)) w.push_back(open_label(b));
        return w;
    };
    auto rword = [&](std::size_t v) {
        Word w;
        auto bits = vertex_bits(v + 1, width);
        for (auto it = bits.rbegin(); it != bits.rend(); ++it) w.push_back(close_label(*it));
        return w;
    };

    ReductionInstance inst;
    LabeledGraph& g = inst.graph;
    const std::string p = "p", A = "A", B = "B", q = "q";
    for (const auto& name : {p, A, B, q}) g.add_vertex(name);

    // k line graphs per common neighbor, copies stitched at shared hubs
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
                detail::walk(g, rec.hubs[j - 1], rec.hubs[j], detail::forward(reversed ? rword(w) : lword(w)),
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

        Word cl, clr;
        for (std::size_t v : t)
            for (auto& l : lword(v)) cl.push_back(l);
        for (auto it = t.rbegin(); it != t.rend(); ++it)
            for (auto& l : rword(*it)) clr.push_back(l);

        // p -[-> CL1(t) -> CNG1(t) -> A
        std::string start = "CL1" + tt + ":b0";
        g.add_edge(p, start, "[");
        std::string end1 = detail::walk(g, start, "", detail::forward(cl), "CL1" + tt + ":b");
        cng("CNG1" + tt, nbrs, end1, A, false, t);

        // A -> reversed CL2(t) -> CNG2(t) -> B
        std::string end2 = detail::walk(g, A, "", detail::forward(clr), "CL2" + tt + ":b");
        cng("CNG2" + tt, nbrs, end2, B, false, t);

        // B -> reversed CL3(t) -> reversed CNG3(t) -]-> q
        std::string end3 = detail::walk(g, B, "", detail::forward(clr), "CL3" + tt + ":b");
        std::string last = "CNG3" + tt + ":end";
        cng("CNG3" + tt, nbrs, end3, last, true, t);
        g.add_edge(last, q, "]");
    }

    inst.grammar_preset = "dyck:2";
    inst.grammar = preset("dyck:2");
    inst.query = std::make_pair(p, q);
    inst.bit_width = width;
    inst.size_constant = 6 * k + 2;
    inst.provenance = {"kclique-dyck2", {{"k", std::to_string(k)}, {"cliques", std::to_string(cliques.size())}},
                       hex_digest(fnv1a(serialize_simple_graph(src)))};
    if (verify) inst.truth = oracle::brute_kclique(src, 3 * k);
    return inst;
}

bool check_neighbor_gadgets(const ReductionInstance& inst) {
    const auto& g = inst.graph;
    const std::size_t width = inst.bit_width;
    if (width == 0) return true;
    auto out = g.out_adjacency();
    for (const auto& rec : inst.gadgets) {
        for (std::size_t j = 1; j < rec.hubs.size(); ++j) {
            auto from = g.find_vertex(rec.hubs[j - 1]);
            auto to = g.find_vertex(rec.hubs[j]);
            if (!from || !to) continue;  // no common neighbors, gadget is empty
            std::vector<int> bits;
            bool ok = true;
            std::function<void(VertexId)> dfs = [&](VertexId v) {
                if (!ok) return;
                if (bits.size() == width) {
                    if (v != *to) return;
                    std::size_t id = 0;
                    if (rec.reversed)
                        for (auto it = bits.rbegin(); it != bits.rend(); ++it) id = id * 2 + *it;
                    else
                        for (int b : bits) id = id * 2 + b;
                    for (std::size_t c : rec.clique) ok = ok && c != id;
                    ok = ok && id >= 1;
                    return;
                }
                for (auto [w, l] : out[v]) {
                    const auto& name = g.label_name(l);
                    bool one = rec.reversed ? name == ")" : name == "(";
                    bool zero = rec.reversed ? name == "]" : name == "[";
                    if (!one && !zero) continue;
                    bits.push_back(one ? 1 : 0);
                    dfs(w);
                    bits.pop_back();
                }
            };
            dfs(*from);
            if (!ok) return false;
        }
    }
    return true;
}

}  // namespace cflr
