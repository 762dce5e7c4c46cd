#include "cflr/error.hpp"
#include "cflr/oracle.hpp"
#include "cflr/reductions.hpp"

namespace cflr {

namespace {

Word witness_of(const Grammar& g) {
    auto report = classify(g);
    if (!report.join_inducing || !report.witness) throw PreconditionError("grammar is join-free: no witness of length >= 2");
    return *report.witness;
}

std::string layer_vertex(std::size_t layer, std::size_t i) {
    return "v" + std::to_string(layer) + "_" + std::to_string(i + 1);
}

ReductionInstance layered(const Grammar& g, const std::string& preset_name, std::size_t n, const Word& r) {
    ReductionInstance inst;
    const std::size_t k = r.size();
    for (std::size_t layer = 0; layer <= k; ++layer)
        for (std::size_t i = 0; i < n; ++i) inst.graph.add_vertex(layer_vertex(layer, i));
    for (std::size_t i = 0; i < n; ++i) {
        inst.filter_sources.push_back(layer_vertex(0, i));
        inst.filter_targets.push_back(layer_vertex(k, i));
    }
    inst.grammar = g;
    inst.grammar_preset = preset_name;
    inst.mode = InstanceMode::all_pairs_filtered;
    return inst;
}

}  // namespace

ReductionInstance bmm_to_cfg(const BoolMatrix& a, const BoolMatrix& b, const Grammar& g, const std::string& preset_name,
                             bool verify) {
    const std::size_t n = a.size();
    auto square = [n](const BoolMatrix& m) {
        for (const auto& row : m)
            if (row.size() != n) return false;
        return m.size() == n;
    };
    if (!square(a) || !square(b)) throw PreconditionError("matrices must be square and of equal dimension");
    Word r = witness_of(g);
    const std::size_t k = r.size();

    ReductionInstance inst = layered(g, preset_name, n, r);
    LabeledGraph& graph = inst.graph;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a[i][j]) graph.add_edge(layer_vertex(0, i), layer_vertex(1, j), r[0]);
    for (std::size_t layer = 2; layer < k; ++layer)
        for (std::size_t i = 0; i < n; ++i) graph.add_edge(layer_vertex(layer - 1, i), layer_vertex(layer, i), r[layer - 1]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (b[i][j]) graph.add_edge(layer_vertex(k - 1, i), layer_vertex(k, j), r[k - 1]);

    inst.provenance = {"bmm",
                       {{"n", std::to_string(n)}, {"witness", word_to_string(r)}},
                       hex_digest(fnv1a(serialize_matrix(a) + "*\n" + serialize_matrix(b)))};
    if (verify) inst.truth_matrix = oracle::naive_bmm(a, b);
    return inst;
}

BoolMatrix decode_bmm(const ReductionInstance& inst, const VertexPairSet& pairs) {
    const std::size_t n = inst.filter_sources.size();
    BoolMatrix c(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        VertexId s = inst.graph.vertex_id(inst.filter_sources[i]);
        for (std::size_t j = 0; j < n; ++j) c[i][j] = pairs.contains(s, inst.graph.vertex_id(inst.filter_targets[j]));
    }
    return c;
}

ReductionInstance worst_case_family(const Grammar& g, std::size_t n, const std::string& preset_name) {
    if (n == 0) throw PreconditionError("family size must be at least 1");
    Word r = witness_of(g);
    const std::size_t k = r.size();
    const std::size_t hub = 0;

    ReductionInstance inst = layered(g, preset_name, n, r);
    LabeledGraph& graph = inst.graph;
    for (std::size_t i = 0; i < n; ++i) graph.add_edge(layer_vertex(0, i), layer_vertex(1, hub), r[0]);
    for (std::size_t layer = 2; layer < k; ++layer)
        for (std::size_t i = 0; i < n; ++i) graph.add_edge(layer_vertex(layer - 1, i), layer_vertex(layer, i), r[layer - 1]);
    for (std::size_t j = 0; j < n; ++j) graph.add_edge(layer_vertex(k - 1, hub), layer_vertex(k, j), r[k - 1]);

    inst.provenance = {"worst-case", {{"n", std::to_string(n)}, {"witness", word_to_string(r)}}, ""};
    return inst;
}

}  // namespace cflr
