#include <algorithm>
#include <fstream>
#include <sstream>

#include "cflr/error.hpp"
#include "cflr/reductions.hpp"
#include "detail.hpp"

namespace cflr {

const char* mode_name(InstanceMode m) {
    return m == InstanceMode::on_demand ? "on_demand" : "all_pairs_filtered";
}

namespace detail {

std::string unique_vertex(const LabeledGraph& g, const std::string& base) {
    if (!g.has_vertex(base)) return base;
    for (std::size_t i = 2;; ++i) {
        std::string name = base + "~" + std::to_string(i);
        if (!g.has_vertex(name)) return name;
    }
}

std::string walk(LabeledGraph& g, const std::string& from, const std::string& to, const std::vector<Step>& steps,
                 const std::string& prefix) {
    if (steps.empty()) throw PreconditionError("empty line graph");
    std::string cur = from;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        std::string next = (i + 1 == steps.size() && !to.empty()) ? to : prefix + ":" + std::to_string(i + 1);
        if (steps[i].backward) g.add_edge(next, cur, steps[i].label);
        else g.add_edge(cur, next, steps[i].label);
        cur = next;
    }
    return cur;
}

std::vector<Step> forward(const Word& labels) {
    std::vector<Step> out;
    for (const auto& l : labels) out.push_back({l, false});
    return out;
}

}  // namespace detail

std::vector<int> vertex_bits(std::size_t id, std::size_t width) {
    std::vector<int> bits(width);
    for (std::size_t i = 0; i < width; ++i) bits[width - 1 - i] = static_cast<int>((id >> i) & 1U);
    return bits;
}

std::size_t bit_width_for(std::size_t n) {
    std::size_t w = 0;
    while ((std::size_t{1} << w) < n + 1) ++w;
    return std::max<std::size_t>(w, 1);
}

std::vector<std::vector<std::size_t>> enumerate_cliques(const SimpleGraph& g, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t v = from; v < g.size(); ++v) {
            bool ok = true;
            for (std::size_t u : cur) ok = ok && g.adjacent(u, v);
            if (!ok) continue;
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    if (k > 0) rec(rec, 0);
    return out;
}

std::size_t filtered_count(const ReductionInstance& inst, const VertexPairSet& pairs) {
    std::size_t count = 0;
    for (const auto& s : inst.filter_sources)
        for (const auto& t : inst.filter_targets)
            if (pairs.contains(inst.graph.vertex_id(s), inst.graph.vertex_id(t))) ++count;
    return count;
}

std::string instance_digest(const ReductionInstance& inst) {
    std::string text = serialize_graph(inst.graph);
    text += "\n--\n" + serialize_grammar(inst.grammar);
    if (inst.query) text += "\n--\n" + inst.query->first + " " + inst.query->second;
    for (const auto& s : inst.filter_sources) text += " s:" + s;
    for (const auto& t : inst.filter_targets) text += " t:" + t;
    return hex_digest(fnv1a(text));
}

namespace {

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw Error("cannot write " + p.string());
    out << text;
}

}  // namespace

void write_bundle(const ReductionInstance& inst, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    write_file(dir / "graph.txt", serialize_graph(inst.graph));
    write_file(dir / "grammar.txt", serialize_grammar(inst.grammar));

    std::ostringstream q;
    if (inst.query) q << inst.query->first << ' ' << inst.query->second << '\n';
    if (inst.mode == InstanceMode::all_pairs_filtered) {
        q << "sources";
        for (const auto& s : inst.filter_sources) q << ' ' << s;
        q << "\ntargets";
        for (const auto& t : inst.filter_targets) q << ' ' << t;
        q << '\n';
    }
    write_file(dir / "query.txt", q.str());

    std::ostringstream meta;
    meta << "generator=" << inst.provenance.generator << '\n';
    for (const auto& [k, v] : inst.provenance.params) meta << k << '=' << v << '\n';
    meta << "source_digest=" << inst.provenance.source_digest << '\n';
    meta << "digest=" << instance_digest(inst) << '\n';
    if (!inst.grammar_preset.empty()) meta << "preset=" << inst.grammar_preset << '\n';
    meta << "mode=" << mode_name(inst.mode) << '\n';
    if (inst.bit_width) meta << "bit_width=" << inst.bit_width << '\n';
    if (inst.size_constant) meta << "size_constant=" << inst.size_constant << '\n';
    meta << "vertices=" << inst.graph.vertex_count() << "\nedges=" << inst.graph.edge_count() << '\n';
    write_file(dir / "meta.txt", meta.str());

    if (inst.truth) write_file(dir / "truth.txt", *inst.truth ? "true\n" : "false\n");
    else if (inst.truth_matrix) write_file(dir / "truth.txt", serialize_matrix(*inst.truth_matrix));
}

}  // namespace cflr
