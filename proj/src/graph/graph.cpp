#include "cflr/graph.hpp"

#include <algorithm>
#include <tuple>

#include "cflr/error.hpp"

namespace cflr {

namespace {

constexpr std::uint64_t kMaxVertices = 1ULL << 24;
constexpr std::uint64_t kMaxLabels = 1ULL << 16;

std::uint64_t edge_key(VertexId s, VertexId d, LabelId l) {
    return (static_cast<std::uint64_t>(s) << 40) | (static_cast<std::uint64_t>(d) << 16) | l;
}

}  // namespace

VertexId LabeledGraph::add_vertex(std::string_view name) {
    if (name.empty()) throw PreconditionError("empty vertex name");
    auto it = vertex_ids_.find(std::string(name));
    if (it != vertex_ids_.end()) return it->second;
    if (vertex_names_.size() >= kMaxVertices) throw PreconditionError("too many vertices");
    auto id = static_cast<VertexId>(vertex_names_.size());
    vertex_names_.emplace_back(name);
    vertex_ids_.emplace(std::string(name), id);
    return id;
}

LabelId LabeledGraph::add_label(std::string_view name) {
    if (name.empty()) throw PreconditionError("empty edge label");
    auto it = label_ids_.find(std::string(name));
    if (it != label_ids_.end()) return it->second;
    if (label_names_.size() >= kMaxLabels) throw PreconditionError("too many distinct labels");
    auto id = static_cast<LabelId>(label_names_.size());
    label_names_.emplace_back(name);
    label_ids_.emplace(std::string(name), id);
    return id;
}

bool LabeledGraph::add_edge(std::string_view src, std::string_view dst, std::string_view label) {
    VertexId s = add_vertex(src);
    VertexId d = add_vertex(dst);
    return add_edge(s, d, add_label(label));
}

bool LabeledGraph::add_edge(VertexId src, VertexId dst, LabelId label) {
    if (src >= vertex_names_.size() || dst >= vertex_names_.size() || label >= label_names_.size())
        throw PreconditionError("edge refers to an unknown vertex or label id");
    if (!edge_keys_.insert(edge_key(src, dst, label)).second) return false;
    edges_.push_back({src, dst, label});
    return true;
}

void LabeledGraph::add_path(const std::vector<std::string>& vertices, const std::vector<std::string>& labels) {
    if (vertices.size() != labels.size() + 1)
        throw PreconditionError("add_path: " + std::to_string(vertices.size()) + " vertices need " +
                                std::to_string(vertices.empty() ? 0 : vertices.size() - 1) + " labels, got " +
                                std::to_string(labels.size()));
    add_vertex(vertices[0]);
    for (std::size_t i = 0; i < labels.size(); ++i) add_edge(vertices[i], vertices[i + 1], labels[i]);
}

std::optional<VertexId> LabeledGraph::find_vertex(std::string_view name) const {
    auto it = vertex_ids_.find(std::string(name));
    if (it == vertex_ids_.end()) return std::nullopt;
    return it->second;
}

VertexId LabeledGraph::vertex_id(std::string_view name) const {
    auto v = find_vertex(name);
    if (!v) throw LookupError("unknown vertex '" + std::string(name) + "'");
    return *v;
}

std::optional<LabelId> LabeledGraph::find_label(std::string_view name) const {
    auto it = label_ids_.find(std::string(name));
    if (it == label_ids_.end()) return std::nullopt;
    return it->second;
}

std::set<std::string> LabeledGraph::alphabet() const {
    std::set<std::string> out;
    for (const auto& e : edges_) out.insert(label_names_[e.label]);
    return out;
}

std::vector<std::vector<std::pair<VertexId, LabelId>>> LabeledGraph::out_adjacency() const {
    std::vector<std::vector<std::pair<VertexId, LabelId>>> adj(vertex_count());
    for (const auto& e : edges_) adj[e.src].emplace_back(e.dst, e.label);
    return adj;
}

std::vector<std::vector<std::pair<VertexId, LabelId>>> LabeledGraph::in_adjacency() const {
    std::vector<std::vector<std::pair<VertexId, LabelId>>> adj(vertex_count());
    for (const auto& e : edges_) adj[e.dst].emplace_back(e.src, e.label);
    return adj;
}

bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    auto names_a = a.vertex_names_;
    auto names_b = b.vertex_names_;
    std::sort(names_a.begin(), names_a.end());
    std::sort(names_b.begin(), names_b.end());
    if (names_a != names_b) return false;
    auto named = [](const LabeledGraph& g) {
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        out.reserve(g.edges_.size());
        for (const auto& e : g.edges_)
            out.emplace_back(g.vertex_names_[e.src], g.vertex_names_[e.dst], g.label_names_[e.label]);
        std::sort(out.begin(), out.end());
        return out;
    };
    return named(a) == named(b);
}

LabeledGraph reverse(const LabeledGraph& g) {
    LabeledGraph out;
    for (const auto& v : g.vertex_names()) out.add_vertex(v);
    for (const auto& l : g.label_names()) out.add_label(l);
    for (const auto& e : g.edges()) out.add_edge(e.dst, e.src, e.label);
    return out;
}

LabeledGraph filter_by_label(const LabeledGraph& g, const std::set<std::string>& labels) {
    LabeledGraph out;
    for (const auto& v : g.vertex_names()) out.add_vertex(v);
    for (const auto& e : g.edges()) {
        const auto& l = g.label_name(e.label);
        if (labels.count(l)) out.add_edge(e.src, e.dst, out.add_label(l));
    }
    return out;
}

LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b, std::string_view a_prefix,
                            std::string_view b_prefix) {
    LabeledGraph out;
    for (const auto& v : a.vertex_names()) out.add_vertex(std::string(a_prefix) + v);
    for (const auto& v : b.vertex_names()) {
        std::string name = std::string(b_prefix) + v;
        if (out.has_vertex(name)) throw PreconditionError("disjoint_union: vertex '" + name + "' occurs in both graphs");
        out.add_vertex(name);
    }
    for (const auto& e : a.edges())
        out.add_edge(std::string(a_prefix) + a.vertex_name(e.src), std::string(a_prefix) + a.vertex_name(e.dst),
                     a.label_name(e.label));
    for (const auto& e : b.edges())
        out.add_edge(std::string(b_prefix) + b.vertex_name(e.src), std::string(b_prefix) + b.vertex_name(e.dst),
                     b.label_name(e.label));
    return out;
}

void merge_into(LabeledGraph& dst, const LabeledGraph& src) {
    for (const auto& v : src.vertex_names()) dst.add_vertex(v);
    for (const auto& e : src.edges())
        dst.add_edge(src.vertex_name(e.src), src.vertex_name(e.dst), src.label_name(e.label));
}

VertexPairSet::VertexPairSet(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool VertexPairSet::contains(VertexId u, VertexId v) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), Pair{u, v});
}

}  // namespace cflr
