#pragma once

// Edge-labeled directed graphs with interned vertex names, the edge-list text
// format, pair sets, and the subroutines the solvers share (SCC condensation,
// reversal, label filtering).

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace cflr {

using VertexId = std::uint32_t;
using LabelId = std::uint32_t;

struct Edge {
    VertexId src;
    VertexId dst;
    LabelId label;

    bool operator==(const Edge&) const = default;
};

class LabeledGraph {
public:
    /// Interns `name`; returns the existing id if already present.
    VertexId add_vertex(std::string_view name);
    LabelId add_label(std::string_view name);

    /// Adds src -[label]-> dst, interning as needed. Returns false if the
    /// identical triple was already present.
    bool add_edge(std::string_view src, std::string_view dst, std::string_view label);
    bool add_edge(VertexId src, VertexId dst, LabelId label);

    /// vertices[0] -labels[0]-> vertices[1] -> ... ; throws PreconditionError
    /// unless labels.size() + 1 == vertices.size().
    void add_path(const std::vector<std::string>& vertices, const std::vector<std::string>& labels);

    std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<std::string>& vertex_names() const noexcept { return vertex_names_; }
    const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
    std::optional<VertexId> find_vertex(std::string_view name) const;
    /// Throws LookupError for unknown names.
    VertexId vertex_id(std::string_view name) const;
    bool has_vertex(std::string_view name) const { return find_vertex(name).has_value(); }

    /// Label table (interned names, including labels with no edge left).
    const std::vector<std::string>& label_names() const noexcept { return label_names_; }
    const std::string& label_name(LabelId l) const { return label_names_.at(l); }
    std::optional<LabelId> find_label(std::string_view name) const;

    /// Labels carried by at least one edge, sorted.
    std::set<std::string> alphabet() const;

    /// Per-vertex outgoing / incoming (neighbor, label) lists in edge order.
    std::vector<std::vector<std::pair<VertexId, LabelId>>> out_adjacency() const;
    std::vector<std::vector<std::pair<VertexId, LabelId>>> in_adjacency() const;

    /// Same vertex names and the same named edge set.
    friend bool operator==(const LabeledGraph& a, const LabeledGraph& b);

private:
    std::vector<std::string> vertex_names_;
    std::unordered_map<std::string, VertexId> vertex_ids_;
    std::vector<std::string> label_names_;
    std::unordered_map<std::string, LabelId> label_ids_;
    std::vector<Edge> edges_;
    std::unordered_set<std::uint64_t> edge_keys_;
};

LabeledGraph reverse(const LabeledGraph& g);
LabeledGraph filter_by_label(const LabeledGraph& g, const std::set<std::string>& labels);
/// Vertices of `b` are renamed with `b_prefix` (and `a`'s with `a_prefix`);
/// throws PreconditionError if the renamed vertex sets still overlap.
LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b, std::string_view a_prefix,
                            std::string_view b_prefix);
/// Name-based union: copies every vertex and edge of `src` into `dst`.
void merge_into(LabeledGraph& dst, const LabeledGraph& src);

// --- text format ------------------------------------------------------------

/// Edge-list format: `#` comment lines, `node <name>` declarations and
/// `src dst label` edge lines. The label aliases lp, rp, lb, rb stand for
/// ( ) [ ]. Throws ParseError.
LabeledGraph parse_graph(std::string_view text);
/// Writes edges in insertion order, with `node` lines only where needed to
/// reproduce the vertex numbering and isolated vertices.
std::string serialize_graph(const LabeledGraph& g);

/// Label spelling used in files (bracket characters become lp/rp/lb/rb).
std::string label_to_file(std::string_view label);
std::string label_from_file(std::string_view token);

// --- pair sets --------------------------------------------------------------

class VertexPairSet {
public:
    using Pair = std::pair<VertexId, VertexId>;

    VertexPairSet() = default;
    explicit VertexPairSet(std::vector<Pair> pairs);

    bool contains(VertexId u, VertexId v) const;
    std::size_t size() const noexcept { return pairs_.size(); }
    bool empty() const noexcept { return pairs_.empty(); }
    const std::vector<Pair>& pairs() const noexcept { return pairs_; }
    auto begin() const noexcept { return pairs_.begin(); }
    auto end() const noexcept { return pairs_.end(); }

    bool operator==(const VertexPairSet&) const = default;

private:
    std::vector<Pair> pairs_;
};

/// One `u v` line per pair, sorted by vertex id.
std::string serialize_pairs(const VertexPairSet& pairs, const LabeledGraph& g);
VertexPairSet parse_pairs(std::string_view text, const LabeledGraph& g);

// --- strongly connected components -----------------------------------------

struct Condensation {
    /// component[v] for every vertex; components are numbered in topological
    /// order of the condensation (sources first).
    std::vector<std::uint32_t> component;
    std::vector<std::vector<VertexId>> members;
    /// True for components of size > 1 or with a self-loop.
    std::vector<bool> cyclic;
    /// Successor components (deduplicated, sorted).
    std::vector<std::vector<std::uint32_t>> successors;

    std::size_t size() const noexcept { return members.size(); }
};

/// SCCs of the subgraph of edges labeled `restrict_label` (every vertex is
/// present; a label missing from the graph gives all singletons).
Condensation scc_condense(const LabeledGraph& g, std::string_view restrict_label);

}  // namespace cflr
