#pragma once

// Instance generators for the hardness constructions: each maps a source
// problem instance (graph, matrices, ...) to a labeled graph plus grammar and
// query whose CFL-reachability answer encodes the source answer.

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cflr/grammar.hpp"
#include "cflr/graph.hpp"
#include "cflr/source_graphs.hpp"

namespace cflr {

enum class InstanceMode { on_demand, all_pairs_filtered };

const char* mode_name(InstanceMode m);

struct Provenance {
    std::string generator;
    std::vector<std::pair<std::string, std::string>> params;
    std::string source_digest;
};

/// Hubs of one clique neighbor gadget: hubs[j-1] -> hubs[j] is spanned by one
/// line graph per common neighbor.
struct CngRecord {
    std::vector<std::size_t> clique;  // 1-based vertex ids
    std::vector<std::string> hubs;
    bool reversed = false;
};

struct ReductionInstance {
    LabeledGraph graph;
    /// Preset name of `grammar` (empty when the grammar was supplied directly).
    std::string grammar_preset;
    Grammar grammar = Grammar("S", {});
    std::optional<std::pair<std::string, std::string>> query;
    InstanceMode mode = InstanceMode::on_demand;
    /// all_pairs_filtered: the output is read on filter_sources x filter_targets.
    std::vector<std::string> filter_sources, filter_targets;

    std::optional<bool> truth;
    std::optional<BoolMatrix> truth_matrix;
    Provenance provenance;

    /// Clique gadgets: bit width and the constant c with |E| <= c n^(k+1) N.
    std::size_t bit_width = 0;
    std::size_t size_constant = 0;
    std::vector<CngRecord> gadgets;
};

// --- Dyck reductions --------------------------------------------------------

/// Chain u -> a1 -> ... -> an and crossing A -> B -> C -> A' ; query (u, a1').
ReductionInstance triangle_to_dyck1(const TripartiteGraph& g, bool verify = false);

/// Clique-list / clique-neighbor gadgets for 3k-clique; query (p, q) under
/// dyck:2. Throws PreconditionError unless 1 <= k and 3k <= n.
ReductionInstance kclique_to_dyck2(const SimpleGraph& g, std::size_t k, bool verify = false);

/// Vertex ids 1..n written with `width` bits, most significant first.
std::vector<int> vertex_bits(std::size_t id, std::size_t width);
std::size_t bit_width_for(std::size_t n);

/// Decodes every neighbor line graph between consecutive hubs and checks
/// that no decoded id belongs to the gadget's own clique.
bool check_neighbor_gadgets(const ReductionInstance& inst);

// --- matrix and output-size reductions ---------------------------------------

/// Layered graph V0..Vk carrying the witness word of `g` on every V0 -> Vk
/// path; (v0_i, vk_j) is an output pair iff (A B)[i][j].
ReductionInstance bmm_to_cfg(const BoolMatrix& a, const BoolMatrix& b, const Grammar& g,
                             const std::string& preset_name = "", bool verify = false);
BoolMatrix decode_bmm(const ReductionInstance& inst, const VertexPairSet& pairs);

/// k-layer family with a single hub; m = k n and n^2 output pairs.
ReductionInstance worst_case_family(const Grammar& g, std::size_t n, const std::string& preset_name = "");

/// Output pairs of `pairs` inside filter_sources x filter_targets.
std::size_t filtered_count(const ReductionInstance& inst, const VertexPairSet& pairs);

// --- variants ---------------------------------------------------------------

/// Targets: dyck:1, anbn, eqcount, palindrome. k odd, k >= 3.
ReductionInstance kcycle_on_demand(const KPartiteDigraph& g, const std::string& target, bool verify = false);

/// Targets: anbn_mid[:s], eqcount, palindrome.
ReductionInstance variant_reduction(const TripartiteGraph& g, const std::string& target, bool verify = false);

// --- closure transforms -----------------------------------------------------

struct QuotientExtension {
    LabeledGraph graph;
    /// sink[v] is t_v for every original vertex v (original ids are kept).
    std::vector<VertexId> sink;
};

QuotientExtension right_quotient_extend(const LabeledGraph& g, const std::string& alpha);
/// (u, v) for every (u, t_v) in `pairs` with u an original vertex.
VertexPairSet decode_right_quotient(const QuotientExtension& ext, std::size_t original_vertices,
                                    const VertexPairSet& pairs);
/// Grammar for {w : w alpha in L(g)}.
Grammar right_quotient_grammar(const Grammar& g, const std::string& alpha);

using Homomorphism = std::map<std::string, Word>;

struct HomTransform {
    LabeledGraph graph;
    /// image[v]: vertex of the transformed graph standing for original v.
    std::vector<VertexId> image;
};

/// Replaces every edge by a path spelling h(label); h(label) = eps merges the
/// endpoints. Exact for non-erasing h; with erasing images the merge can add
/// pairs (it never loses one). Throws PreconditionError when h misses a label
/// of the graph.
HomTransform inverse_hom_transform(const LabeledGraph& g, const Homomorphism& h);
/// Pairs of the transformed graph pulled back to original vertices.
VertexPairSet pull_back(const HomTransform& t, std::size_t original_vertices, const VertexPairSet& pairs);

// --- Andersen ---------------------------------------------------------------

/// Clique gadgets over alpha / gamma / beta edges; query T(p, q).
ReductionInstance apa_clique_gadget(const SimpleGraph& g, std::size_t k, bool verify = false);

/// The word read along p -> q through cliques t1, t2, t3 (1-based ids, t2
/// and t3 must be common neighbors as in the gadget). Barred tokens name
/// edges walked backwards.
Word apa_gadget_word(const std::vector<std::size_t>& t1, const std::vector<std::size_t>& t2,
                     const std::vector<std::size_t>& t3);

/// k-cliques of `g` as sorted 0-based index tuples, lexicographic.
std::vector<std::vector<std::size_t>> enumerate_cliques(const SimpleGraph& g, std::size_t k);

// --- bundles ----------------------------------------------------------------

/// Serialized graph, grammar and query hashed together.
std::string instance_digest(const ReductionInstance& inst);

/// graph.txt, grammar.txt, query.txt, meta.txt and (when known) truth.txt.
void write_bundle(const ReductionInstance& inst, const std::filesystem::path& dir);

}  // namespace cflr
