#pragma once

// Unlabeled source instances for the reductions: simple undirected graphs,
// tripartite graphs and k-partite digraphs, with text formats and seeded
// random generators.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace cflr {

/// Simple undirected graph (no self-loops) over named vertices.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t n);  // vertices named 1..n

    std::size_t add_vertex(std::string name);
    void add_edge(std::size_t u, std::size_t v);
    void add_edge(std::string_view u, std::string_view v);

    std::size_t size() const noexcept { return names_.size(); }
    bool adjacent(std::size_t u, std::size_t v) const { return adj_[u][v]; }
    const std::string& name(std::size_t v) const { return names_.at(v); }
    std::size_t index(std::string_view name) const;
    std::size_t edge_count() const;
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<bool>> adj_;
};

/// Text: `node <name>` lines and `u v` edge lines; `#` comments.
SimpleGraph parse_simple_graph(std::string_view text);
std::string serialize_simple_graph(const SimpleGraph& g);

/// Three named vertex parts with edges only between different parts.
struct TripartiteGraph {
    std::vector<std::string> a, b, c;
    /// Adjacency between parts, indexed by position within each part.
    std::vector<std::vector<bool>> ab, bc, ca;

    TripartiteGraph() = default;
    TripartiteGraph(std::size_t na, std::size_t nb, std::size_t nc);  // a1.., b1.., c1..

    std::size_t vertex_count() const noexcept { return a.size() + b.size() + c.size(); }
};

/// Text: `part A|B|C <names...>` lines, then `x y` edge lines between parts.
/// Throws ParseError("... not tripartite") for intra-part edges or vertices
/// without a part.
TripartiteGraph parse_tripartite(std::string_view text);
std::string serialize_tripartite(const TripartiteGraph& g);

/// Directed graph on parts V1..Vk where every edge goes from V_i to V_{i+1}
/// (indices mod k).
struct KPartiteDigraph {
    std::vector<std::vector<std::string>> parts;
    /// arcs[i][x][y]: edge from parts[i][x] to parts[(i+1)%k][y].
    std::vector<std::vector<std::vector<bool>>> arcs;

    KPartiteDigraph() = default;
    KPartiteDigraph(std::size_t k, std::size_t part_size);  // names v<i>_<j>

    std::size_t k() const noexcept { return parts.size(); }
    std::size_t vertex_count() const;
};

/// Text: `part <i> <names...>` lines (i = 1..k), then directed `x y` edges.
KPartiteDigraph parse_kpartite(std::string_view text);
std::string serialize_kpartite(const KPartiteDigraph& g);

/// Row-major boolean matrix; text form is one row per line of 0/1 tokens.
using BoolMatrix = std::vector<std::vector<bool>>;

BoolMatrix parse_matrix(std::string_view text);
std::string serialize_matrix(const BoolMatrix& m);

using Rng = std::mt19937_64;

SimpleGraph random_simple_graph(std::size_t n, double p, Rng& rng);
TripartiteGraph random_tripartite(std::size_t na, std::size_t nb, std::size_t nc, double p, Rng& rng);
KPartiteDigraph random_kpartite(std::size_t k, std::size_t part_size, double p, Rng& rng);
BoolMatrix random_matrix(std::size_t rows, std::size_t cols, double p, Rng& rng);

/// 64-bit FNV-1a, used for instance digests.
std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string hex_digest(std::uint64_t h);

}  // namespace cflr
