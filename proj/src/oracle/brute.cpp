#include <functional>

#include "cflr/error.hpp"
#include "cflr/oracle.hpp"

namespace cflr::oracle {

bool brute_triangle(const TripartiteGraph& g) {
    for (std::size_t i = 0; i < g.a.size(); ++i)
        for (std::size_t j = 0; j < g.b.size(); ++j) {
            if (!g.ab[i][j]) continue;
            for (std::size_t l = 0; l < g.c.size(); ++l)
                if (g.bc[j][l] && g.ca[l][i]) return true;
        }
    return false;
}

bool brute_kclique(const SimpleGraph& g, std::size_t c) {
    if (c > 6) throw GuardrailError("brute_kclique: clique size " + std::to_string(c) + " exceeds 6");
    if (g.size() > 20) throw GuardrailError("brute_kclique: " + std::to_string(g.size()) + " vertices exceeds 20");
    if (c == 0) return true;
    std::vector<std::size_t> chosen;
    std::function<bool(std::size_t)> extend = [&](std::size_t from) {
        if (chosen.size() == c) return true;
        for (std::size_t v = from; v < g.size(); ++v) {
            bool ok = true;
            for (auto u : chosen) ok = ok && g.adjacent(u, v);
            if (!ok) continue;
            chosen.push_back(v);
            if (extend(v + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return extend(0);
}

bool brute_kcycle(const KPartiteDigraph& g, std::size_t k) {
    const std::size_t n = g.vertex_count();
    if (n > 40) throw GuardrailError("brute_kcycle: " + std::to_string(n) + " vertices exceeds 40");
    if (k == 0) return false;

    // flatten to a plain digraph
    std::vector<std::size_t> offset;
    std::size_t total = 0;
    for (const auto& p : g.parts) {
        offset.push_back(total);
        total += p.size();
    }
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < g.k(); ++i) {
        std::size_t j = (i + 1) % g.k();
        for (std::size_t x = 0; x < g.parts[i].size(); ++x)
            for (std::size_t y = 0; y < g.parts[j].size(); ++y)
                if (g.arcs[i][x][y]) adj[offset[i] + x].push_back(offset[j] + y);
    }

    std::vector<char> used(n, 0);
    std::function<bool(std::size_t, std::size_t, std::size_t)> walk = [&](std::size_t start, std::size_t v,
                                                                         std::size_t depth) {
        for (auto w : adj[v]) {
            if (w == start && depth + 1 == k) return true;
            if (w <= start || used[w] || depth + 1 >= k) continue;
            used[w] = 1;
            if (walk(start, w, depth + 1)) return true;
            used[w] = 0;
        }
        return false;
    };
    for (std::size_t s = 0; s < n; ++s) {
        used.assign(n, 0);
        used[s] = 1;
        if (walk(s, s, 0)) return true;
    }
    return false;
}

BoolMatrix naive_bmm(const BoolMatrix& a, const BoolMatrix& b) {
    const std::size_t n = a.size();
    const std::size_t inner = n ? a[0].size() : 0;
    const std::size_t m = b.empty() ? 0 : b[0].size();
    if (n > 64 || inner > 64 || m > 64) throw GuardrailError("naive_bmm: dimension exceeds 64");
    if (b.size() != inner) throw PreconditionError("naive_bmm: inner dimensions differ");
    BoolMatrix c(n, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t l = 0; l < inner; ++l)
                if (a[i][l] && b[l][j]) {
                    c[i][j] = true;
                    break;
                }
    return c;
}

VertexPairSet naive_apa(const LabeledGraph& graph) {
    const std::size_t n = graph.vertex_count();
    std::vector<std::pair<VertexId, VertexId>> alpha, e, beta, gamma;
    for (const auto& ed : graph.edges()) {
        const auto& l = graph.label_name(ed.label);
        if (l == "alpha") alpha.emplace_back(ed.src, ed.dst);
        if (l == "e") e.emplace_back(ed.src, ed.dst);
        if (l == "beta") beta.emplace_back(ed.src, ed.dst);
        if (l == "gamma") gamma.emplace_back(ed.src, ed.dst);
    }
    std::vector<std::vector<char>> t(n, std::vector<char>(n, 0));
    bool changed = true;
    auto set = [&](std::size_t x, std::size_t y) {
        if (!t[x][y]) {
            t[x][y] = 1;
            changed = true;
        }
    };
    while (changed) {
        changed = false;
        // T(x,y) <- alpha(x,y)
        for (auto [x, y] : alpha) set(x, y);
        // T(x,y) <- T(x,z), e(z,y)
        for (auto [z, y] : e)
            for (std::size_t x = 0; x < n; ++x)
                if (t[x][z]) set(x, y);
        // T(w,y) <- T(w,z), T(z,x), beta(x,y)
        for (auto [x, y] : beta)
            for (std::size_t w = 0; w < n; ++w)
                for (std::size_t z = 0; z < n; ++z)
                    if (t[w][z] && t[z][x]) set(w, y);
        // T(w,z) <- T(w,x), gamma(x,y), T(z,y)
        for (auto [x, y] : gamma)
            for (std::size_t w = 0; w < n; ++w)
                for (std::size_t z = 0; z < n; ++z)
                    if (t[w][x] && t[z][y]) set(w, z);
    }
    std::vector<VertexPairSet::Pair> out;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (t[x][y]) out.emplace_back(static_cast<VertexId>(x), static_cast<VertexId>(y));
    return VertexPairSet(std::move(out));
}

}  // namespace cflr::oracle
