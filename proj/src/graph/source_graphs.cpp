#include "cflr/source_graphs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>
#include <tuple>

#include "cflr/error.hpp"

namespace cflr {

namespace {

std::vector<std::string> fields_of(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t pos = 0, lineno = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        ++lineno;
        auto f = fields_of(text.substr(pos, nl - pos));
        if (!f.empty()) fn(f, lineno);
        pos = nl + 1;
    }
}

}  // namespace

SimpleGraph::SimpleGraph(std::size_t n) {
    for (std::size_t i = 1; i <= n; ++i) add_vertex(std::to_string(i));
}

std::size_t SimpleGraph::add_vertex(std::string name) {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it != names_.end()) return static_cast<std::size_t>(it - names_.begin());
    names_.push_back(std::move(name));
    for (auto& row : adj_) row.push_back(false);
    adj_.emplace_back(names_.size(), false);
    return names_.size() - 1;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= size() || v >= size()) throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("self-loop in a simple graph");
    adj_[u][v] = adj_[v][u] = true;
}

void SimpleGraph::add_edge(std::string_view u, std::string_view v) {
    std::size_t a = add_vertex(std::string(u));
    std::size_t b = add_vertex(std::string(v));
    add_edge(a, b);
}

std::size_t SimpleGraph::index(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw LookupError("unknown vertex '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - names_.begin());
}

std::size_t SimpleGraph::edge_count() const { return edges().size(); }

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < size(); ++u) {
        for (std::size_t v = u + 1; v < size(); ++v) {
            if (adj_[u][v]) out.emplace_back(u, v);
        }
    }
    return out;
}

SimpleGraph parse_simple_graph(std::string_view text) {
    SimpleGraph g;
    for_each_line(text, [&](const std::vector<std::string>& f, std::size_t lineno) {
        if (f.size() == 2 && f[0] == "node") {
            g.add_vertex(f[1]);
        } else if (f.size() == 2) {
            if (f[0] == f[1]) throw ParseError("self-loop in a simple graph", lineno, 1);
            g.add_edge(f[0], f[1]);
        } else {
            throw ParseError("malformed line: expected 'u v' or 'node <name>'", lineno, 1);
        }
    });
    return g;
}

std::string serialize_simple_graph(const SimpleGraph& g) {
    std::ostringstream out;
    for (std::size_t v = 0; v < g.size(); ++v) out << "node " << g.name(v) << '\n';
    for (auto [u, v] : g.edges()) out << g.name(u) << ' ' << g.name(v) << '\n';
    return out.str();
}

TripartiteGraph::TripartiteGraph(std::size_t na, std::size_t nb, std::size_t nc) {
    for (std::size_t i = 1; i <= na; ++i) a.push_back("a" + std::to_string(i));
    for (std::size_t i = 1; i <= nb; ++i) b.push_back("b" + std::to_string(i));
    for (std::size_t i = 1; i <= nc; ++i) c.push_back("c" + std::to_string(i));
    ab.assign(na, std::vector<bool>(nb, false));
    bc.assign(nb, std::vector<bool>(nc, false));
    ca.assign(nc, std::vector<bool>(na, false));
}

TripartiteGraph parse_tripartite(std::string_view text) {
    std::vector<std::string> parts[3];
    std::map<std::string, std::pair<int, std::size_t>> where;
    std::vector<std::tuple<std::string, std::string, std::size_t>> edges;

    for_each_line(text, [&](const std::vector<std::string>& f, std::size_t lineno) {
        if (f[0] == "part") {
            if (f.size() < 2 || f[1].size() != 1 || f[1][0] < 'A' || f[1][0] > 'C')
                throw ParseError("expected 'part A|B|C <vertices...>'", lineno, 1);
            int p = f[1][0] - 'A';
            for (std::size_t i = 2; i < f.size(); ++i) {
                if (where.count(f[i])) throw ParseError("vertex '" + f[i] + "' listed in two parts", lineno, 1);
                where[f[i]] = {p, parts[p].size()};
                parts[p].push_back(f[i]);
            }
        } else if (f.size() == 2) {
            edges.emplace_back(f[0], f[1], lineno);
        } else {
            throw ParseError("malformed line: expected 'part ...' or 'x y'", lineno, 1);
        }
    });

    TripartiteGraph g;
    g.a = parts[0];
    g.b = parts[1];
    g.c = parts[2];
    g.ab.assign(g.a.size(), std::vector<bool>(g.b.size(), false));
    g.bc.assign(g.b.size(), std::vector<bool>(g.c.size(), false));
    g.ca.assign(g.c.size(), std::vector<bool>(g.a.size(), false));
    for (const auto& [x, y, lineno] : edges) {
        auto ix = where.find(x);
        auto iy = where.find(y);
        if (ix == where.end()) throw ParseError("not tripartite: vertex '" + x + "' has no part", lineno, 1);
        if (iy == where.end()) throw ParseError("not tripartite: vertex '" + y + "' has no part", lineno, 1);
        auto [px, ix_] = ix->second;
        auto [py, iy_] = iy->second;
        if (px == py) throw ParseError("not tripartite: edge " + x + " " + y + " inside one part", lineno, 1);
        // orient along A -> B -> C -> A
        if ((px + 1) % 3 != py) {
            std::swap(px, py);
            std::swap(ix_, iy_);
        }
        if (px == 0) g.ab[ix_][iy_] = true;
        if (px == 1) g.bc[ix_][iy_] = true;
        if (px == 2) g.ca[ix_][iy_] = true;
    }
    return g;
}

std::string serialize_tripartite(const TripartiteGraph& g) {
    std::ostringstream out;
    auto part = [&](char name, const std::vector<std::string>& vs) {
        out << "part " << name;
        for (const auto& v : vs) out << ' ' << v;
        out << '\n';
    };
    part('A', g.a);
    part('B', g.b);
    part('C', g.c);
    for (std::size_t i = 0; i < g.a.size(); ++i)
        for (std::size_t j = 0; j < g.b.size(); ++j)
            if (g.ab[i][j]) out << g.a[i] << ' ' << g.b[j] << '\n';
    for (std::size_t i = 0; i < g.b.size(); ++i)
        for (std::size_t j = 0; j < g.c.size(); ++j)
            if (g.bc[i][j]) out << g.b[i] << ' ' << g.c[j] << '\n';
    for (std::size_t i = 0; i < g.c.size(); ++i)
        for (std::size_t j = 0; j < g.a.size(); ++j)
            if (g.ca[i][j]) out << g.c[i] << ' ' << g.a[j] << '\n';
    return out.str();
}

KPartiteDigraph::KPartiteDigraph(std::size_t k, std::size_t part_size) {
    parts.resize(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 1; j <= part_size; ++j) parts[i].push_back("v" + std::to_string(i + 1) + "_" + std::to_string(j));
    arcs.resize(k);
    for (std::size_t i = 0; i < k; ++i)
        arcs[i].assign(part_size, std::vector<bool>(part_size, false));
}

std::size_t KPartiteDigraph::vertex_count() const {
    std::size_t n = 0;
    for (const auto& p : parts) n += p.size();
    return n;
}

KPartiteDigraph parse_kpartite(std::string_view text) {
    std::map<std::size_t, std::vector<std::string>> parts;
    std::vector<std::tuple<std::string, std::string, std::size_t>> edges;
    for_each_line(text, [&](const std::vector<std::string>& f, std::size_t lineno) {
        if (f[0] == "part") {
            std::size_t idx = 0;
            if (f.size() < 2) throw ParseError("expected 'part <i> <vertices...>'", lineno, 1);
            auto [ptr, ec] = std::from_chars(f[1].data(), f[1].data() + f[1].size(), idx);
            if (ec != std::errc() || ptr != f[1].data() + f[1].size() || idx == 0)
                throw ParseError("part index must be a positive integer", lineno, 1);
            auto& p = parts[idx];
            p.insert(p.end(), f.begin() + 2, f.end());
        } else if (f.size() == 2) {
            edges.emplace_back(f[0], f[1], lineno);
        } else {
            throw ParseError("malformed line: expected 'part ...' or 'x y'", lineno, 1);
        }
    });

    KPartiteDigraph g;
    std::map<std::string, std::pair<std::size_t, std::size_t>> where;
    std::size_t expect = 1;
    for (auto& [idx, names] : parts) {
        if (idx != expect++) throw ParseError("parts must be numbered 1..k without gaps", 0, 0);
        for (const auto& v : names) {
            if (where.count(v)) throw ParseError("vertex '" + v + "' listed in two parts", 0, 0);
            where[v] = {g.parts.size(), where.size()};
        }
        g.parts.push_back(names);
    }
    for (auto& [v, loc] : where) {
        const auto& names = g.parts[loc.first];
        loc.second = static_cast<std::size_t>(std::find(names.begin(), names.end(), v) - names.begin());
    }
    const std::size_t k = g.parts.size();
    g.arcs.resize(k);
    for (std::size_t i = 0; i < k; ++i)
        g.arcs[i].assign(g.parts[i].size(), std::vector<bool>(g.parts[(i + 1) % k].size(), false));
    for (const auto& [x, y, lineno] : edges) {
        auto ix = where.find(x);
        auto iy = where.find(y);
        if (ix == where.end() || iy == where.end())
            throw ParseError("edge endpoint without a part", lineno, 1);
        if ((ix->second.first + 1) % k != iy->second.first)
            throw ParseError("edge " + x + " -> " + y + " does not go to the next part", lineno, 1);
        g.arcs[ix->second.first][ix->second.second][iy->second.second] = true;
    }
    return g;
}

std::string serialize_kpartite(const KPartiteDigraph& g) {
    std::ostringstream out;
    for (std::size_t i = 0; i < g.k(); ++i) {
        out << "part " << i + 1;
        for (const auto& v : g.parts[i]) out << ' ' << v;
        out << '\n';
    }
    for (std::size_t i = 0; i < g.k(); ++i) {
        const auto& next = g.parts[(i + 1) % g.k()];
        for (std::size_t x = 0; x < g.parts[i].size(); ++x)
            for (std::size_t y = 0; y < next.size(); ++y)
                if (g.arcs[i][x][y]) out << g.parts[i][x] << ' ' << next[y] << '\n';
    }
    return out.str();
}

SimpleGraph random_simple_graph(std::size_t n, double p, Rng& rng) {
    SimpleGraph g(n);
    std::bernoulli_distribution coin(p);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

TripartiteGraph random_tripartite(std::size_t na, std::size_t nb, std::size_t nc, double p, Rng& rng) {
    TripartiteGraph g(na, nb, nc);
    std::bernoulli_distribution coin(p);
    for (auto* m : {&g.ab, &g.bc, &g.ca})
        for (auto& row : *m)
            for (std::size_t j = 0; j < row.size(); ++j) row[j] = coin(rng);
    return g;
}

KPartiteDigraph random_kpartite(std::size_t k, std::size_t part_size, double p, Rng& rng) {
    KPartiteDigraph g(k, part_size);
    std::bernoulli_distribution coin(p);
    for (auto& layer : g.arcs)
        for (auto& row : layer)
            for (std::size_t j = 0; j < row.size(); ++j) row[j] = coin(rng);
    return g;
}

BoolMatrix random_matrix(std::size_t rows, std::size_t cols, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    BoolMatrix m(rows, std::vector<bool>(cols, false));
    for (auto& row : m)
        for (std::size_t j = 0; j < cols; ++j) row[j] = coin(rng);
    return m;
}

BoolMatrix parse_matrix(std::string_view text) {
    BoolMatrix m;
    for_each_line(text, [&](const std::vector<std::string>& f, std::size_t lineno) {
        std::vector<bool> row;
        for (const auto& tok : f) {
            if (tok != "0" && tok != "1") throw ParseError("matrix entries must be 0 or 1", lineno, 1);
            row.push_back(tok == "1");
        }
        if (!m.empty() && row.size() != m.front().size()) throw ParseError("ragged matrix row", lineno, 1);
        m.push_back(std::move(row));
    });
    return m;
}

std::string serialize_matrix(const BoolMatrix& m) {
    std::string out;
    for (const auto& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ' ';
            out += row[j] ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

std::uint64_t fnv1a(std::string_view data, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex_digest(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace cflr
