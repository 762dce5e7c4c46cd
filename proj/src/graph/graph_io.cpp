#include <algorithm>
#include <cctype>
#include <sstream>

#include "cflr/error.hpp"
#include "cflr/grammar.hpp"
#include "cflr/graph.hpp"

namespace cflr {

namespace {

struct Field {
    std::string text;
    std::size_t column;
};

std::vector<Field> split_fields(std::string_view line) {
    std::vector<Field> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (line[i] == '#') break;  // trailing comment
        out.push_back({std::string(line.substr(i, j - i)), i + 1});
        i = j;
    }
    return out;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t pos = 0, lineno = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++lineno;
        fn(line, lineno);
        pos = nl + 1;
    }
}

}  // namespace

std::string label_to_file(std::string_view label) {
    if (label == "(") return "lp";
    if (label == ")") return "rp";
    if (label == "[") return "lb";
    if (label == "]") return "rb";
    return std::string(label);
}

std::string label_from_file(std::string_view token) {
    if (token == "lp") return "(";
    if (token == "rp") return ")";
    if (token == "lb") return "[";
    if (token == "rb") return "]";
    return std::string(token);
}

LabeledGraph parse_graph(std::string_view text) {
    LabeledGraph g;
    for_each_line(text, [&](std::string_view line, std::size_t lineno) {
        auto f = split_fields(line);
        if (f.empty()) return;
        if (f[0].text == "node" && f.size() == 2) {
            g.add_vertex(f[1].text);
            return;
        }
        if (f.size() != 3)
            throw ParseError("malformed line: expected 'src dst label' or 'node <name>'", lineno, f[0].column);
        std::string label = label_from_file(f[2].text);
        if (!is_valid_terminal_name(label))
            throw ParseError("label '" + f[2].text + "' is not a valid terminal name", lineno, f[2].column);
        g.add_edge(f[0].text, f[1].text, label);
    });
    return g;
}

std::string serialize_graph(const LabeledGraph& g) {
    std::ostringstream out;
    std::size_t introduced = 0;
    auto emit_until = [&](std::size_t limit) {
        while (introduced < limit) out << "node " << g.vertex_name(static_cast<VertexId>(introduced++)) << '\n';
    };
    for (const auto& e : g.edges()) {
        bool src_new = e.src >= introduced, dst_new = e.dst >= introduced;
        if (src_new && dst_new && e.src != e.dst) {
            emit_until(e.dst == e.src + 1 ? e.src : std::max(e.src, e.dst));
        } else if (src_new) {
            emit_until(e.src);
        } else if (dst_new) {
            emit_until(e.dst);
        }
        if (src_new || dst_new) introduced = std::max<std::size_t>(introduced, std::max(e.src, e.dst) + 1);
        out << g.vertex_name(e.src) << ' ' << g.vertex_name(e.dst) << ' ' << label_to_file(g.label_name(e.label))
            << '\n';
    }
    while (introduced < g.vertex_count()) out << "node " << g.vertex_name(static_cast<VertexId>(introduced++)) << '\n';
    return out.str();
}

std::string serialize_pairs(const VertexPairSet& pairs, const LabeledGraph& g) {
    std::string out;
    for (const auto& [u, v] : pairs) {
        out += g.vertex_name(u);
        out += ' ';
        out += g.vertex_name(v);
        out += '\n';
    }
    return out;
}

VertexPairSet parse_pairs(std::string_view text, const LabeledGraph& g) {
    std::vector<VertexPairSet::Pair> pairs;
    for_each_line(text, [&](std::string_view line, std::size_t lineno) {
        auto f = split_fields(line);
        if (f.empty()) return;
        if (f.size() != 2) throw ParseError("malformed pair line: expected 'u v'", lineno, f[0].column);
        auto u = g.find_vertex(f[0].text);
        auto v = g.find_vertex(f[1].text);
        if (!u) throw ParseError("unknown vertex '" + f[0].text + "'", lineno, f[0].column);
        if (!v) throw ParseError("unknown vertex '" + f[1].text + "'", lineno, f[1].column);
        pairs.emplace_back(*u, *v);
    });
    return VertexPairSet(std::move(pairs));
}

}  // namespace cflr
