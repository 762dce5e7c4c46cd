#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "cflr/error.hpp"
#include "cflr/grammar.hpp"

namespace cflr {

namespace {

enum class Tok { ident, terminal, arrow, bar };

struct Token {
    Tok kind;
    std::string text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view line, std::size_t lineno) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        unsigned char c = static_cast<unsigned char>(line[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        std::size_t col = i + 1;
        if (c == '#') break;
        if (c == '|') {
            out.push_back({Tok::bar, "|", col});
            ++i;
        } else if (line.compare(i, 2, "->") == 0) {
            out.push_back({Tok::arrow, "->", col});
            i += 2;
        } else if (c == '\'') {
            auto close = line.find('\'', i + 1);
            if (close == std::string_view::npos) throw ParseError("unterminated terminal literal", lineno, col);
            std::string name(line.substr(i + 1, close - i - 1));
            if (!is_valid_terminal_name(name)) throw ParseError("invalid terminal name '" + name + "'", lineno, col);
            out.push_back({Tok::terminal, std::move(name), col});
            i = close + 1;
        } else {
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '\'' &&
                   line[j] != '|' && line.compare(j, 2, "->") != 0)
                ++j;
            out.push_back({Tok::ident, std::string(line.substr(i, j - i)), col});
            i = j;
        }
    }
    return out;
}

struct PendingUse {
    std::string name;
    std::size_t line, column;
};

}  // namespace

Grammar parse_grammar(std::string_view text) {
    std::vector<Production> productions;
    std::optional<std::string> start;
    std::optional<std::string> current_head;
    std::unordered_set<std::string> heads;
    std::vector<PendingUse> uses;

    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = nl + 1;
        ++lineno;

        auto toks = tokenize(line, lineno);
        if (toks.empty()) continue;

        std::size_t k = 0;
        std::string head;
        if (toks[0].kind == Tok::bar) {
            // continuation of the previous rule
            if (!current_head) throw ParseError("'|' with no preceding rule", lineno, toks[0].column);
            head = *current_head;
            k = 1;
        } else {
            if (toks[0].kind != Tok::ident) throw ParseError("expected a nonterminal at rule start", lineno, toks[0].column);
            if (!is_valid_nonterminal_name(toks[0].text))
                throw ParseError("invalid nonterminal name '" + toks[0].text + "'", lineno, toks[0].column);
            if (toks.size() < 2 || toks[1].kind != Tok::arrow)
                throw ParseError("expected '->' after '" + toks[0].text + "'",
                                 lineno, toks.size() < 2 ? toks[0].column + toks[0].text.size() : toks[1].column);
            head = toks[0].text;
            k = 2;
        }
        if (!start) start = head;
        heads.insert(head);
        current_head = head;

        std::vector<Symbol> body;
        bool saw_eps = false;
        std::size_t alt_col = k < toks.size() ? toks[k].column : line.size() + 1;
        auto finish = [&](std::size_t col) {
            if (body.empty() && !saw_eps) throw ParseError("empty alternative (write eps for the empty string)", lineno, col);
            productions.push_back({head, body});
            body.clear();
            saw_eps = false;
        };
        for (; k < toks.size(); ++k) {
            const auto& t = toks[k];
            switch (t.kind) {
                case Tok::bar:
                    finish(t.column);
                    alt_col = t.column + 1;
                    break;
                case Tok::arrow:
                    throw ParseError("unexpected '->'", lineno, t.column);
                case Tok::terminal:
                    if (saw_eps) throw ParseError("eps must stand alone in an alternative", lineno, t.column);
                    body.push_back(Symbol::terminal(t.text));
                    break;
                case Tok::ident:
                    if (t.text == "eps") {
                        if (saw_eps || !body.empty())
                            throw ParseError("eps must stand alone in an alternative", lineno, t.column);
                        saw_eps = true;
                        break;
                    }
                    if (saw_eps) throw ParseError("eps must stand alone in an alternative", lineno, t.column);
                    if (!is_valid_nonterminal_name(t.text))
                        throw ParseError("invalid nonterminal name '" + t.text + "'", lineno, t.column);
                    body.push_back(Symbol::nonterminal(t.text));
                    uses.push_back({t.text, lineno, t.column});
                    break;
            }
        }
        finish(alt_col);
    }

    if (!start) throw ParseError("empty grammar: no rules", 0, 0);
    for (const auto& u : uses) {
        if (!heads.count(u.name)) throw ParseError("undeclared nonterminal '" + u.name + "'", u.line, u.column);
    }
    try {
        return Grammar(*start, std::move(productions));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), 0, 0);
    }
}

std::string serialize_grammar(const Grammar& g) {
    if (g.is_degenerate()) return "# empty language (start symbol " + g.start() + ")\n";
    std::map<std::string, std::vector<const Production*>> by_head;
    for (const auto& p : g.productions()) by_head[p.head].push_back(&p);

    std::ostringstream out;
    for (const auto& nt : g.nonterminals()) {
        auto it = by_head.find(nt);
        if (it == by_head.end()) continue;
        out << nt << " ->";
        bool first = true;
        for (const auto* p : it->second) {
            if (!first) out << " |";
            first = false;
            if (p->body.empty()) out << " eps";
            for (const auto& s : p->body) {
                if (s.is_terminal())
                    out << " '" << s.name << "'";
                else
                    out << ' ' << s.name;
            }
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace cflr
