#include <charconv>
#include <set>

#include "cflr/error.hpp"
#include "cflr/grammar.hpp"

namespace cflr {

namespace {

Symbol T(std::string name) { return Symbol::terminal(std::move(name)); }
Symbol N(std::string name) { return Symbol::nonterminal(std::move(name)); }

int parse_k(std::string_view name, std::string_view param) {
    int k = 0;
    auto [ptr, ec] = std::from_chars(param.data(), param.data() + param.size(), k);
    if (param.empty() || ec != std::errc() || ptr != param.data() + param.size() || k < 1)
        throw PreconditionError("preset '" + std::string(name) + "' needs an integer parameter k >= 1");
    return k;
}

Grammar dyck(int k, bool with_concat) {
    std::vector<Production> ps;
    ps.push_back({"S", {}});
    if (with_concat) ps.push_back({"S", {N("S"), N("S")}});
    for (int i = 1; i <= k; ++i) {
        auto [open, close] = dyck_bracket(i);
        ps.push_back({"S", {T(open), N("S"), T(close)}});
    }
    return Grammar("S", std::move(ps));
}

Grammar geq() {
    return Grammar("S", {
                            {"S", {N("T1"), N("T2")}},
                            {"T1", {}},
                            {"T1", {T("a"), N("T1")}},
                            {"T2", {}},
                            {"T2", {T("a"), N("T2"), T("b")}},
                        });
}

Grammar anbn() { return Grammar("S", {{"S", {}}, {"S", {T("a"), N("S"), T("b")}}}); }

Grammar anbn_mid(std::string_view param) {
    std::vector<Production> ps;
    ps.push_back({"S", {T("a"), N("S"), T("b")}});
    Production mid{"S", {}};
    for (auto& t : split_terminal_list(param)) mid.body.push_back(T(t));
    ps.push_back(std::move(mid));
    return Grammar("S", std::move(ps));
}

Grammar eqcount() {
    auto w = [](std::string_view s) {
        std::vector<Symbol> body;
        for (char c : s) body.push_back(c == 'S' ? N("S") : T(std::string(1, c)));
        return body;
    };
    std::vector<Production> ps;
    for (auto alt : {"aSbS", "bSaS", "ab", "ba", "aabb", "abab", "abba", "baab", "baba", "bbaa", "aSb", "bSa", "SS"})
        ps.push_back({"S", w(alt)});
    return Grammar("S", std::move(ps));
}

Grammar palindrome(std::string_view param) {
    auto letters = split_terminal_list(param.empty() ? "ab" : param);
    std::set<std::string> distinct(letters.begin(), letters.end());
    if (letters.size() < 2 || distinct.size() != letters.size())
        throw PreconditionError("palindrome alphabet needs at least two distinct symbols");
    std::vector<Production> ps;
    for (const auto& x : letters) ps.push_back({"S", {T(x)}});
    for (const auto& x : letters) ps.push_back({"S", {T(x), N("S"), T(x)}});
    return Grammar("S", std::move(ps));
}

Grammar apa() {
    return Grammar("T", {
                            {"T", {T("alpha")}},
                            {"T", {N("T"), T("e")}},
                            {"T", {N("T"), N("T"), T("beta")}},
                            {"T", {N("T"), T("gamma"), N("Tbar")}},
                            {"Tbar", {T("alpha_bar")}},
                            {"Tbar", {T("e_bar"), N("Tbar")}},
                            {"Tbar", {T("beta_bar"), N("Tbar"), N("Tbar")}},
                            {"Tbar", {N("T"), T("gamma_bar"), N("Tbar")}},
                        });
}

}  // namespace

std::pair<std::string, std::string> dyck_bracket(int index) {
    static const char* opens[] = {"(", "[", "{", "<"};
    static const char* closes[] = {")", "]", "}", ">"};
    if (index < 1) throw PreconditionError("bracket index must be >= 1");
    if (index <= 4) return {opens[index - 1], closes[index - 1]};
    return {"o" + std::to_string(index), "c" + std::to_string(index)};
}

Word split_terminal_list(std::string_view text) {
    Word out;
    if (text.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (true) {
            auto comma = text.find(',', pos);
            auto piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            if (!is_valid_terminal_name(piece))
                throw PreconditionError("invalid terminal '" + std::string(piece) + "' in list");
            out.emplace_back(piece);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return out;
    }
    for (char c : text) {
        std::string s(1, c);
        if (!is_valid_terminal_name(s)) throw PreconditionError("invalid terminal '" + s + "' in list");
        out.push_back(std::move(s));
    }
    return out;
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"dyck",    "dyck_nested", "geq",        "anbn",
                                                   "anbn_mid", "eqcount",    "palindrome", "apa"};
    return names;
}

Grammar preset(std::string_view name) {
    auto colon = name.find(':');
    std::string_view base = name.substr(0, colon);
    std::string_view param = colon == std::string_view::npos ? std::string_view{} : name.substr(colon + 1);
    bool has_param = colon != std::string_view::npos;

    auto no_param = [&] {
        if (has_param) throw PreconditionError("preset '" + std::string(base) + "' takes no parameter");
    };

    if (base == "dyck") return dyck(has_param ? parse_k(base, param) : 1, true);
    if (base == "dyck_nested") return dyck(has_param ? parse_k(base, param) : 1, false);
    if (base == "geq") return no_param(), geq();
    if (base == "anbn") return no_param(), anbn();
    if (base == "anbn_mid") return anbn_mid(has_param ? param : "c");
    if (base == "eqcount") return no_param(), eqcount();
    if (base == "palindrome") return palindrome(param);
    if (base == "apa") return no_param(), apa();
    throw LookupError("unknown grammar preset '" + std::string(name) + "'");
}

Grammar grammar_from_preset_or_text(std::string_view spec) {
    auto colon = spec.find(':');
    std::string base(spec.substr(0, colon));
    for (const auto& n : preset_names()) {
        if (n == base) return preset(spec);
    }
    return parse_grammar(spec);
}

}  // namespace cflr
