#include "cflr/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "cflr/error.hpp"

namespace cflr {

std::size_t Production::nonterminal_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(body.begin(), body.end(), [](const Symbol& s) { return s.is_nonterminal(); }));
}

std::string word_to_string(const Word& word, std::string_view separator) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += separator;
        out += word[i];
    }
    return out;
}

Grammar::Grammar(std::string start, std::vector<Production> productions) : start_(std::move(start)) {
    if (start_.empty()) throw PreconditionError("grammar start symbol must be non-empty");

    std::unordered_set<std::string> seen_nt, seen_t;
    auto add_nt = [&](const std::string& name) {
        if (name.empty()) throw PreconditionError("empty nonterminal name");
        if (seen_nt.insert(name).second) nonterminals_.push_back(name);
    };
    auto add_t = [&](const std::string& name) {
        if (name.empty()) throw PreconditionError("empty terminal name");
        if (seen_t.insert(name).second) terminals_.push_back(name);
    };

    add_nt(start_);
    for (const auto& p : productions) add_nt(p.head);

    std::vector<Production> kept;
    kept.reserve(productions.size());
    for (auto& p : productions) {
        if (std::find(kept.begin(), kept.end(), p) != kept.end()) continue;
        for (const auto& s : p.body) {
            if (s.is_nonterminal())
                add_nt(s.name);
            else
                add_t(s.name);
        }
        kept.push_back(std::move(p));
    }
    productions_ = std::move(kept);

    for (const auto& t : terminals_) {
        if (seen_nt.count(t))
            throw PreconditionError("symbol '" + t + "' used both as terminal and nonterminal");
    }
}

bool Grammar::has_nonterminal(std::string_view name) const {
    return std::find(nonterminals_.begin(), nonterminals_.end(), name) != nonterminals_.end();
}

bool Grammar::has_terminal(std::string_view name) const {
    return std::find(terminals_.begin(), terminals_.end(), name) != terminals_.end();
}

bool operator==(const Grammar& a, const Grammar& b) {
    if (a.start_ != b.start_ || a.productions_.size() != b.productions_.size()) return false;
    auto pa = a.productions_;
    auto pb = b.productions_;
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    return pa == pb;
}

namespace {

bool has_space(std::string_view s) {
    return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

bool is_valid_nonterminal_name(std::string_view name) {
    if (name.empty() || has_space(name)) return false;
    if (name.find('\'') != std::string_view::npos || name.find('|') != std::string_view::npos) return false;
    if (name.find("->") != std::string_view::npos) return false;
    if (name.front() == '#') return false;
    return name != "eps";
}

bool is_valid_terminal_name(std::string_view name) {
    return !name.empty() && !has_space(name) && name.find('\'') == std::string_view::npos;
}

}  // namespace cflr
