#pragma once

// Context-free grammars: representation, the text DSL, the preset catalogue,
// normalization (proper form, Chomsky normal form) and classification.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cflr {

enum class SymbolKind : std::uint8_t { terminal, nonterminal };

struct Symbol {
    SymbolKind kind = SymbolKind::terminal;
    std::string name;

    static Symbol terminal(std::string name) { return {SymbolKind::terminal, std::move(name)}; }
    static Symbol nonterminal(std::string name) { return {SymbolKind::nonterminal, std::move(name)}; }

    bool is_terminal() const noexcept { return kind == SymbolKind::terminal; }
    bool is_nonterminal() const noexcept { return kind == SymbolKind::nonterminal; }

    auto operator<=>(const Symbol&) const = default;
};

/// head -> body; an empty body is the epsilon production.
struct Production {
    std::string head;
    std::vector<Symbol> body;

    bool is_epsilon() const noexcept { return body.empty(); }
    std::size_t nonterminal_count() const noexcept;

    auto operator<=>(const Production&) const = default;
};

/// A terminal string; each element is a terminal name.
using Word = std::vector<std::string>;

std::string word_to_string(const Word& word, std::string_view separator = " ");

/// Immutable context-free grammar (V, Sigma, R, S).
///
/// Nonterminals are the start symbol plus every production head and every
/// nonterminal occurring in a body; terminals are those occurring in bodies.
/// Duplicate productions are dropped (first occurrence wins the position).
/// Equality is structural: same start symbol and the same production set.
class Grammar {
public:
    Grammar(std::string start, std::vector<Production> productions);

    const std::string& start() const noexcept { return start_; }
    const std::vector<Production>& productions() const noexcept { return productions_; }

    /// Start symbol first, the rest in order of first appearance.
    const std::vector<std::string>& nonterminals() const noexcept { return nonterminals_; }
    /// Order of first appearance.
    const std::vector<std::string>& terminals() const noexcept { return terminals_; }

    bool has_nonterminal(std::string_view name) const;
    bool has_terminal(std::string_view name) const;

    /// True when the grammar has no productions at all (the degenerate
    /// representation of the empty language).
    bool is_degenerate() const noexcept { return productions_.empty(); }

    friend bool operator==(const Grammar& a, const Grammar& b);

private:
    std::string start_;
    std::vector<Production> productions_;
    std::vector<std::string> nonterminals_;
    std::vector<std::string> terminals_;
};

/// True when `name` can be written as a bare nonterminal in the DSL.
bool is_valid_nonterminal_name(std::string_view name);
/// True when `name` can be written as a quoted terminal in the DSL.
bool is_valid_terminal_name(std::string_view name);

// --- DSL --------------------------------------------------------------------

/// Parse the rule DSL: `Head -> alt1 | alt2`, terminals in single quotes,
/// `eps` for the empty body, `#` opening a comment at the start of a token.
/// A head may be repeated on later lines. Throws ParseError.
Grammar parse_grammar(std::string_view text);

/// Inverse of parse_grammar. A degenerate grammar has no rule to print and is
/// rendered as a single comment line naming the start symbol.
std::string serialize_grammar(const Grammar& g);

// --- presets ----------------------------------------------------------------

/// Preset catalogue: dyck:<k>, dyck_nested:<k>, geq, anbn, anbn_mid:<s>,
/// eqcount, palindrome[:<alphabet>], apa. Throws LookupError / PreconditionError.
Grammar preset(std::string_view name);

/// Preset names accepted by preset(), without parameters.
const std::vector<std::string>& preset_names();

/// Open/close terminal names of bracket type `index` (1-based) in dyck presets.
std::pair<std::string, std::string> dyck_bracket(int index);

/// Resolve `spec` either as a preset name or, failing that, as DSL text.
Grammar grammar_from_preset_or_text(std::string_view spec);

/// Split a preset parameter into terminal names: comma-separated when it
/// contains a comma, otherwise one terminal per character.
Word split_terminal_list(std::string_view text);

// --- normal forms -----------------------------------------------------------

/// Weakly equivalent proper grammar: no epsilon rules except on the start
/// symbol, no unit cycles, every nonterminal productive and reachable.
/// The empty language comes back as a degenerate grammar.
Grammar to_proper(const Grammar& g);

/// Integer handles into a CnfGrammar's symbol tables.
using NonterminalId = std::uint32_t;
using TerminalId = std::uint32_t;

struct BinaryRule {
    NonterminalId head;
    NonterminalId left;
    NonterminalId right;
};

struct TerminalRule {
    NonterminalId head;
    TerminalId terminal;
};

/// Chomsky normal form with the start symbol absent from every body.
/// Productions are S -> eps (iff accepts_empty), A -> B C and A -> a.
class CnfGrammar {
public:
    /// Validates that `g` already satisfies the CNF invariants; throws
    /// PreconditionError otherwise. Usually obtained through to_cnf().
    explicit CnfGrammar(Grammar g);

    const Grammar& grammar() const noexcept { return grammar_; }
    bool accepts_empty() const noexcept { return accepts_empty_; }
    bool empty_language() const noexcept { return grammar_.is_degenerate(); }

    NonterminalId start() const noexcept { return 0; }
    const std::vector<std::string>& nonterminals() const noexcept { return grammar_.nonterminals(); }
    const std::vector<std::string>& terminals() const noexcept { return grammar_.terminals(); }
    std::size_t nonterminal_count() const noexcept { return grammar_.nonterminals().size(); }

    const std::vector<BinaryRule>& binary_rules() const noexcept { return binary_; }
    const std::vector<TerminalRule>& terminal_rules() const noexcept { return unary_; }

    std::optional<NonterminalId> nonterminal_id(std::string_view name) const;
    std::optional<TerminalId> terminal_id(std::string_view name) const;

private:
    Grammar grammar_;
    bool accepts_empty_ = false;
    std::vector<BinaryRule> binary_;
    std::vector<TerminalRule> unary_;
    std::unordered_map<std::string, NonterminalId> nonterminal_ids_;
    std::unordered_map<std::string, TerminalId> terminal_ids_;
};

CnfGrammar to_cnf(const Grammar& g);

/// Minimum-length terminal string derivable from `from`, ties broken
/// lexicographically on terminal names. With `nonempty` the epsilon rule is
/// ignored. Empty optional iff no such string exists.
std::optional<Word> shortest_word(const CnfGrammar& g, NonterminalId from, bool nonempty = false);

/// Nonterminals renamed N0, N1, ... in breadth-first order from the start
/// symbol so that grammars differing only in naming compare equal.
Grammar canonical_form(const Grammar& g);

// --- classification ---------------------------------------------------------

struct ClassificationReport {
    bool join_inducing = false;
    std::optional<Word> witness;
    bool linear = false;
    bool right_regular = false;
    bool left_regular = false;
    bool accepts_empty = false;
    bool empty_language = false;
};

ClassificationReport classify(const Grammar& g);

bool is_linear(const Grammar& g);
bool is_right_regular(const Grammar& g);
bool is_left_regular(const Grammar& g);

}  // namespace cflr
