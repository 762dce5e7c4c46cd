#include "doctest.h"

#include "cflr/error.hpp"
#include "cflr/grammar.hpp"
#include "cflr/oracle.hpp"
#include "support.hpp"

using namespace cflr;

namespace {

Word w(std::string_view chars) { return split_terminal_list(chars); }

bool member(const Grammar& g, std::string_view chars) { return oracle::cyk(to_cnf(g), w(chars)); }

}  // namespace

TEST_CASE("dsl parses alternatives, eps and continuation lines") {
    auto g = parse_grammar("S -> 'a' S 'b'\n  | eps  # comment\nT -> 'c'\n");
    CHECK(g.start() == "S");
    CHECK(g.productions().size() == 3);
    CHECK(g.has_terminal("a"));
    CHECK(g.has_nonterminal("T"));
    CHECK(parse_grammar(serialize_grammar(g)) == g);
}

TEST_CASE("dsl reports position of errors") {
    CHECK_THROWS_AS(parse_grammar("S -> 'a"), ParseError);
    CHECK_THROWS_AS(parse_grammar("-> 'a'"), ParseError);
    try {
        parse_grammar("S -> 'a'\nT -> ??\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("presets resolve and reject unknown names") {
    for (const char* name : {"dyck:1", "dyck:2", "dyck_nested:2", "geq", "anbn", "anbn_mid:c", "eqcount", "palindrome",
                             "palindrome:abc", "apa"})
        CHECK_NOTHROW(preset(name));
    CHECK_THROWS_AS(preset("nope"), LookupError);
    CHECK(preset("dyck:2").terminals().size() == 4);
}

TEST_CASE("preset languages") {
    CHECK(member(preset("dyck:1"), "(()())"));
    CHECK_FALSE(member(preset("dyck:1"), "(()"));
    CHECK(member(preset("dyck:2"), "([])[]"));
    CHECK_FALSE(member(preset("dyck:2"), "([)]"));
    CHECK(member(preset("anbn"), "aaabbb"));
    CHECK_FALSE(member(preset("anbn"), "aabbb"));
    CHECK(member(preset("geq"), "aaab"));
    CHECK(member(preset("geq"), "ab"));
    CHECK_FALSE(member(preset("geq"), "abb"));
    CHECK(member(preset("eqcount"), "aaabbb"));
    CHECK(member(preset("eqcount"), "babbaa"));
    CHECK_FALSE(member(preset("eqcount"), "aab"));
    CHECK(member(preset("palindrome"), "abbba"));
    CHECK_FALSE(member(preset("palindrome"), "abba"));
    CHECK(member(preset("palindrome"), "aba"));
    CHECK_FALSE(member(preset("palindrome"), "abb"));
    CHECK(member(preset("anbn_mid:c"), "aacbb"));
    CHECK_FALSE(member(preset("anbn_mid:c"), "aabb"));
}

TEST_CASE("cnf conversion keeps the language on random words") {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = testing::random_cnf_grammar(rng, 4, 2);
        auto cnf = to_cnf(g);
        auto proper = to_proper(g);
        for (std::size_t len = 0; len <= 5; ++len) {
            for (std::size_t bits = 0; bits < (1u << len); ++bits) {
                Word word;
                for (std::size_t i = 0; i < len; ++i) word.push_back((bits >> i) & 1 ? "b" : "a");
                bool expect = oracle::exhaustive_member(g, word);
                CHECK(oracle::cyk(cnf, word) == expect);
                CHECK(oracle::exhaustive_member(proper, word) == expect);
            }
        }
    }
}

TEST_CASE("cnf shape invariants") {
    auto cnf = to_cnf(preset("dyck:2"));
    CHECK(cnf.accepts_empty());
    for (const auto& r : cnf.binary_rules()) {
        CHECK(r.left != cnf.start());
        CHECK(r.right != cnf.start());
    }
    CHECK_THROWS_AS(CnfGrammar(preset("anbn")), PreconditionError);
}

TEST_CASE("shortest word breaks ties lexicographically") {
    auto cnf = to_cnf(parse_grammar("S -> 'b' 'a' | 'a' 'b' | 'c'"));
    CHECK(shortest_word(cnf, cnf.start()) == Word{"c"});
    auto g2 = to_cnf(parse_grammar("S -> 'b' 'a' | 'a' 'b'"));
    CHECK(shortest_word(g2, g2.start()) == Word{"a", "b"});
}

TEST_CASE("classification") {
    auto r = classify(preset("dyck:1"));
    CHECK(r.join_inducing);
    REQUIRE(r.witness);
    CHECK(r.witness->size() >= 2);
    CHECK(r.accepts_empty);
    CHECK_FALSE(r.linear);

    auto flat = classify(parse_grammar("S -> 'a' | 'b'"));
    CHECK_FALSE(flat.join_inducing);
    CHECK(flat.linear);
    CHECK(flat.right_regular);

    CHECK(classify(preset("anbn")).linear);
    CHECK_FALSE(classify(preset("anbn")).right_regular);
    CHECK(classify(parse_grammar("S -> 'a' S | 'b'")).right_regular);
    CHECK(classify(parse_grammar("S -> S 'a' | 'b'")).left_regular);

    auto empty = classify(parse_grammar("S -> 'a' S"));
    CHECK(empty.empty_language);
    CHECK_FALSE(empty.join_inducing);
}

TEST_CASE("canonical form ignores nonterminal names") {
    auto a = parse_grammar("S -> 'a' X | eps\nX -> 'b'");
    auto b = parse_grammar("Top -> 'a' Y | eps\nY -> 'b'");
    CHECK(canonical_form(a) == canonical_form(b));
}
