#include <catch_amalgamated.hpp>

#include "sra/automata.hpp"
#include "sra/errors.hpp"
#include "support/fixtures.hpp"

using namespace sra;

TEST_CASE("word predicates") {
    auto sigma = make_char_alphabet("ab");
    Word empty;
    Word a = parse_char_word(*sigma, "a");
    Word ab = parse_char_word(*sigma, "ab");
    Word aab = parse_char_word(*sigma, "aab");

    CHECK(is_prefix(empty, ab));
    CHECK(is_suffix(empty, ab));
    CHECK(is_prefix(a, ab));
    CHECK(!is_proper_prefix(ab, ab));
    CHECK(is_suffix(ab, aab));
    CHECK(is_proper_suffix(ab, aab));
    CHECK(!is_suffix(a, ab));
    CHECK(is_prefix(empty, empty));
    CHECK(is_suffix(aab, aab));
    CHECK(!is_proper_suffix(aab, aab));

    CHECK(length_lex_less(ab, aab));
    CHECK(length_lex_less(a, ab));
    CHECK(!length_lex_less(aab, ab));
    CHECK(length_lex_less(parse_char_word(*sigma, "ab"), parse_char_word(*sigma, "ba")));
}

TEST_CASE("alphabet interning") {
    Alphabet sigma;
    Symbol a = sigma.intern("a");
    CHECK(sigma.intern("a") == a);
    CHECK(sigma.size() == 1);
    CHECK(sigma.text(a) == "a");
    CHECK(!sigma.find("b").has_value());
    CHECK_THROWS_AS(sigma.intern(""), Error);
    CHECK_THROWS_AS(sigma.intern("has space"), Error);
    CHECK_THROWS_AS(sigma.intern(":"), Error);

    Symbol multi = sigma.intern("e_{u,v}");
    CHECK(sigma.text(multi) == "e_{u,v}");
}

TEST_CASE("word parsing round trip") {
    auto sigma = make_alphabet({"if", "endif", "x"});
    Word w = parse_word(*sigma, "if.x.endif");
    CHECK(w.size() == 3);
    CHECK(format_word(*sigma, w) == "if.x.endif");
    CHECK(format_word(*sigma, {}) == "");
    CHECK(display_word(*sigma, {}) == "(empty)");
    CHECK_THROWS_AS(parse_word(*sigma, "if.unknown"), Error);
}

TEST_CASE("validate accepts the worked DSAs") {
    CHECK(validate(fixtures::dsa_aab()).empty());
    CHECK(validate(fixtures::dsa_ab_bb()).empty());
    CHECK(validate(fixtures::dsa_ab_with_ba_loop()).empty());
    CHECK(validate(fixtures::dsa_if_else()).empty());
    CHECK(validate(fixtures::dsa_abaa_baaa()).empty());
}

TEST_CASE("validate flags a determinism violation") {
    auto sigma = make_char_alphabet("ab");
    Dsa a(sigma);
    State q = a.add_state("q");
    State q1 = a.add_state("q1");
    State q2 = a.add_state("q2");
    Word ab = parse_char_word(*sigma, "ab");
    a.add_transition(q, ab, q1);
    a.add_transition(q, ab, q2);
    a.set_initial(q);

    auto violations = validate(a);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].find("determinism") != std::string::npos);
    CHECK(violations[0].find("'q'") != std::string::npos);
}

TEST_CASE("validate flags prefix-freeness violations in DGAs") {
    auto sigma = make_char_alphabet("ab");
    Dga h(sigma);
    State q = h.add_state("q");
    h.add_edge(q, parse_char_word(*sigma, "a"), q);
    h.add_edge(q, parse_char_word(*sigma, "ab"), q);
    h.set_initial(q);

    auto violations = validate(h);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].find("prefix-free") != std::string::npos);
}

TEST_CASE("total size") {
    SECTION("two-state letter-chain pattern, n = 3") {
        CHECK(total_size(fixtures::dsa_letter_chain(3)) == 10);
    }
    SECTION("single state, no transitions") {
        auto sigma = make_char_alphabet("a");
        Dsa a(sigma);
        a.add_state("q");
        a.set_initial(0);
        CHECK(total_size(a) == 1);
    }
    SECTION("two states, two aab transitions") {
        CHECK(total_size(fixtures::dsa_aab()) == 10);
    }
    SECTION("complete DFA formula n + 2nk") {
        for (std::size_t n : {1u, 3u}) {
            auto sigma = make_char_alphabet("ab");
            Dfa m(sigma);
            for (std::size_t q = 0; q < n; ++q)
                m.add_state("q" + std::to_string(q));
            for (State q = 0; q < n; ++q)
                for (Symbol s = 0; s < 2; ++s)
                    m.add_transition(q, s, static_cast<State>((q + s) % n));
            m.set_initial(0);
            CHECK(total_size(m) == n + 2 * n * 2);
        }
    }
}

TEST_CASE("total size is invariant under state renaming") {
    Dsa original = fixtures::dsa_ab_bb();
    Dsa renamed(original.alphabet_ref());
    for (State q = 0; q < original.num_states(); ++q)
        renamed.add_state("renamed_" + std::to_string(99 - q));
    for (const auto& t : original.transitions())
        renamed.add_transition(t.src, t.label, t.dst);
    renamed.set_initial(original.initial());
    for (State q : original.accepting())
        renamed.add_accepting(q);
    CHECK(total_size(original) == total_size(renamed));
}
