#include <catch_amalgamated.hpp>

#include "sra/dfa_ops.hpp"
#include "sra/semantics.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace sra;

namespace {

Word cw(const Dsa& a, std::string_view letters) {
    return parse_char_word(a.alphabet(), letters);
}

}  // namespace

TEST_CASE("out_labels") {
    Dsa a4 = fixtures::dsa_ab_with_ba_loop();
    auto labels = out_labels(a4, *a4.find_state("q0"));
    CHECK(labels == std::set<Word>{cw(a4, "ab"), cw(a4, "ba")});
    CHECK(out_labels(a4, *a4.find_state("q1")).empty());

    Dsa ie = fixtures::dsa_if_else();
    auto s1_labels = out_labels(ie, *ie.find_state("s1"));
    CHECK(s1_labels == std::set<Word>{cw(ie, "if"), cw(ie, "endif")});

    CHECK_THROWS_AS(out_labels(a4, 99), Error);
}

TEST_CASE("find_move") {
    SECTION("longest match wins at the first matching position") {
        Dsa a4 = fixtures::dsa_ab_with_ba_loop();
        auto moved = find_move(a4, a4.initial(), cw(a4, "aab"));
        REQUIRE(moved);
        CHECK(moved->first.transition.label == cw(a4, "ab"));
        CHECK(moved->first.transition.dst == *a4.find_state("q1"));
        CHECK(moved->first.consumed == cw(a4, "aab"));
        CHECK(moved->second.empty());
    }
    SECTION("endif beats the embedded if") {
        Dsa ie = fixtures::dsa_if_else();
        auto moved = find_move(ie, *ie.find_state("s1"), cw(ie, "fghendif"));
        REQUIRE(moved);
        CHECK(moved->first.transition.label == cw(ie, "endif"));
        CHECK(moved->first.transition.dst == *ie.find_state("s0"));
        CHECK(moved->first.consumed == cw(ie, "fghendif"));
    }
    SECTION("no move when nothing matches") {
        Dsa a2 = fixtures::dsa_aab();
        CHECK(!find_move(a2, *a2.find_state("q3"), cw(a2, "aa")).has_value());
    }
}

TEST_CASE("runs") {
    Dsa a2 = fixtures::dsa_aab();
    SECTION("two moves to acceptance") {
        Run r = run(a2, cw(a2, "abbaabbbaab"));
        REQUIRE(r.moves.size() == 2);
        CHECK(r.moves[0].consumed == cw(a2, "abbaab"));
        CHECK(r.moves[1].consumed == cw(a2, "bbaab"));
        CHECK(r.residual.empty());
        CHECK(r.end_state == *a2.find_state("q3"));
        CHECK(r.accepted);
    }
    SECTION("stuck with a residual") {
        Run r = run(a2, cw(a2, "baabaa"));
        REQUIRE(r.moves.size() == 1);
        CHECK(r.moves[0].consumed == cw(a2, "baab"));
        CHECK(r.residual == cw(a2, "aa"));
        CHECK(!r.accepted);
    }
    SECTION("three moves through the ab/bb chain") {
        Dsa a3 = fixtures::dsa_ab_bb();
        Run r = run(a3, cw(a3, "abbbb"));
        REQUIRE(r.moves.size() == 3);
        CHECK(r.moves[0].consumed == cw(a3, "ab"));
        CHECK(r.moves[1].consumed == cw(a3, "bb"));
        CHECK(r.moves[2].consumed == cw(a3, "b"));
        CHECK(r.end_state == *a3.find_state("q2"));
        CHECK(r.accepted);
    }
}

TEST_CASE("accepts") {
    Dsa a2 = fixtures::dsa_aab();
    CHECK(accepts(a2, cw(a2, "abbaabbbaab")));
    CHECK(!accepts(a2, cw(a2, "baabaa")));
    CHECK(!accepts(a2, Word{}));

    Dsa trivial(make_char_alphabet("a"));
    trivial.add_state("q");
    trivial.set_initial(0);
    trivial.add_accepting(0);
    CHECK(accepts(trivial, Word{}));
}

TEST_CASE("move invariants hold along random runs") {
    gen::Rng rng(1234);
    gen::DsaOptions options;
    options.well_formed = false;  // the move rules hold for any valid DSA
    for (int i = 0; i < 120; ++i) {
        Dsa a = gen::random_dsa(rng, options);
        DsaRunner runner(a);
        Word w = gen::random_word(rng, a.alphabet().size(), 10);
        Run r = runner.run(w);

        Word rebuilt;
        for (const auto& move : r.moves) {
            // label is the longest outgoing label suffixing the block, and no
            // proper prefix of the block ends with any outgoing label
            auto out = a.out_transitions(move.transition.src);
            CHECK(is_suffix(move.transition.label, move.consumed));
            for (const auto* t : out) {
                if (is_suffix(t->label, move.consumed))
                    CHECK(t->label.size() <= move.transition.label.size());
                for (std::size_t len = 0; len < move.consumed.size(); ++len) {
                    Word prefix(move.consumed.begin(),
                                move.consumed.begin() + static_cast<std::ptrdiff_t>(len));
                    CHECK(!is_suffix(t->label, prefix));
                }
            }
            rebuilt.insert(rebuilt.end(), move.consumed.begin(), move.consumed.end());
        }
        rebuilt.insert(rebuilt.end(), r.residual.begin(), r.residual.end());
        CHECK(rebuilt == w);
    }
}

TEST_CASE("runner agrees with the quadratic rescan oracle") {
    gen::Rng rng(99);
    gen::DsaOptions options;
    options.well_formed = false;
    for (int i = 0; i < 200; ++i) {
        Dsa a = gen::random_dsa(rng, options);
        DsaRunner runner(a);
        Word w = gen::random_word(rng, a.alphabet().size(), 9);

        auto fast = runner.find_move(a.initial(), w);
        auto slow = oracles::naive_find_move(a, a.initial(), w);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) {
            CHECK(fast->first.transition == slow->first.transition);
            CHECK(fast->first.consumed == slow->first.consumed);
            CHECK(fast->second == slow->second);
        }
        CHECK(runner.accepts(w) == oracles::naive_accepts(a, w));
    }
}

TEST_CASE("prefix monotonicity of moves") {
    gen::Rng rng(321);
    for (int i = 0; i < 80; ++i) {
        Dsa a = gen::random_dsa(rng);
        DsaRunner runner(a);
        Word w = gen::random_word(rng, a.alphabet().size(), 9);
        auto moved = runner.find_move(a.initial(), w);
        if (!moved)
            continue;
        // the run on the full word and on the consumed prefix share move one
        Run full = runner.run(w);
        Run prefix = runner.run(moved->first.consumed);
        REQUIRE(!full.moves.empty());
        REQUIRE(!prefix.moves.empty());
        CHECK(full.moves[0].transition == prefix.moves[0].transition);
        CHECK(full.moves[0].consumed == prefix.moves[0].consumed);
    }
}
