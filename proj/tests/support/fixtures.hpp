#pragma once

// The worked automata used across the test suites. Names describe the
// language or the structural point each one exists for.

#include "sra/automata.hpp"
#include "sra/hardness.hpp"

namespace sra::fixtures {

// --- DSAs ------------------------------------------------------------------

/// Two states, both waiting for "aab": accepts (a|b)*aab.
Dsa dsa_aab();
/// Three states chaining "ab" then "bb", with a b-loop and an a-return on the
/// accepting state: accepts (a|b)*ab(a|b)*bb.
Dsa dsa_ab_bb();
/// "ab" into the accepting state, "ba" looping at the start: (b*ba)*a*ab.
Dsa dsa_ab_with_ba_loop();
/// The out-of-context "else" recognizer: waits for if/else, then for
/// if/endif, with a trap after a nested if.
Dsa dsa_if_else();
/// One state pair connected by the two patterns "abaa" and "baaa".
Dsa dsa_abaa_baaa();
/// q0 reaches q1 on both "caba" and "ba"; the longer label is removable.
Dsa dsa_caba_removable();
/// Same plus an "aba" branch to a second target, which makes "caba" load-bearing.
Dsa dsa_caba_load_bearing();
/// The two-state pattern DSA for (a1|..|an)* a1 a2 .. an; total size 4 + 2n.
Dsa dsa_letter_chain(std::size_t n);

// --- DFAs ------------------------------------------------------------------

/// Complete three-state DFA for "contains ab"; {q0, q2} induces an
/// equivalent DSA.
Dfa dfa_contains_ab();
/// Complete three-state DFA for "at least two a's"; {q0, q2} induces a
/// non-equivalent DSA (fails on aba).
Dfa dfa_two_as();
/// Five-state DFA whose candidate set {s0, s2, s4} is suffix-compatible but
/// not well-formed (witness: b vs ab); adding s3 fixes it.
Dfa dfa_wf_demo();
/// The matcher DFA for the patterns abaa/baaa (states named by the tracked
/// prefix); trim: the accepting state has no outgoing transitions.
Dfa dfa_abaa_baaa_matcher();
/// Minimal five-state DFA (states q0, q1, q2, p, q4 over a, b and
/// alphabet_size - 2 filler letters) whose best derived DSA needs
/// S = {q0, p, q2, q4}. alphabet_size >= 2.
Dfa dfa_twin_minimal(std::size_t alphabet_size);
/// The same language with p duplicated into equivalent twins p/pp; the twin
/// unlocks the smaller suffix-tracking set {q0, p, q4}.
Dfa dfa_twin_duplicated(std::size_t alphabet_size);
/// Two-state cycle accepting (ab)*.
Dfa dfa_ab_cycle();
/// Four-state trim DFA for (a|b)*aab (the letter-level companion of dsa_aab).
Dfa dfa_aab();
/// Chain of `length` a/b-steps from start to accepting end, then incomplete;
/// simple-word counts explode exponentially with length.
Dfa dfa_parallel_chain(std::size_t length);

// --- DGAs ------------------------------------------------------------------

/// Single state with an "ab" loop: (ab)*.
Dga dga_ab_cycle();
/// Suppressed variant of dfa_aab: q0 -aa-> q2 and q3 -aa-> q2 replace q1.
Dga dga_aab();

// --- Graphs ----------------------------------------------------------------

Graph graph_k3();
Graph graph_path3();
Graph graph_star13();
Graph graph_k4();

}  // namespace sra::fixtures
