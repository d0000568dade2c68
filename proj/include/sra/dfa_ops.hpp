#pragma once

#include <optional>
#include <vector>

#include "sra/automata.hpp"
#include "sra/generalized.hpp"

namespace sra {

/// True iff the (unique, possibly absent for trim DFAs) run on w ends in an
/// accepting state.
bool dfa_accepts(const Dfa& m, const Word& w);

/// Adds a fresh non-accepting absorbing sink carrying all missing transitions;
/// returns the input unchanged if it is already complete.
Dfa complete(const Dfa& m);

/// Drops states that are unreachable from the initial state or cannot reach an
/// accepting state. An empty language collapses to the bare initial state.
Dfa trim(const Dfa& m);

/// The canonical complete DFA for L(m): completion, reachable restriction,
/// Hopcroft partition refinement, then a breadth-first canonical renaming
/// (states come out as s0, s1, ...). Equal languages over equal alphabets
/// minimize to byte-identical automata.
Dfa minimize(const Dfa& m);

/// Block ids after partition refinement of complete(m), indexed by state.
/// States of the added sink (if any) get the final block.
std::vector<std::size_t> equivalence_partition(const Dfa& m);

/// Right-language equality of two states.
bool states_equivalent(const Dfa& m, State u, State v);

struct EquivalenceResult {
    bool equivalent;
    std::optional<Word> counterexample;  // shortest, then lexicographically least
};

/// Language equality via synchronized product search. Requires both automata
/// to use the same alphabet tokens; symbols are matched by text.
EquivalenceResult equivalent(const Dfa& m1, const Dfa& m2);

// Structure equality up to state renaming.
bool isomorphic(const Dfa& m1, const Dfa& m2);
bool isomorphic(const Dsa& a1, const Dsa& a2);
bool isomorphic(const Dga& h1, const Dga& h2);

// Brute-force language enumeration: all accepted words of length <= max_len in
// length-lexicographic order. This is the oracle every cross-check leans on.
// The plain versions run the scan in parallel when OpenMP is enabled; the
// _serial versions are the reference implementations and always agree.
std::vector<Word> enumerate_language(const Dfa& m, std::size_t max_len);
std::vector<Word> enumerate_language(const Dsa& a, std::size_t max_len);
std::vector<Word> enumerate_language(const Dga& h, std::size_t max_len);
std::vector<Word> enumerate_language_serial(const Dfa& m, std::size_t max_len);
std::vector<Word> enumerate_language_serial(const Dsa& a, std::size_t max_len);
std::vector<Word> enumerate_language_serial(const Dga& h, std::size_t max_len);

}  // namespace sra
