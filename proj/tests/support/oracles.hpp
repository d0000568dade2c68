#pragma once

// Deliberately naive re-implementations used as independent cross-checks.
// Nothing here may call into the matcher- or trie-based production paths.

#include <optional>
#include <vector>

#include "sra/automata.hpp"
#include "sra/semantics.hpp"

namespace sra::oracles {

/// Quadratic rescan move search: for each prefix of the input, test every
/// outgoing label for being a suffix, fire the longest at the first hit.
std::optional<std::pair<Move, Word>> naive_find_move(const Dsa& a, State q, const Word& input);

/// Run assembled from naive_find_move only.
Run naive_run(const Dsa& a, const Word& w);
bool naive_accepts(const Dsa& a, const Word& w);

/// Longest word of `candidates` that is a suffix of w, by pairwise checks.
std::optional<Word> naive_longest_suffix(const std::vector<Word>& candidates, const Word& w);

/// Recursive word generation + predicate, sorted length-lex.
template <class Pred>
std::vector<Word> naive_enumerate(std::size_t alphabet_size, std::size_t max_len, Pred&& pred) {
    std::vector<Word> result;
    Word w;
    auto rec = [&](auto&& self) -> void {
        if (pred(w))
            result.push_back(w);
        if (w.size() == max_len)
            return;
        for (Symbol s = 0; s < alphabet_size; ++s) {
            w.push_back(s);
            self(self);
            w.pop_back();
        }
    };
    rec(rec);
    std::sort(result.begin(), result.end(), LengthLexLess{});
    return result;
}

}  // namespace sra::oracles
