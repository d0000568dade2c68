#pragma once

#include <cstdint>
#include <vector>

#include "sra/alphabet.hpp"

namespace sra {

/// Incremental matcher over the prefix closure of a label set. Nodes are the
/// prefixes of the labels (node 0 is the empty word); step(n, a) moves to the
/// longest closure word that is a suffix of node-word + a, the failure-link
/// discipline of multi-pattern string matching.
///
/// Two queries are exposed per node: label_at (the node word itself is a full
/// label) and longest_label_suffix (the longest label that is a suffix of the
/// node word, possibly shorter than the node word). The first drives the
/// tracking-DFA construction, the second gives exact longest-match move
/// semantics even when one label hides inside another.
class PrefixMatcher {
public:
    PrefixMatcher(const std::vector<Word>& labels, std::size_t alphabet_size);

    std::uint32_t root() const { return 0; }
    std::uint32_t step(std::uint32_t node, Symbol a) const { return step_[node * alphabet_size_ + a]; }
    /// Index into the label vector if the node word is a full label, else -1.
    int label_at(std::uint32_t node) const { return label_at_[node]; }
    /// Index of the longest label that is a suffix of the node word, else -1.
    int longest_label_suffix(std::uint32_t node) const { return longest_label_suffix_[node]; }
    const Word& node_word(std::uint32_t node) const { return words_[node]; }
    std::size_t node_count() const { return words_.size(); }

private:
    std::size_t alphabet_size_;
    std::vector<Word> words_;  // sorted length-lex, words_[0] == empty
    std::vector<std::uint32_t> step_;
    std::vector<int> label_at_;
    std::vector<int> longest_label_suffix_;
};

}  // namespace sra
