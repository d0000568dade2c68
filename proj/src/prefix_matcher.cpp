#include "sra/prefix_matcher.hpp"

#include <algorithm>
#include <map>

namespace sra {

PrefixMatcher::PrefixMatcher(const std::vector<Word>& labels, std::size_t alphabet_size)
    : alphabet_size_(alphabet_size) {
    std::map<Word, std::uint32_t, LengthLexLess> ids;
    ids.emplace(Word{}, 0);
    for (const auto& label : labels)
        for (std::size_t len = 1; len <= label.size(); ++len)
            ids.emplace(Word(label.begin(), label.begin() + len), 0);

    words_.reserve(ids.size());
    for (auto& [word, id] : ids) {
        id = static_cast<std::uint32_t>(words_.size());
        words_.push_back(word);
    }

    label_at_.assign(words_.size(), -1);
    for (std::size_t i = 0; i < labels.size(); ++i)
        label_at_[ids.at(labels[i])] = static_cast<int>(i);

    // Longest closure word that is a suffix of w; empty word always qualifies.
    auto longest_suffix_node = [&](const Word& w, std::size_t min_drop) {
        for (std::size_t drop = min_drop; drop < w.size(); ++drop) {
            auto it = ids.find(Word(w.begin() + drop, w.end()));
            if (it != ids.end())
                return it->second;
        }
        return std::uint32_t{0};
    };

    step_.assign(words_.size() * alphabet_size_, 0);
    for (std::uint32_t n = 0; n < words_.size(); ++n) {
        for (Symbol a = 0; a < alphabet_size_; ++a) {
            Word extended = words_[n];
            extended.push_back(a);
            step_[n * alphabet_size_ + a] = longest_suffix_node(extended, 0);
        }
    }

    // Nodes are length-lex sorted, so each node's longest proper closure
    // suffix precedes it and its longest-label link is already final.
    longest_label_suffix_.assign(words_.size(), -1);
    for (std::uint32_t n = 1; n < words_.size(); ++n) {
        if (label_at_[n] >= 0)
            longest_label_suffix_[n] = label_at_[n];
        else
            longest_label_suffix_[n] = longest_label_suffix_[longest_suffix_node(words_[n], 1)];
    }
}

}  // namespace sra
