#include "support/oracles.hpp"

#include <algorithm>

namespace sra::oracles {

std::optional<std::pair<Move, Word>> naive_find_move(const Dsa& a, State q, const Word& input) {
    auto out = a.out_transitions(q);
    for (std::size_t end = 1; end <= input.size(); ++end) {
        Word consumed(input.begin(), input.begin() + static_cast<std::ptrdiff_t>(end));
        const WordTransition* best = nullptr;
        for (const auto* t : out)
            if (is_suffix(t->label, consumed))
                if (!best || t->label.size() > best->label.size())
                    best = t;
        if (best) {
            Move move{*best, consumed};
            return std::make_pair(move, Word(input.begin() + static_cast<std::ptrdiff_t>(end),
                                             input.end()));
        }
    }
    return std::nullopt;
}

Run naive_run(const Dsa& a, const Word& w) {
    Run r;
    r.start = a.initial();
    State cur = r.start;
    Word rest = w;
    while (auto next = naive_find_move(a, cur, rest)) {
        cur = next->first.transition.dst;
        r.moves.push_back(next->first);
        rest = next->second;
    }
    r.residual = rest;
    r.end_state = cur;
    r.accepted = a.is_accepting(cur) && rest.empty();
    return r;
}

bool naive_accepts(const Dsa& a, const Word& w) {
    return naive_run(a, w).accepted;
}

std::optional<Word> naive_longest_suffix(const std::vector<Word>& candidates, const Word& w) {
    std::optional<Word> best;
    for (const auto& candidate : candidates)
        if (is_suffix(candidate, w))
            if (!best || candidate.size() > best->size())
                best = candidate;
    return best;
}

}  // namespace sra::oracles
