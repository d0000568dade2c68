#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sra/automata.hpp"
#include "sra/prefix_matcher.hpp"

namespace sra {

/// One firing of a DSA transition together with the exact input block it
/// consumed. The label is the longest outgoing label that is a suffix of the
/// block, and no proper prefix of the block ends with any outgoing label.
struct Move {
    WordTransition transition;
    Word consumed;
};

struct Run {
    State start;
    std::vector<Move> moves;
    Word residual;
    State end_state;
    bool accepted;
};

/// Out(q): the set of labels on transitions leaving q.
std::set<Word> out_labels(const Dsa& a, State q);

/// Prebuilt per-state matchers for repeated runs over one DSA. Construction is
/// eager; all queries are const and safe to share across threads.
class DsaRunner {
public:
    explicit DsaRunner(const Dsa& a);

    std::optional<std::pair<Move, Word>> find_move(State q, const Word& input) const;
    Run run_from(State q, const Word& w) const;
    Run run(const Word& w) const { return run_from(dsa_->initial(), w); }
    bool accepts(const Word& w) const;
    const Dsa& dsa() const { return *dsa_; }

private:
    const Dsa* dsa_;
    std::vector<PrefixMatcher> matchers_;
    std::vector<std::vector<WordTransition>> out_;  // per state, label order matching matcher input
};

/// Scans input left to right from q; at the first position where some label of
/// Out(q) is a suffix of the consumed prefix, returns the move on the longest
/// such label together with the unread remainder. none if no position matches.
std::optional<std::pair<Move, Word>> find_move(const Dsa& a, State q, const Word& input);

/// The unique run of a on w from the initial state.
Run run(const Dsa& a, const Word& w);

/// True iff the run ends in an accepting state with empty residual.
bool accepts(const Dsa& a, const Word& w);

}  // namespace sra
