#pragma once

#include <set>
#include <vector>

#include "sra/automata.hpp"

namespace sra {

/// All prefixes of all labels, including the empty word and the labels
/// themselves. prefix_closure({}) == {empty}.
std::set<Word> prefix_closure(const std::set<Word>& labels);

/// The letter-level DFA that simulates a DSA. Per DSA state q there is one
/// DFA state (q, beta) for every prefix beta of an outgoing label (the longest
/// progress towards a label seen as a suffix so far), plus one copy state that
/// mirrors (q, empty) after the first letter of stalled input. Only (q, empty)
/// states of accepting q accept, so acceptance still requires an empty
/// residual.
struct TrackingDfa {
    struct Origin {
        State dsa_state;
        bool is_copy;
        Word beta;  // empty for copy states
    };

    Dfa dfa;
    std::vector<State> epsilon_state;  // DSA state -> (q, empty) DFA state
    std::vector<State> copy_state;     // DSA state -> copy DFA state
    std::vector<Origin> origins;       // per DFA state
};

/// Requires a valid DSA. The result is complete and shares the alphabet.
TrackingDfa tracking_dfa(const Dsa& a);

/// True iff the tracking DFA respects both size bounds: at most
/// 2 * total_size(a) states, and total size at most
/// 2 * total_size(a) * (1 + 2 * |alphabet|).
bool state_count_bound_check(const Dsa& a);

}  // namespace sra
