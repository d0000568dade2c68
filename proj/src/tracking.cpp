#include "sra/tracking.hpp"

#include <string>
#include <unordered_set>

#include "sra/errors.hpp"
#include "sra/prefix_matcher.hpp"

namespace sra {

std::set<Word> prefix_closure(const std::set<Word>& labels) {
    std::set<Word> closure;
    closure.insert(Word{});
    for (const auto& label : labels)
        for (std::size_t len = 1; len <= label.size(); ++len)
            closure.insert(Word(label.begin(), label.begin() + len));
    return closure;
}

TrackingDfa tracking_dfa(const Dsa& a) {
    const std::size_t k = a.alphabet().size();
    TrackingDfa result{Dfa(a.alphabet_ref()), {}, {}, {}};
    Dfa& m = result.dfa;

    std::unordered_set<std::string> used_names;
    auto fresh_name = [&](std::string base) {
        std::string name = base;
        while (!used_names.insert(name).second)
            name += '~';
        return name;
    };

    // Per DSA state: its label matcher, its outgoing transitions in matcher
    // label order, and the DFA ids of its prefix nodes.
    std::vector<PrefixMatcher> matchers;
    std::vector<std::vector<WordTransition>> out(a.num_states());
    std::vector<std::vector<State>> node_state(a.num_states());
    result.epsilon_state.resize(a.num_states());
    result.copy_state.resize(a.num_states());

    for (State q = 0; q < a.num_states(); ++q) {
        std::vector<Word> labels;
        for (const auto* t : a.out_transitions(q)) {
            out[q].push_back(*t);
            labels.push_back(t->label);
        }
        matchers.emplace_back(labels, k);
        const PrefixMatcher& matcher = matchers.back();
        node_state[q].resize(matcher.node_count());
        for (std::uint32_t n = 0; n < matcher.node_count(); ++n) {
            std::string name =
                fresh_name(a.state_name(q) + "[" + format_word(a.alphabet(), matcher.node_word(n)) + "]");
            State s = m.add_state(std::move(name));
            node_state[q][n] = s;
            result.origins.push_back(TrackingDfa::Origin{q, false, matcher.node_word(n)});
        }
        result.epsilon_state[q] = node_state[q][0];
        State copy = m.add_state(fresh_name(a.state_name(q) + "[copy]"));
        result.copy_state[q] = copy;
        result.origins.push_back(TrackingDfa::Origin{q, true, Word{}});
    }

    // Route one letter from the (q, beta) node: fire the transition whose
    // label is the new longest matched prefix, keep tracking the longer
    // prefix, or fall to the copy state when nothing matches any more.
    auto target_of = [&](State q, std::uint32_t node, Symbol symbol) {
        const PrefixMatcher& matcher = matchers[q];
        std::uint32_t next = matcher.step(node, symbol);
        int fired = matcher.label_at(next);
        if (fired >= 0)
            return result.epsilon_state[out[q][static_cast<std::size_t>(fired)].dst];
        if (next != matcher.root())
            return node_state[q][next];
        return result.copy_state[q];
    };

    for (State q = 0; q < a.num_states(); ++q) {
        for (std::uint32_t n = 0; n < matchers[q].node_count(); ++n)
            for (Symbol s = 0; s < k; ++s)
                m.add_transition(node_state[q][n], s, target_of(q, n, s));
        for (Symbol s = 0; s < k; ++s)
            m.add_transition(result.copy_state[q], s, target_of(q, matchers[q].root(), s));
    }

    m.set_initial(result.epsilon_state[a.initial()]);
    for (State q : a.accepting())
        m.add_accepting(result.epsilon_state[q]);
    return result;
}

bool state_count_bound_check(const Dsa& a) {
    const std::size_t k = total_size(a);
    const TrackingDfa tracked = tracking_dfa(a);
    if (tracked.dfa.num_states() > 2 * k)
        return false;
    return total_size(tracked.dfa) <= 2 * k * (1 + 2 * a.alphabet().size());
}

}  // namespace sra
