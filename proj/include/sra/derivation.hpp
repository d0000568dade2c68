#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sra/automata.hpp"
#include "sra/errors.hpp"

namespace sra {

struct DerivationLimits {
    /// Cap on the number of simple words enumerated per source state; the
    /// count can be exponential in the number of suppressed states.
    std::size_t max_simple_words = 100000;
    /// Exhaustive subset search refuses automata with more states than this.
    std::size_t max_enumeration_states = 20;
};

/// Reversed-word trie over a word set with a per-word payload, so that
/// "longest word of the set that is a suffix of w" is a single walk.
class SuffixTrie {
public:
    void insert(const Word& w, State target);
    struct Hit {
        const Word* word;
        State target;
    };
    /// Longest inserted word that is a suffix of w.
    std::optional<Hit> longest_suffix(const Word& w) const;
    /// Shortest inserted word that is a suffix of w and whose target satisfies
    /// the predicate.
    template <class Pred>
    std::optional<Hit> shortest_suffix_if(const Word& w, Pred&& pred) const;

private:
    struct Node {
        std::map<Symbol, std::uint32_t> children;
        int word_index = -1;
    };
    const Node* walk(const Word& w, std::size_t depth) const;
    std::vector<Node> nodes_{Node{}};
    std::vector<std::pair<Word, State>> words_;
};

/// A candidate subset S of DFA states with the simple-word tables SW(p, q, S)
/// cached for every p in S. Simple words from p to q modulo S label paths
/// whose intermediate states avoid S and never repeat (only the endpoints may
/// coincide). Construction enumerates them by depth-first search and throws
/// CapExceededError past limits.max_simple_words words per source.
class CandidateSet {
public:
    CandidateSet(const Dfa& dfa, std::set<State> states, DerivationLimits limits = {});

    const Dfa& dfa() const { return *dfa_; }
    const std::set<State>& states() const { return states_; }
    const DerivationLimits& limits() const { return limits_; }

    /// SW(p, q, S) in length-lexicographic order; p must belong to S.
    const std::vector<Word>& simple_words(State p, State q) const;
    /// SW_*(p, S): every simple word out of p, length-lexicographic.
    std::vector<Word> all_simple_words(State p) const;
    /// Out(p, S): the simple words from p that end in S, i.e. the outgoing
    /// labels of the induced DSA at p.
    std::vector<Word> out_words(State p) const;

    /// Longest word of SW_*(p, S) that is a suffix of w, with the state its
    /// path reaches.
    std::optional<SuffixTrie::Hit> longest_simple_suffix(State p, const Word& w) const;
    /// Shortest word of Out(p, S) that is a suffix of w.
    std::optional<SuffixTrie::Hit> shortest_out_suffix(State p, const Word& w) const;

private:
    struct PerSource {
        std::map<State, std::vector<Word>> by_target;
        SuffixTrie trie;
    };
    const PerSource& source(State p) const;

    const Dfa* dfa_;
    std::set<State> states_;
    DerivationLimits limits_;
    std::map<State, PerSource> sources_;
    std::vector<Word> empty_;
};

// Free-standing simple-word queries (independent of a CandidateSet; p may be
// any state, not only members of S).
std::vector<Word> simple_words(const Dfa& m, State p, State q, const std::set<State>& s,
                               const DerivationLimits& limits = {});
std::vector<Word> all_simple_words(const Dfa& m, State p, const std::set<State>& s,
                                   const DerivationLimits& limits = {});
std::vector<Word> out_set(const Dfa& m, State p, const std::set<State>& s,
                          const DerivationLimits& limits = {});

struct CompatibilityFailure {
    DfaTransition transition;
    State p;     // source in S whose simple word breaks the condition
    Word sigma;  // the simple word reaching transition.src
};

struct WellFormednessFailure {
    State p;        // source in S
    State q;        // target in S reached by alpha
    State q_escape; // target outside S reached by beta
    Word alpha;     // simple word into S
    Word beta;      // simple word escaping S; alpha is a suffix of beta
};

/// A transition q -a-> u is suffix-compatible w.r.t. S when q or u lies in S,
/// or when for every p in S and sigma in SW(p, q, S) the longest simple-word
/// suffix of sigma.a exists and its path lands exactly on u. Returns the first
/// witness breaking the condition, in deterministic order.
std::optional<CompatibilityFailure> suffix_compatibility_witness(const CandidateSet& cs,
                                                                 const DfaTransition& t);
bool is_suffix_compatible(const Dfa& m, const DfaTransition& t, const std::set<State>& s,
                          const DerivationLimits& limits = {});

/// All (or just the first) pairs alpha in SW(p,q,S), beta in SW(p,q',S) with
/// q in S, q' outside S and alpha a suffix of beta.
std::vector<WellFormednessFailure> well_formedness_failures(const CandidateSet& cs, bool first_only);
bool is_well_formed_set(const Dfa& m, const std::set<State>& s, const DerivationLimits& limits = {});

struct SuffixTrackingReport {
    bool contains_initial = false;
    std::vector<State> missing_accepting;
    std::vector<CompatibilityFailure> incompatible;
    std::vector<WellFormednessFailure> ill_formed;

    bool ok() const {
        return contains_initial && missing_accepting.empty() && incompatible.empty() &&
               ill_formed.empty();
    }
    std::string describe(const Dfa& m) const;
};

/// Full diagnosis of Def.-level suffix tracking: membership of initial and
/// accepting states, suffix-compatibility of every transition, and
/// well-formedness of S.
SuffixTrackingReport check_suffix_tracking(const Dfa& m, const std::set<State>& s,
                                           const DerivationLimits& limits = {});
bool is_suffix_tracking(const Dfa& m, const std::set<State>& s, const DerivationLimits& limits = {});

struct NotSuffixTrackingError : Error {
    NotSuffixTrackingError(std::string message, SuffixTrackingReport report)
        : Error(std::move(message)), report(std::move(report)) {}
    SuffixTrackingReport report;
};

/// The DSA whose states are S and whose transitions are the simple words
/// between members of S. Requires initial in S and accepting within S.
Dsa induced_dsa(const Dfa& m, const std::set<State>& s, const DerivationLimits& limits = {});
Dsa induced_dsa(const CandidateSet& cs);

struct UselessnessReport {
    std::vector<WordTransition> bigger_suffix_useless;
    std::vector<WordTransition> useful_bigger_suffix;
    std::vector<WordTransition> useless_self_loops;

    bool empty() const {
        return bigger_suffix_useless.empty() && useful_bigger_suffix.empty() &&
               useless_self_loops.empty();
    }
};

/// Classifies the current transitions of a DSA (no fixpoint):
///  - (q, alpha, q') is a bigger-suffix transition when some (q, beta, q')
///    carries a strict suffix beta of alpha; it is useful when additionally
///    some (q, gamma, q'') with q'' != q' satisfies beta sfx gamma sfx alpha,
///    and useless otherwise.
///  - (q, alpha, q) is a useless self-loop when q is not accepting and no
///    nonempty suffix of alpha is a prefix of another outgoing label of q.
/// The three sets are pairwise disjoint; self-loop classification only applies
/// to transitions that are not bigger-suffix transitions.
UselessnessReport classify_useless(const Dsa& a);

/// Removes useless bigger-suffix transitions to a fixpoint (re-classifying
/// after every removal; longest label first, ties lexicographic), then, when
/// the intermediate DSA is well-formed, useless self-loops the same way. The
/// language is preserved.
Dsa remove_useless(const Dsa& a);
Dsa remove_useless_bigger_suffix(const Dsa& a);
/// Throws PreconditionError unless a is well-formed and free of useless
/// bigger-suffix transitions.
Dsa remove_useless_self_loops(const Dsa& a);

struct WellFormedDsaWitness {
    State state;
    Word label;        // label that hides inside another
    Word other_label;  // the longer label
    Word other_prefix; // proper prefix of other_label that label ends
};

/// No outgoing label may be a suffix of a proper prefix of another outgoing
/// label of the same state (such a label could never fire ahead of it).
std::optional<WellFormedDsaWitness> well_formed_dsa_witness(const Dsa& a);
bool is_well_formed_dsa(const Dsa& a);

/// Induced DSA with all useless transitions removed. Unless force is set,
/// throws NotSuffixTrackingError when S is not suffix-tracking for m.
Dsa derive_dsa(const Dfa& m, const std::set<State>& s, bool force = false,
               const DerivationLimits& limits = {});

/// All suffix-tracking sets, smallest first (then by member order); every set
/// contains the initial and accepting states. Throws StateLimitError past
/// limits.max_enumeration_states. The plain version checks candidate subsets
/// in parallel when OpenMP is enabled; results are identical to the serial
/// reference.
std::vector<std::set<State>> enumerate_suffix_tracking_sets(const Dfa& m,
                                                            const DerivationLimits& limits = {});
std::vector<std::set<State>> enumerate_suffix_tracking_sets_serial(
    const Dfa& m, const DerivationLimits& limits = {});

struct DerivedChoice {
    std::set<State> states;
    Dsa dsa;
    std::size_t size;
};

/// The derived DSA of minimum total size over all suffix-tracking sets; ties
/// go to fewer states, then to enumeration order. Note the result is only the
/// best DSA *derivable from m* — it need not be a globally minimal DSA for
/// L(m).
DerivedChoice best_derived_dsa(const Dfa& m, const DerivationLimits& limits = {});
DerivedChoice best_derived_dsa_serial(const Dfa& m, const DerivationLimits& limits = {});

/// Re-derives a well-formed, useless-free DSA from its own tracking DFA using
/// the (q, empty) states as the suffix-tracking set. The result is isomorphic
/// to the input; a failed check throws Error with diagnostics.
Dsa derive_from_tracking(const Dsa& a);

// ---------------------------------------------------------------------------

template <class Pred>
std::optional<SuffixTrie::Hit> SuffixTrie::shortest_suffix_if(const Word& w, Pred&& pred) const {
    const Node* node = &nodes_[0];
    for (std::size_t depth = 0;; ++depth) {
        if (node->word_index >= 0) {
            const auto& [word, target] = words_[static_cast<std::size_t>(node->word_index)];
            if (pred(target))
                return Hit{&word, target};
        }
        if (depth == w.size())
            return std::nullopt;
        auto it = node->children.find(w[w.size() - 1 - depth]);
        if (it == node->children.end())
            return std::nullopt;
        node = &nodes_[it->second];
    }
}

}  // namespace sra
