#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sra/alphabet.hpp"

namespace sra {

using State = std::uint32_t;
inline constexpr State kNoState = static_cast<State>(-1);

/// A word-labeled transition, shared by DSAs and DGAs.
struct WordTransition {
    State src;
    Word label;
    State dst;

    friend bool operator==(const WordTransition&, const WordTransition&) = default;
    friend auto operator<=>(const WordTransition&, const WordTransition&) = default;
};

struct DfaTransition {
    State src;
    Symbol symbol;
    State dst;

    friend bool operator==(const DfaTransition&, const DfaTransition&) = default;
    friend auto operator<=>(const DfaTransition&, const DfaTransition&) = default;
};

/// Deterministic suffix-reading automaton. Transitions carry non-empty words;
/// from a state the automaton waits until the input read since arriving first
/// ends with one of the outgoing labels, then fires the longest matching one.
/// Determinism only requires that labels out of one state are distinct.
class Dsa {
public:
    explicit Dsa(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {}

    State add_state(std::string name);
    void add_transition(State src, Word label, State dst);
    void set_initial(State q);
    void add_accepting(State q);

    const Alphabet& alphabet() const { return *alphabet_; }
    const AlphabetRef& alphabet_ref() const { return alphabet_; }
    std::size_t num_states() const { return names_.size(); }
    const std::string& state_name(State q) const;
    const std::vector<std::string>& state_names() const { return names_; }
    std::optional<State> find_state(std::string_view name) const;
    State initial() const { return initial_; }
    const std::set<State>& accepting() const { return accepting_; }
    bool is_accepting(State q) const { return accepting_.count(q) > 0; }

    /// All transitions, sorted by (src, label, dst).
    const std::vector<WordTransition>& transitions() const;
    std::vector<const WordTransition*> out_transitions(State q) const;

private:
    AlphabetRef alphabet_;
    std::vector<std::string> names_;
    State initial_ = 0;
    std::set<State> accepting_;
    mutable std::vector<WordTransition> transitions_;
    mutable bool sorted_ = true;
};

/// Letter-labeled automaton with a partial transition map. Complete means the
/// map is total over states x alphabet.
class Dfa {
public:
    explicit Dfa(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {}

    State add_state(std::string name);
    /// Throws if (src, symbol) already has a target.
    void add_transition(State src, Symbol symbol, State dst);
    void set_initial(State q);
    void add_accepting(State q);

    const Alphabet& alphabet() const { return *alphabet_; }
    const AlphabetRef& alphabet_ref() const { return alphabet_; }
    std::size_t num_states() const { return names_.size(); }
    const std::string& state_name(State q) const;
    const std::vector<std::string>& state_names() const { return names_; }
    std::optional<State> find_state(std::string_view name) const;
    State initial() const { return initial_; }
    const std::set<State>& accepting() const { return accepting_; }
    bool is_accepting(State q) const { return accepting_.count(q) > 0; }

    std::optional<State> step(State q, Symbol a) const;
    std::optional<State> run_from(State q, const Word& w) const;
    bool is_complete() const;
    std::size_t num_transitions() const { return num_transitions_; }
    /// Materialized transition list, sorted by (src, symbol).
    std::vector<DfaTransition> transitions() const;

private:
    AlphabetRef alphabet_;
    std::vector<std::string> names_;
    State initial_ = 0;
    std::set<State> accepting_;
    std::vector<State> delta_;  // dense, names_.size() * alphabet size, kNoState = absent
    std::size_t num_transitions_ = 0;
};

/// Deterministic generalized automaton: word-labeled edges consumed by exact
/// factorization; the outgoing labels of each state form a prefix-free set.
class Dga {
public:
    explicit Dga(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {}

    State add_state(std::string name);
    void add_edge(State src, Word label, State dst);
    void set_initial(State q);
    void add_accepting(State q);

    const Alphabet& alphabet() const { return *alphabet_; }
    const AlphabetRef& alphabet_ref() const { return alphabet_; }
    std::size_t num_states() const { return names_.size(); }
    const std::string& state_name(State q) const;
    const std::vector<std::string>& state_names() const { return names_; }
    std::optional<State> find_state(std::string_view name) const;
    State initial() const { return initial_; }
    const std::set<State>& accepting() const { return accepting_; }
    bool is_accepting(State q) const { return accepting_.count(q) > 0; }

    const std::vector<WordTransition>& edges() const;
    std::vector<const WordTransition*> out_edges(State q) const;

private:
    AlphabetRef alphabet_;
    std::vector<std::string> names_;
    State initial_ = 0;
    std::set<State> accepting_;
    mutable std::vector<WordTransition> edges_;
    mutable bool sorted_ = true;
};

/// Every violated invariant, one message each; empty means valid.
std::vector<std::string> validate(const Dsa& a);
std::vector<std::string> validate(const Dfa& m);
std::vector<std::string> validate(const Dga& h);

/// states + transitions + summed label lengths, the size measure used for all
/// automata kinds (DFA edges count 1 letter each).
std::size_t total_size(const Dsa& a);
std::size_t total_size(const Dfa& m);
std::size_t total_size(const Dga& h);

}  // namespace sra
