#include "sra/derivation.hpp"

#include <algorithm>
#include <optional>

#include "sra/dfa_ops.hpp"
#include "sra/semantics.hpp"
#include "sra/tracking.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sra {

// ---------------------------------------------------------------------------
// SuffixTrie

void SuffixTrie::insert(const Word& w, State target) {
    std::uint32_t node = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        auto found = nodes_[node].children.find(*it);
        if (found == nodes_[node].children.end()) {
            std::uint32_t child = static_cast<std::uint32_t>(nodes_.size());
            nodes_[node].children.emplace(*it, child);
            nodes_.emplace_back();
            node = child;
        } else {
            node = found->second;
        }
    }
    nodes_[node].word_index = static_cast<int>(words_.size());
    words_.emplace_back(w, target);
}

std::optional<SuffixTrie::Hit> SuffixTrie::longest_suffix(const Word& w) const {
    const Node* node = &nodes_[0];
    std::optional<Hit> best;
    for (std::size_t depth = 0;; ++depth) {
        if (node->word_index >= 0) {
            const auto& [word, target] = words_[static_cast<std::size_t>(node->word_index)];
            best = Hit{&word, target};
        }
        if (depth == w.size())
            return best;
        auto it = node->children.find(w[w.size() - 1 - depth]);
        if (it == node->children.end())
            return best;
        node = &nodes_[it->second];
    }
}

// ---------------------------------------------------------------------------
// Simple-word enumeration

namespace {

/// Depth-first walk from p emitting every simple word modulo s. Interior
/// states must avoid s, never repeat, and differ from p; only the start state
/// may recur, and only as the final state.
void enumerate_simple_words(const Dfa& m, State p, const std::set<State>& s,
                            const DerivationLimits& limits,
                            std::map<State, std::vector<Word>>& by_target) {
    std::size_t count = 0;
    std::vector<char> interior(m.num_states(), 0);
    Word word;

    auto rec = [&](auto&& self, State cur) -> void {
        for (Symbol a = 0; a < m.alphabet().size(); ++a) {
            auto dst = m.step(cur, a);
            if (!dst)
                continue;
            if (*dst != p && interior[*dst])
                continue;  // would repeat an interior state
            word.push_back(a);
            if (++count > limits.max_simple_words)
                throw CapExceededError(limits.max_simple_words);
            by_target[*dst].push_back(word);
            if (*dst != p && !s.count(*dst)) {
                interior[*dst] = 1;
                self(self, *dst);
                interior[*dst] = 0;
            }
            word.pop_back();
        }
    };
    rec(rec, p);

    for (auto& [target, words] : by_target)
        std::sort(words.begin(), words.end(), LengthLexLess{});
}

std::vector<Word> merge_sorted(const std::map<State, std::vector<Word>>& by_target) {
    std::vector<Word> all;
    for (const auto& [target, words] : by_target)
        all.insert(all.end(), words.begin(), words.end());
    std::sort(all.begin(), all.end(), LengthLexLess{});
    return all;
}

}  // namespace

std::vector<Word> simple_words(const Dfa& m, State p, State q, const std::set<State>& s,
                               const DerivationLimits& limits) {
    if (p >= m.num_states() || q >= m.num_states())
        throw Error("unknown state id");
    std::map<State, std::vector<Word>> by_target;
    enumerate_simple_words(m, p, s, limits, by_target);
    auto it = by_target.find(q);
    return it == by_target.end() ? std::vector<Word>{} : it->second;
}

std::vector<Word> all_simple_words(const Dfa& m, State p, const std::set<State>& s,
                                   const DerivationLimits& limits) {
    if (p >= m.num_states())
        throw Error("unknown state id");
    std::map<State, std::vector<Word>> by_target;
    enumerate_simple_words(m, p, s, limits, by_target);
    return merge_sorted(by_target);
}

std::vector<Word> out_set(const Dfa& m, State p, const std::set<State>& s,
                          const DerivationLimits& limits) {
    if (p >= m.num_states())
        throw Error("unknown state id");
    std::map<State, std::vector<Word>> by_target;
    enumerate_simple_words(m, p, s, limits, by_target);
    std::map<State, std::vector<Word>> in_s;
    for (auto& [target, words] : by_target)
        if (s.count(target))
            in_s.emplace(target, std::move(words));
    return merge_sorted(in_s);
}

// ---------------------------------------------------------------------------
// CandidateSet

CandidateSet::CandidateSet(const Dfa& dfa, std::set<State> states, DerivationLimits limits)
    : dfa_(&dfa), states_(std::move(states)), limits_(limits) {
    for (State p : states_) {
        if (p >= dfa.num_states())
            throw Error("unknown state id " + std::to_string(p));
        PerSource source;
        enumerate_simple_words(dfa, p, states_, limits_, source.by_target);
        for (const auto& [target, words] : source.by_target)
            for (const auto& w : words)
                source.trie.insert(w, target);
        sources_.emplace(p, std::move(source));
    }
}

const CandidateSet::PerSource& CandidateSet::source(State p) const {
    auto it = sources_.find(p);
    if (it == sources_.end())
        throw Error("state '" + dfa_->state_name(p) + "' is not a member of the candidate set");
    return it->second;
}

const std::vector<Word>& CandidateSet::simple_words(State p, State q) const {
    const auto& by_target = source(p).by_target;
    auto it = by_target.find(q);
    return it == by_target.end() ? empty_ : it->second;
}

std::vector<Word> CandidateSet::all_simple_words(State p) const {
    return merge_sorted(source(p).by_target);
}

std::vector<Word> CandidateSet::out_words(State p) const {
    std::map<State, std::vector<Word>> in_s;
    for (const auto& [target, words] : source(p).by_target)
        if (states_.count(target))
            in_s.emplace(target, words);
    return merge_sorted(in_s);
}

std::optional<SuffixTrie::Hit> CandidateSet::longest_simple_suffix(State p, const Word& w) const {
    return source(p).trie.longest_suffix(w);
}

std::optional<SuffixTrie::Hit> CandidateSet::shortest_out_suffix(State p, const Word& w) const {
    return source(p).trie.shortest_suffix_if(w, [&](State target) { return states_.count(target) > 0; });
}

// ---------------------------------------------------------------------------
// Suffix compatibility and well-formedness

std::optional<CompatibilityFailure> suffix_compatibility_witness(const CandidateSet& cs,
                                                                 const DfaTransition& t) {
    if (cs.states().count(t.src) || cs.states().count(t.dst))
        return std::nullopt;
    for (State p : cs.states()) {
        for (const Word& sigma : cs.simple_words(p, t.src)) {
            Word extended = sigma;
            extended.push_back(t.symbol);
            auto hit = cs.longest_simple_suffix(p, extended);
            if (!hit || hit->target != t.dst)
                return CompatibilityFailure{t, p, sigma};
        }
    }
    return std::nullopt;
}

bool is_suffix_compatible(const Dfa& m, const DfaTransition& t, const std::set<State>& s,
                          const DerivationLimits& limits) {
    CandidateSet cs(m, s, limits);
    return !suffix_compatibility_witness(cs, t).has_value();
}

std::vector<WellFormednessFailure> well_formedness_failures(const CandidateSet& cs, bool first_only) {
    std::vector<WellFormednessFailure> failures;
    for (State p : cs.states()) {
        std::vector<std::pair<Word, State>> escapes;
        for (const auto& [target, words] : cs.source(p).by_target)
            if (!cs.states().count(target))
                for (const auto& w : words)
                    escapes.emplace_back(w, target);
        std::sort(escapes.begin(), escapes.end(), [](const auto& x, const auto& y) {
            return length_lex_less(x.first, y.first);
        });
        for (const auto& [beta, escape_target] : escapes) {
            auto hit = cs.shortest_out_suffix(p, beta);
            if (hit) {
                failures.push_back(WellFormednessFailure{p, hit->target, escape_target, *hit->word, beta});
                if (first_only)
                    return failures;
            }
        }
    }
    return failures;
}

bool is_well_formed_set(const Dfa& m, const std::set<State>& s, const DerivationLimits& limits) {
    CandidateSet cs(m, s, limits);
    return well_formedness_failures(cs, true).empty();
}

namespace {

SuffixTrackingReport check_suffix_tracking(const CandidateSet& cs) {
    const Dfa& m = cs.dfa();
    SuffixTrackingReport report;
    report.contains_initial = cs.states().count(m.initial()) > 0;
    for (State q : m.accepting())
        if (!cs.states().count(q))
            report.missing_accepting.push_back(q);
    for (const auto& t : m.transitions())
        if (auto failure = suffix_compatibility_witness(cs, t))
            report.incompatible.push_back(std::move(*failure));
    report.ill_formed = well_formedness_failures(cs, false);
    return report;
}

}  // namespace

std::string SuffixTrackingReport::describe(const Dfa& m) const {
    if (ok())
        return "suffix-tracking";
    std::string out = "not suffix-tracking:";
    if (!contains_initial)
        out += "\n  initial state '" + m.state_name(m.initial()) + "' is not in the set";
    for (State q : missing_accepting)
        out += "\n  accepting state '" + m.state_name(q) + "' is not in the set";
    for (const auto& f : incompatible)
        out += "\n  transition " + m.state_name(f.transition.src) + " -" +
               m.alphabet().text(f.transition.symbol) + "-> " + m.state_name(f.transition.dst) +
               " is not suffix-compatible: from '" + m.state_name(f.p) + "', simple word '" +
               format_word(m.alphabet(), f.sigma) +
               "' extended by the letter has no simple-word suffix landing in SW(" +
               m.state_name(f.p) + ", " + m.state_name(f.transition.dst) + ")";
    for (const auto& f : ill_formed)
        out += "\n  not well-formed: '" + format_word(m.alphabet(), f.alpha) + "' (" +
               m.state_name(f.p) + " -> " + m.state_name(f.q) + ") is a suffix of '" +
               format_word(m.alphabet(), f.beta) + "' (" + m.state_name(f.p) + " -> " +
               m.state_name(f.q_escape) + ")";
    return out;
}

SuffixTrackingReport check_suffix_tracking(const Dfa& m, const std::set<State>& s,
                                           const DerivationLimits& limits) {
    CandidateSet cs(m, s, limits);
    return check_suffix_tracking(cs);
}

bool is_suffix_tracking(const Dfa& m, const std::set<State>& s, const DerivationLimits& limits) {
    return check_suffix_tracking(m, s, limits).ok();
}

// ---------------------------------------------------------------------------
// Induced DSA

Dsa induced_dsa(const CandidateSet& cs) {
    const Dfa& m = cs.dfa();
    if (!cs.states().count(m.initial()))
        throw PreconditionError("initial state '" + m.state_name(m.initial()) +
                                "' is not in the candidate set");
    for (State q : m.accepting())
        if (!cs.states().count(q))
            throw PreconditionError("accepting state '" + m.state_name(q) +
                                    "' is not in the candidate set");

    Dsa a(m.alphabet_ref());
    std::vector<State> remap(m.num_states(), kNoState);
    for (State q : cs.states())
        remap[q] = a.add_state(m.state_name(q));
    for (State p : cs.states())
        for (const auto& [target, words] : cs.source(p).by_target)
            if (cs.states().count(target))
                for (const auto& w : words)
                    a.add_transition(remap[p], w, remap[target]);
    a.set_initial(remap[m.initial()]);
    for (State q : m.accepting())
        a.add_accepting(remap[q]);
    return a;
}

Dsa induced_dsa(const Dfa& m, const std::set<State>& s, const DerivationLimits& limits) {
    CandidateSet cs(m, s, limits);
    return induced_dsa(cs);
}

// ---------------------------------------------------------------------------
// Useless transitions

UselessnessReport classify_useless(const Dsa& a) {
    UselessnessReport report;
    for (State q = 0; q < a.num_states(); ++q) {
        auto out = a.out_transitions(q);
        for (const auto* t : out) {
            std::vector<const WordTransition*> strict_suffixes;
            for (const auto* u : out)
                if (u != t && is_proper_suffix(u->label, t->label))
                    strict_suffixes.push_back(u);
            bool to_same = std::any_of(strict_suffixes.begin(), strict_suffixes.end(),
                                       [&](const WordTransition* u) { return u->dst == t->dst; });
            if (to_same) {
                bool useful = false;
                for (const auto* b : strict_suffixes)
                    for (const auto* g : strict_suffixes)
                        if (b->dst == t->dst && g->dst != t->dst && is_suffix(b->label, g->label))
                            useful = true;
                (useful ? report.useful_bigger_suffix : report.bigger_suffix_useless).push_back(*t);
                continue;
            }
            if (t->dst == q && !a.is_accepting(q)) {
                bool anchors = false;
                for (std::size_t len = 1; len <= t->label.size() && !anchors; ++len) {
                    Word suffix(t->label.end() - static_cast<std::ptrdiff_t>(len), t->label.end());
                    for (const auto* u : out)
                        if (u != t && is_prefix(suffix, u->label)) {
                            anchors = true;
                            break;
                        }
                }
                if (!anchors)
                    report.useless_self_loops.push_back(*t);
            }
        }
    }
    return report;
}

namespace {

Dsa without_transition(const Dsa& a, const WordTransition& t) {
    Dsa out(a.alphabet_ref());
    for (State q = 0; q < a.num_states(); ++q)
        out.add_state(a.state_name(q));
    for (const auto& u : a.transitions())
        if (!(u == t))
            out.add_transition(u.src, u.label, u.dst);
    out.set_initial(a.initial());
    for (State q : a.accepting())
        out.add_accepting(q);
    return out;
}

/// Removal order within a pass: longest label first, then label, source and
/// target ascending. Any order reaches the same fixpoint; this one is fixed
/// for reproducibility.
const WordTransition& pick_removal(const std::vector<WordTransition>& candidates) {
    return *std::min_element(candidates.begin(), candidates.end(),
                             [](const WordTransition& x, const WordTransition& y) {
                                 if (x.label.size() != y.label.size())
                                     return x.label.size() > y.label.size();
                                 return std::tie(x.label, x.src, x.dst) < std::tie(y.label, y.src, y.dst);
                             });
}

}  // namespace

Dsa remove_useless_bigger_suffix(const Dsa& a) {
    Dsa current = a;
    while (true) {
        auto report = classify_useless(current);
        if (report.bigger_suffix_useless.empty())
            return current;
        current = without_transition(current, pick_removal(report.bigger_suffix_useless));
    }
}

Dsa remove_useless_self_loops(const Dsa& a) {
    if (!is_well_formed_dsa(a))
        throw PreconditionError("self-loop removal requires a well-formed DSA");
    if (!classify_useless(a).bigger_suffix_useless.empty())
        throw PreconditionError("self-loop removal requires all useless bigger-suffix transitions gone");
    Dsa current = a;
    while (true) {
        auto report = classify_useless(current);
        if (report.useless_self_loops.empty())
            return current;
        current = without_transition(current, pick_removal(report.useless_self_loops));
    }
}

Dsa remove_useless(const Dsa& a) {
    Dsa current = remove_useless_bigger_suffix(a);
    if (is_well_formed_dsa(current))
        current = remove_useless_self_loops(current);
    return current;
}

// ---------------------------------------------------------------------------
// Well-formed DSAs

std::optional<WellFormedDsaWitness> well_formed_dsa_witness(const Dsa& a) {
    for (State q = 0; q < a.num_states(); ++q) {
        std::vector<Word> labels;
        for (const auto* t : a.out_transitions(q))
            labels.push_back(t->label);
        std::sort(labels.begin(), labels.end(), LengthLexLess{});
        for (const auto& alpha : labels)
            for (const auto& beta : labels) {
                if (alpha == beta)
                    continue;
                for (std::size_t len = 1; len + 1 <= beta.size(); ++len) {
                    Word prefix(beta.begin(), beta.begin() + static_cast<std::ptrdiff_t>(len));
                    if (is_suffix(alpha, prefix))
                        return WellFormedDsaWitness{q, alpha, beta, prefix};
                }
            }
    }
    return std::nullopt;
}

bool is_well_formed_dsa(const Dsa& a) {
    return !well_formed_dsa_witness(a).has_value();
}

// ---------------------------------------------------------------------------
// Derivation

namespace {

Dsa derive_dsa(const CandidateSet& cs, bool force) {
    auto report = check_suffix_tracking(cs);
    if (!report.ok() && !force)
        throw NotSuffixTrackingError(report.describe(cs.dfa()), std::move(report));
    return remove_useless(induced_dsa(cs));
}

}  // namespace

Dsa derive_dsa(const Dfa& m, const std::set<State>& s, bool force, const DerivationLimits& limits) {
    CandidateSet cs(m, s, limits);
    return derive_dsa(cs, force);
}

std::vector<std::set<State>> enumerate_suffix_tracking_sets_serial(const Dfa& m,
                                                                   const DerivationLimits& limits) {
    if (m.num_states() > limits.max_enumeration_states)
        throw StateLimitError(m.num_states(), limits.max_enumeration_states);

    std::set<State> base{m.initial()};
    base.insert(m.accepting().begin(), m.accepting().end());
    std::vector<State> free;
    for (State q = 0; q < m.num_states(); ++q)
        if (!base.count(q))
            free.push_back(q);

    std::vector<std::set<State>> found;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
        std::set<State> candidate = base;
        for (std::size_t bit = 0; bit < free.size(); ++bit)
            if (mask & (std::uint64_t{1} << bit))
                candidate.insert(free[bit]);
        if (is_suffix_tracking(m, candidate, limits))
            found.push_back(std::move(candidate));
    }
    std::sort(found.begin(), found.end(), [](const std::set<State>& x, const std::set<State>& y) {
        if (x.size() != y.size())
            return x.size() < y.size();
        return x < y;
    });
    return found;
}

std::vector<std::set<State>> enumerate_suffix_tracking_sets(const Dfa& m,
                                                            const DerivationLimits& limits) {
#ifndef _OPENMP
    return enumerate_suffix_tracking_sets_serial(m, limits);
#else
    if (m.num_states() > limits.max_enumeration_states)
        throw StateLimitError(m.num_states(), limits.max_enumeration_states);

    std::set<State> base{m.initial()};
    base.insert(m.accepting().begin(), m.accepting().end());
    std::vector<State> free;
    for (State q = 0; q < m.num_states(); ++q)
        if (!base.count(q))
            free.push_back(q);

    const std::int64_t masks = std::int64_t{1} << free.size();
    std::vector<std::vector<std::set<State>>> per_thread(
        static_cast<std::size_t>(omp_get_max_threads()));
    std::exception_ptr first_error;
#pragma omp parallel
    {
        auto& mine = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 4)
        for (std::int64_t mask = 0; mask < masks; ++mask) {
            try {
                std::set<State> candidate = base;
                for (std::size_t bit = 0; bit < free.size(); ++bit)
                    if (mask & (std::int64_t{1} << bit))
                        candidate.insert(free[bit]);
                if (is_suffix_tracking(m, candidate, limits))
                    mine.push_back(std::move(candidate));
            } catch (...) {
#pragma omp critical
                if (!first_error)
                    first_error = std::current_exception();
            }
        }
    }
    if (first_error)
        std::rethrow_exception(first_error);

    std::vector<std::set<State>> found;
    for (auto& chunk : per_thread)
        for (auto& s : chunk)
            found.push_back(std::move(s));
    std::sort(found.begin(), found.end(), [](const std::set<State>& x, const std::set<State>& y) {
        if (x.size() != y.size())
            return x.size() < y.size();
        return x < y;
    });
    return found;
#endif
}

namespace {

DerivedChoice best_of(const Dfa& m, const std::vector<std::set<State>>& sets,
                      const std::vector<Dsa>& derived) {
    std::optional<std::size_t> best;
    std::size_t best_size = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        std::size_t size = total_size(derived[i]);
        if (!best || size < best_size || (size == best_size && sets[i].size() < sets[*best].size())) {
            best = i;
            best_size = size;
        }
    }
    if (!best)
        throw Error("no suffix-tracking set found (the full state set always qualifies for a "
                    "complete DFA; is the automaton complete?)");
    return DerivedChoice{sets[*best], derived[*best], best_size};
}

}  // namespace

DerivedChoice best_derived_dsa_serial(const Dfa& m, const DerivationLimits& limits) {
    auto sets = enumerate_suffix_tracking_sets_serial(m, limits);
    std::vector<Dsa> derived;
    derived.reserve(sets.size());
    for (const auto& s : sets)
        derived.push_back(derive_dsa(m, s, false, limits));
    return best_of(m, sets, derived);
}

DerivedChoice best_derived_dsa(const Dfa& m, const DerivationLimits& limits) {
    auto sets = enumerate_suffix_tracking_sets(m, limits);
    std::vector<std::optional<Dsa>> derived(sets.size());
    std::exception_ptr first_error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(sets.size()); ++i) {
        try {
            derived[static_cast<std::size_t>(i)] =
                derive_dsa(m, sets[static_cast<std::size_t>(i)], false, limits);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!first_error)
                first_error = std::current_exception();
        }
    }
    if (first_error)
        std::rethrow_exception(first_error);
    std::vector<Dsa> materialized;
    materialized.reserve(derived.size());
    for (auto& d : derived)
        materialized.push_back(std::move(*d));
    return best_of(m, sets, materialized);
}

Dsa derive_from_tracking(const Dsa& a) {
    if (!is_well_formed_dsa(a))
        throw PreconditionError("derive_from_tracking requires a well-formed DSA");
    auto useless = classify_useless(a);
    if (!useless.bigger_suffix_useless.empty() || !useless.useless_self_loops.empty())
        throw PreconditionError("derive_from_tracking requires a DSA with no useless transitions");

    TrackingDfa tracked = tracking_dfa(a);
    std::set<State> s(tracked.epsilon_state.begin(), tracked.epsilon_state.end());
    CandidateSet cs(tracked.dfa, s);
    auto report = check_suffix_tracking(cs);
    if (!report.ok())
        throw Error("the (q, empty) states of the tracking DFA are unexpectedly not suffix-tracking; " +
                    report.describe(tracked.dfa));
    return derive_dsa(cs, false);
}

}  // namespace sra
