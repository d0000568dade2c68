#include "sra/automata.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "sra/errors.hpp"

namespace sra {

namespace {

void check_state_name(const std::string& name) {
    if (name.empty())
        throw Error("state name must be non-empty");
    for (char c : name)
        if (std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == ':')
            throw Error("state name '" + name + "' contains a reserved character");
}

void check_label_symbols(const Alphabet& alphabet, const Word& label) {
    for (Symbol s : label)
        if (s >= alphabet.size())
            throw Error("label references unknown symbol id " + std::to_string(s));
}

std::optional<State> find_name(const std::vector<std::string>& names, std::string_view name) {
    for (State q = 0; q < names.size(); ++q)
        if (names[q] == name)
            return q;
    return std::nullopt;
}

void check_duplicate_names(const std::vector<std::string>& names, std::vector<std::string>& out) {
    std::unordered_set<std::string> seen;
    for (const auto& n : names)
        if (!seen.insert(n).second)
            out.push_back("duplicate state name '" + n + "'");
}

}  // namespace

// ---------------------------------------------------------------------------
// Dsa

State Dsa::add_state(std::string name) {
    check_state_name(name);
    names_.push_back(std::move(name));
    return static_cast<State>(names_.size() - 1);
}

void Dsa::add_transition(State src, Word label, State dst) {
    if (src >= names_.size() || dst >= names_.size())
        throw Error("transition endpoint out of range");
    check_label_symbols(*alphabet_, label);
    transitions_.push_back(WordTransition{src, std::move(label), dst});
    sorted_ = false;
}

void Dsa::set_initial(State q) {
    if (q >= names_.size())
        throw Error("initial state out of range");
    initial_ = q;
}

void Dsa::add_accepting(State q) {
    if (q >= names_.size())
        throw Error("accepting state out of range");
    accepting_.insert(q);
}

const std::string& Dsa::state_name(State q) const {
    if (q >= names_.size())
        throw Error("state id " + std::to_string(q) + " out of range");
    return names_[q];
}

std::optional<State> Dsa::find_state(std::string_view name) const {
    return find_name(names_, name);
}

const std::vector<WordTransition>& Dsa::transitions() const {
    if (!sorted_) {
        std::sort(transitions_.begin(), transitions_.end());
        sorted_ = true;
    }
    return transitions_;
}

std::vector<const WordTransition*> Dsa::out_transitions(State q) const {
    std::vector<const WordTransition*> out;
    for (const auto& t : transitions())
        if (t.src == q)
            out.push_back(&t);
    return out;
}

// ---------------------------------------------------------------------------
// Dfa

State Dfa::add_state(std::string name) {
    check_state_name(name);
    names_.push_back(std::move(name));
    delta_.resize(names_.size() * alphabet_->size(), kNoState);
    return static_cast<State>(names_.size() - 1);
}

void Dfa::add_transition(State src, Symbol symbol, State dst) {
    if (src >= names_.size() || dst >= names_.size())
        throw Error("transition endpoint out of range");
    if (symbol >= alphabet_->size())
        throw Error("transition references unknown symbol id " + std::to_string(symbol));
    State& cell = delta_[src * alphabet_->size() + symbol];
    if (cell != kNoState)
        throw Error("state '" + names_[src] + "' already has a transition on '" +
                    alphabet_->text(symbol) + "'");
    cell = dst;
    ++num_transitions_;
}

void Dfa::set_initial(State q) {
    if (q >= names_.size())
        throw Error("initial state out of range");
    initial_ = q;
}

void Dfa::add_accepting(State q) {
    if (q >= names_.size())
        throw Error("accepting state out of range");
    accepting_.insert(q);
}

const std::string& Dfa::state_name(State q) const {
    if (q >= names_.size())
        throw Error("state id " + std::to_string(q) + " out of range");
    return names_[q];
}

std::optional<State> Dfa::find_state(std::string_view name) const {
    return find_name(names_, name);
}

std::optional<State> Dfa::step(State q, Symbol a) const {
    if (q >= names_.size() || a >= alphabet_->size())
        throw Error("step argument out of range");
    State dst = delta_[q * alphabet_->size() + a];
    if (dst == kNoState)
        return std::nullopt;
    return dst;
}

std::optional<State> Dfa::run_from(State q, const Word& w) const {
    std::optional<State> cur = q;
    for (Symbol a : w) {
        cur = step(*cur, a);
        if (!cur)
            return std::nullopt;
    }
    return cur;
}

bool Dfa::is_complete() const {
    return num_transitions_ == names_.size() * alphabet_->size();
}

std::vector<DfaTransition> Dfa::transitions() const {
    std::vector<DfaTransition> out;
    out.reserve(num_transitions_);
    for (State q = 0; q < names_.size(); ++q)
        for (Symbol a = 0; a < alphabet_->size(); ++a) {
            State dst = delta_[q * alphabet_->size() + a];
            if (dst != kNoState)
                out.push_back(DfaTransition{q, a, dst});
        }
    return out;
}

// ---------------------------------------------------------------------------
// Dga

State Dga::add_state(std::string name) {
    check_state_name(name);
    names_.push_back(std::move(name));
    return static_cast<State>(names_.size() - 1);
}

void Dga::add_edge(State src, Word label, State dst) {
    if (src >= names_.size() || dst >= names_.size())
        throw Error("edge endpoint out of range");
    check_label_symbols(*alphabet_, label);
    edges_.push_back(WordTransition{src, std::move(label), dst});
    sorted_ = false;
}

void Dga::set_initial(State q) {
    if (q >= names_.size())
        throw Error("initial state out of range");
    initial_ = q;
}

void Dga::add_accepting(State q) {
    if (q >= names_.size())
        throw Error("accepting state out of range");
    accepting_.insert(q);
}

const std::string& Dga::state_name(State q) const {
    if (q >= names_.size())
        throw Error("state id " + std::to_string(q) + " out of range");
    return names_[q];
}

std::optional<State> Dga::find_state(std::string_view name) const {
    return find_name(names_, name);
}

const std::vector<WordTransition>& Dga::edges() const {
    if (!sorted_) {
        std::sort(edges_.begin(), edges_.end());
        sorted_ = true;
    }
    return edges_;
}

std::vector<const WordTransition*> Dga::out_edges(State q) const {
    std::vector<const WordTransition*> out;
    for (const auto& e : edges())
        if (e.src == q)
            out.push_back(&e);
    return out;
}

// ---------------------------------------------------------------------------
// Validation and size

std::vector<std::string> validate(const Dsa& a) {
    std::vector<std::string> violations;
    check_duplicate_names(a.state_names(), violations);
    if (a.num_states() == 0)
        violations.push_back("automaton has no states");
    std::map<std::pair<State, Word>, State> seen;
    for (const auto& t : a.transitions()) {
        if (t.label.empty())
            violations.push_back("empty label on a transition out of '" + a.state_name(t.src) + "'");
        auto [it, inserted] = seen.emplace(std::make_pair(t.src, t.label), t.dst);
        if (!inserted && it->second != t.dst)
            violations.push_back("determinism violation at '" + a.state_name(t.src) + "': label '" +
                                 format_word(a.alphabet(), t.label) + "' leads to both '" +
                                 a.state_name(it->second) + "' and '" + a.state_name(t.dst) + "'");
        else if (!inserted)
            violations.push_back("duplicate transition ('" + a.state_name(t.src) + "', '" +
                                 format_word(a.alphabet(), t.label) + "', '" + a.state_name(t.dst) + "')");
    }
    return violations;
}

std::vector<std::string> validate(const Dfa& m) {
    std::vector<std::string> violations;
    check_duplicate_names(m.state_names(), violations);
    if (m.num_states() == 0)
        violations.push_back("automaton has no states");
    // (state, symbol) uniqueness is structural in the dense table.
    return violations;
}

std::vector<std::string> validate(const Dga& h) {
    std::vector<std::string> violations;
    check_duplicate_names(h.state_names(), violations);
    if (h.num_states() == 0)
        violations.push_back("automaton has no states");
    for (State q = 0; q < h.num_states(); ++q) {
        auto out = h.out_edges(q);
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (out[i]->label.empty())
                violations.push_back("empty label on an edge out of '" + h.state_name(q) + "'");
            for (std::size_t j = i + 1; j < out.size(); ++j) {
                if (out[i]->label == out[j]->label) {
                    violations.push_back("duplicate outgoing label '" +
                                         format_word(h.alphabet(), out[i]->label) + "' at '" +
                                         h.state_name(q) + "'");
                } else if (is_prefix(out[i]->label, out[j]->label) ||
                           is_prefix(out[j]->label, out[i]->label)) {
                    violations.push_back("prefix-freeness violation at '" + h.state_name(q) + "': '" +
                                         format_word(h.alphabet(), out[i]->label) + "' vs '" +
                                         format_word(h.alphabet(), out[j]->label) + "'");
                }
            }
        }
    }
    return violations;
}

std::size_t total_size(const Dsa& a) {
    std::size_t size = a.num_states() + a.transitions().size();
    for (const auto& t : a.transitions())
        size += t.label.size();
    return size;
}

std::size_t total_size(const Dfa& m) {
    return m.num_states() + 2 * m.num_transitions();
}

std::size_t total_size(const Dga& h) {
    std::size_t size = h.num_states() + h.edges().size();
    for (const auto& e : h.edges())
        size += e.label.size();
    return size;
}

}  // namespace sra
