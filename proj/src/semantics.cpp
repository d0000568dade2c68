#include "sra/semantics.hpp"

#include "sra/errors.hpp"

namespace sra {

std::set<Word> out_labels(const Dsa& a, State q) {
    if (q >= a.num_states())
        throw Error("unknown state id " + std::to_string(q));
    std::set<Word> labels;
    for (const auto* t : a.out_transitions(q))
        labels.insert(t->label);
    return labels;
}

DsaRunner::DsaRunner(const Dsa& a) : dsa_(&a) {
    matchers_.reserve(a.num_states());
    out_.resize(a.num_states());
    for (State q = 0; q < a.num_states(); ++q) {
        std::vector<Word> labels;
        for (const auto* t : a.out_transitions(q)) {
            out_[q].push_back(*t);
            labels.push_back(t->label);
        }
        matchers_.emplace_back(labels, a.alphabet().size());
    }
}

std::optional<std::pair<Move, Word>> DsaRunner::find_move(State q, const Word& input) const {
    if (q >= dsa_->num_states())
        throw Error("unknown state id " + std::to_string(q));
    const PrefixMatcher& matcher = matchers_[q];
    std::uint32_t node = matcher.root();
    for (std::size_t i = 0; i < input.size(); ++i) {
        node = matcher.step(node, input[i]);
        int hit = matcher.longest_label_suffix(node);
        if (hit >= 0) {
            Move move;
            move.transition = out_[q][static_cast<std::size_t>(hit)];
            move.consumed.assign(input.begin(), input.begin() + i + 1);
            Word remaining(input.begin() + i + 1, input.end());
            return std::make_pair(std::move(move), std::move(remaining));
        }
    }
    return std::nullopt;
}

Run DsaRunner::run_from(State q, const Word& w) const {
    Run r;
    r.start = q;
    Word rest = w;
    State cur = q;
    while (true) {
        auto next = find_move(cur, rest);
        if (!next)
            break;
        cur = next->first.transition.dst;
        r.moves.push_back(std::move(next->first));
        rest = std::move(next->second);
    }
    r.residual = std::move(rest);
    r.end_state = cur;
    r.accepted = dsa_->is_accepting(cur) && r.residual.empty();
    return r;
}

bool DsaRunner::accepts(const Word& w) const {
    return run(w).accepted;
}

std::optional<std::pair<Move, Word>> find_move(const Dsa& a, State q, const Word& input) {
    return DsaRunner(a).find_move(q, input);
}

Run run(const Dsa& a, const Word& w) {
    return DsaRunner(a).run(w);
}

bool accepts(const Dsa& a, const Word& w) {
    return DsaRunner(a).accepts(w);
}

}  // namespace sra
