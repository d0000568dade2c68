#include "sra/generalized.hpp"

#include <algorithm>
#include <functional>

#include "sra/errors.hpp"

namespace sra {

bool dga_accepts(const Dga& h, const Word& w) {
    State cur = h.initial();
    std::size_t pos = 0;
    while (pos < w.size()) {
        const WordTransition* match = nullptr;
        for (const auto* e : h.out_edges(cur )) {
            if (e->label.size() <= w.size() - pos &&
                std::equal(e->label.begin(), e->label.end(), w.begin() + pos)) {
                match = e;  // unique by prefix-freeness
                break;
            }
        }
        if (!match)
            return false;
        cur = match->dst;
        pos += match->label.size();
    }
    return h.is_accepting(cur);
}

Dga dga_suppress(const Dga& h, const std::set<State>& s) {
    for (State q : s) {
        if (q >= h.num_states())
            throw PreconditionError("unknown state id " + std::to_string(q));
        if (q == h.initial())
            throw PreconditionError("cannot suppress the initial state '" + h.state_name(q) + "'");
        if (h.is_accepting(q))
            throw PreconditionError("cannot suppress the accepting state '" + h.state_name(q) + "'");
    }
    for (const auto& e : h.edges())
        if (e.src == e.dst && s.count(e.src))
            throw PreconditionError("cannot suppress '" + h.state_name(e.src) + "': it has a self-loop");

    // The subgraph induced on s must be acyclic, otherwise the elimination
    // order would matter (and some paths would have no finite replacement).
    {
        std::map<State, std::vector<State>> succ;
        for (const auto& e : h.edges())
            if (s.count(e.src) && s.count(e.dst))
                succ[e.src].push_back(e.dst);
        std::map<State, int> mark;  // 0 new, 1 in progress, 2 done
        std::function<void(State)> visit = [&](State q) {
            mark[q] = 1;
            for (State r : succ[q]) {
                if (mark[r] == 1)
                    throw PreconditionError("suppression set contains a cycle through '" +
                                            h.state_name(q) + "'");
                if (mark[r] == 0)
                    visit(r);
            }
            mark[q] = 2;
        };
        for (State q : s)
            if (mark[q] == 0)
                visit(q);
    }

    std::vector<WordTransition> edges = h.edges();
    for (State x : s) {
        std::vector<WordTransition> incoming, outgoing, rest;
        for (auto& e : edges) {
            if (e.dst == x)
                incoming.push_back(e);
            else if (e.src == x)
                outgoing.push_back(e);
            else
                rest.push_back(e);
        }
        for (const auto& in : incoming)
            for (const auto& out : outgoing) {
                Word joined = in.label;
                joined.insert(joined.end(), out.label.begin(), out.label.end());
                rest.push_back(WordTransition{in.src, std::move(joined), out.dst});
            }
        edges = std::move(rest);
    }

    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Dga out(h.alphabet_ref());
    std::vector<State> remap(h.num_states(), kNoState);
    for (State q = 0; q < h.num_states(); ++q)
        if (!s.count(q))
            remap[q] = out.add_state(h.state_name(q));
    for (const auto& e : edges)
        out.add_edge(remap[e.src], e.label, remap[e.dst]);
    out.set_initial(remap[h.initial()]);
    for (State q : h.accepting())
        out.add_accepting(remap[q]);

    auto violations = validate(out);
    if (!violations.empty()) {
        std::string message = "suppression broke determinism:";
        for (const auto& v : violations)
            message += "\n  " + v;
        throw Error(message);
    }
    return out;
}

}  // namespace sra
