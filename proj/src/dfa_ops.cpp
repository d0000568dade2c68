#include "sra/dfa_ops.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "sra/detail/word_enum.hpp"
#include "sra/errors.hpp"
#include "sra/semantics.hpp"

namespace sra {

namespace {

Dfa copy_dfa(const Dfa& m) {
    Dfa out(m.alphabet_ref());
    for (State q = 0; q < m.num_states(); ++q)
        out.add_state(m.state_name(q));
    for (const auto& t : m.transitions())
        out.add_transition(t.src, t.symbol, t.dst);
    out.set_initial(m.initial());
    for (State q : m.accepting())
        out.add_accepting(q);
    return out;
}

std::string fresh_state_name(const Dfa& m, std::string base) {
    while (m.find_state(base))
        base += '~';
    return base;
}

/// Rebuilds m2 over m1's alphabet by matching symbol texts. Throws if the
/// token sets differ.
Dfa align_alphabet(const Dfa& m1, const Dfa& m2) {
    if (m1.alphabet() == m2.alphabet())
        return copy_dfa(m2);
    if (m1.alphabet().size() != m2.alphabet().size())
        throw Error("automata use different alphabets");
    std::vector<Symbol> remap(m2.alphabet().size());
    for (Symbol s = 0; s < m2.alphabet().size(); ++s) {
        auto mapped = m1.alphabet().find(m2.alphabet().text(s));
        if (!mapped)
            throw Error("automata use different alphabets: no symbol '" + m2.alphabet().text(s) + "'");
        remap[s] = *mapped;
    }
    Dfa out(m1.alphabet_ref());
    for (State q = 0; q < m2.num_states(); ++q)
        out.add_state(m2.state_name(q));
    for (const auto& t : m2.transitions())
        out.add_transition(t.src, remap[t.symbol], t.dst);
    out.set_initial(m2.initial());
    for (State q : m2.accepting())
        out.add_accepting(q);
    return out;
}

std::vector<bool> forward_reachable(const Dfa& m) {
    std::vector<bool> seen(m.num_states(), false);
    std::deque<State> queue{m.initial()};
    seen[m.initial()] = true;
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (Symbol a = 0; a < m.alphabet().size(); ++a)
            if (auto dst = m.step(q, a); dst && !seen[*dst]) {
                seen[*dst] = true;
                queue.push_back(*dst);
            }
    }
    return seen;
}

/// Hopcroft partition refinement on a complete DFA. Returns a block id per
/// state; two states share a block iff their right-languages coincide.
std::vector<std::size_t> hopcroft(const Dfa& m) {
    const std::size_t n = m.num_states();
    const std::size_t k = m.alphabet().size();

    std::vector<std::vector<std::vector<State>>> pre(k, std::vector<std::vector<State>>(n));
    for (State q = 0; q < n; ++q)
        for (Symbol a = 0; a < k; ++a)
            pre[a][*m.step(q, a)].push_back(q);

    std::vector<std::vector<State>> blocks;
    std::vector<std::size_t> block_of(n, 0);
    {
        std::vector<State> acc, rej;
        for (State q = 0; q < n; ++q)
            (m.is_accepting(q) ? acc : rej).push_back(q);
        if (!acc.empty())
            blocks.push_back(std::move(acc));
        if (!rej.empty())
            blocks.push_back(std::move(rej));
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (State q : blocks[b])
                block_of[q] = b;
    }

    std::set<std::pair<std::size_t, Symbol>> worklist;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (Symbol a = 0; a < k; ++a)
            worklist.insert({b, a});

    std::vector<char> marked(n, 0);
    while (!worklist.empty()) {
        auto [splitter, c] = *worklist.begin();
        worklist.erase(worklist.begin());

        std::vector<State> x;
        for (State q : blocks[splitter])
            for (State p : pre[c][q])
                if (!marked[p]) {
                    marked[p] = 1;
                    x.push_back(p);
                }
        if (x.empty())
            continue;

        std::map<std::size_t, std::size_t> hits;
        for (State p : x)
            ++hits[block_of[p]];

        for (auto [b, count] : hits) {
            if (count == blocks[b].size())
                continue;  // not split
            std::vector<State> inside, outside;
            for (State q : blocks[b])
                (marked[q] ? inside : outside).push_back(q);
            std::size_t nb = blocks.size();
            blocks[b] = std::move(outside);
            blocks.push_back(std::move(inside));
            for (State q : blocks[nb])
                block_of[q] = nb;
            for (Symbol a = 0; a < k; ++a) {
                if (worklist.count({b, a}))
                    worklist.insert({nb, a});
                else
                    worklist.insert({blocks[b].size() <= blocks[nb].size() ? b : nb, a});
            }
        }
        for (State p : x)
            marked[p] = 0;
    }
    return block_of;
}

template <class EdgesOf>
bool isomorphic_brute(std::size_t n1, std::size_t n2, State init1, State init2,
                      const std::set<State>& acc1, const std::set<State>& acc2, EdgesOf&& edges_of) {
    if (n1 != n2 || acc1.size() != acc2.size())
        return false;
    if (n1 > 9)
        throw Error("isomorphism fallback limited to 9 states");
    std::vector<State> perm(n1);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (perm[init1] != init2)
            continue;
        bool ok = true;
        for (State q : acc1)
            if (!acc2.count(perm[q])) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        auto mapped = edges_of(1, perm);
        auto expect = edges_of(2, std::vector<State>{});
        if (mapped == expect)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

bool dfa_accepts(const Dfa& m, const Word& w) {
    auto end = m.run_from(m.initial(), w);
    return end && m.is_accepting(*end);
}

Dfa complete(const Dfa& m) {
    if (m.is_complete())
        return copy_dfa(m);
    Dfa out = copy_dfa(m);
    State sink = out.add_state(fresh_state_name(m, "sink"));
    for (State q = 0; q < out.num_states(); ++q)
        for (Symbol a = 0; a < out.alphabet().size(); ++a)
            if (!out.step(q, a))
                out.add_transition(q, a, sink);
    return out;
}

Dfa trim(const Dfa& m) {
    std::vector<bool> forward = forward_reachable(m);

    std::vector<std::vector<State>> rev(m.num_states());
    for (const auto& t : m.transitions())
        rev[t.dst].push_back(t.src);
    std::vector<bool> backward(m.num_states(), false);
    std::deque<State> queue;
    for (State q : m.accepting()) {
        backward[q] = true;
        queue.push_back(q);
    }
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (State p : rev[q])
            if (!backward[p]) {
                backward[p] = true;
                queue.push_back(p);
            }
    }

    std::vector<State> remap(m.num_states(), kNoState);
    Dfa out(m.alphabet_ref());
    for (State q = 0; q < m.num_states(); ++q)
        if ((forward[q] && backward[q]) || q == m.initial())
            remap[q] = out.add_state(m.state_name(q));
    for (const auto& t : m.transitions())
        if (remap[t.src] != kNoState && remap[t.dst] != kNoState && forward[t.src] && backward[t.src] &&
            forward[t.dst] && backward[t.dst])
            out.add_transition(remap[t.src], t.symbol, remap[t.dst]);
    out.set_initial(remap[m.initial()]);
    for (State q : m.accepting())
        if (remap[q] != kNoState)
            out.add_accepting(remap[q]);
    return out;
}

std::vector<std::size_t> equivalence_partition(const Dfa& m) {
    Dfa mc = complete(m);
    return hopcroft(mc);
}

bool states_equivalent(const Dfa& m, State u, State v) {
    if (u >= m.num_states() || v >= m.num_states())
        throw Error("unknown state id");
    auto blocks = equivalence_partition(m);
    return blocks[u] == blocks[v];
}

Dfa minimize(const Dfa& m) {
    Dfa mc = complete(m);

    // Restrict to the reachable part before refining.
    std::vector<bool> reach = forward_reachable(mc);
    Dfa live(mc.alphabet_ref());
    std::vector<State> remap(mc.num_states(), kNoState);
    for (State q = 0; q < mc.num_states(); ++q)
        if (reach[q])
            remap[q] = live.add_state(mc.state_name(q));
    for (const auto& t : mc.transitions())
        if (reach[t.src])
            live.add_transition(remap[t.src], t.symbol, remap[t.dst]);
    live.set_initial(remap[mc.initial()]);
    for (State q : mc.accepting())
        if (reach[q])
            live.add_accepting(remap[q]);

    std::vector<std::size_t> block_of = hopcroft(live);

    // Canonical order: breadth-first over blocks from the initial block,
    // symbols in alphabet order.
    std::size_t num_blocks = *std::max_element(block_of.begin(), block_of.end()) + 1;
    std::vector<State> block_repr(num_blocks, kNoState);
    for (State q = 0; q < live.num_states(); ++q)
        if (block_repr[block_of[q]] == kNoState)
            block_repr[block_of[q]] = q;

    std::vector<State> canonical(num_blocks, kNoState);
    std::vector<std::size_t> order;
    std::deque<std::size_t> queue{block_of[live.initial()]};
    canonical[block_of[live.initial()]] = 0;
    order.push_back(block_of[live.initial()]);
    while (!queue.empty()) {
        std::size_t b = queue.front();
        queue.pop_front();
        for (Symbol a = 0; a < live.alphabet().size(); ++a) {
            std::size_t nb = block_of[*live.step(block_repr[b], a)];
            if (canonical[nb] == kNoState) {
                canonical[nb] = static_cast<State>(order.size());
                order.push_back(nb);
                queue.push_back(nb);
            }
        }
    }

    Dfa out(live.alphabet_ref());
    for (std::size_t i = 0; i < order.size(); ++i)
        out.add_state("s" + std::to_string(i));
    for (std::size_t i = 0; i < order.size(); ++i) {
        State repr = block_repr[order[i]];
        for (Symbol a = 0; a < live.alphabet().size(); ++a)
            out.add_transition(static_cast<State>(i), a, canonical[block_of[*live.step(repr, a)]]);
    }
    out.set_initial(0);
    for (State q : live.accepting())
        out.add_accepting(canonical[block_of[q]]);
    return out;
}

EquivalenceResult equivalent(const Dfa& m1, const Dfa& m2) {
    Dfa a = complete(m1);
    Dfa b = complete(align_alphabet(m1, m2));
    const std::size_t k = a.alphabet().size();

    struct Node {
        State qa, qb;
        std::size_t parent;
        Symbol via;
    };
    std::vector<Node> nodes;
    std::map<std::pair<State, State>, std::size_t> seen;
    std::deque<std::size_t> queue;

    auto push = [&](State qa, State qb, std::size_t parent, Symbol via) {
        auto key = std::make_pair(qa, qb);
        if (seen.count(key))
            return;
        seen.emplace(key, nodes.size());
        nodes.push_back(Node{qa, qb, parent, via});
        queue.push_back(nodes.size() - 1);
    };

    push(a.initial(), b.initial(), static_cast<std::size_t>(-1), 0);
    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        if (a.is_accepting(nodes[i].qa) != b.is_accepting(nodes[i].qb)) {
            Word cex;
            for (std::size_t j = i; nodes[j].parent != static_cast<std::size_t>(-1); j = nodes[j].parent)
                cex.push_back(nodes[j].via);
            std::reverse(cex.begin(), cex.end());
            return {false, std::move(cex)};
        }
        for (Symbol s = 0; s < k; ++s)
            push(*a.step(nodes[i].qa, s), *b.step(nodes[i].qb, s), i, s);
    }
    return {true, std::nullopt};
}

bool isomorphic(const Dfa& m1, const Dfa& m2) {
    if (!(m1.alphabet() == m2.alphabet()) || m1.num_states() != m2.num_states() ||
        m1.num_transitions() != m2.num_transitions() || m1.accepting().size() != m2.accepting().size())
        return false;
    const std::size_t k = m1.alphabet().size();

    // Lockstep BFS over both automata; determinism makes the pairing forced.
    std::vector<State> map12(m1.num_states(), kNoState), map21(m2.num_states(), kNoState);
    std::deque<std::pair<State, State>> queue{{m1.initial(), m2.initial()}};
    map12[m1.initial()] = m2.initial();
    map21[m2.initial()] = m1.initial();
    std::size_t paired = 1;
    while (!queue.empty()) {
        auto [u, v] = queue.front();
        queue.pop_front();
        if (m1.is_accepting(u) != m2.is_accepting(v))
            return false;
        for (Symbol a = 0; a < k; ++a) {
            auto du = m1.step(u, a);
            auto dv = m2.step(v, a);
            if (du.has_value() != dv.has_value())
                return false;
            if (!du)
                continue;
            if (map12[*du] == kNoState && map21[*dv] == kNoState) {
                map12[*du] = *dv;
                map21[*dv] = *du;
                ++paired;
                queue.emplace_back(*du, *dv);
            } else if (map12[*du] != *dv) {
                return false;
            }
        }
    }
    if (paired == m1.num_states())
        return true;

    // Unreachable leftovers: fall back to brute force on small automata.
    auto edges_of = [&](int which, const std::vector<State>& perm) {
        std::set<std::tuple<State, Symbol, State>> edges;
        const Dfa& m = which == 1 ? m1 : m2;
        for (const auto& t : m.transitions()) {
            if (which == 1)
                edges.insert({perm[t.src], t.symbol, perm[t.dst]});
            else
                edges.insert({t.src, t.symbol, t.dst});
        }
        return edges;
    };
    std::set<State> acc2(m2.accepting().begin(), m2.accepting().end());
    return isomorphic_brute(m1.num_states(), m2.num_states(), m1.initial(), m2.initial(),
                            m1.accepting(), acc2, edges_of);
}

namespace {

template <class Aut>
bool isomorphic_word_automata(const Aut& a1, const Aut& a2,
                              const std::vector<WordTransition>& edges1,
                              const std::vector<WordTransition>& edges2) {
    if (!(a1.alphabet() == a2.alphabet()) || a1.num_states() != a2.num_states() ||
        edges1.size() != edges2.size() || a1.accepting().size() != a2.accepting().size())
        return false;

    auto out_sorted = [](const std::vector<WordTransition>& edges, State q) {
        std::vector<const WordTransition*> out;
        for (const auto& e : edges)
            if (e.src == q)
                out.push_back(&e);
        std::sort(out.begin(), out.end(), [](const WordTransition* x, const WordTransition* y) {
            return length_lex_less(x->label, y->label);
        });
        return out;
    };

    std::vector<State> map12(a1.num_states(), kNoState), map21(a2.num_states(), kNoState);
    std::deque<std::pair<State, State>> queue{{a1.initial(), a2.initial()}};
    map12[a1.initial()] = a2.initial();
    map21[a2.initial()] = a1.initial();
    std::size_t paired = 1;
    while (!queue.empty()) {
        auto [u, v] = queue.front();
        queue.pop_front();
        if (a1.is_accepting(u) != a2.is_accepting(v))
            return false;
        auto out1 = out_sorted(edges1, u);
        auto out2 = out_sorted(edges2, v);
        if (out1.size() != out2.size())
            return false;
        for (std::size_t i = 0; i < out1.size(); ++i) {
            if (out1[i]->label != out2[i]->label)
                return false;
            State du = out1[i]->dst, dv = out2[i]->dst;
            if (map12[du] == kNoState && map21[dv] == kNoState) {
                map12[du] = dv;
                map21[dv] = du;
                ++paired;
                queue.emplace_back(du, dv);
            } else if (map12[du] != dv) {
                return false;
            }
        }
    }
    if (paired == a1.num_states())
        return true;

    auto edges_of = [&](int which, const std::vector<State>& perm) {
        std::set<std::tuple<State, Word, State>> edges;
        for (const auto& e : which == 1 ? edges1 : edges2) {
            if (which == 1)
                edges.insert({perm[e.src], e.label, perm[e.dst]});
            else
                edges.insert({e.src, e.label, e.dst});
        }
        return edges;
    };
    std::set<State> acc2(a2.accepting().begin(), a2.accepting().end());
    return isomorphic_brute(a1.num_states(), a2.num_states(), a1.initial(), a2.initial(),
                            a1.accepting(), acc2, edges_of);
}

}  // namespace

bool isomorphic(const Dsa& a1, const Dsa& a2) {
    return isomorphic_word_automata(a1, a2, a1.transitions(), a2.transitions());
}

bool isomorphic(const Dga& h1, const Dga& h2) {
    return isomorphic_word_automata(h1, h2, h1.edges(), h2.edges());
}

std::vector<Word> enumerate_language(const Dfa& m, std::size_t max_len) {
    return detail::enumerate_words_parallel(m.alphabet().size(), max_len,
                                            [&](const Word& w) { return dfa_accepts(m, w); });
}

std::vector<Word> enumerate_language(const Dsa& a, std::size_t max_len) {
    DsaRunner runner(a);
    return detail::enumerate_words_parallel(a.alphabet().size(), max_len,
                                            [&](const Word& w) { return runner.accepts(w); });
}

std::vector<Word> enumerate_language(const Dga& h, std::size_t max_len) {
    return detail::enumerate_words_parallel(h.alphabet().size(), max_len,
                                            [&](const Word& w) { return dga_accepts(h, w); });
}

std::vector<Word> enumerate_language_serial(const Dfa& m, std::size_t max_len) {
    return detail::enumerate_words_serial(m.alphabet().size(), max_len,
                                          [&](const Word& w) { return dfa_accepts(m, w); });
}

std::vector<Word> enumerate_language_serial(const Dsa& a, std::size_t max_len) {
    DsaRunner runner(a);
    return detail::enumerate_words_serial(a.alphabet().size(), max_len,
                                          [&](const Word& w) { return runner.accepts(w); });
}

std::vector<Word> enumerate_language_serial(const Dga& h, std::size_t max_len) {
    return detail::enumerate_words_serial(h.alphabet().size(), max_len,
                                          [&](const Word& w) { return dga_accepts(h, w); });
}

}  // namespace sra
