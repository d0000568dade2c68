#include "support/fixtures.hpp"

#include "sra/errors.hpp"

namespace sra::fixtures {

namespace {

Word chars(const Alphabet& alphabet, std::string_view letters) {
    return parse_char_word(alphabet, letters);
}

}  // namespace

Dsa dsa_aab() {
    auto sigma = make_char_alphabet("ab");
    Dsa a(sigma);
    State q0 = a.add_state("q0");
    State q3 = a.add_state("q3");
    a.add_transition(q0, chars(*sigma, "aab"), q3);
    a.add_transition(q3, chars(*sigma, "aab"), q3);
    a.set_initial(q0);
    a.add_accepting(q3);
    return a;
}

Dsa dsa_ab_bb() {
    auto sigma = make_char_alphabet("ab");
    Dsa a(sigma);
    State q0 = a.add_state("q0");
    State q1 = a.add_state("q1");
    State q2 = a.add_state("q2");
    a.add_transition(q0, chars(*sigma, "ab"), q1);
    a.add_transition(q1, chars(*sigma, "bb"), q2);
    a.add_transition(q2, chars(*sigma, "b"), q2);
    a.add_transition(q2, chars(*sigma, "a"), q1);
    a.set_initial(q0);
    a.add_accepting(q2);
    return a;
}

Dsa dsa_ab_with_ba_loop() {
    auto sigma = make_char_alphabet("ab");
    Dsa a(sigma);
    State q0 = a.add_state("q0");
    State q1 = a.add_state("q1");
    a.add_transition(q0, chars(*sigma, "ab"), q1);
    a.add_transition(q0, chars(*sigma, "ba"), q0);
    a.set_initial(q0);
    a.add_accepting(q1);
    return a;
}

Dsa dsa_if_else() {
    auto sigma = make_char_alphabet("ifelsndghx");
    Dsa a(sigma);
    State s0 = a.add_state("s0");
    State s1 = a.add_state("s1");
    State s2 = a.add_state("s2");
    State s3 = a.add_state("s3");
    a.add_transition(s0, chars(*sigma, "else"), s2);
    a.add_transition(s0, chars(*sigma, "if"), s1);
    a.add_transition(s1, chars(*sigma, "endif"), s0);
    a.add_transition(s1, chars(*sigma, "if"), s3);
    for (Symbol s = 0; s < sigma->size(); ++s)
        a.add_transition(s2, Word{s}, s2);
    a.set_initial(s0);
    a.add_accepting(s2);
    return a;
}

Dsa dsa_abaa_baaa() {
    auto sigma = make_char_alphabet("ab");
    Dsa a(sigma);
    State q = a.add_state("q");
    State qp = a.add_state("qp");
    a.add_transition(q, chars(*sigma, "abaa"), qp);
    a.add_transition(q, chars(*sigma, "baaa"), qp);
    a.set_initial(q);
    a.add_accepting(qp);
    return a;
}

Dsa dsa_caba_removable() {
    auto sigma = make_char_alphabet("abc");
    Dsa a(sigma);
    State q0 = a.add_state("q0");
    State q1 = a.add_state("q1");
    a.add_transition(q0, chars(*sigma, "caba"), q1);
    a.add_transition(q0, chars(*sigma, "ba"), q1);
    a.set_initial(q0);
    a.add_accepting(q1);
    return a;
}

Dsa dsa_caba_load_bearing() {
    auto sigma = make_char_alphabet("abc");
    Dsa a(sigma);
    State q0 = a.add_state("q0");
    State q1 = a.add_state("q1");
    State q2 = a.add_state("q2");
    a.add_transition(q0, chars(*sigma, "caba"), q1);
    a.add_transition(q0, chars(*sigma, "ba"), q1);
    a.add_transition(q0, chars(*sigma, "aba"), q2);
    a.set_initial(q0);
    a.add_accepting(q1);
    return a;
}

Dsa dsa_letter_chain(std::size_t n) {
    if (n == 0)
        throw Error("letter chain needs n >= 1");
    auto alphabet = std::make_shared<Alphabet>();
    Word pattern;
    for (std::size_t i = 1; i <= n; ++i)
        pattern.push_back(alphabet->intern("a" + std::to_string(i)));
    Dsa a(alphabet);
    State q0 = a.add_state("q0");
    State q1 = a.add_state("q1");
    a.add_transition(q0, pattern, q1);
    a.add_transition(q1, pattern, q1);
    a.set_initial(q0);
    a.add_accepting(q1);
    return a;
}

Dfa dfa_contains_ab() {
    auto sigma = make_char_alphabet("ab");
    Dfa m(sigma);
    State q0 = m.add_state("q0");
    State q1 = m.add_state("q1");
    State q2 = m.add_state("q2");
    m.add_transition(q0, 0, q1);
    m.add_transition(q0, 1, q0);
    m.add_transition(q1, 0, q1);
    m.add_transition(q1, 1, q2);
    m.add_transition(q2, 0, q2);
    m.add_transition(q2, 1, q2);
    m.set_initial(q0);
    m.add_accepting(q2);
    return m;
}

Dfa dfa_two_as() {
    auto sigma = make_char_alphabet("ab");
    Dfa m(sigma);
    State q0 = m.add_state("q0");
    State q1 = m.add_state("q1");
    State q2 = m.add_state("q2");
    m.add_transition(q0, 0, q1);
    m.add_transition(q0, 1, q0);
    m.add_transition(q1, 0, q2);
    m.add_transition(q1, 1, q1);
    m.add_transition(q2, 0, q2);
    m.add_transition(q2, 1, q2);
    m.set_initial(q0);
    m.add_accepting(q2);
    return m;
}

Dfa dfa_wf_demo() {
    auto sigma = make_char_alphabet("ab");
    Dfa m(sigma);
    State s0 = m.add_state("s0");
    State s1 = m.add_state("s1");
    State s2 = m.add_state("s2");
    State s3 = m.add_state("s3");
    State s4 = m.add_state("s4");
    m.add_transition(s0, 0, s1);
    m.add_transition(s0, 1, s4);
    m.add_transition(s1, 0, s1);
    m.add_transition(s1, 1, s3);
    m.add_transition(s3, 0, s2);
    m.add_transition(s3, 1, s0);
    m.add_transition(s2, 0, s2);
    m.add_transition(s2, 1, s2);
    m.add_transition(s4, 0, s4);
    m.add_transition(s4, 1, s4);
    m.set_initial(s0);
    m.add_accepting(s2);
    return m;
}

Dfa dfa_abaa_baaa_matcher() {
    auto sigma = make_char_alphabet("ab");
    Dfa m(sigma);
    State q = m.add_state("q");
    State a = m.add_state("a");
    State b = m.add_state("b");
    State ab = m.add_state("ab");
    State ba = m.add_state("ba");
    State aba = m.add_state("aba");
    State baa = m.add_state("baa");
    State qp = m.add_state("qp");
    m.add_transition(q, 0, a);
    m.add_transition(q, 1, b);
    m.add_transition(a, 0, a);
    m.add_transition(a, 1, ab);
    m.add_transition(b, 0, ba);
    m.add_transition(b, 1, b);
    m.add_transition(ab, 0, aba);
    m.add_transition(ab, 1, b);
    m.add_transition(ba, 0, baa);
    m.add_transition(ba, 1, ab);
    m.add_transition(aba, 0, qp);
    m.add_transition(aba, 1, ab);
    m.add_transition(baa, 0, qp);
    m.add_transition(baa, 1, ab);
    m.set_initial(q);
    m.add_accepting(qp);
    return m;
}

namespace {

AlphabetRef twin_alphabet(std::size_t alphabet_size) {
    if (alphabet_size < 2)
        throw Error("twin fixtures need at least the letters a and b");
    auto alphabet = std::make_shared<Alphabet>();
    alphabet->intern("a");
    alphabet->intern("b");
    for (std::size_t i = 1; i + 2 <= alphabet_size; ++i)
        alphabet->intern("x" + std::to_string(i));
    return alphabet;
}

}  // namespace

Dfa dfa_twin_minimal(std::size_t alphabet_size) {
    auto sigma = twin_alphabet(alphabet_size);
    Dfa m(sigma);
    State q0 = m.add_state("q0");
    State q1 = m.add_state("q1");
    State q2 = m.add_state("q2");
    State p = m.add_state("p");
    State q4 = m.add_state("q4");
    const Symbol a = 0, b = 1;
    for (Symbol s = 0; s < sigma->size(); ++s) {
        m.add_transition(q0, s, s == a ? q1 : (s == b ? p : q0));
        m.add_transition(q1, s, s == a ? q1 : (s == b ? q2 : q0));
        m.add_transition(q2, s, s == a ? q4 : q0);
        m.add_transition(p, s, s == a ? p : (s == b ? q4 : q0));
        m.add_transition(q4, s, q4);
    }
    m.set_initial(q0);
    m.add_accepting(q4);
    return m;
}

Dfa dfa_twin_duplicated(std::size_t alphabet_size) {
    auto sigma = twin_alphabet(alphabet_size);
    Dfa m(sigma);
    State q0 = m.add_state("q0");
    State q1 = m.add_state("q1");
    State q2 = m.add_state("q2");
    State pp = m.add_state("pp");
    State p = m.add_state("p");
    State q4 = m.add_state("q4");
    const Symbol a = 0, b = 1;
    for (Symbol s = 0; s < sigma->size(); ++s) {
        m.add_transition(q0, s, s == a ? q1 : (s == b ? pp : q0));
        m.add_transition(q1, s, s == a ? q1 : (s == b ? q2 : q0));
        m.add_transition(q2, s, s == a ? q4 : q0);
        m.add_transition(pp, s, s == a ? p : (s == b ? q4 : q0));
        m.add_transition(p, s, s == a ? pp : (s == b ? q4 : q0));
        m.add_transition(q4, s, q4);
    }
    m.set_initial(q0);
    m.add_accepting(q4);
    return m;
}

Dfa dfa_ab_cycle() {
    auto sigma = make_char_alphabet("ab");
    Dfa m(sigma);
    State q0 = m.add_state("q0");
    State q1 = m.add_state("q1");
    m.add_transition(q0, 0, q1);
    m.add_transition(q1, 1, q0);
    m.set_initial(q0);
    m.add_accepting(q0);
    return m;
}

Dfa dfa_aab() {
    auto sigma = make_char_alphabet("ab");
    Dfa m(sigma);
    State q0 = m.add_state("q0");
    State q1 = m.add_state("q1");
    State q2 = m.add_state("q2");
    State q3 = m.add_state("q3");
    m.add_transition(q0, 1, q0);
    m.add_transition(q0, 0, q1);
    m.add_transition(q1, 0, q2);
    m.add_transition(q2, 0, q2);
    m.add_transition(q2, 1, q3);
    m.add_transition(q3, 0, q1);
    m.add_transition(q3, 1, q0);
    m.set_initial(q0);
    m.add_accepting(q3);
    return m;
}

Dfa dfa_parallel_chain(std::size_t length) {
    auto sigma = make_char_alphabet("ab");
    Dfa m(sigma);
    for (std::size_t i = 0; i <= length; ++i)
        m.add_state("c" + std::to_string(i));
    for (std::size_t i = 0; i < length; ++i) {
        m.add_transition(static_cast<State>(i), 0, static_cast<State>(i + 1));
        m.add_transition(static_cast<State>(i), 1, static_cast<State>(i + 1));
    }
    m.set_initial(0);
    m.add_accepting(static_cast<State>(length));
    return m;
}

Dga dga_ab_cycle() {
    auto sigma = make_char_alphabet("ab");
    Dga h(sigma);
    State q0 = h.add_state("q0");
    h.add_edge(q0, chars(*sigma, "ab"), q0);
    h.set_initial(q0);
    h.add_accepting(q0);
    return h;
}

Dga dga_aab() {
    auto sigma = make_char_alphabet("ab");
    Dga h(sigma);
    State q0 = h.add_state("q0");
    State q2 = h.add_state("q2");
    State q3 = h.add_state("q3");
    h.add_edge(q0, chars(*sigma, "b"), q0);
    h.add_edge(q0, chars(*sigma, "aa"), q2);
    h.add_edge(q2, chars(*sigma, "a"), q2);
    h.add_edge(q2, chars(*sigma, "b"), q3);
    h.add_edge(q3, chars(*sigma, "aa"), q2);
    h.add_edge(q3, chars(*sigma, "b"), q0);
    h.set_initial(q0);
    h.add_accepting(q3);
    return h;
}

Graph graph_k3() {
    Graph g;
    auto u = g.add_vertex("u");
    auto v = g.add_vertex("v");
    auto w = g.add_vertex("w");
    g.add_edge(u, v);
    g.add_edge(u, w);
    g.add_edge(v, w);
    return g;
}

Graph graph_path3() {
    Graph g;
    auto u = g.add_vertex("u");
    auto v = g.add_vertex("v");
    auto w = g.add_vertex("w");
    g.add_edge(u, v);
    g.add_edge(v, w);
    return g;
}

Graph graph_star13() {
    Graph g;
    auto c = g.add_vertex("c");
    auto x = g.add_vertex("x");
    auto y = g.add_vertex("y");
    auto z = g.add_vertex("z");
    g.add_edge(c, x);
    g.add_edge(c, y);
    g.add_edge(c, z);
    return g;
}

Graph graph_k4() {
    Graph g;
    auto a = g.add_vertex("a");
    auto b = g.add_vertex("b");
    auto c = g.add_vertex("c");
    auto d = g.add_vertex("d");
    g.add_edge(a, b);
    g.add_edge(a, c);
    g.add_edge(a, d);
    g.add_edge(b, c);
    g.add_edge(b, d);
    g.add_edge(c, d);
    return g;
}

}  // namespace sra::fixtures
