#include "sra/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "sra/errors.hpp"

namespace sra {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
    std::vector<std::string> tokens;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok)
        tokens.push_back(tok);
    return tokens;
}

struct Lines {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;  // (line number, tokens)
};

Lines split_lines(std::string_view text) {
    Lines lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view line = text.substr(
            start, end == std::string_view::npos ? text.size() - start : end - start);
        ++number;
        auto tokens = tokenize(line);
        if (!tokens.empty())
            lines.rows.emplace_back(number, std::move(tokens));
        if (end == std::string_view::npos)
            break;
        start = end + 1;
    }
    return lines;
}

template <class Aut>
void parse_body(Aut& automaton, const Lines& lines, bool single_symbol_labels,
                std::shared_ptr<Alphabet>& alphabet) {
    bool saw_initial = false;
    std::set<std::pair<std::string, Word>> seen_transitions;
    for (std::size_t row = 1; row < lines.rows.size(); ++row) {
        const auto& [line, tokens] = lines.rows[row];
        const std::string& directive = tokens[0];
        try {
            if (directive == "alphabet") {
                for (std::size_t i = 1; i < tokens.size(); ++i) {
                    std::size_t before = alphabet->size();
                    alphabet->intern(tokens[i]);
                    if (alphabet->size() == before)
                        throw Error("duplicate alphabet token '" + tokens[i] + "'");
                }
            } else if (directive == "states") {
                for (std::size_t i = 1; i < tokens.size(); ++i) {
                    if (automaton.find_state(tokens[i]))
                        throw Error("duplicate state '" + tokens[i] + "'");
                    automaton.add_state(tokens[i]);
                }
            } else if (directive == "initial") {
                if (tokens.size() != 2)
                    throw Error("initial expects exactly one state");
                auto q = automaton.find_state(tokens[1]);
                if (!q)
                    throw Error("undeclared state '" + tokens[1] + "'");
                automaton.set_initial(*q);
                saw_initial = true;
            } else if (directive == "accepting") {
                for (std::size_t i = 1; i < tokens.size(); ++i) {
                    auto q = automaton.find_state(tokens[i]);
                    if (!q)
                        throw Error("undeclared state '" + tokens[i] + "'");
                    automaton.add_accepting(*q);
                }
            } else if (directive == "trans") {
                auto colon = std::find(tokens.begin(), tokens.end(), ":");
                if (colon == tokens.end() || colon - tokens.begin() != 3)
                    throw Error("trans expects 'trans <src> <dst> : <sym>...'");
                auto src = automaton.find_state(tokens[1]);
                if (!src)
                    throw Error("undeclared state '" + tokens[1] + "'");
                auto dst = automaton.find_state(tokens[2]);
                if (!dst)
                    throw Error("undeclared state '" + tokens[2] + "'");
                Word label;
                for (std::size_t i = 4; i < tokens.size(); ++i) {
                    auto sym = alphabet->find(tokens[i]);
                    if (!sym)
                        throw Error("undeclared symbol '" + tokens[i] + "'");
                    label.push_back(*sym);
                }
                if (label.empty())
                    throw Error("transition label must be non-empty");
                if (single_symbol_labels && label.size() != 1)
                    throw Error("dfa labels must be single symbols");
                if (!seen_transitions.emplace(tokens[1], label).second)
                    throw Error("duplicate transition from '" + tokens[1] + "' on '" +
                                format_word(*alphabet, label) + "'");
                if constexpr (std::is_same_v<Aut, Dfa>)
                    automaton.add_transition(*src, label[0], *dst);
                else
                    automaton.add_transition(*src, std::move(label), *dst);
            } else {
                throw Error("unknown directive '" + directive + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(line, e.what());
        }
    }
    if (automaton.num_states() == 0)
        throw ParseError(lines.rows.back().first, "automaton declares no states");
    if (!saw_initial)
        throw ParseError(lines.rows.back().first, "missing 'initial' directive");
}

template <class Aut>
Aut parse_as(const Lines& lines) {
    auto alphabet = std::make_shared<Alphabet>();
    Aut automaton(alphabet);
    parse_body(automaton, lines, std::is_same_v<Aut, Dfa>, alphabet);
    return automaton;
}

// Dga stores edges through add_edge, not add_transition; adapt.
struct DgaShim : Dga {
    using Dga::Dga;
    void add_transition(State src, Word label, State dst) { add_edge(src, std::move(label), dst); }
};

template <class Aut>
std::string serialize_impl(const char* kind, const Aut& automaton,
                           const std::vector<WordTransition>& transitions) {
    std::ostringstream out;
    out << kind << '\n';
    out << "alphabet";
    for (const auto& tok : automaton.alphabet().tokens())
        out << ' ' << tok;
    out << '\n';

    std::vector<State> order(automaton.num_states());
    for (State q = 0; q < automaton.num_states(); ++q)
        order[q] = q;
    std::sort(order.begin(), order.end(), [&](State x, State y) {
        return automaton.state_name(x) < automaton.state_name(y);
    });

    out << "states";
    for (State q : order)
        out << ' ' << automaton.state_name(q);
    out << '\n';
    out << "initial " << automaton.state_name(automaton.initial()) << '\n';
    out << "accepting";
    std::vector<std::string> accepting;
    for (State q : automaton.accepting())
        accepting.push_back(automaton.state_name(q));
    std::sort(accepting.begin(), accepting.end());
    for (const auto& name : accepting)
        out << ' ' << name;
    out << '\n';

    std::vector<std::tuple<std::string, std::vector<std::string>, std::string>> rows;
    for (const auto& t : transitions) {
        std::vector<std::string> label;
        for (Symbol s : t.label)
            label.push_back(automaton.alphabet().text(s));
        rows.emplace_back(automaton.state_name(t.src), std::move(label), automaton.state_name(t.dst));
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& [src, label, dst] : rows) {
        out << "trans " << src << ' ' << dst << " :";
        for (const auto& sym : label)
            out << ' ' << sym;
        out << '\n';
    }
    return out.str();
}

}  // namespace

Automaton parse_automaton(std::string_view text) {
    Lines lines = split_lines(text);
    if (lines.rows.empty())
        throw ParseError(1, "empty input");
    const auto& [line, tokens] = lines.rows[0];
    if (tokens.size() != 1 || (tokens[0] != "dsa" && tokens[0] != "dfa" && tokens[0] != "dga"))
        throw ParseError(line, "expected a kind line: 'dsa', 'dfa' or 'dga'");
    if (tokens[0] == "dsa")
        return parse_as<Dsa>(lines);
    if (tokens[0] == "dfa")
        return parse_as<Dfa>(lines);
    return static_cast<Dga&&>(parse_as<DgaShim>(lines));
}

Dsa parse_dsa(std::string_view text) {
    auto automaton = parse_automaton(text);
    if (auto* a = std::get_if<Dsa>(&automaton))
        return std::move(*a);
    throw ParseError(1, std::string("expected a dsa file, found ") + kind_name(automaton));
}

Dfa parse_dfa(std::string_view text) {
    auto automaton = parse_automaton(text);
    if (auto* m = std::get_if<Dfa>(&automaton))
        return std::move(*m);
    throw ParseError(1, std::string("expected a dfa file, found ") + kind_name(automaton));
}

Dga parse_dga(std::string_view text) {
    auto automaton = parse_automaton(text);
    if (auto* h = std::get_if<Dga>(&automaton))
        return std::move(*h);
    throw ParseError(1, std::string("expected a dga file, found ") + kind_name(automaton));
}

std::string serialize(const Dsa& a) {
    return serialize_impl("dsa", a, a.transitions());
}

std::string serialize(const Dfa& m) {
    std::vector<WordTransition> transitions;
    for (const auto& t : m.transitions())
        transitions.push_back(WordTransition{t.src, Word{t.symbol}, t.dst});
    return serialize_impl("dfa", m, transitions);
}

std::string serialize(const Dga& h) {
    return serialize_impl("dga", h, h.edges());
}

std::string serialize(const Automaton& automaton) {
    return std::visit([](const auto& a) { return serialize(a); }, automaton);
}

bool structurally_equal(const Automaton& x, const Automaton& y) {
    return serialize(x) == serialize(y);
}

Graph parse_graph(std::string_view text) {
    Lines lines = split_lines(text);
    if (lines.rows.empty())
        throw ParseError(1, "empty input");
    if (lines.rows[0].second.size() != 1 || lines.rows[0].second[0] != "graph")
        throw ParseError(lines.rows[0].first, "expected a kind line: 'graph'");
    Graph g;
    for (std::size_t row = 1; row < lines.rows.size(); ++row) {
        const auto& [line, tokens] = lines.rows[row];
        try {
            if (tokens[0] == "vertex") {
                if (tokens.size() != 2)
                    throw Error("vertex expects exactly one name");
                g.add_vertex(tokens[1]);
            } else if (tokens[0] == "edge") {
                if (tokens.size() != 3)
                    throw Error("edge expects exactly two vertices");
                auto u = g.find_vertex(tokens[1]);
                if (!u)
                    throw Error("undeclared vertex '" + tokens[1] + "'");
                auto v = g.find_vertex(tokens[2]);
                if (!v)
                    throw Error("undeclared vertex '" + tokens[2] + "'");
                g.add_edge(*u, *v);
            } else {
                throw Error("unknown directive '" + tokens[0] + "'");
            }
        } catch (const Error& e) {
            throw ParseError(line, e.what());
        }
    }
    return g;
}

std::string serialize(const Graph& g) {
    std::ostringstream out;
    out << "graph\n";
    std::vector<std::string> vertices = g.vertex_names();
    std::sort(vertices.begin(), vertices.end());
    for (const auto& name : vertices)
        out << "vertex " << name << '\n';
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [u, v] : g.edges()) {
        std::string a = g.vertex_name(u), b = g.vertex_name(v);
        if (b < a)
            std::swap(a, b);
        edges.emplace_back(std::move(a), std::move(b));
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b] : edges)
        out << "edge " << a << ' ' << b << '\n';
    return out.str();
}

namespace {

std::string dot_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

template <class Aut>
std::string to_dot_impl(const Aut& automaton, const std::vector<WordTransition>& transitions) {
    bool single_chars = true;
    for (const auto& tok : automaton.alphabet().tokens())
        if (tok.size() != 1)
            single_chars = false;

    auto label_text = [&](const Word& label) {
        std::string out;
        for (std::size_t i = 0; i < label.size(); ++i) {
            if (i > 0 && !single_chars)
                out += '.';
            out += automaton.alphabet().text(label[i]);
        }
        return out;
    };

    std::ostringstream out;
    out << "digraph automaton {\n  rankdir=LR;\n  __start [shape=point];\n";
    std::vector<State> order(automaton.num_states());
    for (State q = 0; q < automaton.num_states(); ++q)
        order[q] = q;
    std::sort(order.begin(), order.end(), [&](State x, State y) {
        return automaton.state_name(x) < automaton.state_name(y);
    });
    for (State q : order)
        out << "  \"" << dot_escape(automaton.state_name(q)) << "\" [shape="
            << (automaton.is_accepting(q) ? "doublecircle" : "circle") << "];\n";
    out << "  __start -> \"" << dot_escape(automaton.state_name(automaton.initial())) << "\";\n";

    // One arrow per state pair; parallel labels are comma-joined.
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> grouped;
    for (const auto& t : transitions)
        grouped[{automaton.state_name(t.src), automaton.state_name(t.dst)}].push_back(
            label_text(t.label));
    for (auto& [key, labels] : grouped) {
        std::sort(labels.begin(), labels.end());
        std::string joined;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (i > 0)
                joined += ',';
            joined += labels[i];
        }
        out << "  \"" << dot_escape(key.first) << "\" -> \"" << dot_escape(key.second)
            << "\" [label=\"" << dot_escape(joined) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace

std::string to_dot(const Dsa& a) {
    return to_dot_impl(a, a.transitions());
}

std::string to_dot(const Dfa& m) {
    std::vector<WordTransition> transitions;
    for (const auto& t : m.transitions())
        transitions.push_back(WordTransition{t.src, Word{t.symbol}, t.dst});
    return to_dot_impl(m, transitions);
}

std::string to_dot(const Dga& h) {
    return to_dot_impl(h, h.edges());
}

std::string to_dot(const Automaton& automaton) {
    return std::visit([](const auto& a) { return to_dot(a); }, automaton);
}

const char* kind_name(const Automaton& automaton) {
    if (std::holds_alternative<Dsa>(automaton))
        return "dsa";
    if (std::holds_alternative<Dfa>(automaton))
        return "dfa";
    return "dga";
}

}  // namespace sra
