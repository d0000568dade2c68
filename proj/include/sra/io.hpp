#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "sra/automata.hpp"
#include "sra/hardness.hpp"

namespace sra {

using Automaton = std::variant<Dsa, Dfa, Dga>;

// Text format, one directive per line, '#' starts a comment:
//
//   dsa                      (or dfa / dga)
//   alphabet a b
//   states q0 q3
//   initial q0
//   accepting q3
//   trans q0 q3 : a a b      (label = symbol sequence; dfa labels are single)
//
// Parsing reports line-numbered errors; serialization is canonical (alphabet
// in declaration order, states and transitions sorted), so structurally equal
// automata serialize to identical bytes.
Automaton parse_automaton(std::string_view text);
Dsa parse_dsa(std::string_view text);
Dfa parse_dfa(std::string_view text);
Dga parse_dga(std::string_view text);

std::string serialize(const Dsa& a);
std::string serialize(const Dfa& m);
std::string serialize(const Dga& h);
std::string serialize(const Automaton& automaton);

/// Canonical-serialization equality: same kind, alphabet, state names,
/// initial/accepting and transition set.
bool structurally_equal(const Automaton& x, const Automaton& y);

// Graph format:
//
//   graph
//   vertex u
//   edge u v
Graph parse_graph(std::string_view text);
std::string serialize(const Graph& g);

// DOT export for rendering. Parallel edges between one state pair collapse
// into a single comma-separated label; accepting states are double circles.
std::string to_dot(const Dsa& a);
std::string to_dot(const Dfa& m);
std::string to_dot(const Dga& h);
std::string to_dot(const Automaton& automaton);

const char* kind_name(const Automaton& automaton);

}  // namespace sra
