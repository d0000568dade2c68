#pragma once

#include <set>

#include "sra/automata.hpp"

namespace sra {

/// True iff w factors into consecutive edge labels along a path from the
/// initial state to an accepting one. Prefix-freeness of outgoing labels makes
/// the factorization (hence the run) unique, so a greedy walk decides it.
bool dga_accepts(const Dga& h, const Word& w);

/// Suppresses the states of S one by one: every pair p -x-> q, q -y-> r with
/// q in S becomes p -xy-> r. Preconditions (violations throw
/// PreconditionError): no state of S is initial or accepting, no state of S
/// has a self-loop, and the subgraph induced on S is acyclic. If suppression
/// breaks outgoing prefix-freeness the result is rejected with an Error
/// instead of silently returning a nondeterministic automaton. Parallel edges
/// created by suppression are deduplicated.
Dga dga_suppress(const Dga& h, const std::set<State>& s);

}  // namespace sra
