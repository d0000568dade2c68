#pragma once

// Seeded random automata for the property suites. Everything is driven by an
// explicit mt19937_64 so failures replay.

#include <random>

#include "sra/automata.hpp"

namespace sra::gen {

using Rng = std::mt19937_64;

Word random_word(Rng& rng, std::size_t alphabet_size, std::size_t max_len);

struct DsaOptions {
    std::size_t max_states = 4;
    std::size_t max_label_len = 3;
    std::size_t letters = 2;
    std::size_t max_out_degree = 3;
    bool well_formed = true;   // keep labels out of each other's proper prefixes
    bool reachable = false;    // force every state reachable from the initial
    bool useless_free = false; // reject automata with useless transitions
};

/// Valid (deterministic) DSA; constraints per options, by rejection sampling.
Dsa random_dsa(Rng& rng, const DsaOptions& options = {});

Dfa random_complete_dfa(Rng& rng, std::size_t max_states = 5, std::size_t letters = 2);
/// Partial map: roughly the given fill rate of the complete table.
Dfa random_trim_dfa(Rng& rng, std::size_t max_states = 5, std::size_t letters = 2,
                    double fill = 0.7);
/// Prefix-free outgoing label sets, random targets.
Dga random_dga(Rng& rng, std::size_t max_states = 4, std::size_t max_label_len = 3,
               std::size_t letters = 2);

}  // namespace sra::gen
