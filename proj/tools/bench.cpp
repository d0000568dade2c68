// Compares the serial reference implementations of the two enumeration
// kernels against their OpenMP versions on fixed workloads.

#include <chrono>
#include <cstdio>
#include <random>

#include "sra/derivation.hpp"
#include "sra/dfa_ops.hpp"
#include "sra/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

sra::Dfa random_complete_dfa(std::size_t states, std::size_t letters, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto alphabet = sra::make_char_alphabet(std::string("abcdefgh").substr(0, letters));
    sra::Dfa m(alphabet);
    for (std::size_t q = 0; q < states; ++q)
        m.add_state("q" + std::to_string(q));
    std::uniform_int_distribution<sra::State> pick(0, static_cast<sra::State>(states - 1));
    for (sra::State q = 0; q < states; ++q)
        for (sra::Symbol a = 0; a < letters; ++a)
            m.add_transition(q, a, pick(rng));
    m.set_initial(0);
    m.add_accepting(pick(rng));
    m.add_accepting(pick(rng));
    return m;
}

template <class F>
double timed(F&& f) {
    auto start = Clock::now();
    f();
    return seconds_since(start);
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("openmp disabled; parallel entry points fall back to the serial kernels\n");
#endif

    {
        sra::Dfa m = random_complete_dfa(6, 3, 2024);
        std::vector<sra::Word> serial_words, parallel_words;
        double serial = timed([&] { serial_words = sra::enumerate_language_serial(m, 13); });
        double parallel = timed([&] { parallel_words = sra::enumerate_language(m, 13); });
        if (serial_words != parallel_words)
            throw sra::Error("enumerate_language kernels disagree");
        report("enumerate_language", serial, parallel);
        std::printf("  %zu accepted words up to length 13\n", serial_words.size());
    }

    {
        sra::Dfa m = random_complete_dfa(9, 2, 7);
        sra::DerivationLimits limits;
        limits.max_simple_words = 2'000'000;
        std::vector<std::set<sra::State>> serial_sets, parallel_sets;
        double serial =
            timed([&] { serial_sets = sra::enumerate_suffix_tracking_sets_serial(m, limits); });
        double parallel = timed([&] { parallel_sets = sra::enumerate_suffix_tracking_sets(m, limits); });
        if (serial_sets != parallel_sets)
            throw sra::Error("suffix-tracking enumeration kernels disagree");
        report("suffix_tracking_sets", serial, parallel);
        std::printf("  %zu suffix-tracking sets over %zu states\n", serial_sets.size(),
                    m.num_states());
    }

    {
        sra::Dfa m = random_complete_dfa(5, 2, 99);
        sra::DerivedChoice serial_choice = sra::best_derived_dsa_serial(m);
        sra::DerivedChoice parallel_choice{{}, serial_choice.dsa, 0};
        double serial = timed([&] { serial_choice = sra::best_derived_dsa_serial(m); });
        double parallel = timed([&] { parallel_choice = sra::best_derived_dsa(m); });
        if (serial_choice.states != parallel_choice.states ||
            serial_choice.size != parallel_choice.size)
            throw sra::Error("best_derived_dsa kernels disagree");
        report("best_derived_dsa", serial, parallel);
        std::printf("  winner has %zu states, total size %zu\n", serial_choice.states.size(),
                    serial_choice.size);
    }
    return 0;
}
