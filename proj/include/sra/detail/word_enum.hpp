#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "sra/alphabet.hpp"
#include "sra/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sra::detail {

inline std::uint64_t checked_word_count(std::size_t alphabet_size, std::size_t max_len) {
    std::uint64_t total = 1;
    std::uint64_t level = 1;
    for (std::size_t len = 1; len <= max_len; ++len) {
        level *= alphabet_size;
        total += level;
        if (total > (std::uint64_t{1} << 33))
            throw Error("word enumeration too large: |alphabet|^" + std::to_string(len) +
                        " words exceed the built-in limit");
    }
    return total;
}

inline Word decode_word(std::uint64_t index, std::size_t alphabet_size, std::size_t len) {
    Word w(len);
    for (std::size_t pos = len; pos-- > 0;) {
        w[pos] = static_cast<Symbol>(index % alphabet_size);
        index /= alphabet_size;
    }
    return w;
}

/// All accepted words of length <= max_len in length-lexicographic order.
template <class Accepts>
std::vector<Word> enumerate_words_serial(std::size_t alphabet_size, std::size_t max_len,
                                         Accepts&& accepts) {
    checked_word_count(alphabet_size, max_len);
    std::vector<Word> result;
    if (accepts(Word{}))
        result.push_back(Word{});
    std::uint64_t level = 1;
    for (std::size_t len = 1; len <= max_len && alphabet_size > 0; ++len) {
        level *= alphabet_size;
        for (std::uint64_t index = 0; index < level; ++index) {
            Word w = decode_word(index, alphabet_size, len);
            if (accepts(w))
                result.push_back(std::move(w));
        }
    }
    return result;
}

/// Same result as the serial version; per length, the index space is split
/// across threads and the accepted indices are merged back in order.
template <class Accepts>
std::vector<Word> enumerate_words_parallel(std::size_t alphabet_size, std::size_t max_len,
                                           Accepts&& accepts) {
#ifndef _OPENMP
    return enumerate_words_serial(alphabet_size, max_len, accepts);
#else
    checked_word_count(alphabet_size, max_len);
    std::vector<Word> result;
    if (accepts(Word{}))
        result.push_back(Word{});
    std::uint64_t level = 1;
    for (std::size_t len = 1; len <= max_len && alphabet_size > 0; ++len) {
        level *= alphabet_size;
        std::vector<std::vector<std::uint64_t>> per_thread(
            static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
        {
            auto& mine = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
            for (std::int64_t index = 0; index < static_cast<std::int64_t>(level); ++index) {
                if (accepts(decode_word(static_cast<std::uint64_t>(index), alphabet_size, len)))
                    mine.push_back(static_cast<std::uint64_t>(index));
            }
        }
        std::vector<std::uint64_t> accepted;
        for (auto& chunk : per_thread)
            accepted.insert(accepted.end(), chunk.begin(), chunk.end());
        std::sort(accepted.begin(), accepted.end());
        for (std::uint64_t index : accepted)
            result.push_back(decode_word(index, alphabet_size, len));
    }
    return result;
#endif
}

}  // namespace sra::detail
