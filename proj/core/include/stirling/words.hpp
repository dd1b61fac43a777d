/// @file words.hpp
/// @brief Stirling permutations of the mixed-multiplicity multisets M_n^(r)
///        and the consecutive-ascent statistic on them.
///
/// M_n^(r) consists of the letters 1..(r-1)n, where a letter divisible by
/// r-1 appears twice and every other letter appears once.  A word over the
/// multiset is admissible when every letter lying strictly between two equal
/// letters exceeds them.  For r = 2 this is the classical Stirling
/// permutation set of {1,1,2,2,...,n,n}.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "numeric.hpp"

namespace stirling {

using Word = std::vector<unsigned>;

inline unsigned word_alphabet_size(unsigned r, unsigned n) { return (r - 1) * n; }

inline unsigned letter_multiplicity(unsigned r, unsigned letter) {
    return letter % (r - 1) == 0 ? 2u : 1u;
}

inline void check_word_guard(unsigned r, unsigned n) {
    if (r < 2) throw std::invalid_argument("stirling words need r >= 2");
    if (r * n > 14) throw GuardError("stirling word enumeration capped at r*n <= 14");
}

namespace detail {

struct WordDfs {
    unsigned r = 2;
    unsigned alphabet = 0;
    std::size_t length = 0;
    std::vector<unsigned> remaining; // placements left per letter, 1-indexed
    std::vector<unsigned> open;      // doubled letters awaiting their second copy
    Word word;
    const std::function<void(const Word&)>* visit = nullptr;

    // Open letters form an increasing stack: anything written while a letter
    // is open sits between its two copies and must therefore exceed it, so
    // only the top of the stack can close and only larger letters can start.
    void run() {
        if (word.size() == length) {
            (*visit)(word);
            return;
        }
        const unsigned floor = open.empty() ? 0u : open.back();
        if (!open.empty()) {
            word.push_back(floor);
            --remaining[floor];
            open.pop_back();
            run();
            open.push_back(floor);
            ++remaining[floor];
            word.pop_back();
        }
        for (unsigned x = floor + 1; x <= alphabet; ++x) {
            if (remaining[x] != letter_multiplicity(r, x)) continue;
            word.push_back(x);
            --remaining[x];
            const bool opens = letter_multiplicity(r, x) == 2;
            if (opens) open.push_back(x);
            run();
            if (opens) open.pop_back();
            ++remaining[x];
            word.pop_back();
        }
    }
};

} // namespace detail

/// Visits every Stirling permutation of M_n^(r), in lexicographic order.
inline void for_each_stirling_word(unsigned r, unsigned n,
                                   const std::function<void(const Word&)>& visit) {
    check_word_guard(r, n);
    detail::WordDfs dfs;
    dfs.r = r;
    dfs.alphabet = word_alphabet_size(r, n);
    dfs.length = static_cast<std::size_t>(r) * n;
    dfs.remaining.assign(dfs.alphabet + 1, 0);
    for (unsigned x = 1; x <= dfs.alphabet; ++x) dfs.remaining[x] = letter_multiplicity(r, x);
    dfs.word.reserve(dfs.length);
    dfs.visit = &visit;
    dfs.run();
}

/// i in [n-1] is a consecutive ascent of w when the letters
/// (r-1)i+1, ..., (r-1)i+(r-2) followed by the first copy of (r-1)(i+1)
/// form a contiguous block whose first letter has a smaller letter just
/// before it.  For r = 2 the block is the single letter i+1.
inline std::vector<unsigned> consecutive_ascents(const Word& w, unsigned r, unsigned n) {
    std::vector<unsigned> result;
    for (unsigned i = 1; i + 1 <= n; ++i) {
        const unsigned target = (r - 1) * (i + 1);
        std::size_t f = 0;
        while (w[f] != target) ++f;
        if (f + 1 < static_cast<std::size_t>(r)) continue; // block plus one predecessor
        const std::size_t s = f - (r - 2);
        bool block = true;
        for (unsigned j = 1; j + 2 <= r; ++j)
            if (w[s + j - 1] != (r - 1) * i + j) { block = false; break; }
        if (!block) continue;
        if (w[s - 1] < (r - 1) * i + 1) result.push_back(i);
    }
    return result;
}

/// b[k] = number of Stirling permutations of M_n^(r) with exactly k
/// consecutive ascents, for k = 0..max(n-1, 0).
inline std::vector<Int> consecutive_ascent_counts(unsigned r, unsigned n) {
    std::vector<Int> b(n == 0 ? 1 : n, 0);
    for_each_stirling_word(r, n, [&](const Word& w) {
        b[consecutive_ascents(w, r, n).size()] += 1;
    });
    return b;
}

/// v[k] = number of pairs (word, dot set) where the dots pick k of the
/// word's consecutive ascents; equivalently sum_i b[i] C(i, k), k = 0..n.
inline std::vector<Int> marked_word_counts(unsigned r, unsigned n) {
    const std::vector<Int> b = consecutive_ascent_counts(r, n);
    std::vector<Int> v(n + 1, 0);
    for (unsigned k = 0; k <= n; ++k)
        for (std::size_t i = k; i < b.size(); ++i)
            v[k] += b[i] * binomial(static_cast<unsigned long>(i), k);
    return v;
}

/// Three-term recurrence the marked counts must satisfy; used as a second,
/// enumeration-free route to the same numbers.
inline std::vector<Int> marked_word_counts_by_recurrence(unsigned r, unsigned n) {
    if (r < 2) throw std::invalid_argument("marked word recurrence needs r >= 2");
    std::vector<Int> prev{1}; // size 0: empty word, no dots
    for (unsigned m = 1; m <= n; ++m) {
        std::vector<Int> cur(m + 1, 0);
        for (unsigned k = 0; k <= m; ++k) {
            const long l = static_cast<long>(r) * (m - 1) - static_cast<long>(r - 1) * k;
            const long lm = static_cast<long>(r) * (m - 1) -
                            static_cast<long>(r - 1) * (static_cast<long>(k) - 1);
            Int same = (k < prev.size() && l >= 0)
                           ? factorial(r - 1) * binomial(static_cast<unsigned long>(l + r - 1), r - 1) * prev[k]
                           : Int(0);
            Int carry = (k >= 1 && k - 1 < prev.size() && lm >= 0) ? Int(lm) * prev[k - 1] : Int(0);
            cur[k] = same + carry;
        }
        prev = std::move(cur);
    }
    return prev;
}

/// Counts derangements of [m] by number of cycles, by direct enumeration of
/// all m! permutations.  Index k of the result is the cycle count.
inline std::vector<Int> derangement_cycle_counts(unsigned m) {
    if (m > 12) throw GuardError("derangement enumeration capped at m <= 12");
    std::vector<Int> by_cycles(m + 1, 0);
    std::vector<unsigned> perm(m);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
        bool fixed_point = false;
        for (unsigned i = 0; i < m; ++i)
            if (perm[i] == i) { fixed_point = true; break; }
        if (fixed_point) continue;
        std::vector<char> seen(m, 0);
        unsigned cycles = 0;
        for (unsigned i = 0; i < m; ++i) {
            if (seen[i]) continue;
            ++cycles;
            for (unsigned j = i; !seen[j]; j = perm[j]) seen[j] = 1;
        }
        by_cycles[cycles] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return by_cycles;
}

} // namespace stirling
