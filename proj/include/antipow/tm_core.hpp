#ifndef ANTIPOW_TM_CORE_HPP
#define ANTIPOW_TM_CORE_HPP

#include <bit>
#include <cstdint>

#include "antipow/finite_word.hpp"

namespace antipow {

// Letters of the Thue-Morse word t: t_n is the parity of the binary digit
// sum of n, which matches the doubling construction A_{m+1} = A_m ~A_m.
inline unsigned tm_letter(std::uint64_t n) {
    return static_cast<unsigned>(std::popcount(n) & 1);
}

// Index equivalence: n ~ m iff t_n = t_m.
inline bool tm_equiv(std::uint64_t n, std::uint64_t m) {
    return ((std::popcount(n) ^ std::popcount(m)) & 1) == 0;
}

// Digit sum of n in the given base, reduced mod base. Base 2 agrees with
// tm_letter. Throws invalid_base_error for base < 2.
unsigned generalized_letter(std::uint64_t base, std::uint64_t n);

namespace detail {

constexpr std::uint64_t tm_seed_word_build() {
    std::uint64_t w = 0;
    for (unsigned b = 0; b < 64; ++b) {
        unsigned ones = 0;
        for (unsigned x = b; x != 0; x >>= 1) ones += x & 1;
        if (ones & 1) w |= std::uint64_t{1} << b;
    }
    return w;
}

inline constexpr std::uint64_t tm_seed_word = tm_seed_word_build();

// Letters [64a, 64a+64) packed LSB-first: t_{64a+b} = t_a xor t_b because
// the binary digits of 64a and b < 64 are disjoint.
inline std::uint64_t tm_chunk(std::uint64_t a) {
    return (std::popcount(a) & 1) ? ~tm_seed_word : tm_seed_word;
}

// Letters [start, start+64) for an arbitrary start.
inline std::uint64_t tm_word_at(std::uint64_t start) {
    const std::uint64_t a = start >> 6;
    const unsigned off = static_cast<unsigned>(start & 63);
    std::uint64_t w = tm_chunk(a) >> off;
    if (off != 0)
        w |= tm_chunk(a + 1) << (64 - off);
    return w;
}

} // namespace detail

// Materialization cap for prefix/factor extraction (letters).
inline constexpr std::uint64_t default_word_cap = std::uint64_t{1} << 28;

// The prefix t_0 ... t_{length-1}. Throws resource_limit_error past the cap.
finite_word tm_prefix(std::uint64_t length, std::uint64_t cap = default_word_cap);

// The factor t_start ... t_{start+length-1}.
finite_word tm_factor(std::uint64_t start, std::uint64_t length,
                      std::uint64_t cap = default_word_cap);

} // namespace antipow

#endif
