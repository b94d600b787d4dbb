#ifndef ANTIPOW_ANTIPOWER_HPP
#define ANTIPOW_ANTIPOWER_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "antipow/finite_word.hpp"

namespace antipow {

// The c-th block of length n in t (1-indexed): t_{(c-1)n} ... t_{cn-1}.
struct block_ref {
    std::uint64_t n; // block length, odd
    std::uint64_t c; // 1-indexed ordinal
};

// Query for the shift criterion: compares block ordinals c+1 and c+1+2^i.
struct shift_criterion_query {
    std::uint64_t n; // odd block length
    std::uint64_t c; // zero-based position parameter
    unsigned i;      // power-of-two exponent of the ordinal shift
};

struct antipower_verdict {
    bool is_antipower = true;
    // Present iff not an antipower: ordinals (c, c') with c < c' of two
    // equal blocks, minimal in c' then in c.
    std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;
};

// Largest e >= 0 with 3*2^(e-1) < n; equal blocks of odd length n have
// ordinals congruent mod 2^e. Returns 0 (no pruning) for n <= 3.
unsigned pruning_shift_exponent(std::uint64_t n);

// Splits w into k blocks and reports the first duplicated pair, if any.
// Throws divisibility_error when k does not divide |w|.
antipower_verdict is_antipower_word(const finite_word& w, std::uint64_t k);

// Letter-for-letter comparison of two equal-length blocks of t.
bool tm_blocks_equal_direct(block_ref a, block_ref b);

// Shift criterion: blocks c+1 and c+1+2^i of size n are equal iff
// x ~ x+n for every x in [floor(cn/2^i), floor(((c+1)n-1)/2^i)].
bool tm_blocks_equal_shift(const shift_criterion_query& q);

// Block equality with automatic strategy: the shift criterion when the
// ordinal difference is a large power of two, direct words otherwise.
bool tm_blocks_equal(std::uint64_t n, std::uint64_t c, std::uint64_t cprime);

// For two equal blocks, checks c = c' mod 2^e with e = pruning_shift_exponent(n).
// A verification predicate, not a filter.
bool matching_pair_congruence_check(block_ref a, block_ref b);

// Content fingerprint of a block; equal blocks always collide, unequal
// blocks practically never do. Used as a hash key, never as proof.
std::uint64_t tm_block_fingerprint(std::uint64_t n, std::uint64_t c);

// Virtual span cap (k*n letters) for prefix antipower tests.
inline constexpr std::uint64_t default_span_cap = std::uint64_t{1} << 40;

// Is the length-kn prefix of t a k-antipower? n must be odd. The duplicate
// search prunes ordinal pairs by the congruence above; the result equals
// the unrestricted all-pairs search.
antipower_verdict tm_prefix_is_antipower(std::uint64_t n, std::uint64_t k,
                                         std::uint64_t span_cap = default_span_cap);

// Membership n in AP(t, k); n may be even here.
bool ap_membership(std::uint64_t n, std::uint64_t k,
                   std::uint64_t span_cap = default_span_cap);

namespace detail {

// First (c, c') with c < c' <= max_ordinal and equal blocks, minimal in c'
// then c. Duplicate checks start at ordinal check_from (insertion always
// starts at 1); congruence pruning applies only when pruned is set.
std::optional<std::pair<std::uint64_t, std::uint64_t>>
first_duplicate_block(std::uint64_t n, std::uint64_t max_ordinal,
                      std::uint64_t check_from, bool pruned);

} // namespace detail

} // namespace antipow

#endif
