#include "antipow/antipower.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "antipow/errors.hpp"
#include "antipow/tm_core.hpp"

namespace antipow {

namespace {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct fingerprint_acc {
    std::uint64_t h1 = 0x6a09e667f3bcc908ULL;
    std::uint64_t h2 = 0xbb67ae8584caa73bULL;

    void feed(std::uint64_t w) {
        h1 = splitmix64(h1 ^ w);
        h2 = splitmix64(h2 + w * 0x9ddfea08eb382d69ULL);
    }

    std::uint64_t finish() const { return h1 ^ (h2 * 0xff51afd7ed558ccdULL); }
};

inline std::uint64_t checked_block_start(std::uint64_t n, std::uint64_t c) {
    if (c == 0)
        throw std::invalid_argument("block ordinals are 1-indexed");
    std::uint64_t start;
    if (__builtin_mul_overflow(c - 1, n, &start) || start > (std::uint64_t{1} << 62))
        throw index_overflow_error("block start index out of range");
    return start;
}

void require_odd(std::uint64_t n, const char* what) {
    if (n == 0 || n % 2 == 0)
        throw parity_error(std::string(what) + " requires an odd positive block length, got " +
                           std::to_string(n));
}

// Raw letter comparison over packed words; any positive n.
bool blocks_equal_raw(std::uint64_t n, std::uint64_t c, std::uint64_t cprime) {
    const std::uint64_t sa = checked_block_start(n, c);
    const std::uint64_t sb = checked_block_start(n, cprime);
    const std::uint64_t full = n / 64;
    for (std::uint64_t k = 0; k < full; ++k)
        if (detail::tm_word_at(sa + 64 * k) != detail::tm_word_at(sb + 64 * k))
            return false;
    const unsigned tail = static_cast<unsigned>(n & 63);
    if (tail != 0) {
        const std::uint64_t mask = (std::uint64_t{1} << tail) - 1;
        if (((detail::tm_word_at(sa + 64 * full) ^ detail::tm_word_at(sb + 64 * full)) & mask) != 0)
            return false;
    }
    return true;
}

// Equality dispatcher shared by the search paths; n may be even (the shift
// route is then skipped, it is only valid for odd lengths).
bool blocks_equal_fast(std::uint64_t n, std::uint64_t c, std::uint64_t cprime) {
    const std::uint64_t diff = cprime - c;
    if ((n & 1) != 0 && std::has_single_bit(diff)) {
        const unsigned e = static_cast<unsigned>(std::countr_zero(diff));
        // Below 2^6 the packed word comparison is already cheaper.
        if (e >= 6)
            return tm_blocks_equal_shift({n, c - 1, e});
    }
    return blocks_equal_raw(n, c, cprime);
}

} // namespace

unsigned pruning_shift_exponent(std::uint64_t n) {
    if (n <= 3) return 0;
    // Largest e with 3*2^(e-1) < n, i.e. 2^(e-1) <= (n-1)/3 for odd n.
    return static_cast<unsigned>(std::bit_width((n - 1) / 3));
}

bool tm_blocks_equal_direct(block_ref a, block_ref b) {
    if (a.n != b.n)
        throw length_mismatch_error("block lengths differ: " + std::to_string(a.n) +
                                    " vs " + std::to_string(b.n));
    require_odd(a.n, "tm_blocks_equal_direct");
    return blocks_equal_raw(a.n, a.c, b.c);
}

bool tm_blocks_equal_shift(const shift_criterion_query& q) {
    require_odd(q.n, "tm_blocks_equal_shift");
    if (q.i >= 63)
        throw index_overflow_error("shift exponent out of range");
    unsigned __int128 lo128 = static_cast<unsigned __int128>(q.c) * q.n;
    unsigned __int128 hi128 = (static_cast<unsigned __int128>(q.c) + 1) * q.n - 1;
    if ((hi128 >> 62) != 0)
        throw index_overflow_error("shift criterion range out of range");
    const std::uint64_t lo = static_cast<std::uint64_t>(lo128 >> q.i);
    const std::uint64_t hi = static_cast<std::uint64_t>(hi128 >> q.i);
    for (std::uint64_t x = lo; x <= hi; ++x)
        if (!tm_equiv(x, x + q.n)) return false;
    return true;
}

bool tm_blocks_equal(std::uint64_t n, std::uint64_t c, std::uint64_t cprime) {
    require_odd(n, "tm_blocks_equal");
    if (c == cprime) return true;
    if (c > cprime) std::swap(c, cprime);
    return blocks_equal_fast(n, c, cprime);
}

bool matching_pair_congruence_check(block_ref a, block_ref b) {
    if (a.n != b.n)
        throw length_mismatch_error("block lengths differ: " + std::to_string(a.n) +
                                    " vs " + std::to_string(b.n));
    require_odd(a.n, "matching_pair_congruence_check");
    if (a.c == 0 || b.c == 0)
        throw std::invalid_argument("block ordinals are 1-indexed");
    const unsigned e = pruning_shift_exponent(a.n);
    const std::uint64_t mask = (std::uint64_t{1} << e) - 1;
    return ((a.c ^ b.c) & mask) == 0;
}

std::uint64_t tm_block_fingerprint(std::uint64_t n, std::uint64_t c) {
    const std::uint64_t start = checked_block_start(n, c);
    fingerprint_acc acc;
    const std::uint64_t full = n / 64;
    for (std::uint64_t k = 0; k < full; ++k)
        acc.feed(detail::tm_word_at(start + 64 * k));
    const unsigned tail = static_cast<unsigned>(n & 63);
    if (tail != 0)
        acc.feed(detail::tm_word_at(start + 64 * full) & ((std::uint64_t{1} << tail) - 1));
    return acc.finish();
}

namespace detail {

std::optional<std::pair<std::uint64_t, std::uint64_t>>
first_duplicate_block(std::uint64_t n, std::uint64_t max_ordinal,
                      std::uint64_t check_from, bool pruned) {
    if (n == 0)
        throw std::invalid_argument("block length must be positive");
    if ((static_cast<unsigned __int128>(max_ordinal) * n) >> 62)
        throw index_overflow_error("search span out of range");

    const unsigned e = pruned ? pruning_shift_exponent(n) : 0;
    const std::uint64_t mask = (std::uint64_t{1} << e) - 1;

    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> buckets;
    buckets.reserve(1024);
    for (std::uint64_t cprime = 1; cprime <= max_ordinal; ++cprime) {
        const std::uint64_t fp = tm_block_fingerprint(n, cprime);
        if (cprime >= check_from) {
            auto it = buckets.find(fp);
            if (it != buckets.end()) {
                // Insertion order is ascending, so the first verified hit
                // is the smallest partner ordinal.
                for (std::uint64_t c : it->second) {
                    if (((c ^ cprime) & mask) != 0) continue;
                    if (blocks_equal_fast(n, c, cprime))
                        return std::make_pair(c, cprime);
                }
            }
        }
        buckets[fp].push_back(cprime);
    }
    return std::nullopt;
}

} // namespace detail

antipower_verdict is_antipower_word(const finite_word& w, std::uint64_t k) {
    if (k == 0)
        throw std::invalid_argument("antipower order k must be positive");
    if (w.size() % k != 0)
        throw divisibility_error("word length " + std::to_string(w.size()) +
                                 " is not divisible by k = " + std::to_string(k));
    const std::uint64_t n = w.size() / k;

    auto block_equal = [&](std::uint64_t c, std::uint64_t cprime) {
        const std::uint64_t sa = (c - 1) * n;
        const std::uint64_t sb = (cprime - 1) * n;
        const std::uint64_t full = n / 64;
        for (std::uint64_t t = 0; t < full; ++t)
            if (w.word_at_bit(sa + 64 * t) != w.word_at_bit(sb + 64 * t)) return false;
        const unsigned tail = static_cast<unsigned>(n & 63);
        if (tail != 0) {
            const std::uint64_t m = (std::uint64_t{1} << tail) - 1;
            if (((w.word_at_bit(sa + 64 * full) ^ w.word_at_bit(sb + 64 * full)) & m) != 0)
                return false;
        }
        return true;
    };

    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> buckets;
    for (std::uint64_t cprime = 1; cprime <= k; ++cprime) {
        fingerprint_acc acc;
        const std::uint64_t start = (cprime - 1) * n;
        const std::uint64_t full = n / 64;
        for (std::uint64_t t = 0; t < full; ++t)
            acc.feed(w.word_at_bit(start + 64 * t));
        const unsigned tail = static_cast<unsigned>(n & 63);
        if (tail != 0)
            acc.feed(w.word_at_bit(start + 64 * full) & ((std::uint64_t{1} << tail) - 1));
        const std::uint64_t fp = acc.finish();

        auto it = buckets.find(fp);
        if (it != buckets.end())
            for (std::uint64_t c : it->second)
                if (block_equal(c, cprime))
                    return {false, std::make_pair(c, cprime)};
        buckets[fp].push_back(cprime);
    }
    return {true, std::nullopt};
}

antipower_verdict tm_prefix_is_antipower(std::uint64_t n, std::uint64_t k,
                                         std::uint64_t span_cap) {
    require_odd(n, "tm_prefix_is_antipower");
    if (k == 0)
        throw std::invalid_argument("antipower order k must be positive");
    unsigned __int128 span = static_cast<unsigned __int128>(n) * k;
    if (span > span_cap)
        throw resource_limit_error("prefix span k*n exceeds cap " + std::to_string(span_cap));
    auto dup = detail::first_duplicate_block(n, k, 2, true);
    if (dup) return {false, dup};
    return {true, std::nullopt};
}

bool ap_membership(std::uint64_t n, std::uint64_t k, std::uint64_t span_cap) {
    if (n == 0)
        throw std::invalid_argument("block length must be positive");
    if (k == 0)
        throw std::invalid_argument("antipower order k must be positive");
    unsigned __int128 span = static_cast<unsigned __int128>(n) * k;
    if (span > span_cap)
        throw resource_limit_error("prefix span k*n exceeds cap " + std::to_string(span_cap));
    return !detail::first_duplicate_block(n, k, 2, (n & 1) != 0).has_value();
}

} // namespace antipow
