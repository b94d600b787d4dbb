#ifndef ANTIPOW_KAPPA_HPP
#define ANTIPOW_KAPPA_HPP

#include <cstdint>
#include <optional>
#include <utility>

namespace antipow {

// kappa(n) is the least k such that the length-kn prefix of t is not a
// k-antipower, equivalently the least ordinal whose block repeats an
// earlier one. The witness blocks are equal and c' = kappa.
struct kappa_record {
    std::uint64_t n = 0;
    std::uint64_t kappa = 0;
    std::pair<std::uint64_t, std::uint64_t> witness{0, 0};

    friend bool operator==(const kappa_record&, const kappa_record&) = default;
};

inline constexpr std::uint64_t default_kappa_cap = std::uint64_t{1} << 24;

// 1 + 2^(1+floor(log2(n/3))) for odd n >= 3; kappa(1) = 3 directly.
// Every kappa value is at least this. Throws parity_error on even n.
std::uint64_t kappa_lower_bound(std::uint64_t n);

// Pruned duplicate search; throws cap_exceeded_error (with progress) when
// kappa(n) > cap and parity_error on even n.
kappa_record kappa(std::uint64_t n, std::uint64_t cap = default_kappa_cap);

// As kappa, but returns nothing instead of throwing when kappa(n) > limit.
std::optional<kappa_record> kappa_at_most(std::uint64_t n, std::uint64_t limit);

} // namespace antipow

#endif
