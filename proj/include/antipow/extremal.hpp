#ifndef ANTIPOW_EXTREMAL_HPP
#define ANTIPOW_EXTREMAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace antipow {

// F(k) is the set of odd n whose length-kn prefix is a k-antipower,
// equivalently kappa(n) > k. gamma(k) = min F(k); Gamma(k) = max of the
// finite complement (2N-1) \ F(k), absent when the complement is empty.
struct extremal_record {
    std::uint64_t k = 0;
    std::uint64_t gamma = 0;
    std::optional<std::uint64_t> big_gamma;
    std::vector<std::uint64_t> complement; // sorted odd n with kappa(n) <= k
    std::uint64_t cap_used = 0;            // every odd n >= cap has kappa > k

    friend bool operator==(const extremal_record&, const extremal_record&) = default;
};

// Smallest odd bound with kappa_lower_bound(bound) > k; certifies that the
// complement scan below it is complete. Always < 3k.
std::uint64_t certified_cap(std::uint64_t k);

// Least odd n with kappa(n) > k. Requires k >= 2.
std::uint64_t gamma(std::uint64_t k);

// Greatest odd n with kappa(n) <= k, or absent when no such n exists.
std::optional<std::uint64_t> big_gamma(std::uint64_t k);

// All odd n with kappa(n) <= k, sorted ascending.
std::vector<std::uint64_t> complement_set(std::uint64_t k);

extremal_record extremal(std::uint64_t k);

} // namespace antipow

#endif
