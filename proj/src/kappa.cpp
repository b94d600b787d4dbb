#include "antipow/kappa.hpp"

#include <bit>
#include <string>

#include "antipow/antipower.hpp"
#include "antipow/errors.hpp"

namespace antipow {

namespace {

void require_odd(std::uint64_t n, const char* what) {
    if (n == 0 || n % 2 == 0)
        throw parity_error(std::string(what) + " is defined for odd n only, got " +
                           std::to_string(n));
}

} // namespace

std::uint64_t kappa_lower_bound(std::uint64_t n) {
    require_odd(n, "kappa_lower_bound");
    if (n < 3) return 3; // the formula degenerates at n = 1; kappa(1) = 3
    // 1 + 2^(1+e) with e the largest exponent such that 3*2^e <= n.
    std::uint64_t e = 0;
    while (3 * (std::uint64_t{2} << e) <= n) ++e;
    return 1 + (std::uint64_t{2} << e);
}

std::optional<kappa_record> kappa_at_most(std::uint64_t n, std::uint64_t limit) {
    require_odd(n, "kappa");
    // Ordinals below the lower bound cannot repeat an earlier block, so
    // duplicate checks start there; insertion still covers every block.
    auto dup = detail::first_duplicate_block(n, limit, kappa_lower_bound(n), true);
    if (!dup) return std::nullopt;
    return kappa_record{n, dup->second, *dup};
}

kappa_record kappa(std::uint64_t n, std::uint64_t cap) {
    auto rec = kappa_at_most(n, cap);
    if (!rec) throw cap_exceeded_error(n, cap);
    return *rec;
}

} // namespace antipow
