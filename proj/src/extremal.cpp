#include "antipow/extremal.hpp"

#include <stdexcept>

#include "antipow/kappa.hpp"

namespace antipow {

namespace {

void require_k(std::uint64_t k) {
    if (k < 2)
        throw std::invalid_argument("extremal functions require k >= 2");
}

} // namespace

std::uint64_t certified_cap(std::uint64_t k) {
    require_k(k);
    std::uint64_t n = 1;
    while (kappa_lower_bound(n) <= k) n += 2;
    return n;
}

std::uint64_t gamma(std::uint64_t k) {
    require_k(k);
    for (std::uint64_t n = 1;; n += 2)
        if (!kappa_at_most(n, k)) return n;
}

std::optional<std::uint64_t> big_gamma(std::uint64_t k) {
    auto rec = extremal(k);
    return rec.big_gamma;
}

std::vector<std::uint64_t> complement_set(std::uint64_t k) {
    return extremal(k).complement;
}

extremal_record extremal(std::uint64_t k) {
    require_k(k);
    extremal_record rec;
    rec.k = k;
    rec.cap_used = certified_cap(k);
    rec.gamma = 0;
    for (std::uint64_t n = 1; n < rec.cap_used; n += 2) {
        if (kappa_at_most(n, k)) {
            rec.complement.push_back(n);
        } else if (rec.gamma == 0) {
            rec.gamma = n;
        }
    }
    if (rec.gamma == 0) rec.gamma = rec.cap_used; // kappa(cap) > k is certified
    if (!rec.complement.empty()) rec.big_gamma = rec.complement.back();
    return rec;
}

} // namespace antipow
