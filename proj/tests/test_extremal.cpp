#include <doctest.h>

#include <stdexcept>

#include "antipow/extremal.hpp"
#include "antipow/kappa.hpp"
#include "oracle.hpp"

using namespace antipow;

TEST_CASE("certified_cap") {
    CHECK(certified_cap(2) == 1);
    CHECK(certified_cap(3) == 7);
    CHECK(certified_cap(4) == 7);
    CHECK(certified_cap(64) == 97);
    CHECK(certified_cap(4096) == 6145);
    for (std::uint64_t k = 2; k <= 200; ++k) {
        const std::uint64_t cap = certified_cap(k);
        CHECK(kappa_lower_bound(cap) > k);
        if (cap > 2) CHECK(kappa_lower_bound(cap - 2) <= k);
        CHECK(cap < 3 * k);
    }
}

TEST_CASE("gamma pinned values") {
    CHECK(gamma(2) == 1);
    CHECK(gamma(3) == 5);
    CHECK(gamma(6) == 5);
    CHECK(gamma(7) == 11);
    CHECK_THROWS_AS(gamma(1), std::invalid_argument);
}

TEST_CASE("big_gamma and complement pinned values") {
    CHECK_FALSE(big_gamma(2).has_value());
    CHECK(big_gamma(3) == 3);
    CHECK(big_gamma(10) == 17);
    CHECK(complement_set(2).empty());
    CHECK(complement_set(3) == std::vector<std::uint64_t>{1, 3});
    CHECK(complement_set(7) == std::vector<std::uint64_t>{1, 3, 5, 7, 9});
}

TEST_CASE("extremal matches the direct prefix-test oracle for k <= 32") {
    for (std::uint64_t k = 2; k <= 32; ++k) {
        const extremal_record rec = extremal(k);
        CHECK(rec.gamma == oracle::gamma_direct(k));
        CHECK(rec.complement == oracle::complement_direct(k));
        const auto comp = oracle::complement_direct(k);
        if (comp.empty())
            CHECK_FALSE(rec.big_gamma.has_value());
        else
            CHECK(rec.big_gamma == comp.back());
    }
}

TEST_CASE("membership duality: n in F(k) iff kappa(n) > k") {
    for (std::uint64_t n = 1; n <= 99; n += 2) {
        const std::uint64_t kv = kappa(n).kappa;
        for (std::uint64_t k = 2; k <= 64; ++k)
            CHECK((kv > k) == oracle::prefix_antipower_member(n, k));
    }
}

TEST_CASE("gamma and big_gamma are nondecreasing") {
    std::uint64_t prev_gamma = 0, prev_big = 0;
    for (std::uint64_t k = 2; k <= 64; ++k) {
        const extremal_record rec = extremal(k);
        CHECK(rec.gamma >= prev_gamma);
        prev_gamma = rec.gamma;
        if (rec.big_gamma) {
            CHECK(*rec.big_gamma >= prev_big);
            prev_big = *rec.big_gamma;
        }
    }
}

TEST_CASE("record invariants") {
    for (std::uint64_t k : {2ull, 3ull, 8ull, 17ull, 64ull}) {
        const extremal_record rec = extremal(k);
        CHECK(rec.k == k);
        CHECK(rec.gamma % 2 == 1);
        CHECK(kappa_lower_bound(rec.cap_used) > k);
        // gamma is genuinely the least odd n with kappa(n) > k
        CHECK(kappa_at_most(rec.gamma, k) == std::nullopt);
        for (std::uint64_t n = 1; n < rec.gamma; n += 2)
            CHECK(kappa_at_most(n, k).has_value());
        for (std::uint64_t n : rec.complement)
            CHECK(kappa(n).kappa <= k);
    }
}
