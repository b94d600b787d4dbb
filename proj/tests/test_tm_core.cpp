#include <doctest.h>

#include <random>

#include "antipow/errors.hpp"
#include "antipow/tm_core.hpp"
#include "oracle.hpp"

using namespace antipow;

TEST_CASE("tm_letter pinned values") {
    CHECK(tm_letter(0) == 0);
    CHECK(tm_letter(5) == 0);
    CHECK(tm_letter(std::uint64_t{1} << 40) == 1);
    CHECK(tm_letter((std::uint64_t{1} << 63) - 1) == 1); // 63 ones
}

TEST_CASE("tm_letter agrees with the division-based digit sum") {
    for (std::uint64_t n = 0; n < 4096; ++n) CHECK(tm_letter(n) == oracle::letter(n));
    std::mt19937_64 rng(7);
    for (int t = 0; t < 2000; ++t) {
        const std::uint64_t n = rng() >> (t % 32);
        CHECK(tm_letter(n) == oracle::letter(n));
    }
}

TEST_CASE("tm_letter recurrence") {
    for (std::uint64_t n = 0; n < 50000; ++n) {
        CHECK(tm_letter(2 * n) == tm_letter(n));
        CHECK(tm_letter(2 * n + 1) == 1 - tm_letter(n));
    }
}

TEST_CASE("tm_equiv") {
    CHECK(tm_equiv(1, 2));
    CHECK(tm_equiv(0, 3));
    for (std::uint64_t n : {1ull, 2ull, 37ull, 1000ull, (1ull << 50) + 9})
        CHECK(tm_equiv(n, 2 * n));
    CHECK_FALSE(tm_equiv(0, 1));
}

TEST_CASE("tm_equiv has exactly two classes") {
    // every index is equivalent to 0 or to 1, never both
    for (std::uint64_t n = 0; n < 1000; ++n)
        CHECK(tm_equiv(n, 0) != tm_equiv(n, 1));
    // symmetry and transitivity on a small range
    for (std::uint64_t a = 0; a < 24; ++a)
        for (std::uint64_t b = 0; b < 24; ++b) {
            CHECK(tm_equiv(a, b) == tm_equiv(b, a));
            for (std::uint64_t c = 0; c < 24; ++c)
                if (tm_equiv(a, b) && tm_equiv(b, c)) CHECK(tm_equiv(a, c));
        }
}

TEST_CASE("tm_prefix pinned values") {
    CHECK(tm_prefix(16).to_string() == "0110100110010110");
    CHECK(tm_prefix(1).to_string() == "0");
    CHECK(tm_prefix(4).to_string() == "0110");
    CHECK(tm_prefix(0).to_string().empty());
}

TEST_CASE("tm_prefix matches the doubling construction") {
    for (unsigned m = 0; m <= 20; ++m) {
        const finite_word w = tm_prefix(std::uint64_t{1} << m);
        if (m <= 14) {
            CHECK(w.to_string() == oracle::doubling_word(m));
        } else {
            // word-level doubling: second half is the complement of the first
            const std::uint64_t half = std::uint64_t{1} << (m - 1);
            bool ok = true;
            for (std::uint64_t idx = 0; idx < half && ok; idx += 977)
                ok = w.bit(half + idx) == 1 - w.bit(idx);
            CHECK(ok);
        }
    }
}

TEST_CASE("prefix avoids cubes and the alternating factors") {
    const finite_word w = tm_prefix(std::uint64_t{1} << 16);
    CHECK_FALSE(w.contains("000"));
    CHECK_FALSE(w.contains("111"));
    CHECK_FALSE(w.contains("01010"));
    CHECK_FALSE(w.contains("10101"));
}

TEST_CASE("tm_factor") {
    CHECK(tm_factor(6, 3).to_string() == "011");
    CHECK(tm_factor(0, 0).to_string().empty());
    CHECK(tm_factor(10, 5).to_string() == "01011");
    // consistency with the prefix
    const finite_word p = tm_prefix(512);
    for (std::uint64_t start : {0ull, 1ull, 63ull, 64ull, 65ull, 100ull, 400ull})
        CHECK(tm_factor(start, 100).to_string() == p.subword(start, 100).to_string());
}

TEST_CASE("tm_factor errors") {
    CHECK_THROWS_AS(tm_prefix(100, 50), resource_limit_error);
    CHECK_THROWS_AS(tm_factor(~std::uint64_t{0} - 1, 10), index_overflow_error);
}

TEST_CASE("generalized_letter") {
    CHECK(generalized_letter(3, 5) == 0);
    CHECK(generalized_letter(2, 7) == 1);
    CHECK(generalized_letter(10, 19) == 0);
    CHECK_THROWS_AS(generalized_letter(1, 5), invalid_base_error);
    CHECK_THROWS_AS(generalized_letter(0, 5), invalid_base_error);
    for (std::uint64_t n = 0; n < 2000; ++n)
        CHECK(generalized_letter(2, n) == tm_letter(n));
}

TEST_CASE("finite_word basics") {
    const finite_word w = finite_word::from_string("0110100110010110");
    CHECK(w.size() == 16);
    CHECK(w == tm_prefix(16));
    CHECK(w.subword(6, 3).to_string() == "011");
    CHECK(w.contains("0010"));
    CHECK_FALSE(w.contains("000"));
    CHECK_THROWS_AS(finite_word::from_string("012"), antipow::error);
    CHECK_THROWS_AS(w.subword(10, 10), antipow::error);
}

TEST_CASE("finite_word word_at_bit crosses limb boundaries") {
    const finite_word w = tm_prefix(300);
    for (std::uint64_t start : {0ull, 1ull, 31ull, 63ull, 64ull, 127ull, 200ull}) {
        const std::uint64_t got = w.word_at_bit(start);
        for (unsigned b = 0; b < 64 && start + b < 300; ++b)
            CHECK(((got >> b) & 1) == w.bit(start + b));
    }
}
