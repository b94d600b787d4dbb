#ifndef ANTIPOW_ASYMPTOTICS_HPP
#define ANTIPOW_ASYMPTOTICS_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "antipow/extremal.hpp"
#include "antipow/kappa.hpp"

namespace antipow {

// Exact value/index quotient; never reduced, so num and den reproduce the
// originating sample directly. num is signed: Gamma - gamma dips below
// zero for small k.
struct ratio {
    std::int64_t num = 0;
    std::uint64_t den = 1;

    friend bool operator==(const ratio&, const ratio&) = default;
};

// a/b < c/d on exact integers.
bool ratio_less(const ratio& a, const ratio& b);

struct kappa_sample {
    kappa_record record;
    ratio kappa_over_n;

    friend bool operator==(const kappa_sample&, const kappa_sample&) = default;
};

struct extremal_sample {
    std::uint64_t k = 0;
    std::uint64_t gamma = 0;
    std::optional<std::uint64_t> big_gamma;
    ratio gamma_over_k;
    std::optional<ratio> big_gamma_over_k;
    std::optional<ratio> diff_over_k; // (Gamma - gamma)/k, absent with Gamma

    friend bool operator==(const extremal_sample&, const extremal_sample&) = default;
};

// One sample per odd n in [n_lo, n_hi]; n_lo > n_hi yields an empty sweep.
// Both bounds must be odd. Propagates cap_exceeded_error from kappa.
std::vector<kappa_sample> sweep_kappa(std::uint64_t n_lo, std::uint64_t n_hi,
                                      unsigned jobs = 1);

// One sample per k in [k_lo, k_hi], k_lo >= 2. The kappa table behind all
// samples is computed once up to the certified cap of k_hi.
std::vector<extremal_sample> sweep_extremal(std::uint64_t k_lo, std::uint64_t k_hi,
                                            unsigned jobs = 1);

// Windowed extremes of gamma(k)/k, Gamma(k)/k and (Gamma-gamma)/k over
// dyadic blocks [2^e, 2^(e+1)) intersected with the swept range.
struct dyadic_band {
    std::uint64_t lo = 0; // inclusive
    std::uint64_t hi = 0; // inclusive
    ratio gamma_min, gamma_max;
    std::optional<ratio> big_gamma_min, big_gamma_max;
    std::optional<ratio> diff_min, diff_max;
};

std::vector<dyadic_band> dyadic_summary(const std::vector<extremal_sample>& samples);

struct rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    friend bool operator==(const rational&, const rational&) = default;
};

// "p/q" or a plain integer; denominator must be positive.
rational parse_rational(std::string_view text);

// Scan of the window (3*2^i, 2^(i+2)*(1-margin)) against the reference
// value kappa(3*2^i + 1). Reports violations, asserts nothing.
struct conjecture_scan_record {
    unsigned i = 0;
    rational margin;
    kappa_record reference;        // at n = 3*2^i + 1
    std::uint64_t window_first = 0; // smallest odd candidate, 0 when empty
    std::uint64_t window_last = 0;  // largest odd candidate, 0 when empty
    std::uint64_t window_count = 0;
    std::vector<std::uint64_t> violations; // n with kappa(n) > reference

    friend bool operator==(const conjecture_scan_record&,
                           const conjecture_scan_record&) = default;
};

conjecture_scan_record conjecture_scan(unsigned i, rational margin, unsigned jobs = 1);

} // namespace antipow

#endif
