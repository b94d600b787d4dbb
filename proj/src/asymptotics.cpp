#include "antipow/asymptotics.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>
#include <string>

#include "antipow/errors.hpp"
#include "antipow/parallel.hpp"

namespace antipow {

bool ratio_less(const ratio& a, const ratio& b) {
    return static_cast<__int128>(a.num) * static_cast<__int128>(b.den) <
           static_cast<__int128>(b.num) * static_cast<__int128>(a.den);
}

std::vector<kappa_sample> sweep_kappa(std::uint64_t n_lo, std::uint64_t n_hi,
                                      unsigned jobs) {
    if (n_lo > n_hi) return {};
    if (n_lo % 2 == 0 || n_hi % 2 == 0)
        throw parity_error("sweep bounds must be odd");
    const std::uint64_t count = (n_hi - n_lo) / 2 + 1;
    std::vector<kappa_sample> samples(count);
    parallel_for(count, jobs, [&](std::uint64_t idx) {
        const std::uint64_t n = n_lo + 2 * idx;
        kappa_record rec = kappa(n);
        samples[idx] = {rec, {static_cast<std::int64_t>(rec.kappa), n}};
    });
    return samples;
}

std::vector<extremal_sample> sweep_extremal(std::uint64_t k_lo, std::uint64_t k_hi,
                                            unsigned jobs) {
    if (k_lo < 2 || k_lo > k_hi)
        throw std::invalid_argument("extremal sweep requires 2 <= k_lo <= k_hi");

    // One bounded-kappa table up to the cap certified for the largest k
    // serves every k in the range.
    const std::uint64_t cap = certified_cap(k_hi);
    const std::uint64_t n_count = cap / 2; // odd n in [1, cap)
    std::vector<std::uint64_t> bounded(n_count, 0); // 0 = kappa(n) > k_hi
    parallel_for(n_count, jobs, [&](std::uint64_t idx) {
        auto rec = kappa_at_most(1 + 2 * idx, k_hi);
        if (rec) bounded[idx] = rec->kappa;
    });

    std::vector<extremal_sample> samples;
    samples.reserve(k_hi - k_lo + 1);
    for (std::uint64_t k = k_lo; k <= k_hi; ++k) {
        extremal_sample s;
        s.k = k;
        s.gamma = cap;
        for (std::uint64_t idx = 0; idx < n_count; ++idx) {
            const std::uint64_t n = 1 + 2 * idx;
            const bool in_complement = bounded[idx] != 0 && bounded[idx] <= k;
            if (in_complement)
                s.big_gamma = n;
            else if (s.gamma == cap)
                s.gamma = std::min(s.gamma, n);
        }
        s.gamma_over_k = {static_cast<std::int64_t>(s.gamma), k};
        if (s.big_gamma) {
            s.big_gamma_over_k = ratio{static_cast<std::int64_t>(*s.big_gamma), k};
            s.diff_over_k = ratio{static_cast<std::int64_t>(*s.big_gamma) -
                                      static_cast<std::int64_t>(s.gamma),
                                  k};
        }
        samples.push_back(std::move(s));
    }
    return samples;
}

std::vector<dyadic_band> dyadic_summary(const std::vector<extremal_sample>& samples) {
    std::vector<dyadic_band> bands;
    for (const auto& s : samples) {
        const unsigned e = static_cast<unsigned>(std::bit_width(s.k)) - 1;
        const std::uint64_t w_lo = std::uint64_t{1} << e;
        const std::uint64_t w_hi = (std::uint64_t{2} << e) - 1;
        if (bands.empty() || bands.back().hi < w_lo) {
            dyadic_band b;
            b.lo = std::max(w_lo, s.k);
            b.hi = std::min(w_hi, s.k);
            b.gamma_min = b.gamma_max = s.gamma_over_k;
            b.big_gamma_min = b.big_gamma_max = s.big_gamma_over_k;
            b.diff_min = b.diff_max = s.diff_over_k;
            bands.push_back(b);
            continue;
        }
        auto& b = bands.back();
        b.hi = std::min(w_hi, s.k);
        if (ratio_less(s.gamma_over_k, b.gamma_min)) b.gamma_min = s.gamma_over_k;
        if (ratio_less(b.gamma_max, s.gamma_over_k)) b.gamma_max = s.gamma_over_k;
        if (s.big_gamma_over_k) {
            if (!b.big_gamma_min || ratio_less(*s.big_gamma_over_k, *b.big_gamma_min))
                b.big_gamma_min = s.big_gamma_over_k;
            if (!b.big_gamma_max || ratio_less(*b.big_gamma_max, *s.big_gamma_over_k))
                b.big_gamma_max = s.big_gamma_over_k;
        }
        if (s.diff_over_k) {
            if (!b.diff_min || ratio_less(*s.diff_over_k, *b.diff_min))
                b.diff_min = s.diff_over_k;
            if (!b.diff_max || ratio_less(*b.diff_max, *s.diff_over_k))
                b.diff_max = s.diff_over_k;
        }
    }
    return bands;
}

rational parse_rational(std::string_view text) {
    const auto parse_u64 = [](std::string_view part) {
        std::uint64_t value = 0;
        const char* first = part.data();
        const char* last = part.data() + part.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last)
            throw std::invalid_argument("invalid rational component: " + std::string(part));
        return value;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return {parse_u64(text), 1};
    rational r{parse_u64(text.substr(0, slash)), parse_u64(text.substr(slash + 1))};
    if (r.den == 0) throw std::invalid_argument("rational denominator must be positive");
    return r;
}

conjecture_scan_record conjecture_scan(unsigned i, rational margin, unsigned jobs) {
    if (i < 1 || i > 30)
        throw std::invalid_argument("conjecture scan expects 1 <= i <= 30");
    conjecture_scan_record rec;
    rec.i = i;
    rec.margin = margin;

    const std::uint64_t ref_n = 3 * (std::uint64_t{1} << i) + 1;
    rec.reference = kappa(ref_n);

    // Odd n with 3*2^i < n and n*q < 2^(i+2)*(q-p).
    std::vector<std::uint64_t> candidates;
    if (margin.num < margin.den) {
        const unsigned __int128 upper =
            static_cast<unsigned __int128>(std::uint64_t{1} << (i + 2)) *
            (margin.den - margin.num);
        for (std::uint64_t n = 3 * (std::uint64_t{1} << i) + 1;
             static_cast<unsigned __int128>(n) * margin.den < upper; n += 2)
            candidates.push_back(n);
    }
    rec.window_count = candidates.size();
    if (!candidates.empty()) {
        rec.window_first = candidates.front();
        rec.window_last = candidates.back();
    }

    std::vector<char> exceeded(candidates.size(), 0);
    parallel_for(candidates.size(), jobs, [&](std::uint64_t idx) {
        exceeded[idx] = kappa_at_most(candidates[idx], rec.reference.kappa) ? 0 : 1;
    });
    for (std::size_t idx = 0; idx < candidates.size(); ++idx)
        if (exceeded[idx]) rec.violations.push_back(candidates[idx]);
    return rec;
}

} // namespace antipow
