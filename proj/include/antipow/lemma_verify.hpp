#ifndef ANTIPOW_LEMMA_VERIFY_HPP
#define ANTIPOW_LEMMA_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "antipow/kappa.hpp"

namespace antipow {

// One grid point of a finite-range lemma check.
struct lemma_case {
    std::vector<std::pair<std::string, long long>> params;
    bool pass = false;
    std::string note;
    std::optional<kappa_record> counterexample;
};

struct lemma_report {
    std::string lemma_id;
    std::vector<lemma_case> cases;
    std::vector<std::string> notes;
    // Most lemmas require every case to pass; existence-style lemmas
    // (the 17/6 window) require at least one.
    bool overall = true;

    bool passed() const { return overall; }
};

// Residue tables used by the 32x+d and 2^i+d block-matching arguments.
// phi is defined on d in {+-1, +-3, +-5, +-11, +-13}; for d in {+-3, +-5}
// the offsets d+phi(d)+s and phi(d)+s are letter-equivalent for s=0,1,2,
// for the remaining d they are inequivalent. psi is defined on {1,5,11,13}.
unsigned phi_of(long long d);
bool phi_equivalent_class(long long d);
unsigned psi_of(long long d);

// Exhaustive check of both residue tables over their finite domains.
lemma_report verify_digit_tables();

// Digit-sum parity letters against the doubling construction, prefix
// lengths 2^0 .. 2^max_exponent.
lemma_report verify_digit_sum_prop(unsigned max_exponent = 20);

// For odd n in (2^i, 3*2^(i-1)) with n = a*2^j +- 1, a odd, j >= j_min:
// kappa(n) <= 2^i + 3*2^j + 5.
lemma_report verify_8x_family(unsigned i, unsigned j_min = 3, unsigned jobs = 1);

// For odd n in (2^i, 3*2^(i-1)) with n = a*2^j + d, a odd, j >= 5,
// d in {+-3, +-5, +-11, +-13}: kappa(n) <= 2^i + 3*2^j + 28.
lemma_report verify_32x_family(unsigned i, unsigned jobs = 1);

// Search trace for the three floor conditions that locate a matching block
// pair (c+1, c+1+2^(i-1)) when n = a*2^j + d sits just above 2^i.
struct condition_search_trace {
    std::uint64_t n = 0;
    unsigned i = 0;
    unsigned k_shift = 0; // i - j
    unsigned j = 0;
    long long d = 0;
    std::uint64_t a = 0;
    std::optional<std::uint64_t> found_c;
    unsigned p = 0; // the parity-matching choice in {1, 2}
    bool cond_floor_gap = false;   // floor gap across c, c+1 equals 2
    bool cond_phi_residue = false; // floor = phi(d) mod 32
    bool cond_dyadic_band = false; // p*2^j < floor < (p+1)*2^j
    bool internal_bound_ok = false; // j >= 3*k_shift + 11
};

// Searches c <= 2^(i-1)+6 for the three conditions; the decomposition
// (a, j, d) is recovered from n. Throws std::invalid_argument when n has
// no eligible decomposition at this i.
condition_search_trace find_c_conditions(std::uint64_t n, unsigned i);

// For n = a*2^j + d with j = i - k_shift >= ceil((3i+11)/4) and offsets
// d in {+-1, +-3, +-5, +-11, +-13}: kappa(n) <= 2^i + 7. Throws
// infeasible_parameters_error when the j inequality fails at this i.
lemma_report verify_close_to_high(unsigned i, unsigned k_shift, unsigned jobs = 1);

// Exact values: kappa(2^i+1) = 2^(i-1)+2, kappa(2^i+3) = 2^i+5, and
// kappa(2^(2i)-3) = 2^(2i)+10, for each i in [i_lo, i_hi]. The third
// family grows as 4^i; cases whose search span (expected ordinals times
// packed words per block) exceeds span_budget are omitted with a note.
lemma_report verify_exact_families(unsigned i_lo, unsigned i_hi, unsigned jobs = 1,
                                   std::uint64_t span_budget = std::uint64_t{1} << 33);

// Existence: some odd n in (17/6*2^i - 96, 17/6*2^i) has kappa(n) <= 2^i+6.
lemma_report verify_window_17_6(unsigned i, unsigned jobs = 1);

// One line per grid point: lemma_id, parameters, verdict, counterexample.
std::string to_text(const lemma_report& report);

} // namespace antipow

#endif
