#ifndef ANTIPOW_ERRORS_HPP
#define ANTIPOW_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace antipow {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An odd argument was required (block lengths for kappa, gamma, ...).
struct parity_error : error {
    using error::error;
};

struct invalid_base_error : error {
    using error::error;
};

// k does not divide the word length in an antipower test.
struct divisibility_error : error {
    using error::error;
};

// Two block references with different lengths were compared.
struct length_mismatch_error : error {
    using error::error;
};

// A materialization or search span exceeded its configured cap.
struct resource_limit_error : error {
    using error::error;
};

// Index arithmetic left the supported range.
struct index_overflow_error : error {
    using error::error;
};

// No block duplicate was found within the ordinal cap; carries progress.
struct cap_exceeded_error : error {
    std::uint64_t n;
    std::uint64_t cap;
    std::uint64_t blocks_checked;

    cap_exceeded_error(std::uint64_t n_, std::uint64_t cap_)
        : error("kappa(" + std::to_string(n_) + ") exceeds ordinal cap " +
                std::to_string(cap_) + " (" + std::to_string(cap_) +
                " blocks checked without a duplicate)"),
          n(n_), cap(cap_), blocks_checked(cap_) {}
};

// Lemma parameters that admit no valid configuration.
struct infeasible_parameters_error : error {
    using error::error;
};

} // namespace antipow

#endif
