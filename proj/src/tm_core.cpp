#include "antipow/tm_core.hpp"

#include <string>

#include "antipow/errors.hpp"

namespace antipow {

unsigned generalized_letter(std::uint64_t base, std::uint64_t n) {
    if (base < 2)
        throw invalid_base_error("generalized letter requires base >= 2, got " +
                                 std::to_string(base));
    std::uint64_t sum = 0;
    while (n != 0) {
        sum += n % base;
        n /= base;
    }
    return static_cast<unsigned>(sum % base);
}

finite_word tm_prefix(std::uint64_t length, std::uint64_t cap) {
    return tm_factor(0, length, cap);
}

finite_word tm_factor(std::uint64_t start, std::uint64_t length, std::uint64_t cap) {
    if (length > cap)
        throw resource_limit_error("factor length " + std::to_string(length) +
                                   " exceeds materialization cap " + std::to_string(cap));
    std::uint64_t end;
    if (__builtin_add_overflow(start, length, &end))
        throw index_overflow_error("factor end index overflows 64 bits");

    finite_word w(length);
    const std::uint64_t full = length / 64;
    for (std::uint64_t k = 0; k < full; ++k)
        w.word_ref(k) = detail::tm_word_at(start + 64 * k);
    const unsigned tail = static_cast<unsigned>(length & 63);
    if (tail != 0) {
        const std::uint64_t mask = (std::uint64_t{1} << tail) - 1;
        w.word_ref(full) = detail::tm_word_at(start + 64 * full) & mask;
    }
    return w;
}

finite_word finite_word::from_string(std::string_view bits) {
    finite_word w(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1')
            throw error("finite word literals may contain only 0 and 1");
        if (bits[i] == '1') w.set_bit(i, 1);
    }
    return w;
}

std::string finite_word::to_string() const {
    std::string s;
    s.reserve(size_);
    for (std::uint64_t i = 0; i < size_; ++i)
        s.push_back(static_cast<char>('0' + bit(i)));
    return s;
}

finite_word finite_word::subword(std::uint64_t start, std::uint64_t length) const {
    if (start + length > size_)
        throw error("subword range exceeds word length");
    finite_word out(length);
    const std::uint64_t full = length / 64;
    for (std::uint64_t k = 0; k < full; ++k)
        out.word_ref(k) = word_at_bit(start + 64 * k);
    const unsigned tail = static_cast<unsigned>(length & 63);
    if (tail != 0) {
        const std::uint64_t mask = (std::uint64_t{1} << tail) - 1;
        out.word_ref(full) = word_at_bit(start + 64 * full) & mask;
    }
    return out;
}

bool finite_word::contains(std::string_view pattern) const {
    const std::uint64_t m = pattern.size();
    if (m == 0 || m > size_) return m == 0;
    for (std::uint64_t pos = 0; pos + m <= size_; ++pos) {
        bool hit = true;
        for (std::uint64_t j = 0; j < m; ++j) {
            if (bit(pos + j) != static_cast<unsigned>(pattern[j] - '0')) {
                hit = false;
                break;
            }
        }
        if (hit) return true;
    }
    return false;
}

} // namespace antipow
