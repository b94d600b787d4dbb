#ifndef ANTIPOW_FINITE_WORD_HPP
#define ANTIPOW_FINITE_WORD_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace antipow {

// A finite binary word packed LSB-first into 64-bit limbs. Bits past the
// logical length are kept zero so equality is plain limb comparison.
class finite_word {
public:
    finite_word() = default;
    explicit finite_word(std::uint64_t length)
        : words_((length + 63) / 64, 0), size_(length) {}

    static finite_word from_string(std::string_view bits);

    std::uint64_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    unsigned bit(std::uint64_t i) const {
        return static_cast<unsigned>((words_[i >> 6] >> (i & 63)) & 1u);
    }

    void set_bit(std::uint64_t i, unsigned value) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    std::uint64_t word_count() const { return words_.size(); }

    // Limb w, or zero when reading past the end (convenient for shifts).
    std::uint64_t word(std::uint64_t w) const {
        return w < words_.size() ? words_[w] : 0;
    }

    std::uint64_t& word_ref(std::uint64_t w) { return words_[w]; }

    std::span<const std::uint64_t> words() const { return words_; }

    // 64 bits starting at an arbitrary bit offset (zero-padded at the end).
    std::uint64_t word_at_bit(std::uint64_t start) const {
        const std::uint64_t w = start >> 6;
        const unsigned off = static_cast<unsigned>(start & 63);
        std::uint64_t out = word(w) >> off;
        if (off != 0)
            out |= word(w + 1) << (64 - off);
        return out;
    }

    std::string to_string() const;
    finite_word subword(std::uint64_t start, std::uint64_t length) const;
    bool contains(std::string_view pattern) const;

    friend bool operator==(const finite_word&, const finite_word&) = default;

private:
    std::vector<std::uint64_t> words_;
    std::uint64_t size_ = 0;
};

} // namespace antipow

#endif
