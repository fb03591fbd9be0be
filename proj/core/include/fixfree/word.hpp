#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace fixfree {

// Hard ceiling imposed by the 64-bit storage of a word.
inline constexpr unsigned kMaxStorableLength = 63;
// Default configured cap on codeword and frontier lengths.
inline constexpr unsigned kDefaultMaxLength = 24;

// A binary word stored MSB-first as (value, length). For equal lengths the
// integer order of `value` is the lexicographic order of the bit strings.
class Word {
public:
    // Throws std::domain_error unless 1 <= length <= kMaxStorableLength and
    // value < 2^length.
    Word(std::uint64_t value, unsigned length);

    // Parses a non-empty string over {0,1}. Throws ParseError otherwise.
    static Word parse(std::string_view bits);

    std::uint64_t value() const noexcept { return value_; }
    unsigned length() const noexcept { return length_; }

    // Bit at position i, counted from the left (0 = first bit).
    unsigned bit(unsigned i) const noexcept { return (value_ >> (length_ - 1 - i)) & 1u; }
    unsigned first_bit() const noexcept { return bit(0); }
    unsigned last_bit() const noexcept { return static_cast<unsigned>(value_ & 1u); }

    std::string to_string() const;

    // Orders by length first, then lexicographically.
    friend auto operator<=>(const Word& a, const Word& b) noexcept {
        if (auto c = a.length_ <=> b.length_; c != 0) return c;
        return a.value_ <=> b.value_;
    }
    friend bool operator==(const Word&, const Word&) noexcept = default;

private:
    std::uint64_t value_;
    unsigned length_;
};

// The α⋆β form of a word: its first and last bit.
struct WordForm {
    unsigned first;
    unsigned last;

    // 0⋆0 -> 0, 0⋆1 -> 1, 1⋆0 -> 2, 1⋆1 -> 3.
    unsigned index() const noexcept { return first * 2 + last; }
    static WordForm from_index(unsigned i) noexcept { return {i >> 1, i & 1u}; }
    std::string to_string() const;

    friend bool operator==(const WordForm&, const WordForm&) noexcept = default;
};

inline constexpr std::uint64_t low_mask(unsigned bits) noexcept {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

// First p bits of w. Throws std::domain_error unless 1 <= p <= w.length().
Word prefix(const Word& w, unsigned p);
// Last p bits of w. Throws std::domain_error unless 1 <= p <= w.length().
Word suffix(const Word& w, unsigned p);
WordForm form_of(const Word& w) noexcept;

// True if u is a prefix (resp. suffix) of w, including u == w.
bool is_prefix_of(const Word& u, const Word& w) noexcept;
bool is_suffix_of(const Word& u, const Word& w) noexcept;

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        return std::hash<std::uint64_t>{}(w.value() * 64 + w.length());
    }
};

}  // namespace fixfree
