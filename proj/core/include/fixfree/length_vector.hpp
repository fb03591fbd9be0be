#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "fixfree/dyadic.hpp"

namespace fixfree {

// Codeword counts per length: count(i) codewords of length i, i >= 1.
// Always held in canonical form with trailing zeros trimmed.
class LengthVector {
public:
    LengthVector() = default;
    // counts[0] is the number of words of length 1.
    explicit LengthVector(std::vector<std::uint64_t> counts);
    LengthVector(std::initializer_list<std::uint64_t> counts)
        : LengthVector(std::vector<std::uint64_t>(counts)) {}

    // Largest length with a nonzero count; 0 for the empty vector.
    unsigned max_length() const noexcept { return static_cast<unsigned>(counts_.size()); }
    bool empty() const noexcept { return counts_.empty(); }
    std::uint64_t count(unsigned length) const noexcept {
        return length >= 1 && length <= counts_.size() ? counts_[length - 1] : 0;
    }
    const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
    std::uint64_t total() const noexcept;

    // First `n` counts, zero padded when n exceeds max_length().
    std::vector<std::uint64_t> padded(unsigned n) const;
    // "(0,0,2,1)"
    std::string to_string() const;

    friend LengthVector operator+(const LengthVector& a, const LengthVector& b);
    friend bool operator==(const LengthVector&, const LengthVector&) = default;

private:
    std::vector<std::uint64_t> counts_;
};

// Sum over i of count(i) / 2^i, exact.
DyadicRational kraft_sum(const LengthVector& v);

}  // namespace fixfree
