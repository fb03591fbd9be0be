#include "fixfree/length_vector.hpp"

#include <algorithm>
#include <numeric>

namespace fixfree {

LengthVector::LengthVector(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {
    while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

std::uint64_t LengthVector::total() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

std::vector<std::uint64_t> LengthVector::padded(unsigned n) const {
    std::vector<std::uint64_t> out(n, 0);
    std::copy_n(counts_.begin(), std::min<std::size_t>(n, counts_.size()), out.begin());
    return out;
}

std::string LengthVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(counts_[i]);
    }
    return s + ")";
}

LengthVector operator+(const LengthVector& a, const LengthVector& b) {
    const unsigned n = std::max(a.max_length(), b.max_length());
    std::vector<std::uint64_t> sum(n);
    for (unsigned i = 1; i <= n; ++i) sum[i - 1] = a.count(i) + b.count(i);
    return LengthVector(std::move(sum));
}

DyadicRational kraft_sum(const LengthVector& v) {
    // Horner over a common denominator 2^n.
    const unsigned n = v.max_length();
    BigInt numerator = 0;
    for (unsigned i = 1; i <= n; ++i) {
        numerator += BigInt(v.count(i)) << (n - i);
    }
    return DyadicRational(std::move(numerator), n);
}

}  // namespace fixfree
