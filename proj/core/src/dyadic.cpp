#include "fixfree/dyadic.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace fixfree {

DyadicRational::DyadicRational(BigInt numerator, unsigned log2_denominator)
    : numerator_(std::move(numerator)), log2_denominator_(log2_denominator) {
    if (numerator_ < 0) throw std::domain_error("DyadicRational numerator must be nonnegative");
    canonicalize();
}

void DyadicRational::canonicalize() {
    if (numerator_.is_zero()) {
        log2_denominator_ = 0;
        return;
    }
    if (log2_denominator_ == 0) return;
    const unsigned trailing = static_cast<unsigned>(boost::multiprecision::lsb(numerator_));
    const unsigned shift = trailing < log2_denominator_ ? trailing : log2_denominator_;
    numerator_ >>= shift;
    log2_denominator_ -= shift;
}

DyadicRational DyadicRational::from_double(double d) {
    if (!std::isfinite(d) || d < 0) {
        throw std::domain_error("DyadicRational::from_double needs a finite nonnegative value");
    }
    if (d == 0) return {};
    int exponent = 0;
    const double fraction = std::frexp(d, &exponent);  // d = fraction * 2^exponent
    const auto mantissa = static_cast<std::uint64_t>(std::ldexp(fraction, 53));
    // d = mantissa * 2^(exponent - 53)
    return DyadicRational(BigInt(mantissa), 0).times_pow2(exponent - 53);
}

DyadicRational DyadicRational::times_pow2(int k) const {
    if (is_zero()) return {};
    DyadicRational r = *this;
    if (k < 0) {
        r.log2_denominator_ += static_cast<unsigned>(-k);
        r.canonicalize();
        return r;
    }
    const auto up = static_cast<unsigned>(k);
    if (up <= r.log2_denominator_) {
        r.log2_denominator_ -= up;
    } else {
        r.numerator_ <<= (up - r.log2_denominator_);
        r.log2_denominator_ = 0;
    }
    return r;
}

BigInt DyadicRational::floor() const {
    return numerator_ >> log2_denominator_;
}

double DyadicRational::to_double() const {
    // Keep the top 64 significant bits so huge numerators do not overflow.
    const unsigned bits = numerator_.is_zero() ? 0 : static_cast<unsigned>(boost::multiprecision::msb(numerator_)) + 1;
    const unsigned drop = bits > 64 ? bits - 64 : 0;
    const BigInt top = numerator_ >> drop;
    const auto top64 = static_cast<std::uint64_t>(top);
    return std::ldexp(static_cast<double>(top64),
                      static_cast<int>(drop) - static_cast<int>(log2_denominator_));
}

std::string DyadicRational::to_string() const {
    if (log2_denominator_ == 0) return numerator_.str();
    const BigInt den = BigInt(1) << log2_denominator_;
    return numerator_.str() + "/" + den.str();
}

namespace {

// Numerators of a and b over the common denominator 2^max(a, b).
std::pair<BigInt, BigInt> aligned(const DyadicRational& a, const DyadicRational& b, unsigned& exp) {
    exp = a.log2_denominator() > b.log2_denominator() ? a.log2_denominator() : b.log2_denominator();
    return {a.numerator() << (exp - a.log2_denominator()), b.numerator() << (exp - b.log2_denominator())};
}

}  // namespace

DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
    unsigned exp = 0;
    auto [x, y] = aligned(a, b, exp);
    return DyadicRational(x + y, exp);
}

DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) {
    unsigned exp = 0;
    auto [x, y] = aligned(a, b, exp);
    if (y > x) throw std::domain_error("DyadicRational subtraction would go negative");
    return DyadicRational(x - y, exp);
}

DyadicRational operator*(const DyadicRational& a, const DyadicRational& b) {
    return DyadicRational(a.numerator_ * b.numerator_, a.log2_denominator_ + b.log2_denominator_);
}

std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
    unsigned exp = 0;
    auto [x, y] = aligned(a, b, exp);
    if (x < y) return std::strong_ordering::less;
    if (x > y) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace fixfree
