#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>

namespace fixfree {

using BigInt = boost::multiprecision::cpp_int;

// Exact nonnegative value numerator / 2^log2_denominator.
//
// Canonical form: the numerator is odd, or the value is zero and stored as
// 0 / 2^0. Every constructor and operation returns canonical values, so
// structural equality is value equality.
class DyadicRational {
public:
    DyadicRational() = default;
    // Throws std::domain_error on a negative numerator.
    DyadicRational(BigInt numerator, unsigned log2_denominator);

    static DyadicRational integer(const BigInt& n) { return DyadicRational(n, 0); }
    // 2^-k
    static DyadicRational unit(unsigned k) { return DyadicRational(1, k); }
    // Exact value of a finite nonnegative double. Throws std::domain_error
    // for negative, NaN or infinite input.
    static DyadicRational from_double(double d);

    const BigInt& numerator() const noexcept { return numerator_; }
    unsigned log2_denominator() const noexcept { return log2_denominator_; }

    bool is_zero() const noexcept { return numerator_.is_zero(); }
    bool is_integer() const noexcept { return log2_denominator_ == 0; }

    // value * 2^k; k may be negative.
    DyadicRational times_pow2(int k) const;
    // Largest integer not above the value.
    BigInt floor() const;
    double to_double() const;
    // "0", "3", "5/8", ...
    std::string to_string() const;

    friend DyadicRational operator+(const DyadicRational& a, const DyadicRational& b);
    // Throws std::domain_error if b > a.
    friend DyadicRational operator-(const DyadicRational& a, const DyadicRational& b);
    friend DyadicRational operator*(const DyadicRational& a, const DyadicRational& b);
    DyadicRational& operator+=(const DyadicRational& o) { return *this = *this + o; }
    DyadicRational& operator-=(const DyadicRational& o) { return *this = *this - o; }

    friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b);
    friend bool operator==(const DyadicRational& a, const DyadicRational& b) noexcept {
        return a.log2_denominator_ == b.log2_denominator_ && a.numerator_ == b.numerator_;
    }

private:
    void canonicalize();

    BigInt numerator_ = 0;
    unsigned log2_denominator_ = 0;
};

// The thresholds that appear throughout construction.
namespace kraft {
inline const DyadicRational& three_quarters() {
    static const DyadicRational v(3, 2);
    return v;
}
inline const DyadicRational& five_eighths() {
    static const DyadicRational v(5, 3);
    return v;
}
}  // namespace kraft

}  // namespace fixfree
