#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fixfree/codec.hpp"
#include "fixfree/dyadic.hpp"
#include "fixfree/word.hpp"

namespace fixfree {

// Allowed |sum(p) - 1| for an input distribution.
inline constexpr double kProbabilitySumTolerance = 1e-9;

// Worst-case redundancy of the designed codes: 4 - log2(5).
double redundancy_bound();

class InvalidDistribution : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A source distribution. Each probability is held both as the double it was
// given as and as that double's exact binary value; lengths are derived from
// the exact values renormalized by their exact total.
class Distribution {
public:
    // Throws InvalidDistribution on empty input, a size mismatch, a
    // probability that is not finite and positive, or a sum off 1 by more
    // than kProbabilitySumTolerance.
    Distribution(std::vector<std::string> symbols, std::vector<double> probabilities);
    // Symbols named s1, s2, ...
    static Distribution from_probabilities(std::vector<double> probabilities);

    std::size_t size() const noexcept { return probabilities_.size(); }
    const std::vector<std::string>& symbols() const noexcept { return symbols_; }
    // As given.
    double raw(std::size_t i) const noexcept { return probabilities_[i]; }
    // Divided by input_sum().
    double probability(std::size_t i) const noexcept { return probabilities_[i] / input_sum_; }
    const DyadicRational& exact(std::size_t i) const noexcept { return exact_[i]; }
    const DyadicRational& exact_total() const noexcept { return exact_total_; }
    double input_sum() const noexcept { return input_sum_; }

private:
    std::vector<std::string> symbols_;
    std::vector<double> probabilities_;
    std::vector<DyadicRational> exact_;
    DyadicRational exact_total_;
    double input_sum_ = 0;
};

// l_i = smallest l with 2^-l <= (5/8) p_i, decided exactly as
// 5 * p_i * 2^l >= 8 * sum(p). Throws LengthCapExceeded naming the symbol if
// some l_i exceeds max_length.
std::vector<unsigned> design_lengths(const Distribution& d, unsigned max_length = kDefaultMaxLength);

// -sum p log2 p over the normalized probabilities.
double entropy(const Distribution& d);
// sum p_i l_i over the normalized probabilities.
double avg_length(std::span<const unsigned> lengths, const Distribution& d);

struct DesignReport {
    std::vector<unsigned> lengths;
    DyadicRational kraft;
    double avg_length = 0;
    double entropy = 0;
    double redundancy = 0;
    double bound = 0;
    double input_sum = 1;

    bool renormalized() const noexcept { return input_sum != 1.0; }
    // Aligned human-readable block.
    std::string to_text() const;
    // Flat key=value lines.
    std::string to_key_values() const;
};

double redundancy(const DesignReport& report);

struct Design {
    CodeTable table;
    DesignReport report;
};

// Lengths, then construction, then assignment of the shortest words to the
// most probable symbols (ties keep input order). Table entries are ordered
// by (length, word).
Design design_code(const Distribution& d, unsigned max_length = kDefaultMaxLength);

}  // namespace fixfree
