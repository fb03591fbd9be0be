#include "fixfree/designer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "fixfree/constructor.hpp"
#include "fixfree/errors.hpp"
#include "fixfree/length_vector.hpp"

namespace fixfree {

double redundancy_bound() {
    return 4.0 - std::log2(5.0);
}

Distribution::Distribution(std::vector<std::string> symbols, std::vector<double> probabilities)
    : symbols_(std::move(symbols)), probabilities_(std::move(probabilities)) {
    if (probabilities_.empty()) throw InvalidDistribution("distribution is empty");
    if (symbols_.size() != probabilities_.size()) {
        throw InvalidDistribution("distribution has " + std::to_string(symbols_.size()) +
                                  " symbols but " + std::to_string(probabilities_.size()) +
                                  " probabilities");
    }
    exact_.reserve(probabilities_.size());
    for (std::size_t i = 0; i < probabilities_.size(); ++i) {
        const double p = probabilities_[i];
        if (!std::isfinite(p) || p <= 0) {
            throw InvalidDistribution("probability of '" + symbols_[i] +
                                      "' must be finite and positive");
        }
        exact_.push_back(DyadicRational::from_double(p));
        exact_total_ += exact_.back();
    }
    input_sum_ = exact_total_.to_double();
    if (std::abs(input_sum_ - 1.0) > kProbabilitySumTolerance) {
        throw InvalidDistribution("probabilities sum to " + std::to_string(input_sum_) +
                                  ", not 1");
    }
}

Distribution Distribution::from_probabilities(std::vector<double> probabilities) {
    std::vector<std::string> symbols;
    symbols.reserve(probabilities.size());
    for (std::size_t i = 0; i < probabilities.size(); ++i) symbols.push_back("s" + std::to_string(i + 1));
    return Distribution(std::move(symbols), std::move(probabilities));
}

std::vector<unsigned> design_lengths(const Distribution& d, unsigned max_length) {
    const DyadicRational eight_total = DyadicRational(8, 0) * d.exact_total();
    const DyadicRational five(5, 0);
    std::vector<unsigned> lengths;
    lengths.reserve(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        const DyadicRational five_p = five * d.exact(i);
        auto fits = [&](int l) { return five_p.times_pow2(l) >= eight_total; };
        // Floating estimate of -log2(p) + 3 - log2(5), corrected exactly.
        const double estimate = std::ceil(-std::log2(d.probability(i)) + 3.0 - std::log2(5.0));
        int l = std::max(0, static_cast<int>(estimate));
        while (!fits(l)) ++l;
        while (l > 0 && fits(l - 1)) --l;
        if (static_cast<unsigned>(l) > max_length) {
            throw LengthCapExceeded("symbol '" + d.symbols()[i] + "' needs a codeword of length " +
                                        std::to_string(l) + ", maximum is " +
                                        std::to_string(max_length),
                                    static_cast<unsigned>(l), max_length);
        }
        lengths.push_back(static_cast<unsigned>(l));
    }
    return lengths;
}

double entropy(const Distribution& d) {
    double h = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const double p = d.probability(i);
        h -= p * std::log2(p);
    }
    return h;
}

double avg_length(std::span<const unsigned> lengths, const Distribution& d) {
    if (lengths.size() != d.size()) throw std::invalid_argument("avg_length: size mismatch");
    double sum = 0;
    for (std::size_t i = 0; i < d.size(); ++i) sum += d.probability(i) * lengths[i];
    return sum;
}

double redundancy(const DesignReport& report) {
    return report.avg_length - report.entropy;
}

namespace {

std::string fixed(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

std::string exact_digits(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

std::string DesignReport::to_text() const {
    std::string s;
    auto row = [&s](const char* key, const std::string& value) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%-12s", key);
        s += buf;
        s += value;
        s += '\n';
    };
    row("symbols", std::to_string(lengths.size()));
    row("kraft", kraft.to_string());
    row("entropy", fixed(entropy, 6));
    row("avg_length", fixed(avg_length, 6));
    row("redundancy", fixed(redundancy, 6));
    row("bound", fixed(bound, 6) + " (4 - log2 5)");
    if (renormalized()) row("input_sum", exact_digits(input_sum) + " (renormalized)");
    return s;
}

std::string DesignReport::to_key_values() const {
    std::string lens;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        if (i) lens += ',';
        lens += std::to_string(lengths[i]);
    }
    return "symbols=" + std::to_string(lengths.size()) + "\nlengths=" + lens +
           "\nkraft=" + kraft.to_string() + "\nentropy=" + exact_digits(entropy) +
           "\navg_length=" + exact_digits(avg_length) + "\nredundancy=" + exact_digits(redundancy) +
           "\nbound=" + exact_digits(bound) + "\ninput_sum=" + exact_digits(input_sum) +
           "\nrenormalized=" + (renormalized() ? "true" : "false") + "\n";
}

Design design_code(const Distribution& d, unsigned max_length) {
    const std::vector<unsigned> lengths = design_lengths(d, max_length);
    const unsigned n = *std::max_element(lengths.begin(), lengths.end());
    std::vector<std::uint64_t> counts(n, 0);
    for (unsigned l : lengths) ++counts[l - 1];
    const LengthVector v(std::move(counts));

    ConstructOptions options;
    options.max_length = max_length;
    const ConstructionResult built = construct(v, options);

    std::vector<std::size_t> order(d.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return d.raw(a) > d.raw(b); });

    // Lengths are monotone in probability, so the k-th most probable symbol
    // receives a word of exactly its own length.
    std::vector<CodeTableEntry> entries;
    entries.reserve(d.size());
    const auto words = built.code.words();
    for (std::size_t k = 0; k < order.size(); ++k) {
        const std::size_t i = order[k];
        if (words[k].length() != lengths[i]) {
            throw std::logic_error("design_code: length assignment out of order");
        }
        entries.push_back({d.symbols()[i], words[k]});
    }

    DesignReport report;
    report.lengths = lengths;
    report.kraft = kraft_sum(v);
    report.avg_length = avg_length(lengths, d);
    report.entropy = entropy(d);
    report.redundancy = report.avg_length - report.entropy;
    report.bound = redundancy_bound();
    report.input_sum = d.input_sum();
    return {CodeTable(std::move(entries)), std::move(report)};
}

}  // namespace fixfree
