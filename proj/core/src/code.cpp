#include "fixfree/code.hpp"

#include <algorithm>
#include <stdexcept>

namespace fixfree {

Code::Code(std::vector<Word> words) : words_(std::move(words)) {
    std::sort(words_.begin(), words_.end());
    const auto dup = std::adjacent_find(words_.begin(), words_.end());
    if (dup != words_.end()) {
        throw std::invalid_argument("duplicate codeword " + dup->to_string());
    }
}

std::span<const Word> Code::words_of_length(unsigned length) const noexcept {
    const auto lo = std::partition_point(words_.begin(), words_.end(),
                                         [&](const Word& w) { return w.length() < length; });
    const auto hi = std::partition_point(lo, words_.end(),
                                         [&](const Word& w) { return w.length() == length; });
    return {lo, hi};
}

bool Code::contains(const Word& w) const noexcept {
    return std::binary_search(words_.begin(), words_.end(), w);
}

LengthVector Code::length_vector() const {
    std::vector<std::uint64_t> counts(max_length(), 0);
    for (const Word& w : words_) ++counts[w.length() - 1];
    return LengthVector(std::move(counts));
}

}  // namespace fixfree
