#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fixfree/length_vector.hpp"
#include "fixfree/word.hpp"

namespace fixfree {

// An immutable set of codewords ordered by (length, lexicographic value).
// Fix-freeness is not enforced here; see verify_fixfree in oracle.hpp.
class Code {
public:
    Code() = default;
    // Throws std::invalid_argument if a word appears twice.
    explicit Code(std::vector<Word> words);

    std::span<const Word> words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }

    std::span<const Word> words_of_length(unsigned length) const noexcept;
    std::size_t count_at(unsigned length) const noexcept { return words_of_length(length).size(); }
    unsigned max_length() const noexcept { return words_.empty() ? 0 : words_.back().length(); }
    bool contains(const Word& w) const noexcept;

    LengthVector length_vector() const;

    auto begin() const noexcept { return words_.begin(); }
    auto end() const noexcept { return words_.end(); }

    friend bool operator==(const Code&, const Code&) = default;

private:
    std::vector<Word> words_;
};

}  // namespace fixfree
