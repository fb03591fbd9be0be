#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "fixfree/code.hpp"
#include "fixfree/length_vector.hpp"
#include "fixfree/word.hpp"

namespace fixfree {

enum class Relation { Prefix, Suffix, Duplicate };

// `shorter` is a prefix / suffix of (or equal to) `longer`.
struct Violation {
    Word shorter;
    Word longer;
    Relation relation;

    std::string to_string() const;
};

struct VerifyResult {
    bool fix_free = true;
    std::optional<Violation> witness;

    explicit operator bool() const noexcept { return fix_free; }
};

// Checks every proper prefix and suffix of every word against a hash set of
// the code. The witness is the first violation in (length, word) order.
VerifyResult verify_fixfree(std::span<const Word> words);
VerifyResult verify_fixfree(const Code& code);

// The search keeps a 2^len byte map per length.
inline constexpr unsigned kMaxSearchLength = 26;

struct SearchBudget {
    std::uint64_t max_nodes = 5'000'000;
    unsigned max_length = 10;
};

enum class SearchStatus { Exists, NotExists, Inconclusive };

struct SearchResult {
    SearchStatus status = SearchStatus::Inconclusive;
    std::optional<Code> code;  // set when status == Exists
    std::uint64_t nodes = 0;
};

// Exhaustive depth-first search for a fix-free code with length vector v.
// Lengths are filled in increasing order; words of one length are picked in
// increasing order, and candidates are tested directly against the partial
// code rather than through frontier sets. A branch is cut as soon as some
// remaining length has fewer addable words than it still needs. NotExists is
// a proof of non-existence; running out of nodes yields Inconclusive.
//
// Throws std::invalid_argument for a zero budget and LengthCapExceeded if v is
// longer than budget.max_length.
SearchResult exists_fixfree(const LengthVector& v, const SearchBudget& budget = {});

}  // namespace fixfree
