#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fixfree/word.hpp"

namespace fixfree {

// A sorted set of distinct words sharing one length, stored as their values.
class WordSet {
public:
    WordSet() = default;
    explicit WordSet(unsigned length) : length_(length) {}
    // Sorts and deduplicates. Throws std::domain_error if a value does not fit
    // in `length` bits.
    WordSet(unsigned length, std::vector<std::uint64_t> values);
    // Throws std::domain_error if the words differ in length.
    static WordSet from_words(std::span<const Word> words);

    unsigned length() const noexcept { return length_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    std::span<const std::uint64_t> values() const noexcept { return values_; }
    bool contains(std::uint64_t value) const noexcept;
    bool contains(const Word& w) const noexcept {
        return w.length() == length_ && contains(w.value());
    }
    std::vector<Word> words() const;

    friend bool operator==(const WordSet&, const WordSet&) = default;

private:
    friend class FrontierState;
    friend WordSet set_union(const WordSet&, const WordSet&);
    friend WordSet cross(const WordSet&, const WordSet&);

    struct Sorted {};
    WordSet(Sorted, unsigned length, std::vector<std::uint64_t> values)
        : length_(length), values_(std::move(values)) {}

    unsigned length_ = 0;
    std::vector<std::uint64_t> values_;
};

// Throws std::domain_error if the lengths differ.
WordSet set_union(const WordSet& a, const WordSet& b);

// M1 ⊗ M2: the words w of length n+1 whose n-prefix lies in m1 and whose
// n-suffix lies in m2. Both sets must have the same length n >= 1.
// Joins m1's (n-1)-suffixes against m2's (n-1)-prefixes, so the cost is
// O(|m1| log |m1| + |m2|) rather than a scan of all 2^(n+1) candidates.
WordSet cross(const WordSet& m1, const WordSet& m2);

// (n-1)-suffixes pairwise distinct. Sets of length-1 words are regular iff
// they hold at most one word.
bool is_right_regular(const WordSet& m);
// (n-1)-prefixes pairwise distinct.
bool is_left_regular(const WordSet& m);

// max(0, |M1| + |M2| - 2^(n-1)): the guaranteed size of M1 ⊗ M2 when M1 is
// right regular and M2 left regular.
std::uint64_t lemma2_lower_bound(std::uint64_t m1_size, std::uint64_t m2_size, unsigned n);

// Prefix-free and suffix-free words of the current length over the code built
// so far, split by boundary bit:
//   pf0 / pf1 — prefix-free words starting with 0 / 1
//   sf0 / sf1 — suffix-free words ending with 0 / 1
// A length-0 state is the sentinel preceding the first construction step.
// States are immutable; extend() returns the next one.
class FrontierState {
public:
    unsigned length() const noexcept { return length_; }
    unsigned max_length() const noexcept { return max_length_; }

    const WordSet& pf0() const noexcept { return pf_[0]; }
    const WordSet& pf1() const noexcept { return pf_[1]; }
    const WordSet& sf0() const noexcept { return sf_[0]; }
    const WordSet& sf1() const noexcept { return sf_[1]; }
    const WordSet& pf(unsigned first_bit) const noexcept { return pf_[first_bit]; }
    const WordSet& sf(unsigned last_bit) const noexcept { return sf_[last_bit]; }
    WordSet prefix_free() const { return set_union(pf_[0], pf_[1]); }
    WordSet suffix_free() const { return set_union(sf_[0], sf_[1]); }

    // Words of length length()+1 and the given form that can join the code
    // without breaking fix-freeness.
    WordSet addable(WordForm form) const;
    // All words of length length()+1 that can join the code.
    WordSet addable_all() const;

    // Advances to length()+1 after adding `new_codewords` (all of length
    // length()+1) to the code. Throws ConstructionIntegrityError if a word has
    // the wrong length, repeats, or is not addable; LengthCapExceeded past
    // max_length().
    FrontierState extend(std::span<const Word> new_codewords) const;

private:
    friend FrontierState initial_frontier(unsigned max_length);
    FrontierState() = default;

    unsigned length_ = 0;
    unsigned max_length_ = kDefaultMaxLength;
    WordSet pf_[2];
    WordSet sf_[2];
};

// Sentinel state for the empty code. Throws std::domain_error if max_length
// is 0 or above kMaxStorableLength.
FrontierState initial_frontier(unsigned max_length = kDefaultMaxLength);

}  // namespace fixfree
