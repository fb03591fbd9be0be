#include "fixfree/frontier.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "fixfree/errors.hpp"

namespace fixfree {

WordSet::WordSet(unsigned length, std::vector<std::uint64_t> values)
    : length_(length), values_(std::move(values)) {
    if (length > kMaxStorableLength) throw std::domain_error("WordSet length too large");
    for (std::uint64_t v : values_) {
        if (length == 0 || (v >> length) != 0) {
            throw std::domain_error("value does not fit in " + std::to_string(length) + " bits");
        }
    }
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

WordSet WordSet::from_words(std::span<const Word> words) {
    if (words.empty()) return WordSet();
    const unsigned length = words.front().length();
    std::vector<std::uint64_t> values;
    values.reserve(words.size());
    for (const Word& w : words) {
        if (w.length() != length) throw std::domain_error("WordSet words must share one length");
        values.push_back(w.value());
    }
    return WordSet(length, std::move(values));
}

bool WordSet::contains(std::uint64_t value) const noexcept {
    return std::binary_search(values_.begin(), values_.end(), value);
}

std::vector<Word> WordSet::words() const {
    std::vector<Word> out;
    out.reserve(values_.size());
    for (std::uint64_t v : values_) out.emplace_back(v, length_);
    return out;
}

WordSet set_union(const WordSet& a, const WordSet& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.length_ != b.length_) throw std::domain_error("set_union of different lengths");
    std::vector<std::uint64_t> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.values_.begin(), a.values_.end(), b.values_.begin(), b.values_.end(),
                   std::back_inserter(out));
    return WordSet(WordSet::Sorted{}, a.length_, std::move(out));
}

WordSet cross(const WordSet& m1, const WordSet& m2) {
    if (m1.empty() || m2.empty()) {
        return WordSet(std::max(m1.length(), m2.length()) + 1);
    }
    const unsigned n = m1.length();
    if (n != m2.length()) throw std::domain_error("cross of sets with different lengths");
    if (n < 1 || n >= kMaxStorableLength) throw std::domain_error("cross length out of range");

    // m1 keyed by its (n-1)-suffix, keeping the first bit alongside.
    const std::uint64_t overlap_mask = low_mask(n - 1);
    std::vector<std::pair<std::uint64_t, unsigned>> left;
    left.reserve(m1.size());
    for (std::uint64_t x : m1.values_) {
        left.emplace_back(x & overlap_mask, static_cast<unsigned>(x >> (n - 1)));
    }
    std::sort(left.begin(), left.end());

    // m2 sorted by value is already sorted by its (n-1)-prefix.
    const auto& right = m2.values_;
    std::vector<std::uint64_t> out;
    std::size_t i = 0, j = 0;
    while (i < left.size() && j < right.size()) {
        const std::uint64_t a = left[i].first;
        const std::uint64_t b = right[j] >> 1;
        if (a < b) {
            ++i;
        } else if (b < a) {
            ++j;
        } else {
            std::size_t i_end = i, j_end = j;
            while (i_end < left.size() && left[i_end].first == a) ++i_end;
            while (j_end < right.size() && (right[j_end] >> 1) == a) ++j_end;
            for (std::size_t p = i; p < i_end; ++p) {
                for (std::size_t q = j; q < j_end; ++q) {
                    const std::uint64_t first = left[p].second;
                    out.push_back((first << n) | (a << 1) | (right[q] & 1u));
                }
            }
            i = i_end;
            j = j_end;
        }
    }
    std::sort(out.begin(), out.end());
    return WordSet(WordSet::Sorted{}, n + 1, std::move(out));
}

bool is_right_regular(const WordSet& m) {
    if (m.size() <= 1) return true;
    const std::uint64_t mask = low_mask(m.length() - 1);
    std::vector<std::uint64_t> tails;
    tails.reserve(m.size());
    for (std::uint64_t v : m.values()) tails.push_back(v & mask);
    std::sort(tails.begin(), tails.end());
    return std::adjacent_find(tails.begin(), tails.end()) == tails.end();
}

bool is_left_regular(const WordSet& m) {
    if (m.size() <= 1) return true;
    const auto values = m.values();
    for (std::size_t i = 1; i < values.size(); ++i) {
        if ((values[i] >> 1) == (values[i - 1] >> 1)) return false;
    }
    return true;
}

std::uint64_t lemma2_lower_bound(std::uint64_t m1_size, std::uint64_t m2_size, unsigned n) {
    if (n < 1 || n > kMaxStorableLength) throw std::domain_error("lemma2_lower_bound: n out of range");
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    const std::uint64_t total = m1_size + m2_size;
    return total > half ? total - half : 0;
}

FrontierState initial_frontier(unsigned max_length) {
    if (max_length < 1 || max_length > kMaxStorableLength) {
        throw std::domain_error("maximum length must lie in [1, " + std::to_string(kMaxStorableLength) + "]");
    }
    FrontierState f;
    f.max_length_ = max_length;
    return f;
}

WordSet FrontierState::addable(WordForm form) const {
    if (length_ == 0) {
        // A single bit is both first and last bit.
        if (form.first != form.last) return WordSet(1);
        return WordSet(1, {form.first});
    }
    return cross(pf_[form.first], sf_[form.last]);
}

WordSet FrontierState::addable_all() const {
    if (length_ == 0) return WordSet(1, {0, 1});
    return cross(prefix_free(), suffix_free());
}

namespace {

// Sorted `values` minus sorted `removed`.
std::vector<std::uint64_t> without(std::vector<std::uint64_t> values,
                                   const std::vector<std::uint64_t>& removed) {
    if (removed.empty()) return values;
    std::vector<std::uint64_t> out;
    out.reserve(values.size());
    std::set_difference(values.begin(), values.end(), removed.begin(), removed.end(),
                        std::back_inserter(out));
    return out;
}

}  // namespace

FrontierState FrontierState::extend(std::span<const Word> new_codewords) const {
    const unsigned next = length_ + 1;
    if (next > max_length_) {
        throw LengthCapExceeded("frontier length " + std::to_string(next) + " exceeds maximum " +
                                    std::to_string(max_length_),
                                next, max_length_);
    }

    std::vector<std::uint64_t> removed;
    removed.reserve(new_codewords.size());
    for (const Word& w : new_codewords) {
        if (w.length() != next) {
            throw ConstructionIntegrityError("codeword " + w.to_string() + " added at length " +
                                             std::to_string(next));
        }
        if (length_ > 0) {
            if (!pf_[w.first_bit()].contains(prefix(w, length_).value())) {
                throw ConstructionIntegrityError("codeword " + w.to_string() +
                                                 " has a codeword as prefix");
            }
            if (!sf_[w.last_bit()].contains(suffix(w, length_).value())) {
                throw ConstructionIntegrityError("codeword " + w.to_string() +
                                                 " has a codeword as suffix");
            }
        }
        removed.push_back(w.value());
    }
    std::sort(removed.begin(), removed.end());
    if (std::adjacent_find(removed.begin(), removed.end()) != removed.end()) {
        throw ConstructionIntegrityError("duplicate codeword in one step");
    }

    FrontierState out;
    out.length_ = next;
    out.max_length_ = max_length_;
    for (unsigned b = 0; b < 2; ++b) {
        std::vector<std::uint64_t> pf, sf;
        if (length_ == 0) {
            pf = {b};
            sf = {b};
        } else {
            // Appending a bit keeps the first bit; prepending keeps the last.
            pf.reserve(pf_[b].size() * 2);
            for (std::uint64_t v : pf_[b].values_) {
                pf.push_back(v << 1);
                pf.push_back((v << 1) | 1u);
            }
            sf.reserve(sf_[b].size() * 2);
            for (std::uint64_t v : sf_[b].values_) sf.push_back(v);
            const std::uint64_t high = std::uint64_t{1} << length_;
            for (std::uint64_t v : sf_[b].values_) sf.push_back(v | high);
        }
        out.pf_[b] = WordSet(WordSet::Sorted{}, next, without(std::move(pf), removed));
        out.sf_[b] = WordSet(WordSet::Sorted{}, next, without(std::move(sf), removed));
    }
    return out;
}

}  // namespace fixfree
