#include "fixfree/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "fixfree/errors.hpp"

namespace fixfree {

std::string Violation::to_string() const {
    switch (relation) {
        case Relation::Prefix: return shorter.to_string() + " is a prefix of " + longer.to_string();
        case Relation::Suffix: return shorter.to_string() + " is a suffix of " + longer.to_string();
        case Relation::Duplicate: return shorter.to_string() + " appears twice";
    }
    return {};
}

VerifyResult verify_fixfree(std::span<const Word> words) {
    std::vector<Word> sorted(words.begin(), words.end());
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
        return {false, Violation{*dup, *dup, Relation::Duplicate}};
    }
    const std::unordered_set<Word, WordHash> present(sorted.begin(), sorted.end());
    for (const Word& w : sorted) {
        for (unsigned p = 1; p < w.length(); ++p) {
            if (const Word head = prefix(w, p); present.contains(head)) {
                return {false, Violation{head, w, Relation::Prefix}};
            }
            if (const Word tail = suffix(w, p); present.contains(tail)) {
                return {false, Violation{tail, w, Relation::Suffix}};
            }
        }
    }
    return {};
}

VerifyResult verify_fixfree(const Code& code) {
    return verify_fixfree(code.words());
}

namespace {

struct BudgetExhausted {};

class Search {
public:
    Search(const LengthVector& v, const SearchBudget& budget)
        : v_(v), budget_(budget), n_(v.max_length()), present_(n_ + 1) {
        for (unsigned len = 1; len <= n_; ++len) present_[len].assign(std::size_t{1} << len, 0);
    }

    bool run() { return fill(1); }
    std::uint64_t nodes() const noexcept { return nodes_; }
    Code code() const { return Code(chosen_); }

private:
    bool addable(std::uint64_t value, unsigned len) const {
        for (unsigned p = 1; p < len; ++p) {
            if (present_[p][value >> (len - p)]) return false;
            if (present_[p][value & low_mask(p)]) return false;
        }
        return true;
    }

    std::vector<std::uint64_t> candidates(unsigned len) const {
        std::vector<std::uint64_t> out;
        const std::uint64_t end = std::uint64_t{1} << len;
        for (std::uint64_t w = 0; w < end; ++w) {
            if (addable(w, len)) out.push_back(w);
        }
        return out;
    }

    // Whether at least `need` words of length len are addable now.
    bool enough(unsigned len, std::uint64_t need) const {
        if (need == 0) return true;
        std::uint64_t found = 0;
        const std::uint64_t end = std::uint64_t{1} << len;
        for (std::uint64_t w = 0; w < end; ++w) {
            if (addable(w, len) && ++found >= need) return true;
        }
        return false;
    }

    void tick() {
        if (++nodes_ > budget_.max_nodes) throw BudgetExhausted{};
    }

    bool fill(unsigned t) {
        tick();
        if (t > n_) return true;
        // Adding words only shrinks what later lengths can take.
        for (unsigned j = t + 1; j <= n_; ++j) {
            if (!enough(j, v_.count(j))) return false;
        }
        const auto cand = candidates(t);
        if (cand.size() < v_.count(t)) return false;
        return pick(t, cand, 0, v_.count(t));
    }

    bool pick(unsigned t, const std::vector<std::uint64_t>& cand, std::size_t from, std::uint64_t left) {
        if (left == 0) return fill(t + 1);
        for (std::size_t i = from; i + left <= cand.size(); ++i) {
            tick();
            present_[t][cand[i]] = 1;
            chosen_.emplace_back(cand[i], t);
            if (pick(t, cand, i + 1, left - 1)) return true;
            chosen_.pop_back();
            present_[t][cand[i]] = 0;
        }
        return false;
    }

    const LengthVector& v_;
    SearchBudget budget_;
    unsigned n_;
    std::vector<std::vector<char>> present_;
    std::vector<Word> chosen_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

SearchResult exists_fixfree(const LengthVector& v, const SearchBudget& budget) {
    if (budget.max_nodes == 0 || budget.max_length == 0) {
        throw std::invalid_argument("search budget must be positive");
    }
    if (budget.max_length > kMaxSearchLength) {
        throw std::invalid_argument("search length cap above " + std::to_string(kMaxSearchLength));
    }
    if (v.max_length() > budget.max_length) {
        throw LengthCapExceeded("length vector reaches length " + std::to_string(v.max_length()) +
                                    ", search cap is " + std::to_string(budget.max_length),
                                v.max_length(), budget.max_length);
    }
    // No binary code at all has more than 2^i words of length i.
    for (unsigned i = 1; i <= v.max_length(); ++i) {
        if (v.count(i) > (std::uint64_t{1} << i)) return {SearchStatus::NotExists, std::nullopt, 0};
    }
    Search search(v, budget);
    try {
        if (search.run()) return {SearchStatus::Exists, search.code(), search.nodes()};
        return {SearchStatus::NotExists, std::nullopt, search.nodes()};
    } catch (const BudgetExhausted&) {
        return {SearchStatus::Inconclusive, std::nullopt, search.nodes()};
    }
}

}  // namespace fixfree
