#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fixfree/code.hpp"
#include "fixfree/dyadic.hpp"
#include "fixfree/frontier.hpp"
#include "fixfree/length_vector.hpp"

namespace fixfree {

// Which construction applies to a length vector.
//   Case1: k1 = 1, S <= 3/4; seeded with {0}.
//   Case2: k1 = 0, k2 = 2, S <= 3/4; seeded with {00, 11}.
//   Case3: k1 = 0, k2 <= 1, S <= 5/8; one sub-code per word form.
enum class CaseTag { Case1, Case2, Case3 };

std::string_view to_string(CaseTag tag) noexcept;

// The length vector satisfies none of the sufficient conditions. This does not
// mean that no fix-free code exists.
class ConditionNotMet : public std::runtime_error {
public:
    ConditionNotMet(DyadicRational kraft, std::uint64_t k1, std::uint64_t k2);

    const DyadicRational& kraft() const noexcept { return kraft_; }
    std::uint64_t k1() const noexcept { return k1_; }
    std::uint64_t k2() const noexcept { return k2_; }

private:
    DyadicRational kraft_;
    std::uint64_t k1_;
    std::uint64_t k2_;
};

// Throws ConditionNotMet when no case applies. Overlaps resolve in the order
// Case1, Case2, Case3.
CaseTag dispatch(const LengthVector& v);

// Case-3 split of a length vector into four parts, one per word form
// (0*0, 0*1, 1*0, 1*1), with Kraft caps 1/4, 1/8, 1/8, 1/8.
struct Decomposition {
    std::array<LengthVector, 4> parts;
    std::array<DyadicRational, 4> caps;
};

// Kraft cap of each case-3 part.
const std::array<DyadicRational, 4>& case3_caps();

// Greedy fill in increasing length: each word goes to the lowest-index part
// that still has room. Earlier parts are saturated before later ones receive
// anything, which gives the staircase shape.
// Throws std::invalid_argument unless k1 = 0, k2 <= 1 and S <= 5/8.
Decomposition decompose(const LengthVector& v);

// Upper bounds on the number of words at step t implied by the Kraft budget.
// Cases 1-2 take one running sum δ and return {floor((3/4 - δ) 2^t)}.
// Case 3 takes δ1..δ4 and returns floor((cap_i - δ_i) 2^t) per form.
// Negative bounds clamp to zero.
std::vector<std::uint64_t> step_demand_bound(CaseTag tag, std::span<const DyadicRational> deltas,
                                             unsigned t);

struct StepRecord {
    unsigned t = 0;
    // |pf0|, |pf1|, |sf0|, |sf1| of the frontier entering the step.
    std::array<std::uint64_t, 4> frontier_sizes{};
    // One entry for cases 1-2, four (per form) for case 3.
    std::vector<std::uint64_t> demand;
    std::vector<std::uint64_t> available;
    std::vector<std::uint64_t> bound;
    std::vector<Word> chosen;
};

struct ConstructionTrace {
    CaseTag tag = CaseTag::Case3;
    std::vector<StepRecord> steps;

    // One line per step: t, frontier sizes, demand, availability, bound.
    std::string to_text() const;
};

// Seen by the observer after each step: the frontier at length t and all
// codewords chosen so far.
struct StepView {
    unsigned t;
    const FrontierState& frontier;
    std::span<const Word> code_so_far;
};

struct ConstructOptions {
    unsigned max_length = kDefaultMaxLength;
    std::function<void(const StepView&)> observer;
};

struct ConstructionResult {
    Code code;
    CaseTag tag = CaseTag::Case3;
    std::optional<Decomposition> decomposition;
    ConstructionTrace trace;
};

// Builds a fix-free code with exactly v.count(i) words of length i. At every
// step the lexicographically smallest addable words are taken, so the output
// is a pure function of v.
//
// Throws ConditionNotMet (from dispatch), LengthCapExceeded when v is longer
// than options.max_length, and InternalCountingViolation if a step runs short
// of addable words.
ConstructionResult construct(const LengthVector& v, const ConstructOptions& options = {});

}  // namespace fixfree
