#include "fixfree/constructor.hpp"

#include <algorithm>
#include <sstream>

#include "fixfree/errors.hpp"

namespace fixfree {

std::string_view to_string(CaseTag tag) noexcept {
    switch (tag) {
        case CaseTag::Case1: return "case1";
        case CaseTag::Case2: return "case2";
        case CaseTag::Case3: return "case3";
    }
    return "unknown";
}

ConditionNotMet::ConditionNotMet(DyadicRational kraft, std::uint64_t k1, std::uint64_t k2)
    : std::runtime_error("sufficient condition not met: S = " + kraft.to_string() + ", k1 = " +
                         std::to_string(k1) + ", k2 = " + std::to_string(k2) +
                         "; need S <= 3/4 with k1 = 1 or (k1 = 0, k2 = 2), or S <= 5/8 with "
                         "k1 = 0, k2 <= 1"),
      kraft_(std::move(kraft)),
      k1_(k1),
      k2_(k2) {}

CaseTag dispatch(const LengthVector& v) {
    const DyadicRational s = kraft_sum(v);
    const std::uint64_t k1 = v.count(1);
    const std::uint64_t k2 = v.count(2);
    if (k1 == 1 && s <= kraft::three_quarters()) return CaseTag::Case1;
    if (k1 == 0 && k2 == 2 && s <= kraft::three_quarters()) return CaseTag::Case2;
    if (k1 == 0 && k2 <= 1 && s <= kraft::five_eighths()) return CaseTag::Case3;
    throw ConditionNotMet(s, k1, k2);
}

const std::array<DyadicRational, 4>& case3_caps() {
    static const std::array<DyadicRational, 4> caps = {
        DyadicRational::unit(2), DyadicRational::unit(3), DyadicRational::unit(3),
        DyadicRational::unit(3)};
    return caps;
}

Decomposition decompose(const LengthVector& v) {
    if (v.count(1) != 0 || v.count(2) > 1 || kraft_sum(v) > kraft::five_eighths()) {
        throw std::invalid_argument("decompose needs k1 = 0, k2 <= 1 and S <= 5/8, got " +
                                    v.to_string());
    }
    const auto& caps = case3_caps();
    std::array<DyadicRational, 4> room = caps;
    const unsigned n = v.max_length();
    std::array<std::vector<std::uint64_t>, 4> parts;
    for (auto& p : parts) p.assign(n, 0);

    std::size_t part = 0;
    for (unsigned t = 1; t <= n; ++t) {
        std::uint64_t left = v.count(t);
        while (left > 0) {
            while (part < 4 && room[part].is_zero()) ++part;
            if (part == 4) throw std::logic_error("decompose: caps exhausted");
            // Room in units of 2^-t; whole because every cap is a multiple of 2^-t here.
            const DyadicRational units = room[part].times_pow2(static_cast<int>(t));
            if (!units.is_integer()) throw std::logic_error("decompose: cap overshot by an indivisible unit");
            const BigInt& capacity = units.numerator();
            const std::uint64_t take =
                capacity >= left ? left : static_cast<std::uint64_t>(capacity);
            parts[part][t - 1] += take;
            room[part] -= DyadicRational(BigInt(take), t);
            left -= take;
        }
    }

    Decomposition d;
    d.caps = caps;
    for (std::size_t i = 0; i < 4; ++i) d.parts[i] = LengthVector(std::move(parts[i]));
    return d;
}

std::vector<std::uint64_t> step_demand_bound(CaseTag tag, std::span<const DyadicRational> deltas,
                                             unsigned t) {
    auto bound = [t](const DyadicRational& cap, const DyadicRational& delta) -> std::uint64_t {
        if (delta >= cap) return 0;
        return static_cast<std::uint64_t>((cap - delta).times_pow2(static_cast<int>(t)).floor());
    };
    if (tag == CaseTag::Case3) {
        if (deltas.size() != 4) throw std::invalid_argument("case 3 bound needs four running sums");
        std::vector<std::uint64_t> out(4);
        for (std::size_t i = 0; i < 4; ++i) out[i] = bound(case3_caps()[i], deltas[i]);
        return out;
    }
    if (deltas.size() != 1) throw std::invalid_argument("case 1/2 bound needs one running sum");
    return {bound(kraft::three_quarters(), deltas[0])};
}

std::string ConstructionTrace::to_text() const {
    auto join = [](const std::vector<std::uint64_t>& xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(xs[i]);
        }
        return s;
    };
    std::ostringstream os;
    for (const StepRecord& r : steps) {
        os << "t=" << r.t << ' ' << to_string(tag) << " pf0=" << r.frontier_sizes[0]
           << " pf1=" << r.frontier_sizes[1] << " sf0=" << r.frontier_sizes[2]
           << " sf1=" << r.frontier_sizes[3] << " demand=" << join(r.demand)
           << " available=" << join(r.available) << " bound=" << join(r.bound) << '\n';
    }
    return os.str();
}

namespace {

// First `count` words of `candidates`, or a counting violation.
std::vector<Word> take_smallest(const WordSet& candidates, std::uint64_t count, unsigned t,
                                std::string_view what) {
    if (candidates.size() < count) {
        throw InternalCountingViolation("step " + std::to_string(t) + ": need " +
                                            std::to_string(count) + " " + std::string(what) +
                                            " words, only " + std::to_string(candidates.size()) +
                                            " addable",
                                        t);
    }
    std::vector<Word> out;
    out.reserve(count);
    const auto values = candidates.values();
    for (std::uint64_t i = 0; i < count; ++i) out.emplace_back(values[i], candidates.length());
    return out;
}

void check_within_bound(const StepRecord& r) {
    for (std::size_t i = 0; i < r.demand.size(); ++i) {
        if (r.demand[i] > r.bound[i]) {
            throw InternalCountingViolation(
                "step " + std::to_string(r.t) + ": demand exceeds Kraft budget bound", r.t);
        }
    }
}

}  // namespace

ConstructionResult construct(const LengthVector& v, const ConstructOptions& options) {
    const CaseTag tag = dispatch(v);
    const unsigned n = v.max_length();
    if (n > options.max_length) {
        throw LengthCapExceeded("length vector reaches length " + std::to_string(n) +
                                    ", maximum is " + std::to_string(options.max_length),
                                n, options.max_length);
    }

    ConstructionResult result;
    result.tag = tag;
    result.trace.tag = tag;
    if (tag == CaseTag::Case3) result.decomposition = decompose(v);

    FrontierState frontier = initial_frontier(options.max_length);
    std::vector<Word> code;
    code.reserve(v.total());
    // One running Kraft sum for cases 1-2, one per form for case 3.
    std::vector<DyadicRational> deltas(tag == CaseTag::Case3 ? 4 : 1);

    for (unsigned t = 1; t <= n; ++t) {
        StepRecord r;
        r.t = t;
        r.frontier_sizes = {frontier.pf0().size(), frontier.pf1().size(), frontier.sf0().size(),
                            frontier.sf1().size()};
        r.bound = step_demand_bound(tag, deltas, t);

        if (tag == CaseTag::Case3) {
            for (unsigned form = 0; form < 4; ++form) {
                const std::uint64_t want = result.decomposition->parts[form].count(t);
                const WordSet candidates = frontier.addable(WordForm::from_index(form));
                r.demand.push_back(want);
                r.available.push_back(candidates.size());
                auto picked = take_smallest(candidates, want, t, WordForm::from_index(form).to_string());
                r.chosen.insert(r.chosen.end(), picked.begin(), picked.end());
                deltas[form] += DyadicRational(BigInt(want), t);
            }
        } else {
            const std::uint64_t want = v.count(t);
            const WordSet candidates = frontier.addable_all();
            r.demand.push_back(want);
            r.available.push_back(candidates.size());
            if (tag == CaseTag::Case1 && t == 1) {
                r.chosen = {Word(0b0, 1)};
            } else if (tag == CaseTag::Case2 && t == 2) {
                r.chosen = {Word(0b00, 2), Word(0b11, 2)};
            } else {
                // Once seeded, the whole frontier stays regular on each side.
                if (t >= 2 && (!is_right_regular(frontier.prefix_free()) ||
                               !is_left_regular(frontier.suffix_free()))) {
                    throw InternalCountingViolation(
                        "step " + std::to_string(t) + ": frontier lost regularity", t);
                }
                r.chosen = take_smallest(candidates, want, t, "any-form");
            }
            deltas[0] += DyadicRational(BigInt(want), t);
        }
        check_within_bound(r);

        std::sort(r.chosen.begin(), r.chosen.end());
        frontier = frontier.extend(r.chosen);
        code.insert(code.end(), r.chosen.begin(), r.chosen.end());
        if (options.observer) options.observer(StepView{t, frontier, code});
        result.trace.steps.push_back(std::move(r));
    }

    result.code = Code(std::move(code));
    return result;
}

}  // namespace fixfree
