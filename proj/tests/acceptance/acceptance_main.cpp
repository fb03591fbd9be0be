// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "fixfree/fixfree.hpp"
#include "support/brute_force.hpp"

namespace fs = std::filesystem;
using namespace fixfree;
namespace bf = fixfree::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Frontier identities shared by criteria 1-3 and reported by criterion 6.
struct IdentityTally {
    std::uint64_t steps = 0;
    std::uint64_t failures = 0;
    std::string first_failure;

    void check(const StepView& s) {
        ++steps;
        const unsigned t = s.t;
        std::uint64_t covered = 0, first[2] = {0, 0}, last[2] = {0, 0};
        for (const Word& w : s.code_so_far) {
            const std::uint64_t weight = std::uint64_t{1} << (t - w.length());
            covered += weight;
            first[w.first_bit()] += weight;
            last[w.last_bit()] += weight;
        }
        const std::uint64_t all = std::uint64_t{1} << t;
        const FrontierState& f = s.frontier;
        bool ok = f.pf0().size() + f.pf1().size() == all - covered &&
                  f.sf0().size() + f.sf1().size() == all - covered;
        for (unsigned b = 0; b < 2; ++b) {
            ok = ok && f.pf(b).size() == all / 2 - first[b] && f.sf(b).size() == all / 2 - last[b];
        }
        if (!ok && failures++ == 0) first_failure = "t=" + std::to_string(t);
    }
};

IdentityTally g_identities;

ConstructOptions observed() {
    ConstructOptions options;
    options.observer = [](const StepView& s) { g_identities.check(s); };
    return options;
}

// Constructs v, then checks counts, the library verifier and the naive check.
bool construct_and_verify(const LengthVector& v, std::string& why) {
    try {
        const ConstructionResult r = construct(v, observed());
        if (!(r.code.length_vector() == v)) {
            why = "length vector mismatch for " + v.to_string();
            return false;
        }
        if (!verify_fixfree(r.code)) {
            why = "verify_fixfree rejected " + v.to_string();
            return false;
        }
        if (!bf::naive_fixfree(bf::strs(r.code.words()))) {
            why = "naive check rejected " + v.to_string();
            return false;
        }
        return true;
    } catch (const std::exception& e) {
        why = v.to_string() + ": " + e.what();
        return false;
    }
}

Outcome exhaustive(unsigned n, std::uint64_t scaled_budget, const std::function<bool(const LengthVector&)>& keep) {
    Outcome o;
    std::uint64_t count = 0, failed = 0;
    bf::for_each_length_vector(n, scaled_budget, [&](const std::vector<std::uint64_t>& k) {
        const LengthVector v(k);
        if (!keep(v)) return;
        ++count;
        std::string why;
        if (!construct_and_verify(v, why)) {
            if (failed++ == 0) o.detail = "first failure: " + why + "; ";
        }
    });
    o.pass = failed == 0 && count > 0;
    o.detail += std::to_string(count - failed) + "/" + std::to_string(count) + " vectors";
    return o;
}

Outcome criterion1() {
    // S <= 5/8 with n <= 6: sum k_i 2^(6-i) <= 40.
    return exhaustive(6, 40, [](const LengthVector& v) { return kraft_sum(v) <= kraft::five_eighths(); });
}

Outcome criterion2() {
    return exhaustive(6, 48, [](const LengthVector& v) {
        return v.count(1) == 1 || (v.count(1) == 0 && v.count(2) == 2);
    });
}

Outcome criterion3() {
    Outcome o;
    const LengthVector v{0, 0, 2, 1, 2, 6, 20};
    const bool kraft_ok = kraft_sum(v) == kraft::five_eighths();
    const Decomposition d = decompose(v);
    const bool parts_ok = d.parts[0] == LengthVector{0, 0, 2} && d.parts[1] == LengthVector{0, 0, 0, 1, 2} &&
                          d.parts[2] == LengthVector{0, 0, 0, 0, 0, 6, 4} &&
                          d.parts[3] == LengthVector{0, 0, 0, 0, 0, 0, 16};
    const bool case_ok = dispatch(v) == CaseTag::Case3;
    std::string why;
    const bool built = construct_and_verify(v, why);
    o.pass = kraft_ok && parts_ok && case_ok && built;
    o.detail = "S=" + kraft_sum(v).to_string() + " parts=" + d.parts[0].to_string() + d.parts[1].to_string() +
               d.parts[2].to_string() + d.parts[3].to_string() + " case=" + std::string(to_string(dispatch(v))) +
               (built ? " verified" : " " + why);
    return o;
}

Outcome criterion4() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    const double floor = std::ldexp(1.0, -18);
    const double bound = redundancy_bound();
    double worst = 0, min_r = 1e9;
    int failed = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t m = 1 + rng() % 50;
        std::vector<double> w(m);
        std::exponential_distribution<double> expo(1.0);
        double total = 0;
        for (auto& x : w) total += (x = expo(rng) * std::ldexp(1.0, -static_cast<int>(rng() % 20)));
        const double spare = 1.0 - static_cast<double>(m) * floor;
        for (auto& x : w) x = floor + spare * (x / total);
        try {
            const Design design = design_code(Distribution::from_probabilities(w));
            const DesignReport& r = design.report;
            worst = std::max(worst, r.redundancy);
            min_r = std::min(min_r, r.redundancy);
            if (!(r.kraft <= kraft::five_eighths()) || !(bound - r.redundancy > 1e-12) || r.redundancy < 0) {
                ++failed;
            }
        } catch (const std::exception& e) {
            if (failed++ == 0) o.detail = std::string("exception: ") + e.what() + "; ";
        }
    }
    o.pass = failed == 0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "1000 distributions, R in [%.6f, %.6f], bound %.6f", min_r, worst, bound);
    o.detail += buf;
    return o;
}

Outcome criterion5() {
    Outcome o;
    std::mt19937_64 rng(99);
    int failed = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % 10);
        const double d1 = std::uniform_real_distribution<>(0, 1)(rng);
        const double d2 = std::uniform_real_distribution<>(0, 1)(rng);
        std::bernoulli_distribution k1(d1), k2(d2);
        std::vector<std::uint64_t> a, b;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << (n - 1)); ++x) {
            // a: one word per (n-1)-suffix; b: one word per (n-1)-prefix.
            if (k1(rng)) a.push_back(((rng() & 1u) << (n - 1)) | x);
            if (k2(rng)) b.push_back((x << 1) | (rng() & 1u));
        }
        const WordSet m1(n, a), m2(n, b);
        if (!is_right_regular(m1) || !is_left_regular(m2)) {
            ++failed;
            continue;
        }
        const std::int64_t lower = static_cast<std::int64_t>(m1.size() + m2.size()) -
                                   static_cast<std::int64_t>(std::uint64_t{1} << (n - 1));
        if (static_cast<std::int64_t>(cross(m1, m2).size()) < lower) ++failed;
    }
    o.pass = failed == 0;
    o.detail = std::to_string(10000 - failed) + "/10000 pairs";
    return o;
}

Outcome criterion6() {
    Outcome o;
    o.pass = g_identities.failures == 0 && g_identities.steps > 0;
    o.detail = std::to_string(g_identities.steps) + " steps checked, " + std::to_string(g_identities.failures) +
               " violations" + (g_identities.first_failure.empty() ? "" : " (first at " + g_identities.first_failure + ")");
    return o;
}

Outcome criterion7() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t count = 0, failed = 0;
    bf::for_each_length_vector(4, 10, [&](const std::vector<std::uint64_t>& k) {
        ++count;
        const SearchResult r = exists_fixfree(LengthVector(k));
        const bool ok = r.status == SearchStatus::Exists && r.code &&
                        r.code->length_vector() == LengthVector(k) && verify_fixfree(*r.code);
        if (!ok) ++failed;
    });
    const bool none = exists_fixfree(LengthVector{1, 2}).status == SearchStatus::NotExists;
    const SearchResult beyond = exists_fixfree(LengthVector{1, 1, 1});
    const bool above = beyond.status == SearchStatus::Exists && verify_fixfree(*beyond.code);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.pass = failed == 0 && none && above && secs < 60.0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%llu/%llu exist; (1,2) %s; (1,1,1) %s; %.2fs",
                  static_cast<unsigned long long>(count - failed), static_cast<unsigned long long>(count),
                  none ? "not-exists" : "WRONG", above ? "exists" : "WRONG", secs);
    o.detail = buf;
    return o;
}

Outcome criterion8() {
    Outcome o;
    std::mt19937_64 rng(4242);
    const fs::path dir = fs::temp_directory_path() / ("fixfree_acceptance_" + std::to_string(rng()));
    fs::create_directories(dir);
    int failed = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t m = 1 + rng() % 40;
        std::vector<double> w(m);
        double total = 0;
        for (auto& x : w) total += (x = 0.01 + std::uniform_real_distribution<>(0, 1)(rng));
        for (auto& x : w) x /= total;
        const Design design = design_code(Distribution::from_probabilities(w));
        const auto& entries = design.table.entries();
        std::vector<std::string> msg(rng() % 200);
        for (auto& s : msg) s = entries[rng() % entries.size()].symbol;

        const BitStream bits = encode(design.table, msg);
        const auto fwd = decode_forward(design.table, bits);
        const auto bwd = decode_backward(design.table, bits);

        const fs::path file = dir / "msg.fxf";
        const auto bytes = serialize(bits);
        std::ofstream(file, std::ios::binary).write(reinterpret_cast<const char*>(bytes.data()),
                                                    static_cast<std::streamsize>(bytes.size()));
        std::ifstream in(file, std::ios::binary);
        const std::vector<std::uint8_t> reread{std::istreambuf_iterator<char>(in), {}};
        const bool file_ok = reread == bytes && parse_bitstream(reread) == bits;

        if (!(fwd == msg && bwd == msg && fwd == bwd && file_ok)) ++failed;
    }
    fs::remove_all(dir);
    o.pass = failed == 0;
    o.detail = std::to_string(1000 - failed) + "/1000 messages";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"exhaustive construction, n <= 6, S <= 5/8", criterion1},
        {"strengthened cases, n <= 6, S <= 3/4", criterion2},
        {"worked example (0,0,2,1,2,6,20)", criterion3},
        {"designed lengths: Kraft <= 5/8, 0 <= R < 4 - log2 5", criterion4},
        {"cross-product lower bound on regular pairs", criterion5},
        {"frontier cardinality and split identities", criterion6},
        {"oracle agreement", criterion7},
        {"codec round trips", criterion8},
    };
    int failures = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %d: %s -- %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", index, c.name,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        failures += !o.pass;
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
