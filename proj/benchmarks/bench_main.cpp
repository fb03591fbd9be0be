#include <benchmark/benchmark.h>

#include <random>

#include "fixfree/fixfree.hpp"

using namespace fixfree;

namespace {

// Kraft sum exactly 5/8: 2 words of length 3, 1 of length 4, then the
// remaining 5/16 halved at each length and closed off at length n.
LengthVector spread_vector(unsigned n) {
    std::vector<std::uint64_t> k(n, 0);
    k[2] = 2;
    k[3] = 1;
    for (unsigned len = 5; len < n; ++len) k[len - 1] = 5;
    k[n - 1] = 10;
    return LengthVector(k);
}

Distribution zipf(std::size_t m) {
    std::vector<double> p(m);
    double total = 0;
    for (std::size_t i = 0; i < m; ++i) total += (p[i] = 1.0 / static_cast<double>(i + 1));
    for (auto& x : p) x /= total;
    return Distribution::from_probabilities(p);
}

void BM_Construct(benchmark::State& state) {
    const LengthVector v = spread_vector(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(construct(v));
    state.counters["words"] = static_cast<double>(v.total());
}
BENCHMARK(BM_Construct)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_Cross(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    std::mt19937_64 rng(1);
    std::vector<std::uint64_t> a, b;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << (n - 1)); ++x) {
        a.push_back(((rng() & 1u) << (n - 1)) | x);
        b.push_back((x << 1) | (rng() & 1u));
    }
    const WordSet m1(n, a), m2(n, b);
    for (auto _ : state) benchmark::DoNotOptimize(cross(m1, m2));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * (m1.size() + m2.size())));
}
BENCHMARK(BM_Cross)->DenseRange(10, 18, 4);

void BM_Design(benchmark::State& state) {
    const Distribution d = zipf(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(design_code(d));
}
BENCHMARK(BM_Design)->Arg(16)->Arg(256)->Unit(benchmark::kMillisecond);

template <bool Backward>
void BM_Decode(benchmark::State& state) {
    const Design design = design_code(zipf(64));
    std::mt19937_64 rng(2);
    std::vector<std::string> msg(static_cast<std::size_t>(state.range(0)));
    for (auto& s : msg) s = design.table.entries()[rng() % design.table.size()].symbol;
    const BitStream bits = encode(design.table, msg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(Backward ? decode_backward(design.table, bits) : decode_forward(design.table, bits));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * bits.payload.size()));
}
BENCHMARK(BM_Decode<false>)->Name("BM_DecodeForward")->Arg(1 << 16);
BENCHMARK(BM_Decode<true>)->Name("BM_DecodeBackward")->Arg(1 << 16);

void BM_Verify(benchmark::State& state) {
    const Code code = construct(spread_vector(static_cast<unsigned>(state.range(0)))).code;
    for (auto _ : state) benchmark::DoNotOptimize(verify_fixfree(code));
}
BENCHMARK(BM_Verify)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
