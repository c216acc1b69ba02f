#include <benchmark/benchmark.h>

#include <string>

#include "diffhier/automata.hpp"
#include "diffhier/chains.hpp"
#include "diffhier/closure.hpp"
#include "diffhier/cyclic.hpp"
#include "diffhier/hierarchy.hpp"
#include "diffhier/syntactic.hpp"

using namespace diffhier;

namespace {

const Alphabet kAb("ab");
const Alphabet kAbc("abc");
constexpr const char* kFactors = "1+a+b+c+ab+bc+abc";
constexpr const char* kCyclicExample = "(b+aa)*+(ab*a)*+a*-b*+1";

// Words of length n ending in a after at least one b: monoid grows with n.
std::string counter_regex(int n) {
    std::string r = "(a+b)*b";
    for (int i = 0; i < n; ++i)
        r += "(a+b)";
    return r;
}

void BM_Compile(benchmark::State& state) {
    std::string re = counter_regex(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(compile(re, kAb));
}
BENCHMARK(BM_Compile)->DenseRange(2, 8, 2);

void BM_SyntacticMonoid(benchmark::State& state) {
    Dfa d = compile(counter_regex(static_cast<int>(state.range(0))), kAb);
    for (auto _ : state)
        benchmark::DoNotOptimize(syntactic_stamp(d));
    state.counters["elements"] = static_cast<double>(syntactic_stamp(d).monoid().size());
}
BENCHMARK(BM_SyntacticMonoid)->DenseRange(1, 4);

void BM_ShuffleClosure(benchmark::State& state) {
    std::string words;
    for (int i = 0; i < state.range(0); ++i)
        words += (i ? "+" : "") + std::string(static_cast<std::size_t>(i + 1), 'a') + "bc";
    Dfa d = compile(words, kAbc);
    for (auto _ : state)
        benchmark::DoNotOptimize(shuffle_ideal_closure(d));
}
BENCHMARK(BM_ShuffleClosure)->DenseRange(1, 6);

void BM_BestApproximationFactors(benchmark::State& state) {
    Dfa l = compile(kFactors, kAbc);
    ClosureOperator op = shuffle_operator(kAbc);
    for (auto _ : state)
        benchmark::DoNotOptimize(best_approximation(l, op));
}
BENCHMARK(BM_BestApproximationFactors)->Unit(benchmark::kMillisecond);

void BM_NonMembership(benchmark::State& state) {
    Dfa l = compile("(ab)*", kAb);
    ClosureOperator op = shuffle_operator(kAb);
    for (auto _ : state)
        benchmark::DoNotOptimize(best_approximation(l, op, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_NonMembership)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_CyclicLevel(benchmark::State& state) {
    Dfa l = compile(kCyclicExample, kAb);
    for (auto _ : state)
        benchmark::DoNotOptimize(cyclic_level(l));
}
BENCHMARK(BM_CyclicLevel);

void BM_StableChainSearch(benchmark::State& state) {
    Dfa l = compile(kFactors, kAbc);
    Stamp s = syntactic_stamp(l);
    ElementSet p = syntactic_image(s, l);
    for (auto _ : state)
        benchmark::DoNotOptimize(max_chain_over_stable_orders(s.monoid(), p));
}
BENCHMARK(BM_StableChainSearch);

} // namespace
BENCHMARK_MAIN();
