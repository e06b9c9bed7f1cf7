// Parallel kernels against their serial references, plus the two transfer solvers.
#include <random>

#include <benchmark/benchmark.h>

#include "hairpin/bridge.hpp"
#include "hairpin/grammar.hpp"
#include "hairpin/oracle.hpp"
#include "hairpin/series.hpp"

namespace {

using namespace hairpin;

InvolutiveAlphabet four_letters() { return InvolutiveAlphabet::from_pairs({{"a", "A"}, {"b", "B"}}); }

Dfa random_dfa(std::mt19937_64& rng, const InvolutiveAlphabet& sigma, std::size_t n) {
    std::uniform_int_distribution<State> state_dist(0, static_cast<State>(n - 1));
    std::bernoulli_distribution coin(0.4);
    std::vector<bool> finals(n);
    for (std::size_t q = 0; q < n; ++q) finals[q] = coin(rng);
    std::vector<State> delta(n * sigma.size());
    for (auto& t : delta) t = state_dist(rng);
    return Dfa(sigma, n, 0, finals, delta);
}

HairpinInstance instance(std::size_t n, int kappa, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto sigma = four_letters();
    return make_instance(kappa, random_dfa(rng, sigma, n), random_dfa(rng, sigma, n));
}

void bridges_parallel(benchmark::State& state) {
    const HairpinInstance inst = instance(static_cast<std::size_t>(state.range(0)), 1, 1);
    for (auto _ : state) benchmark::DoNotOptimize(compute_bridges(inst.dfa1, inst.dfa2));
}

void bridges_serial(benchmark::State& state) {
    const HairpinInstance inst = instance(static_cast<std::size_t>(state.range(0)), 1, 1);
    for (auto _ : state) benchmark::DoNotOptimize(compute_bridges_serial(inst.dfa1, inst.dfa2));
}

void oracle_parallel(benchmark::State& state) {
    const HairpinInstance inst = instance(4, 1, 2);
    for (auto _ : state) benchmark::DoNotOptimize(oracle_hairpin_set(inst, static_cast<std::size_t>(state.range(0))));
}

void oracle_serial(benchmark::State& state) {
    const HairpinInstance inst = instance(4, 1, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle_hairpin_set_serial(inst, static_cast<std::size_t>(state.range(0))));
}

void derivations_parallel(benchmark::State& state) {
    const LinearGrammar g = build_grammar(instance(4, 1, 3));
    for (auto _ : state) benchmark::DoNotOptimize(max_derivation_count(g, static_cast<std::size_t>(state.range(0))));
}

void derivations_serial(benchmark::State& state) {
    const LinearGrammar g = build_grammar(instance(4, 1, 3));
    for (auto _ : state)
        benchmark::DoNotOptimize(max_derivation_count_serial(g, static_cast<std::size_t>(state.range(0))));
}

// Dense random system with one strongly connected block of the given size.
TransferSystem dense_system(std::size_t n) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coin(0, 3);
    TransferSystem sys;
    sys.constant.resize(n);
    sys.weights.resize(n);
    sys.constant[n - 1] = Polynomial::constant(1);
    for (std::size_t i = 0; i < n; ++i) {
        sys.weights[i].emplace_back((i + 1) % n, Polynomial::monomial(1, 1));
        for (std::size_t j = 0; j < n; ++j)
            if (j != (i + 1) % n && coin(rng) == 0) sys.weights[i].emplace_back(j, Polynomial::monomial(1, 1 + coin(rng) % 2));
    }
    sys.roots = {0};
    return sys;
}

void transfer_elimination(benchmark::State& state) {
    const TransferSystem sys = dense_system(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(solve_transfer(sys, TransferMethod::elimination));
}

void transfer_recurrence(benchmark::State& state) {
    const TransferSystem sys = dense_system(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(solve_transfer(sys, TransferMethod::recurrence));
}

}  // namespace

BENCHMARK(bridges_parallel)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(bridges_serial)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(oracle_parallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(oracle_serial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(derivations_parallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(derivations_serial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(transfer_elimination)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(transfer_recurrence)->Arg(8)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
