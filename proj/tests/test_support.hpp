#pragma once

#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "hairpin/instance.hpp"

namespace hairpin::testing {

inline InvolutiveAlphabet sigma_ab() { return InvolutiveAlphabet::from_pairs({{"a", "A"}, {"b", "B"}}); }
inline InvolutiveAlphabet sigma_a() { return InvolutiveAlphabet::from_pairs({{"a", "A"}}); }
// b is its own partner
inline InvolutiveAlphabet sigma_ab_self() { return InvolutiveAlphabet::from_pairs({{"a", "A"}, {"b", "b"}}); }

using Edge = std::tuple<State, const char*, State>;

// Partial table; missing moves go to a fresh sink.
inline Dfa make_dfa(const InvolutiveAlphabet& sigma, std::size_t states, State initial,
                    const std::vector<State>& finals, const std::vector<Edge>& edges) {
    std::vector<bool> fin(states, false);
    for (State f : finals) fin[f] = true;
    std::vector<State> delta(states * sigma.size(), no_state);
    for (const auto& [from, token, to] : edges) delta[from * sigma.size() + *sigma.find(token)] = to;
    return complete_dfa(sigma, states, initial, fin, delta);
}

inline Word w(const InvolutiveAlphabet& sigma, const std::string& text) { return sigma.parse(text); }

inline std::vector<Word> words(const InvolutiveAlphabet& sigma, const std::vector<std::string>& texts) {
    std::vector<Word> out;
    for (const auto& t : texts) out.push_back(sigma.parse(t));
    return out;
}

inline std::vector<std::string> texts(const InvolutiveAlphabet& sigma, const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const auto& x : ws) out.push_back(sigma.format(x));
    return out;
}

// Golden pair: L1 = a*(b|B)A with states q01=0, p1=1, f1=2, t1=3 (sink);
// ov(L2) = a*BA with states q02=0, p2=1, f2=2, t2=3 (sink).
inline HairpinInstance fig3() {
    const auto s = sigma_ab();
    Dfa d1 = make_dfa(s, 3, 0, {2}, {{0, "a", 0}, {0, "b", 1}, {0, "B", 1}, {1, "A", 2}});
    Dfa d2 = make_dfa(s, 3, 0, {2}, {{0, "a", 0}, {0, "B", 1}, {1, "A", 2}});
    return make_instance(1, d1, d2);
}

// L1 = {abA}, L2 empty.
inline HairpinInstance finite_instance() {
    const auto s = sigma_ab();
    return make_instance(1, make_dfa(s, 4, 0, {3}, {{0, "a", 1}, {1, "b", 2}, {2, "A", 3}}), Dfa::empty_language(s));
}

// L1 = a*bA, L2 empty.
inline HairpinInstance test0_instance() {
    const auto s = sigma_ab();
    return make_instance(1, make_dfa(s, 3, 0, {2}, {{0, "a", 0}, {0, "b", 1}, {1, "A", 2}}), Dfa::empty_language(s));
}

// L1 = a*bA, ov(L2) = a+bA with b self-paired.
inline HairpinInstance regular_instance() {
    const auto s = sigma_ab_self();
    Dfa d1 = make_dfa(s, 3, 0, {2}, {{0, "a", 0}, {0, "b", 1}, {1, "A", 2}});
    Dfa d2 = make_dfa(s, 4, 0, {3}, {{0, "a", 1}, {1, "a", 1}, {1, "b", 2}, {2, "A", 3}});
    return make_instance(1, d1, d2);
}

// L1 = aa*A, ov(L2) = ba*B.
inline HairpinInstance test2_instance() {
    const auto s = sigma_ab();
    Dfa d1 = make_dfa(s, 3, 0, {2}, {{0, "a", 1}, {1, "a", 1}, {1, "A", 2}});
    Dfa d2 = make_dfa(s, 3, 0, {2}, {{0, "b", 1}, {1, "a", 1}, {1, "B", 2}});
    return make_instance(1, d1, d2);
}

// L1 = a(a|b)*A, L2 empty.
inline HairpinInstance exponential_instance() {
    const auto s = sigma_ab();
    return make_instance(1, make_dfa(s, 3, 0, {2}, {{0, "a", 1}, {1, "a", 1}, {1, "b", 1}, {1, "A", 2}}),
                         Dfa::empty_language(s));
}

// Exactly n states, initial state 0, uniform transitions.
inline Dfa sized_random_dfa(std::mt19937_64& rng, const InvolutiveAlphabet& sigma, std::size_t n,
                            double final_probability = 0.4) {
    std::uniform_int_distribution<State> state_dist(0, static_cast<State>(n - 1));
    std::bernoulli_distribution coin(final_probability);
    std::vector<bool> finals(n);
    for (std::size_t q = 0; q < n; ++q) finals[q] = coin(rng);
    std::vector<State> delta(n * sigma.size());
    for (auto& t : delta) t = state_dist(rng);
    return Dfa(sigma, n, 0, finals, delta);
}

inline Dfa random_dfa(std::mt19937_64& rng, const InvolutiveAlphabet& sigma, std::size_t max_states,
                      double final_probability = 0.4) {
    std::uniform_int_distribution<std::size_t> size_dist(1, max_states);
    return sized_random_dfa(rng, sigma, size_dist(rng), final_probability);
}

// Each move is kept with probability keep, otherwise it falls into a shared sink.
// Sparse tables give simple-cycle bridge components, which is where tests 2 and 3 act.
inline Dfa sparse_random_dfa(std::mt19937_64& rng, const InvolutiveAlphabet& sigma, std::size_t n, double keep) {
    std::uniform_int_distribution<State> state_dist(0, static_cast<State>(n - 1));
    std::bernoulli_distribution kept(keep), coin(0.4);
    std::vector<bool> finals(n);
    for (std::size_t q = 0; q < n; ++q) finals[q] = coin(rng);
    std::vector<State> delta(n * sigma.size(), no_state);
    for (auto& t : delta)
        if (kept(rng)) t = state_dist(rng);
    return complete_dfa(sigma, n, 0, finals, delta);
}

// Instances on which tests 2 or 3 fire, drawn from sparse tables (at most `attempts` draws).
inline std::vector<HairpinInstance> sparse_suite(std::size_t attempts, std::uint64_t seed = 99) {
    std::mt19937_64 rng(seed);
    std::vector<HairpinInstance> out;
    for (std::size_t i = 0; i < attempts; ++i) {
        const auto sigma = (i / 2) % 2 == 0 ? sigma_a() : sigma_ab();
        const std::size_t n = 4 + 2 * ((i / 4) % 2);
        const double keep = 0.3 + 0.1 * static_cast<double>((i / 8) % 3);
        out.push_back(make_instance(1 + static_cast<int>(i % 2), sparse_random_dfa(rng, sigma, n, keep),
                                    sparse_random_dfa(rng, sigma, n, keep)));
    }
    return out;
}

// letters is 2 (a, A) or 4 (a, A, b, B).
inline HairpinInstance random_instance(std::mt19937_64& rng, std::size_t max_states, int letters, int kappa) {
    const auto sigma = letters == 2 ? sigma_a() : sigma_ab();
    Dfa d1 = random_dfa(rng, sigma, max_states);
    Dfa d2 = random_dfa(rng, sigma, max_states);
    return make_instance(kappa, d1, d2);
}

// The suite used by the property tests: sizes up to 4, both alphabet sizes, kappa in {1, 2}.
inline std::vector<HairpinInstance> random_suite(std::size_t count, std::uint64_t seed = 20240611) {
    std::mt19937_64 rng(seed);
    std::vector<HairpinInstance> out;
    for (std::size_t i = 0; i < count; ++i) {
        const int letters = (i % 2 == 0) ? 2 : 4;
        const int kappa = (i / 2) % 2 == 0 ? 1 : 2;
        out.push_back(random_instance(rng, 4, letters, kappa));
    }
    return out;
}

}  // namespace hairpin::testing
