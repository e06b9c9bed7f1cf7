#include <random>

#include <gtest/gtest.h>

#include "hairpin/bridge.hpp"
#include "hairpin/oracle.hpp"
#include "test_support.hpp"

using namespace hairpin;
using namespace hairpin::testing;

namespace {

constexpr State q01 = 0, p1 = 1, f1 = 2, t1 = 3;
constexpr State q02 = 0, p2 = 1, t2 = 3;

std::vector<Word> words_up_to(const InvolutiveAlphabet& s, std::size_t max_len) {
    std::vector<Word> out{Word{}};
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].size() == max_len) continue;
        for (Letter a = 0; a < s.size(); ++a) {
            Word u = out[i];
            u.push_back(a);
            out.push_back(u);
        }
    }
    return out;
}

}  // namespace

TEST(BridgeTables, GoldenQuadruples) {
    const HairpinInstance inst = fig3();
    const auto& s = inst.alphabet;
    const BridgeTables t = compute_bridges(inst.dfa1, inst.dfa2);
    EXPECT_TRUE(t.is_basic(q01, q02, p1, p2));
    EXPECT_TRUE(t.is_letter_bridge(*s.find("b"), q01, q02, p1, p2));
    EXPECT_FALSE(t.is_letter_bridge(*s.find("a"), q01, q02, p1, p2));
    EXPECT_TRUE(t.is_letter_bridge(*s.find("b"), q01, q02, f1, p2));

    EXPECT_EQ(texts(s, enumerate_language(basic_bridge_language(inst.dfa1, inst.dfa2, q01, q02, p1, p2), 6)),
              (std::vector<std::string>{"b"}));
    EXPECT_EQ(texts(s, enumerate_language(basic_bridge_language(inst.dfa1, inst.dfa2, q01, q02, f1, p2), 6)),
              (std::vector<std::string>{"bA"}));
}

TEST(BridgeTables, DiagonalQuadruplesAreBasic) {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 10; ++round) {
        const HairpinInstance inst = random_instance(rng, 4, 4, 1);
        const BridgeTables t = compute_bridges(inst.dfa1, inst.dfa2);
        for (State a = 0; a < inst.dfa1.size(); ++a)
            for (State b = 0; b < inst.dfa2.size(); ++b) EXPECT_TRUE(t.is_basic(a, b, a, b));
    }
}

TEST(BridgeTables, MatchExhaustiveWordSearch) {
    std::mt19937_64 rng(5);
    const auto s = sigma_a();
    for (int round = 0; round < 20; ++round) {
        const Dfa d1 = random_dfa(rng, s, 3), d2 = random_dfa(rng, s, 3);
        const std::size_t n1 = d1.size(), n2 = d2.size();
        BridgeTables expected(n1, n2, s.size());
        for (const Word& u : words_up_to(s, n1 * n2)) {
            const Word bu = bar_word(s, u);
            for (State a = 0; a < n1; ++a)
                for (State b = 0; b < n2; ++b) {
                    const State c = d1.step(a, u), d = d2.step(b, bu);
                    expected.set_basic(a, b, c, d);
                    if (!u.empty()) expected.set_letter(u.front(), a, b, c, d);
                }
        }
        EXPECT_EQ(compute_bridges(d1, d2), expected);
    }
}

TEST(BridgeTables, SerialMatchesParallel) {
    for (const auto& inst : random_suite(40))
        EXPECT_EQ(compute_bridges(inst.dfa1, inst.dfa2), compute_bridges_serial(inst.dfa1, inst.dfa2));
}

TEST(BridgeLanguage, AcceptsExactlyBridgingWords) {
    std::mt19937_64 rng(9);
    const auto s = sigma_ab();
    for (int round = 0; round < 10; ++round) {
        const Dfa d1 = random_dfa(rng, s, 3), d2 = random_dfa(rng, s, 3);
        const Nfa m = basic_bridge_language(d1, d2, 0, 0, d1.size() - 1, 0);
        for (const Word& u : words_up_to(s, 5)) {
            const bool bridging = d1.step(0, u) == d1.size() - 1 && d2.step(0, bar_word(s, u)) == 0;
            EXPECT_EQ(m.accepts(u), bridging);
        }
    }
}

TEST(BridgeNfa, GoldenShape) {
    const HairpinInstance inst = fig3();
    const BridgeNfa a = build_bridge_nfa(inst);
    EXPECT_EQ(a.automaton.initials().size(), 4u);
    EXPECT_EQ(a.automaton.finals().size(), 5u);
    EXPECT_EQ(a.bridges.size(), 9u);
    EXPECT_FALSE(is_finite_language(a.automaton));
    const auto top = a.find({q01, q02, t1, t2, 0});
    ASSERT_TRUE(top);
    EXPECT_TRUE(a.automaton.is_initial(*top));
    EXPECT_TRUE(a.find({q01, q02, p1, p2, 1}));
    EXPECT_FALSE(a.find({q01, q02, p1, p2, 0}));
}

TEST(BridgeNfa, FiniteInstanceLanguage) {
    const HairpinInstance inst = finite_instance();
    const BridgeNfa a = build_bridge_nfa(inst);
    EXPECT_EQ(texts(inst.alphabet, enumerate_language(a.automaton, 6)), (std::vector<std::string>{"a"}));
}

TEST(BridgeNfa, EmptyInstance) {
    const auto s = sigma_ab();
    const HairpinInstance inst = make_instance(1, Dfa::empty_language(s), Dfa::empty_language(s));
    const BridgeNfa a = build_bridge_nfa(inst);
    EXPECT_EQ(a.automaton.size(), 0u);
    EXPECT_TRUE(extract_pair_languages(a, inst).empty());
}

TEST(BridgeNfa, AcceptsMinimalGammaAlphaPrefixes) {
    for (const auto& inst : random_suite(30)) {
        const BridgeNfa a = build_bridge_nfa(inst);
        for (const Word& pi : oracle_hairpin_set(inst, 8)) {
            const auto split = minimal_gamma_alpha_prefix(pi, inst);
            ASSERT_TRUE(split);
            EXPECT_TRUE(a.automaton.accepts(concat({&split->gamma, &split->alpha})));
        }
    }
}

TEST(BridgeNfa, UniquePaths) {
    EXPECT_TRUE(unique_path_exhaustive(build_bridge_nfa(fig3()), 6));
    for (const auto& inst : random_suite(30)) EXPECT_TRUE(unique_path_exhaustive(build_bridge_nfa(inst), 6));
    EXPECT_TRUE(unique_path_check(build_bridge_nfa(fig3()), {Word{}}));
}

TEST(PairLanguages, GoldenComponents) {
    const HairpinInstance inst = fig3();
    const auto& s = inst.alphabet;
    const auto pairs = extract_pair_languages(build_bridge_nfa(inst), inst);
    EXPECT_EQ(pairs.size(), 10u);
    bool seen = false;
    for (const PairLanguage& p : pairs) {
        if (p.initial != Bridge{q01, q02, t1, t2, 0} || p.final != Bridge{q01, q02, p1, p2, 1}) continue;
        seen = true;
        EXPECT_EQ(texts(s, enumerate_language(p.b_language, 6)), (std::vector<std::string>{"b"}));
        EXPECT_EQ(texts(s, enumerate_language(p.r_language, 4)), (std::vector<std::string>{"aa", "aaa", "aaaa"}));
    }
    EXPECT_TRUE(seen);
}

TEST(BridgeNfa, ExportListsEveryArc) {
    const std::string text = export_bridge_nfa(build_bridge_nfa(fig3()));
    EXPECT_NE(text.find("bridges 9 arcs 9 kappa 1"), std::string::npos);
    EXPECT_NE(text.find("((0,0),3,3,0) -a-> ((0,0),3,3,0)"), std::string::npos);
}
