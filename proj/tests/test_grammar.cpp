#include <gtest/gtest.h>

#include "hairpin/grammar.hpp"
#include "hairpin/oracle.hpp"
#include "test_support.hpp"

using namespace hairpin;
using namespace hairpin::testing;

namespace {

std::vector<mpz_class> as_mpz(const std::vector<int>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Grammar, FiniteInstanceRules) {
    const HairpinInstance inst = finite_instance();
    const LinearGrammar g = build_grammar(inst);
    EXPECT_EQ(g.axioms().size(), 1u);
    EXPECT_EQ(g.rules().size(), 3u);
    EXPECT_EQ(export_grammar(g),
              "axioms: R(0,0,3,0)\n"
              "B(1,0,2,0) -> b B(2,0,2,0)\n"
              "B(2,0,2,0) -> 1\n"
              "R(0,0,3,0) -> a B(1,0,2,0) A\n");
    EXPECT_EQ(texts(inst.alphabet, enumerate_grammar(g, 8)), (std::vector<std::string>{"abA"}));
    EXPECT_EQ(count_by_length(g, 6), as_mpz({0, 0, 0, 1, 0, 0, 0}));
}

TEST(Grammar, EmptyInstance) {
    const auto s = sigma_ab();
    const LinearGrammar g = build_grammar(make_instance(1, Dfa::empty_language(s), Dfa::empty_language(s)));
    EXPECT_TRUE(g.axioms().empty());
    EXPECT_TRUE(enumerate_grammar(g, 8).empty());
    EXPECT_EQ(count_by_length(g, 4), as_mpz({0, 0, 0, 0, 0}));
}

TEST(Grammar, GoldenCountsAndWords) {
    const HairpinInstance inst = fig3();
    const LinearGrammar g = build_grammar(inst);
    EXPECT_EQ(count_by_length(g, 8), as_mpz({0, 0, 0, 2, 3, 5, 6, 8, 9}));
    EXPECT_EQ(texts(inst.alphabet, enumerate_grammar(g, 3)), (std::vector<std::string>{"abA", "aBA"}));
    EXPECT_EQ(enumerate_grammar(g, 10), oracle_hairpin_set(inst, 10));
    EXPECT_EQ(count_derivations(g, w(inst.alphabet, "abA")), 1);
    EXPECT_EQ(count_derivations(g, w(inst.alphabet, "a")), 0);
    EXPECT_EQ(count_derivations(g, w(inst.alphabet, "aBAA")), 0);
    EXPECT_EQ(deriving_axioms(g, w(inst.alphabet, "aaBAA")).size(), 1u);
}

TEST(Grammar, Test0ClosedForm) {
    const HairpinInstance inst = test0_instance();
    const auto& s = inst.alphabet;
    std::vector<Word> expected;
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::size_t j = 1; j <= n && n + 1 + j <= 5; ++j)
            expected.push_back(w(s, std::string(n, 'a') + "b" + std::string(j, 'A')));
    normalize_word_set(expected);
    EXPECT_EQ(enumerate_grammar(build_grammar(inst), 5), expected);
}

TEST(Grammar, UntrimmedGeneratesSameLanguage) {
    for (const auto& inst : random_suite(20)) {
        const LinearGrammar full = build_grammar(inst, false);
        const LinearGrammar trimmed = build_grammar(inst);
        EXPECT_LE(trimmed.nonterminals().size(), full.nonterminals().size());
        EXPECT_EQ(count_by_length(full, 9), count_by_length(trimmed, 9));
    }
}

TEST(Grammar, RuleShapes) {
    const LinearGrammar g = build_grammar(fig3());
    for (const Rule& r : g.rules()) {
        const NonterminalId& lhs = g.nonterminals()[r.lhs];
        switch (r.shape) {
        case RuleShape::bridge_step:
            EXPECT_EQ(lhs.kind, NonterminalKind::B);
            EXPECT_EQ(r.left.size(), 1u);
            ASSERT_TRUE(r.rhs);
            break;
        case RuleShape::bridge_end:
            EXPECT_EQ(lhs.kind, NonterminalKind::B);
            EXPECT_TRUE(r.left.empty());
            EXPECT_FALSE(r.rhs);
            break;
        case RuleShape::wrap:
            EXPECT_EQ(lhs.kind, NonterminalKind::R);
            EXPECT_EQ(r.left.size(), 1u);
            break;
        case RuleShape::switch_to_bridge:
            EXPECT_EQ(lhs.kind, NonterminalKind::R);
            EXPECT_EQ(r.left.size(), static_cast<std::size_t>(g.kappa()));
            ASSERT_TRUE(r.rhs);
            EXPECT_EQ(g.nonterminals()[*r.rhs].kind, NonterminalKind::B);
            break;
        }
    }
}

TEST(Grammar, KappaCap) {
    const HairpinInstance inst = test0_instance();
    EXPECT_THROW(build_grammar(make_instance(5, inst.dfa1, inst.dfa2)), Error);
    EXPECT_NO_THROW(build_grammar(make_instance(5, inst.dfa1, inst.dfa2), true, 5));
}

TEST(Grammar, UnambiguousOnSuite) {
    for (const auto& inst : random_suite(40)) {
        const LinearGrammar g = build_grammar(inst);
        EXPECT_LE(max_derivation_count(g, 6), 1);
        EXPECT_EQ(max_derivation_count(g, 5), max_derivation_count_serial(g, 5));
        EXPECT_EQ(enumerate_grammar(g, 8), oracle_hairpin_set(inst, 8));
    }
}

TEST(Grammar, EnumerationCap) {
    EXPECT_THROW(enumerate_grammar(build_grammar(fig3()), 15), LengthCapError);
}
