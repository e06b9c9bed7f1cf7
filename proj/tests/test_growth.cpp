#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "hairpin/growth.hpp"
#include "hairpin/series.hpp"
#include "test_support.hpp"

using namespace hairpin;
using namespace hairpin::testing;

namespace {

Dfa sigma_star(const InvolutiveAlphabet& s) { return Dfa(s, 1, 0, {true}, std::vector<State>(s.size(), 0)); }

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

// u = x alpha y bar(alpha) (prefix forming) or alpha y bar(alpha) x (suffix forming), |alpha| = kappa.
bool matches_pattern(const InvolutiveAlphabet& s, const Word& u, std::size_t kappa, FormableSide side) {
    if (u.size() < 2 * kappa) return false;
    if (side == FormableSide::prefix_forming) {
        const Word tail(u.end() - static_cast<long>(kappa), u.end());
        const Word alpha = bar_word(s, tail);
        for (std::size_t i = 0; i + 2 * kappa <= u.size(); ++i)
            if (std::equal(alpha.begin(), alpha.end(), u.begin() + static_cast<long>(i))) return true;
        return false;
    }
    const Word alpha(u.begin(), u.begin() + static_cast<long>(kappa));
    const Word back = bar_word(s, alpha);
    for (std::size_t i = kappa; i + kappa <= u.size(); ++i)
        if (std::equal(back.begin(), back.end(), u.begin() + static_cast<long>(i))) return true;
    return false;
}

double evaluate(const Polynomial& p, double z) {
    double v = 0, scale = 0, power = 1;
    for (const mpz_class& c : p.coefficients()) {
        v += c.get_d() * power;
        scale += std::abs(c.get_d()) * power;
        power *= z;
    }
    return scale == 0 ? 0 : v / scale;
}

}  // namespace

TEST(GrowthIndicator, Classification) {
    const GrowthClass full = growth_indicator(sigma_star(sigma_ab()));
    EXPECT_EQ(full.kind, GrowthKind::exponential);
    EXPECT_NEAR(full.indicator, 4.0, 1e-9);
    EXPECT_TRUE(full.converged);

    const auto s = sigma_ab_self();
    const Dfa plus = make_dfa(s, 4, 0, {3}, {{0, "a", 1}, {1, "a", 1}, {1, "b", 2}, {2, "A", 3}, {3, "A", 3}});
    EXPECT_EQ(growth_indicator(plus).kind, GrowthKind::polynomial);
    EXPECT_EQ(growth_indicator(plus).indicator, 1.0);

    const GrowthClass fin = growth_indicator(finite_instance().dfa1);
    EXPECT_EQ(fin.kind, GrowthKind::finite);
    EXPECT_EQ(fin.indicator, 0.0);
    EXPECT_EQ(growth_indicator(Dfa::empty_language(s)).kind, GrowthKind::finite);
}

TEST(GrowthIndicator, GoldenRatio) {
    // no two consecutive b
    const auto s = sigma_a();
    const Dfa d = make_dfa(s, 2, 0, {0, 1}, {{0, "a", 0}, {0, "A", 1}, {1, "a", 0}});
    EXPECT_NEAR(growth_indicator(d).indicator, (1 + std::sqrt(5.0)) / 2, 1e-9);
}

TEST(GrowthIndicator, PeriodicAutomaton) {
    // (aa|aA)*: period two, growth sqrt 2
    const auto s = sigma_a();
    const Dfa d = make_dfa(s, 2, 0, {0}, {{0, "a", 1}, {1, "a", 0}, {1, "A", 0}});
    EXPECT_NEAR(growth_indicator(d).indicator, std::sqrt(2.0), 1e-9);
}

TEST(GrowthIndicator, DominantPoleOfSeries) {
    std::mt19937_64 rng(21);
    for (int round = 0; round < 40; ++round) {
        const Dfa d = random_dfa(rng, round % 2 ? sigma_ab() : sigma_a(), 6);
        const GrowthClass g = growth_indicator(d);
        if (g.kind != GrowthKind::exponential) continue;
        EXPECT_NEAR(evaluate(generating_function(d).denominator, 1.0 / g.indicator), 0.0, 1e-7);
    }
}

TEST(GrowthIndicator, NfaAgreesWithDfa) {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 30; ++round) {
        const Dfa d = random_dfa(rng, sigma_ab(), 5);
        const GrowthClass a = growth_indicator(d), b = growth_indicator(to_nfa(d));
        EXPECT_EQ(a.kind, b.kind);
        EXPECT_NEAR(a.indicator, b.indicator, 1e-9);
    }
}

TEST(MaxGrowth, PicksLarger) {
    const GrowthClass fin{GrowthKind::finite, 0.0, 0.0, true};
    const GrowthClass poly{GrowthKind::polynomial, 1.0, 0.0, true};
    const GrowthClass expo{GrowthKind::exponential, 1.5, 1e-10, true};
    EXPECT_EQ(max_growth(fin, poly).kind, GrowthKind::polynomial);
    EXPECT_EQ(max_growth(expo, poly).indicator, 1.5);
    EXPECT_EQ(max_growth(fin, fin).kind, GrowthKind::finite);
}

TEST(Restriction, SmallAlphabetExamples) {
    const auto s = sigma_a();
    const Dfa r = restrict_hairpin_formable(sigma_star(s), 1, FormableSide::prefix_forming);
    EXPECT_TRUE(r.accepts(w(s, "aA")));
    EXPECT_FALSE(r.accepts(w(s, "aa")));
    EXPECT_FALSE(r.accepts(w(s, "a")));
    EXPECT_TRUE(enumerate_language(restrict_hairpin_formable(Dfa::empty_language(s), 1,
                                                             FormableSide::prefix_forming), 6).empty());
    EXPECT_THROW(restrict_hairpin_formable(sigma_star(s), 5, FormableSide::prefix_forming), Error);
}

TEST(Restriction, MatchesPatternDefinition) {
    std::mt19937_64 rng(29);
    for (int round = 0; round < 24; ++round) {
        const auto s = round % 3 == 0 ? sigma_ab_self() : (round % 3 == 1 ? sigma_a() : sigma_ab());
        const Dfa d = random_dfa(rng, s, 4, 0.6);
        const int kappa = 1 + round % 2;
        for (FormableSide side : {FormableSide::prefix_forming, FormableSide::suffix_forming}) {
            const Dfa r = restrict_hairpin_formable(d, kappa, side);
            for (const Word& u : words_up_to(s, 6))
                ASSERT_EQ(r.accepts(u), d.accepts(u) && matches_pattern(s, u, kappa, side)) << s.format(u);
        }
    }
}

TEST(Restriction, GoldenFirstLanguage) {
    const HairpinInstance inst = fig3();
    const auto& s = inst.alphabet;
    const Dfa r = restrict_hairpin_formable(inst.dfa1, 1, FormableSide::prefix_forming);
    for (const Word& u : enumerate_language(inst.dfa1, 6))
        EXPECT_EQ(r.accepts(u), u.front() == *s.find("a")) << s.format(u);
}

TEST(Restriction, FormableGrowthIsUnionMaximum) {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 20; ++round) {
        const Dfa d = random_dfa(rng, sigma_ab(), 4, 0.5);
        const GrowthClass direct = growth_indicator(restrict_hairpin_formable(d, 1, FormableSide::prefix_forming));
        const GrowthClass split = formable_growth(d, 1);
        EXPECT_EQ(direct.kind, split.kind);
        EXPECT_NEAR(direct.indicator, split.indicator, 1e-6);
    }
}

TEST(PrefixClosure, Examples) {
    const auto s = sigma_ab();
    const Dfa ab = make_dfa(s, 3, 0, {2}, {{0, "a", 1}, {1, "b", 2}});
    EXPECT_EQ(texts(s, enumerate_language(prefix_closure(ab), 5)), (std::vector<std::string>{"", "a", "ab"}));
    EXPECT_TRUE(enumerate_language(prefix_closure(Dfa::empty_language(s)), 5).empty());
}

TEST(PrefixClosure, KeepsGrowth) {
    std::mt19937_64 rng(37);
    for (int round = 0; round < 60; ++round) {
        const Dfa d = random_dfa(rng, round % 2 ? sigma_ab() : sigma_a(), 4);
        const GrowthClass a = growth_indicator(d), b = growth_indicator(prefix_closure(d));
        EXPECT_EQ(a.kind, b.kind);
        EXPECT_NEAR(a.indicator, b.indicator, 1e-6);
    }
}

TEST(GrowthReport, CuratedInstances) {
    const GrowthReport f3 = growth_report(fig3(), decide(fig3()));
    EXPECT_EQ(f3.lambda.indicator, 1.0);
    EXPECT_EQ(f3.eta.indicator, 1.0);
    EXPECT_TRUE(f3.bounds_ok);
    EXPECT_TRUE(f3.pair_maximum_ok);
    EXPECT_FALSE(f3.regular_equality_ok);
    EXPECT_EQ(f3.pair_languages, 10u);

    const GrowthReport reg = growth_report(regular_instance(), decide(regular_instance()));
    EXPECT_EQ(reg.lambda.indicator, 1.0);
    EXPECT_EQ(reg.eta.indicator, 1.0);
    ASSERT_TRUE(reg.regular_equality_ok);
    EXPECT_TRUE(*reg.regular_equality_ok);

    const HairpinInstance e = exponential_instance();
    const GrowthReport ex = growth_report(e, decide(e));
    EXPECT_NEAR(ex.lambda.indicator, 2.0, 1e-9);
    EXPECT_GE(ex.eta.indicator, std::sqrt(2.0) - 1e-6);
    EXPECT_LE(ex.eta.indicator, 2.0 + 1e-6);
    EXPECT_TRUE(ex.bounds_ok);
    EXPECT_EQ(ex.raw_l2.kind, GrowthKind::finite);
}

TEST(GrowthReport, SuiteProperties) {
    for (const auto& inst : random_suite(60)) {
        const RegularityVerdict v = decide(inst);
        const GrowthReport r = growth_report(inst, v);
        EXPECT_TRUE(r.bounds_ok);
        EXPECT_TRUE(r.pair_maximum_ok);
        EXPECT_NEAR(r.lambda.indicator, std::max(r.lambda_l1.indicator, r.lambda_l2.indicator), 1e-12);
        EXPECT_NEAR(r.eta.indicator, std::max(r.sigma.indicator, std::sqrt(r.rho.indicator)), 1e-12);
        EXPECT_LE(r.lambda_l1.indicator, r.raw_l1.indicator + 1e-6);
        EXPECT_LE(r.lambda_l2.indicator, r.raw_l2.indicator + 1e-6);
        if (v.verdict == Verdict::regular) {
            ASSERT_TRUE(r.regular_equality_ok);
            EXPECT_TRUE(*r.regular_equality_ok);
        }
    }
}
