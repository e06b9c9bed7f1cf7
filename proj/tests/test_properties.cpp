#include <gtest/gtest.h>

#include "hairpin/crosscheck.hpp"
#include "hairpin/grammar.hpp"
#include "hairpin/oracle.hpp"
#include "hairpin/report.hpp"
#include "hairpin/series.hpp"
#include "test_support.hpp"

using namespace hairpin;
using namespace hairpin::testing;

TEST(CrossCheck, CuratedInstances) {
    for (const HairpinInstance& inst :
         {fig3(), finite_instance(), test0_instance(), regular_instance(), test2_instance(), exponential_instance()}) {
        const CrossCheckReport r = cross_validate(inst, 9);
        for (const CheckItem& item : r.items) EXPECT_TRUE(item.passed) << item.name << ": " << item.detail;
    }
}

TEST(CrossCheck, RandomSuite) {
    for (const auto& inst : random_suite(30, 77)) {
        const CrossCheckReport r = cross_validate(inst, 7);
        for (const CheckItem& item : r.items) EXPECT_TRUE(item.passed) << item.name << ": " << item.detail;
    }
}

TEST(Decomposition, GoldenPartitionsTheOracleSet) {
    const HairpinInstance inst = fig3();
    const auto pairs = extract_pair_languages(build_bridge_nfa(inst), inst);
    const auto sets = decomposition_sets(pairs, inst.alphabet, 8);
    EXPECT_EQ(sets.size(), pairs.size());
    EXPECT_TRUE(is_exact_partition(sets, oracle_hairpin_set(inst, 8)));
    EXPECT_EQ(composed_counts(pairs, 9), count_by_length(build_grammar(inst), 8));
}

TEST(Decomposition, PartitionCheckDetectsOverlap) {
    const auto s = sigma_ab();
    EXPECT_TRUE(is_exact_partition({words(s, {"a"}), words(s, {"b"})}, words(s, {"a", "b"})));
    EXPECT_FALSE(is_exact_partition({words(s, {"a"}), words(s, {"a", "b"})}, words(s, {"a", "b"})));
    EXPECT_FALSE(is_exact_partition({words(s, {"a"})}, words(s, {"a", "b"})));
}

TEST(Report, DeterministicJson) {
    const HairpinInstance inst = fig3();
    const std::string first = verdict_json(decide(inst), inst.alphabet).dump();
    EXPECT_EQ(verdict_json(decide(inst), inst.alphabet).dump(), first);
    const Json doc = verdict_json(decide(inst), inst.alphabet);
    EXPECT_EQ(doc["verdict"], "not_regular");
    EXPECT_EQ(doc["fired"], "test3");
    EXPECT_EQ(doc["witness"]["x"], "a");
}

TEST(Report, LargeCountsAsStrings) {
    const Json c = counts_json({mpz_class(5), mpz_class("123456789012345678901234567890")});
    EXPECT_EQ(c[0], 5);
    EXPECT_EQ(c[1], "123456789012345678901234567890");
}

TEST(SparseSuite, Tests2And3AgreeWithDirectScansAndOracle) {
    std::size_t late = 0;
    for (const HairpinInstance& inst : sparse_suite(4000)) {
        const RegularityVerdict fast = decide(inst);
        if (fast.fired != FiredTest::test2 && fast.fired != FiredTest::test3) continue;
        ++late;
        DecideOptions direct;
        direct.fast_path = false;
        const RegularityVerdict slow = decide(inst, direct);
        EXPECT_EQ(fast.fired, slow.fired);
        EXPECT_EQ(fast.witness, slow.witness);
        EXPECT_TRUE(validate_witness(fast, inst));
        const CrossCheckReport r = cross_validate(inst, 7);
        for (const CheckItem& item : r.items) EXPECT_TRUE(item.passed) << item.name << ": " << item.detail;
    }
    EXPECT_GE(late, 10u);
}
