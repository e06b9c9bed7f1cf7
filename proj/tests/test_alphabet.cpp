#include <gtest/gtest.h>

#include "hairpin/alphabet.hpp"
#include "test_support.hpp"

using namespace hairpin;
using namespace hairpin::testing;

TEST(Alphabet, PairsDeclareAnInvolution) {
    const auto s = sigma_ab();
    ASSERT_EQ(s.size(), 4u);
    for (Letter a = 0; a < s.size(); ++a) EXPECT_EQ(s.bar(s.bar(a)), a);
    EXPECT_EQ(s.token(s.bar(*s.find("a"))), "A");
    EXPECT_EQ(s.token(s.bar(*s.find("B"))), "b");
}

TEST(Alphabet, SelfPairedLetter) {
    const auto s = sigma_ab_self();
    ASSERT_EQ(s.size(), 3u);
    const Letter b = *s.find("b");
    EXPECT_EQ(s.bar(b), b);
    EXPECT_EQ(s.pairs(), (std::vector<std::pair<std::string, std::string>>{{"a", "A"}, {"b", "b"}}));
}

TEST(Alphabet, RejectsNonInvolution) {
    EXPECT_THROW(InvolutiveAlphabet({"a", "b", "c"}, {1, 2, 0}), Error);
    EXPECT_THROW(InvolutiveAlphabet::from_pairs({{"a", "A"}, {"a", "b"}}), Error);
}

TEST(Alphabet, BarIsAnAntimorphism) {
    const auto s = sigma_ab();
    EXPECT_EQ(s.format(bar_word(s, w(s, "abA"))), "aBA");
    EXPECT_EQ(s.format(bar_word(s, w(s, "aab"))), "BAA");
    const Word u = w(s, "abB"), v = w(s, "Aa");
    const Word bu = bar_word(s, u), bv = bar_word(s, v);
    EXPECT_EQ(bar_word(s, concat({&u, &v})), concat({&bv, &bu}));
    EXPECT_EQ(bar_word(s, bar_word(s, u)), u);
    EXPECT_TRUE(bar_word(s, Word{}).empty());
}

TEST(Alphabet, FormatAndParseRoundTrip) {
    const auto s = sigma_ab();
    EXPECT_EQ(s.format(s.parse("aBAb")), "aBAb");
    EXPECT_THROW(s.parse("axb"), Error);

    const auto multi = InvolutiveAlphabet::from_pairs({{"x1", "y1"}, {"z", "z"}});
    const Word u = multi.parse("x1 z y1");
    EXPECT_EQ(u.size(), 3u);
    EXPECT_EQ(multi.format(u), "x1 z y1");
}

TEST(Alphabet, ShortlexOrder) {
    const auto s = sigma_ab();
    EXPECT_TRUE(shortlex_less(w(s, "b"), w(s, "aa")));
    EXPECT_TRUE(shortlex_less(w(s, "aa"), w(s, "ab")));
    EXPECT_FALSE(shortlex_less(w(s, "ab"), w(s, "ab")));
    auto set = words(s, {"ab", "a", "ab", "", "B"});
    normalize_word_set(set);
    EXPECT_EQ(texts(s, set), (std::vector<std::string>{"", "a", "B", "ab"}));
}

TEST(Alphabet, PeriodicSlice) {
    const auto s = sigma_ab();
    EXPECT_EQ(s.format(periodic_slice(w(s, "ab"), 1, 5)), "babab");
    EXPECT_EQ(s.format(periodic_slice(w(s, "abA"), 4, 2)), "bA");
}
