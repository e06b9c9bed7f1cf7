#include <string>

#include <gtest/gtest.h>

#include "hairpin/instance_io.hpp"
#include "test_support.hpp"

using namespace hairpin;
using namespace hairpin::testing;

namespace {

const std::string fig3_partial = R"({
  "alphabet": [["a", "A"], ["b", "B"]],
  "kappa": 1,
  "dfa_L1": {"states": 3, "initial": 0, "finals": [2],
             "transitions": [[0, "a", 0], [0, "b", 1], [0, "B", 1], [1, "A", 2]]},
  "dfa_ovL2": {"states": 3, "initial": 0, "finals": [2],
               "transitions": [[0, "a", 0], [0, "B", 1], [1, "A", 2]]}
})";

std::string error_of(const std::string& text) {
    try {
        parse_instance_text(text, "t.json");
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

std::string with(const std::string& from, const std::string& to) {
    std::string text = fig3_partial;
    const auto at = text.find(from);
    EXPECT_NE(at, std::string::npos) << from;
    return text.replace(at, from.size(), to);
}

}  // namespace

TEST(InstanceIo, PartialDfasAreCompleted) {
    const ParsedInstance p = parse_instance_text(fig3_partial);
    EXPECT_EQ(p.instance, fig3());
    EXPECT_EQ(p.instance.dfa1.size(), 4u);
    EXPECT_EQ(p.instance.dfa2.size(), 4u);
    EXPECT_EQ(p.notes.size(), 2u);
}

TEST(InstanceIo, RoundTrip) {
    for (const HairpinInstance& inst : {fig3(), finite_instance(), regular_instance(), test2_instance()}) {
        const std::string text = serialize_instance(inst);
        const ParsedInstance back = parse_instance_text(text);
        EXPECT_EQ(back.instance, inst);
        EXPECT_TRUE(back.notes.empty());
        EXPECT_EQ(serialize_instance(back.instance), text);
    }
    for (const auto& inst : random_suite(20)) EXPECT_EQ(parse_instance_text(serialize_instance(inst)).instance, inst);
}

TEST(InstanceIo, MissingSecondLanguageIsEmpty) {
    const std::string text = R"({"alphabet": [["a", "A"]], "kappa": 2,
        "dfa_L1": {"states": 1, "initial": 0, "finals": [0], "transitions": [[0, "a", 0], [0, "A", 0]]}})";
    const HairpinInstance inst = parse_instance_text(text).instance;
    EXPECT_EQ(inst.kappa, 2);
    EXPECT_EQ(inst.dfa2.size(), 1u);
    EXPECT_TRUE(enumerate_language(inst.dfa2, 4).empty());
}

TEST(InstanceIo, NfaForSecondLanguage) {
    // L2 = a b A* given directly; the stored automaton accepts its bar, a* B A
    const std::string text = R"({"alphabet": [["a", "A"], ["b", "B"]], "kappa": 1,
        "dfa_L1": {"states": 1, "initial": 0, "finals": [], "transitions": []},
        "nfa_L2": {"states": 3, "initials": [0], "finals": [2],
                   "transitions": [[0, "a", 1], [1, "b", 2], [2, "A", 2]]}})";
    const HairpinInstance inst = parse_instance_text(text).instance;
    const auto& s = inst.alphabet;
    EXPECT_EQ(texts(s, enumerate_language(inst.dfa2, 4)), (std::vector<std::string>{"BA", "aBA", "aaBA"}));
}

TEST(InstanceIo, DistinctDiagnostics) {
    EXPECT_NE(error_of("{\"alphabet\": [[\"a\", \"A\"]],\n  \"kappa\": }").find("line 2"), std::string::npos);
    EXPECT_NE(error_of(with("[0, \"b\", 1]", "[0, \"c\", 1]")).find("undeclared letter 'c'"), std::string::npos);
    EXPECT_NE(error_of(with("\"kappa\": 1", "\"kappa\": 0")).find("kappa must be at least 1"), std::string::npos);
    EXPECT_NE(error_of(with("[\"b\", \"B\"]", "[\"b\", \"a\"]")).find("alphabet"), std::string::npos);
    EXPECT_NE(error_of(with("[1, \"A\", 2]", "[1, \"A\", 7]")).find("outside [0, 3)"), std::string::npos);
    EXPECT_NE(error_of(with("[0, \"a\", 0], [0, \"b\", 1]", "[0, \"a\", 0], [0, \"a\", 1]")).find("second transition"),
              std::string::npos);
    EXPECT_NE(error_of(with("\"dfa_L1\"", "\"dfa_LL\"")).find("missing key \"dfa_L1\""), std::string::npos);
    EXPECT_NE(error_of(with("\"initial\": 0", "\"initial\": \"x\"")).find("dfa_L1.initial"), std::string::npos);
}

TEST(InstanceIo, InvolutionConflict) {
    const std::string text = R"({"alphabet": [["a", "b"], ["a", "a"]], "kappa": 1,
        "dfa_L1": {"states": 1, "initial": 0, "finals": [], "transitions": []}})";
    EXPECT_THROW(parse_instance_text(text), InputError);
}

TEST(InstanceIo, MissingFile) { EXPECT_THROW(parse_instance("/nonexistent/x.json"), InputError); }
