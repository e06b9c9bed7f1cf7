#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hairpin/instance.hpp"

namespace hairpin {

// Which quadruples (p1,p2,q1,q2) admit a word w with p1.w = q1 and p2.bar(w) = q2,
// overall and with a prescribed first letter.
class BridgeTables {
public:
    BridgeTables() = default;
    BridgeTables(std::size_t n1, std::size_t n2, std::size_t letters);

    std::size_t n1() const { return n1_; }
    std::size_t n2() const { return n2_; }
    std::size_t letters() const { return letters_; }

    bool is_basic(State p1, State p2, State q1, State q2) const { return basic_[index(p1, p2, q1, q2)]; }
    bool is_letter_bridge(Letter a, State p1, State p2, State q1, State q2) const {
        return per_letter_[a * quad_count() + index(p1, p2, q1, q2)];
    }
    std::size_t basic_count() const;

    void set_basic(State p1, State p2, State q1, State q2) { basic_[index(p1, p2, q1, q2)] = 1; }
    void set_letter(Letter a, State p1, State p2, State q1, State q2) {
        per_letter_[a * quad_count() + index(p1, p2, q1, q2)] = 1;
    }

    bool operator==(const BridgeTables&) const = default;

private:
    std::size_t quad_count() const { return n1_ * n2_ * n1_ * n2_; }
    std::size_t index(State p1, State p2, State q1, State q2) const {
        return ((p1 * n2_ + p2) * n1_ + q1) * n2_ + q2;
    }
    std::size_t n1_ = 0, n2_ = 0, letters_ = 0;
    std::vector<std::uint8_t> basic_;
    std::vector<std::uint8_t> per_letter_;
};

BridgeTables compute_bridges(const Dfa& d1, const Dfa& d2);
BridgeTables compute_bridges_serial(const Dfa& d1, const Dfa& d2);

// Acceptor of {w : p1.w = q1 and p2.bar(w) = q2}, trimmed. Every word has one accepting path.
Nfa basic_bridge_language(const Dfa& d1, const Dfa& d2, State p1, State p2, State q1, State q2);

struct Bridge {
    State p1, p2, q1, q2;
    int level;
    auto operator<=>(const Bridge&) const = default;
};

std::string to_string(const Bridge& b);

struct BridgeNfa {
    int kappa = 1;
    std::vector<Bridge> bridges;  // canonical order; state i of automaton is bridges[i]
    Nfa automaton;

    std::optional<State> find(const Bridge& b) const;
};

BridgeNfa build_bridge_nfa(const HairpinInstance& inst, const BridgeTables& tables);
BridgeNfa build_bridge_nfa(const HairpinInstance& inst);

struct PairLanguage {
    Bridge initial;
    Bridge final;
    Nfa r_language;  // paths initial -> final inside the bridge automaton
    Nfa b_language;  // basic_bridge_language of the final bridge's quadruple
};

// One entry per (initial, final) pair joined by at least one path, canonical order.
std::vector<PairLanguage> extract_pair_languages(const BridgeNfa& a, const HairpinInstance& inst);

// For every sampled word, at most one path carries it between any two bridges.
bool unique_path_check(const BridgeNfa& a, const std::vector<Word>& sample_words);
// Same property for every word of length <= max_len.
bool unique_path_exhaustive(const BridgeNfa& a, std::size_t max_len);

std::string export_bridge_nfa(const BridgeNfa& a);

}  // namespace hairpin
