#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hairpin/instance.hpp"

namespace hairpin {

inline constexpr int default_kappa_cap = 4;

enum class NonterminalKind : std::uint8_t { B, R };

struct NonterminalId {
    NonterminalKind kind;
    State p1, p2, q1, q2;
    auto operator<=>(const NonterminalId&) const = default;
};

std::string to_string(const NonterminalId& x);

enum class RuleShape : std::uint8_t {
    bridge_step,  // B -> a B
    bridge_end,   // B -> 1
    wrap,         // R -> a R bar(a)
    switch_to_bridge,  // R -> alpha B bar(alpha), |alpha| = kappa
};

// lhs -> left rhs bar(left) for R rules, lhs -> left rhs for bridge steps.
struct Rule {
    std::size_t lhs;
    RuleShape shape;
    Word left;
    std::optional<std::size_t> rhs;
    auto operator<=>(const Rule&) const = default;
};

class LinearGrammar {
public:
    LinearGrammar() = default;
    LinearGrammar(InvolutiveAlphabet alphabet, int kappa, std::vector<NonterminalId> nonterminals,
                  std::vector<std::size_t> axioms, std::vector<Rule> rules);

    const InvolutiveAlphabet& alphabet() const { return alphabet_; }
    int kappa() const { return kappa_; }
    const std::vector<NonterminalId>& nonterminals() const { return nonterminals_; }
    const std::vector<std::size_t>& axioms() const { return axioms_; }
    const std::vector<Rule>& rules() const { return rules_; }
    std::optional<std::size_t> find(const NonterminalId& x) const;
    std::span<const Rule> rules_of(std::size_t lhs) const {
        return {rules_.data() + lhs_offsets_[lhs], rules_.data() + lhs_offsets_[lhs + 1]};
    }

    // Rules of lhs whose emitted left part starts with letter a; a = alphabet size selects B -> 1.
    const std::vector<std::size_t>& rules_starting(std::size_t lhs, std::size_t a) const {
        return by_head_[lhs * (alphabet_.size() + 1) + a];
    }

private:
    InvolutiveAlphabet alphabet_;
    int kappa_ = 1;
    std::vector<NonterminalId> nonterminals_;
    std::vector<std::size_t> axioms_;
    std::vector<Rule> rules_;
    std::vector<std::vector<std::size_t>> by_head_;
    std::vector<std::size_t> lhs_offsets_;
};

// The grammar with only productive, reachable nonterminals unless trimmed is false.
LinearGrammar build_grammar(const HairpinInstance& inst, bool trimmed = true,
                            int kappa_cap = default_kappa_cap);

std::vector<mpz_class> count_by_length(const LinearGrammar& g, std::size_t max_len);

// Words of length <= max_len, shortlex sorted, one entry per derivation.
std::vector<Word> enumerate_grammar(const LinearGrammar& g, std::size_t max_len,
                                    std::size_t cap = 14);

// Number of derivations of w from all axioms together.
mpz_class count_derivations(const LinearGrammar& g, const Word& w);

// Largest derivation count over every word of length <= max_len, saturated at 2.
int max_derivation_count(const LinearGrammar& g, std::size_t max_len);
int max_derivation_count_serial(const LinearGrammar& g, std::size_t max_len);

// Axioms from which w has at least one derivation.
std::vector<std::size_t> deriving_axioms(const LinearGrammar& g, const Word& w);

std::string export_grammar(const LinearGrammar& g);

}  // namespace hairpin
