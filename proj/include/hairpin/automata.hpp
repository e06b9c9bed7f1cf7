#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hairpin/alphabet.hpp"

namespace hairpin {

// Complete deterministic automaton.
class Dfa {
public:
    Dfa() = default;
    // delta is row-major: delta[q * |alphabet| + a].
    Dfa(InvolutiveAlphabet alphabet, std::size_t states, State initial, std::vector<bool> finals,
        std::vector<State> delta);

    // Single-state automaton accepting nothing.
    static Dfa empty_language(const InvolutiveAlphabet& alphabet);

    const InvolutiveAlphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return finals_.size(); }
    State initial() const { return initial_; }
    bool is_final(State q) const { return finals_[q]; }
    const std::vector<bool>& final_mask() const { return finals_; }
    std::vector<State> finals() const;
    State next(State q, Letter a) const { return delta_[q * alphabet_.size() + a]; }
    const std::vector<State>& table() const { return delta_; }

    State step(State q, const Word& w) const;
    bool accepts(const Word& w) const { return finals_[step(initial_, w)]; }

    bool operator==(const Dfa&) const = default;

private:
    InvolutiveAlphabet alphabet_;
    State initial_ = 0;
    std::vector<bool> finals_;
    std::vector<State> delta_;
};

struct Arc {
    State from;
    Letter letter;
    State to;
    auto operator<=>(const Arc&) const = default;
};

// Nondeterministic automaton; arcs are kept sorted by (from, letter, to).
class Nfa {
public:
    Nfa() = default;
    // Throws Error on bad endpoints, bad labels, or duplicate arcs.
    Nfa(InvolutiveAlphabet alphabet, std::size_t states, std::vector<State> initials,
        std::vector<State> finals, std::vector<Arc> arcs);

    const InvolutiveAlphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return states_; }
    const std::vector<State>& initials() const { return initials_; }
    const std::vector<State>& finals() const { return finals_; }
    bool is_initial(State q) const { return initial_mask_[q]; }
    bool is_final(State q) const { return final_mask_[q]; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    std::span<const Arc> out(State q) const {
        return {arcs_.data() + offsets_[q], arcs_.data() + offsets_[q + 1]};
    }

    bool accepts(const Word& w) const;

    bool operator==(const Nfa& o) const {
        return alphabet_ == o.alphabet_ && states_ == o.states_ && initials_ == o.initials_ &&
               finals_ == o.finals_ && arcs_ == o.arcs_;
    }

private:
    InvolutiveAlphabet alphabet_;
    std::size_t states_ = 0;
    std::vector<State> initials_;
    std::vector<State> finals_;
    std::vector<bool> initial_mask_;
    std::vector<bool> final_mask_;
    std::vector<Arc> arcs_;
    std::vector<std::size_t> offsets_;
};

Nfa to_nfa(const Dfa& d);

// Acceptor of { bar(w) : w in L(m) }.
Nfa reverse_complement_acceptor(const Nfa& m);

// Subset construction; the result is complete and only contains reachable subsets.
Dfa determinize(const Nfa& m);

// Pairs reachable from (initial1, initial2) under the diagonal action, sorted.
std::vector<std::pair<State, State>> product_states(const Dfa& d1, const Dfa& d2);

struct TrimResult {
    Nfa nfa;
    std::vector<State> original;  // original[new state] = old state, increasing
};

TrimResult trim_with_map(const Nfa& m);
Nfa trim(const Nfa& m);

bool is_finite_language(const Nfa& m);

Nfa intersect(const Dfa& d, const Nfa& m);

// Complete a partial transition table (missing entries = no_state) with one fresh sink.
inline constexpr State no_state = static_cast<State>(-1);
Dfa complete_dfa(const InvolutiveAlphabet& alphabet, std::size_t states, State initial,
                 std::vector<bool> finals, std::vector<State> delta, bool* added_sink = nullptr);

// States from which some final state is reachable.
std::vector<bool> coreachable(const Dfa& d);
std::vector<bool> coreachable(const Nfa& m);

// Shortlex-least word labelling a path from a state in `from` to a state with target[q].
std::optional<Word> shortest_word(const Nfa& m, const std::vector<State>& from,
                                  const std::vector<bool>& target);

// Accepted words of length <= max_len in shortlex order.
std::vector<Word> enumerate_language(const Dfa& d, std::size_t max_len);
std::vector<Word> enumerate_language(const Nfa& m, std::size_t max_len);

}  // namespace hairpin
