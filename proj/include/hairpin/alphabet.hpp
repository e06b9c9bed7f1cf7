#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hairpin {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;
using State = std::uint32_t;

// Base class for every error this library reports to callers.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Finite alphabet with a letter involution (fixed points allowed).
class InvolutiveAlphabet {
public:
    static constexpr std::size_t max_letters = 64;

    InvolutiveAlphabet() = default;
    // bar[i] is the partner index of letter i; throws Error unless bar is an involution.
    InvolutiveAlphabet(std::vector<std::string> tokens, std::vector<Letter> bar);

    // Build from partner pairs [x, bar(x)]; a pair [x, x] declares a self-paired letter.
    static InvolutiveAlphabet from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs);

    std::size_t size() const { return tokens_.size(); }
    Letter bar(Letter a) const { return bar_[a]; }
    const std::string& token(Letter a) const { return tokens_[a]; }
    std::optional<Letter> find(std::string_view token) const;

    // Letters concatenated, or space separated when some token is longer than one character.
    std::string format(const Word& w) const;
    // Inverse of format; throws Error on unknown tokens.
    Word parse(std::string_view text) const;

    // The pair list in declaration order, one entry per orbit of bar.
    std::vector<std::pair<std::string, std::string>> pairs() const;

    bool operator==(const InvolutiveAlphabet&) const = default;

private:
    std::vector<std::string> tokens_;
    std::vector<Letter> bar_;
    bool spaced_ = false;
};

// bar applied antimorphically: the reversed word with every letter replaced by its partner.
Word bar_word(const InvolutiveAlphabet& sigma, const Word& w);

// Shortlex order: shorter words first, then lexicographic on letter indices.
bool shortlex_less(const Word& u, const Word& v);

struct ShortlexLess {
    bool operator()(const Word& u, const Word& v) const { return shortlex_less(u, v); }
};

// Sort into shortlex order and drop duplicates.
void normalize_word_set(std::vector<Word>& words);

Word concat(std::initializer_list<const Word*> parts);

// w repeated: the letters at positions [from, from + length) of w^omega.
Word periodic_slice(const Word& w, std::size_t from, std::size_t length);

}  // namespace hairpin
