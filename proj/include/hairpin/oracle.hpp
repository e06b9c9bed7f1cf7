#pragma once

#include <optional>
#include <vector>

#include "hairpin/instance.hpp"

namespace hairpin {

inline constexpr std::size_t default_length_cap = 14;

class LengthCapError : public Error {
public:
    LengthCapError(std::size_t requested, std::size_t cap);
};

enum class Side { right, left };

// right: all completions g a b bar(a) bar(g) of w = g a b bar(a);
// left:  all completions of w = a b bar(a) bar(g). Always |a| >= kappa. Shortlex sorted.
std::vector<Word> completions_of_word(const Word& w, const HairpinInstance& inst, Side side);

// Literal scan over every split |gamma| = t, |alpha| >= kappa.
bool membership(const Word& pi, const HairpinInstance& inst);

struct GammaAlphaSplit {
    Word gamma;
    Word alpha;
    bool operator==(const GammaAlphaSplit&) const = default;
};

// The split with |alpha| = kappa and |gamma| least, or none when pi is not in the completion.
std::optional<GammaAlphaSplit> minimal_gamma_alpha_prefix(const Word& pi, const HairpinInstance& inst);

// All completion words of length <= max_len, shortlex sorted. Throws LengthCapError above cap.
std::vector<Word> oracle_hairpin_set(const HairpinInstance& inst, std::size_t max_len,
                                     std::size_t cap = default_length_cap);
std::vector<Word> oracle_hairpin_set_serial(const HairpinInstance& inst, std::size_t max_len,
                                            std::size_t cap = default_length_cap);

}  // namespace hairpin
