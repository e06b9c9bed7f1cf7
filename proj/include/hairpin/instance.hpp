#pragma once

#include "hairpin/automata.hpp"

namespace hairpin {

// Two DFAs over one involutive alphabet: dfa1 accepts L1, dfa2 accepts bar(L2).
struct HairpinInstance {
    InvolutiveAlphabet alphabet;
    int kappa = 1;
    Dfa dfa1;
    Dfa dfa2;

    bool operator==(const HairpinInstance&) const = default;
};

// Validates kappa >= 1 and the shared alphabet.
HairpinInstance make_instance(int kappa, Dfa dfa1, Dfa dfa2);

// The instance whose completion is bar of the completion of inst (the two DFAs swapped).
HairpinInstance mirrored(const HairpinInstance& inst);

}  // namespace hairpin
