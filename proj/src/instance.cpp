#include "hairpin/instance.hpp"

namespace hairpin {

HairpinInstance make_instance(int kappa, Dfa dfa1, Dfa dfa2) {
    if (kappa < 1) throw Error("kappa must be at least 1");
    if (!(dfa1.alphabet() == dfa2.alphabet())) throw Error("the two DFAs use different alphabets");
    HairpinInstance inst;
    inst.alphabet = dfa1.alphabet();
    inst.kappa = kappa;
    inst.dfa1 = std::move(dfa1);
    inst.dfa2 = std::move(dfa2);
    return inst;
}

HairpinInstance mirrored(const HairpinInstance& inst) {
    HairpinInstance out = inst;
    std::swap(out.dfa1, out.dfa2);
    return out;
}

}  // namespace hairpin
