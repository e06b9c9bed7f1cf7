#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hairpin/bridge.hpp"

namespace hairpin {

enum class Verdict { regular, not_regular };
enum class FiredTest { none, test0, test1, test2, test3 };
enum class Orientation { forward, mirrored };
enum class OrientationMode { both, forward, mirrored };

std::string to_string(Verdict v);
std::string to_string(FiredTest t);
std::string to_string(Orientation o);

struct SccLoop {
    std::size_t scc_id;
    State anchor;           // least bridge of the component (state of the bridge automaton)
    Bridge anchor_bridge;
    Word loop;              // shortlex-least nonempty cycle label at the anchor inside the component
    std::size_t size;       // number of bridges in the component
    std::vector<State> members;
};

struct FactorizationWitness {
    Word mu, delta, beta;
    bool operator==(const FactorizationWitness&) const = default;
};

// Only the fields relevant to the firing test are set.
struct Witness {
    std::string reason;
    std::optional<std::size_t> scc_id;
    std::optional<Bridge> initial;   // an initial bridge from which the anchor is reachable
    std::optional<Bridge> anchor;
    std::optional<Word> v, x, y, y_prime, z;
    std::optional<Letter> letter;
    std::optional<State> c1, c2, d1, d2;
    std::optional<Word> tail;        // anchor -> final label (test0, test1)
    std::optional<Word> beta;        // test0: a word of the final bridge's language
    std::optional<Bridge> offending; // test1: bridge carrying the mismatching arc
    std::optional<std::size_t> mark; // test1: mark of the offending bridge
    std::optional<std::string> finite_side;
    bool operator==(const Witness&) const = default;
};

struct DeciderStats {
    std::size_t n1 = 0, n2 = 0, n12 = 0;
    std::size_t state_bound = 0;   // n12 * n1 * n2 * (kappa + 1)
    std::size_t bridges = 0, arcs = 0, initial_bridges = 0, final_bridges = 0;
    std::size_t sccs = 0;
    std::size_t test2_candidates = 0, test3_candidates = 0;
    std::size_t condition5_disagreements = 0;
    bool operator==(const DeciderStats&) const = default;
};

struct RegularityVerdict {
    Verdict verdict = Verdict::regular;
    FiredTest fired = FiredTest::none;
    Orientation orientation = Orientation::forward;
    std::optional<Witness> witness;
    DeciderStats stats;
    std::vector<std::string> notes;
};

struct DecideOptions {
    bool fast_path = true;
    OrientationMode orientation = OrientationMode::both;
};

// Counters filled by the per-component tests.
struct TestCounters {
    std::size_t candidates = 0;
    std::size_t condition5_disagreements = 0;
};

std::optional<RegularityVerdict> test0(const HairpinInstance& inst, const BridgeNfa& a,
                                       Orientation orientation = Orientation::forward);

std::vector<SccLoop> scc_loops(const BridgeNfa& a);

std::optional<RegularityVerdict> test1(const BridgeNfa& a, const std::vector<SccLoop>& loops,
                                       Orientation orientation = Orientation::forward);

// First split |mu| = t (ascending) with w = mu delta beta bar(delta) bar(mu), |delta| = kappa,
// and start . mu delta bar(beta) bar(delta) final in d2.
std::optional<FactorizationWitness> factorization_accepts(const Word& w, State start, const Dfa& d2,
                                                          int kappa);

std::optional<RegularityVerdict> test2(const HairpinInstance& inst, const BridgeNfa& a,
                                       const SccLoop& loop, Orientation orientation,
                                       const DecideOptions& options = {}, TestCounters* counters = nullptr);

std::optional<RegularityVerdict> test3(const HairpinInstance& inst, const BridgeNfa& a,
                                       const BridgeTables& tables, const SccLoop& loop,
                                       Orientation orientation, const DecideOptions& options = {},
                                       TestCounters* counters = nullptr);

RegularityVerdict decide(const HairpinInstance& inst, const DecideOptions& options = {});

// Membership probes of the pumping family behind a not_regular verdict.
bool validate_witness(const RegularityVerdict& verdict, const HairpinInstance& inst);

}  // namespace hairpin
