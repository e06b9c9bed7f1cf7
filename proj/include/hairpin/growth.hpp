#pragma once

#include <string>
#include <vector>

#include "hairpin/decider.hpp"

namespace hairpin {

enum class GrowthKind { finite, polynomial, exponential };
std::string to_string(GrowthKind k);

struct GrowthClass {
    GrowthKind kind = GrowthKind::finite;
    double indicator = 0.0;   // 0 finite, 1 polynomial, spectral radius otherwise
    double tolerance = 0.0;   // width of the final Collatz-Wielandt bracket
    bool converged = true;
};

inline constexpr double spectral_tolerance = 1e-9;
inline constexpr std::size_t spectral_iteration_cap = 100000;

// Valid for unambiguous automata, where path counts are word counts.
GrowthClass growth_indicator(const Nfa& m, double tolerance = spectral_tolerance);
GrowthClass growth_indicator(const Dfa& d, double tolerance = spectral_tolerance);

// Larger of two classes (the growth of a finite union).
GrowthClass max_growth(const GrowthClass& a, const GrowthClass& b);

enum class FormableSide { prefix_forming, suffix_forming };

// L intersected with the union over |alpha| = kappa of  S* alpha S* bar(alpha)  (prefix_forming)
// or  alpha S* bar(alpha) S*  (suffix_forming).
Dfa restrict_hairpin_formable(const Dfa& d, int kappa, FormableSide side,
                              int kappa_cap = 4);

// Growth of the prefix-forming restriction, as the largest growth over the alpha-specific products.
GrowthClass formable_growth(const Dfa& d, int kappa, int kappa_cap = 4);

// Every state that can reach a final state becomes final.
Dfa prefix_closure(const Dfa& d);

struct GrowthReport {
    GrowthClass lambda;      // max over the restricted L1 and L2
    GrowthClass lambda_l1, lambda_l2;  // restricted languages
    GrowthClass raw_l1, raw_l2;        // unrestricted languages
    GrowthClass sigma, rho, eta;
    std::size_t pair_languages = 0;
    bool bounds_ok = false;              // sqrt(lambda) <= eta <= lambda
    std::optional<bool> regular_equality_ok;  // eta = lambda and rho <= 1, set for regular verdicts
    bool pair_maximum_ok = false;        // max(sigma, rho) equals lambda
    double tolerance = 1e-6;
};

GrowthReport growth_report(const HairpinInstance& inst, const RegularityVerdict& verdict,
                           double tolerance = 1e-6);

}  // namespace hairpin
