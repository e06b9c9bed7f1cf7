#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "hairpin/decider.hpp"

namespace hairpin {

// One set per pair language: words u beta bar(u) with u in the R-language and beta in the
// B-language, length <= max_len, shortlex sorted.
std::vector<std::vector<Word>> decomposition_sets(const std::vector<PairLanguage>& pairs,
                                                  const InvolutiveAlphabet& sigma, std::size_t max_len);

// Pairwise disjoint sets whose union equals expected.
bool is_exact_partition(const std::vector<std::vector<Word>>& sets, const std::vector<Word>& expected);

// Per-length counts of the sum over pair languages of B-series times R-series in z^2.
std::vector<mpz_class> composed_counts(const std::vector<PairLanguage>& pairs, std::size_t terms);

struct CheckItem {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CrossCheckReport {
    std::size_t max_len = 0;
    std::vector<CheckItem> items;
    bool passed() const;
};

// Oracle vs grammar vs decomposition vs witness validation, plus series, growth and fast-path checks.
CrossCheckReport cross_validate(const HairpinInstance& inst, std::size_t max_len,
                                const DecideOptions& options = {});

}  // namespace hairpin
