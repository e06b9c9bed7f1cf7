#include "hairpin/crosscheck.hpp"

#include <algorithm>
#include <map>

#include "hairpin/grammar.hpp"
#include "hairpin/growth.hpp"
#include "hairpin/oracle.hpp"
#include "hairpin/series.hpp"

namespace hairpin {

std::vector<std::vector<Word>> decomposition_sets(const std::vector<PairLanguage>& pairs,
                                                  const InvolutiveAlphabet& sigma, std::size_t max_len) {
    std::vector<std::vector<Word>> out;
    std::map<Bridge, std::vector<Word>> beta_cache;  // pair languages sharing a final bridge share B
    for (const PairLanguage& pl : pairs) {
        std::vector<Word> words;
        auto it = beta_cache.find(pl.final);
        if (it == beta_cache.end()) {
            // every R-word has length at least kappa = level of the final bridge
            const std::size_t outer = 2 * static_cast<std::size_t>(pl.final.level);
            const std::size_t room = max_len >= outer ? max_len - outer : 0;
            it = beta_cache.emplace(pl.final, enumerate_language(pl.b_language, room)).first;
        }
        const auto& betas = it->second;
        for (const Word& u : enumerate_language(pl.r_language, max_len / 2)) {
            const Word ubar = bar_word(sigma, u);
            for (const Word& beta : betas) {
                if (2 * u.size() + beta.size() > max_len) break;
                words.push_back(concat({&u, &beta, &ubar}));
            }
        }
        std::sort(words.begin(), words.end(), ShortlexLess{});
        out.push_back(std::move(words));
    }
    return out;
}

bool is_exact_partition(const std::vector<std::vector<Word>>& sets, const std::vector<Word>& expected) {
    std::vector<Word> all;
    for (const auto& s : sets) all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end(), ShortlexLess{});
    // duplicates survive the merge, so equality also rules out overlaps
    return all == expected;
}

std::vector<mpz_class> composed_counts(const std::vector<PairLanguage>& pairs, std::size_t terms) {
    std::vector<mpz_class> total(terms, 0);
    for (const PairLanguage& pl : pairs) {
        const auto b = generating_function(pl.b_language).coefficients(terms);
        const auto r = generating_function(pl.r_language).substitute_power(2).coefficients(terms);
        for (std::size_t i = 0; i < terms; ++i) {
            if (r[i] == 0) continue;
            for (std::size_t j = 0; i + j < terms; ++j) total[i + j] += r[i] * b[j];
        }
    }
    return total;
}

bool CrossCheckReport::passed() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.passed; });
}

namespace {

std::string count_detail(const std::vector<Word>& got, const std::vector<Word>& want) {
    return std::to_string(got.size()) + " vs " + std::to_string(want.size()) + " words";
}

bool same_decision(const RegularityVerdict& a, const RegularityVerdict& b) {
    return a.verdict == b.verdict && a.fired == b.fired && a.orientation == b.orientation && a.witness == b.witness;
}

}  // namespace

CrossCheckReport cross_validate(const HairpinInstance& inst, std::size_t max_len, const DecideOptions& options) {
    CrossCheckReport rep;
    rep.max_len = max_len;
    auto add = [&rep](std::string name, bool ok, std::string detail = {}) {
        rep.items.push_back({std::move(name), ok, std::move(detail)});
    };

    const auto oracle = oracle_hairpin_set(inst, max_len);
    const LinearGrammar g = build_grammar(inst);
    const auto generated = enumerate_grammar(g, max_len);
    add("grammar_equals_oracle", generated == oracle, count_detail(generated, oracle));

    const std::size_t amb_len = std::min<std::size_t>(max_len, 7);
    const int derivations = max_derivation_count(g, amb_len);
    add("unambiguous_grammar", derivations <= 1,
        "max derivations up to length " + std::to_string(amb_len) + ": " + std::to_string(derivations));

    const BridgeNfa a = build_bridge_nfa(inst);
    const auto pairs = extract_pair_languages(a, inst);
    const auto sets = decomposition_sets(pairs, inst.alphabet, max_len);
    add("pair_decomposition_partition", is_exact_partition(sets, oracle),
        std::to_string(pairs.size()) + " pair languages");

    const std::size_t path_len = std::min<std::size_t>(max_len, 6);
    add("unique_bridge_paths", unique_path_exhaustive(a, path_len), "words up to length " + std::to_string(path_len));

    constexpr std::size_t terms = 21;
    const RationalSeries gs = grammar_generating_function(g);
    const auto counts = count_by_length(g, terms - 1);
    add("grammar_series_matches_counts", gs.coefficients(terms) == counts);
    add("composed_series_matches_grammar", composed_counts(pairs, 17) == gs.coefficients(17));
    add("l1_series_matches_counts",
        generating_function(inst.dfa1).coefficients(terms) == count_words(inst.dfa1, terms - 1));
    add("ovl2_series_matches_counts",
        generating_function(inst.dfa2).coefficients(terms) == count_words(inst.dfa2, terms - 1));

    const RegularityVerdict verdict = decide(inst, options);
    add("witness_validates", validate_witness(verdict, inst), to_string(verdict.verdict) + " via " + to_string(verdict.fired));
    DecideOptions other = options;
    other.fast_path = !options.fast_path;
    add("fast_path_equivalence", same_decision(verdict, decide(inst, other)));

    const GrowthReport gr = growth_report(inst, verdict);
    add("growth_bounds", gr.bounds_ok, "lambda " + std::to_string(gr.lambda.indicator) + ", eta " + std::to_string(gr.eta.indicator));
    add("growth_pair_maximum", gr.pair_maximum_ok,
        "sigma " + std::to_string(gr.sigma.indicator) + ", rho " + std::to_string(gr.rho.indicator));
    if (gr.regular_equality_ok) add("growth_regular_equality", *gr.regular_equality_ok);
    return rep;
}

}  // namespace hairpin
