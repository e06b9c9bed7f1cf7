#include "hairpin/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "hairpin/scc.hpp"

namespace hairpin {

std::string to_string(GrowthKind k) {
    switch (k) {
        case GrowthKind::finite: return "finite";
        case GrowthKind::polynomial: return "polynomial";
        case GrowthKind::exponential: return "exponential";
    }
    return "?";
}

namespace {

struct Spectral {
    double value;
    double width;
    bool converged;
};

// Collatz-Wielandt bracketing on (M + I) for an irreducible block given as an arc list.
Spectral spectral_radius(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& arcs,
                         double tolerance) {
    std::vector<double> x(size, 1.0), y(size);
    double lo = 0.0, hi = 0.0;
    for (std::size_t it = 0; it < spectral_iteration_cap; ++it) {
        y = x;
        for (auto [from, to] : arcs) y[from] += x[to];
        lo = std::numeric_limits<double>::infinity();
        hi = 0.0;
        double top = 0.0;
        for (std::size_t i = 0; i < size; ++i) {
            const double r = y[i] / x[i];
            lo = std::min(lo, r);
            hi = std::max(hi, r);
            top = std::max(top, y[i]);
        }
        if (hi - lo <= tolerance) return {(lo + hi) / 2 - 1.0, hi - lo, true};
        for (std::size_t i = 0; i < size; ++i) x[i] = y[i] / top;
    }
    return {(lo + hi) / 2 - 1.0, hi - lo, false};
}

}  // namespace

GrowthClass growth_indicator(const Nfa& m, double tolerance) {
    const Nfa t = trim(m);
    const auto dec = tarjan_scc(graph_of(t));
    GrowthClass out;
    for (std::size_t c = 0; c < dec.components.size(); ++c) {
        if (!dec.nontrivial[c]) continue;
        const auto& members = dec.components[c];
        std::map<std::size_t, std::size_t> local;
        for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = i;
        std::vector<std::pair<std::size_t, std::size_t>> arcs;
        for (std::size_t q : members) {
            for (const Arc& a : t.out(static_cast<State>(q))) {
                if (dec.component_of[a.to] == c) arcs.emplace_back(local[q], local[a.to]);
            }
        }
        if (arcs.size() == members.size()) {
            // a strongly connected block with one arc per node is a simple cycle
            if (out.kind == GrowthKind::finite) out = {GrowthKind::polynomial, 1.0, 0.0, true};
            continue;
        }
        const Spectral s = spectral_radius(members.size(), arcs, tolerance);
        if (out.kind != GrowthKind::exponential || s.value > out.indicator) {
            out = {GrowthKind::exponential, s.value, s.width, s.converged};
        }
    }
    return out;
}

GrowthClass growth_indicator(const Dfa& d, double tolerance) { return growth_indicator(to_nfa(d), tolerance); }

GrowthClass max_growth(const GrowthClass& a, const GrowthClass& b) {
    if (a.kind != b.kind) return a.kind > b.kind ? a : b;
    return a.indicator >= b.indicator ? a : b;
}

namespace {

std::vector<Word> all_words(const InvolutiveAlphabet& sigma, int length) {
    std::vector<Word> out{Word{}};
    for (int i = 0; i < length; ++i) {
        std::vector<Word> next;
        for (const Word& w : out) {
            for (std::size_t a = 0; a < sigma.size(); ++a) {
                Word x = w;
                x.push_back(static_cast<Letter>(a));
                next.push_back(std::move(x));
            }
        }
        out = std::move(next);
    }
    return out;
}

// Union over the given alphas of the pattern; a chain of 2 kappa states per alpha after a start state.
Nfa formable_pattern(const InvolutiveAlphabet& sigma, int kappa, FormableSide side,
                     const std::vector<Word>& alphas) {
    const std::size_t k = static_cast<std::size_t>(kappa);
    const std::size_t states = 1 + alphas.size() * 2 * k;
    std::vector<Arc> arcs;
    std::vector<State> finals;
    auto all_loop = [&](State q) {
        for (std::size_t a = 0; a < sigma.size(); ++a) arcs.push_back({q, static_cast<Letter>(a), q});
    };
    if (side == FormableSide::prefix_forming) all_loop(0);
    for (std::size_t idx = 0; idx < alphas.size(); ++idx) {
        const Word& alpha = alphas[idx];
        const Word closing = bar_word(sigma, alpha);
        const auto base = static_cast<State>(1 + idx * 2 * k);
        for (std::size_t i = 0; i < k; ++i) {
            arcs.push_back({i == 0 ? State{0} : static_cast<State>(base + i - 1), alpha[i], static_cast<State>(base + i)});
        }
        const auto opened = static_cast<State>(base + k - 1);
        all_loop(opened);
        for (std::size_t j = 0; j < k; ++j) {
            arcs.push_back({static_cast<State>(j == 0 ? opened : base + k + j - 1), closing[j],
                            static_cast<State>(base + k + j)});
        }
        const auto last = static_cast<State>(base + 2 * k - 1);
        finals.push_back(last);
        if (side == FormableSide::suffix_forming) all_loop(last);
    }
    return Nfa(sigma, states, {0}, finals, std::move(arcs));
}

void check_kappa(int kappa, int cap) {
    if (kappa < 1) throw Error("kappa must be at least 1");
    if (kappa > cap) {
        throw Error("kappa " + std::to_string(kappa) + " exceeds the pattern cap " + std::to_string(cap));
    }
}

}  // namespace

Dfa restrict_hairpin_formable(const Dfa& d, int kappa, FormableSide side, int kappa_cap) {
    check_kappa(kappa, kappa_cap);
    const Nfa pattern = formable_pattern(d.alphabet(), kappa, side, all_words(d.alphabet(), kappa));
    return determinize(intersect(d, pattern));
}

GrowthClass formable_growth(const Dfa& d, int kappa, int kappa_cap) {
    check_kappa(kappa, kappa_cap);
    GrowthClass out;
    for (const Word& alpha : all_words(d.alphabet(), kappa)) {
        const Nfa pattern = formable_pattern(d.alphabet(), kappa, FormableSide::prefix_forming, {alpha});
        out = max_growth(out, growth_indicator(determinize(intersect(d, pattern))));
    }
    return out;
}

Dfa prefix_closure(const Dfa& d) {
    return Dfa(d.alphabet(), d.size(), d.initial(), coreachable(d), d.table());
}

GrowthReport growth_report(const HairpinInstance& inst, const RegularityVerdict& verdict, double tolerance) {
    GrowthReport rep;
    rep.tolerance = tolerance;
    rep.lambda_l1 = formable_growth(inst.dfa1, inst.kappa);
    // ov of the restricted L2 is the prefix-forming restriction of ov(L2)
    rep.lambda_l2 = formable_growth(inst.dfa2, inst.kappa);
    rep.lambda = max_growth(rep.lambda_l1, rep.lambda_l2);
    rep.raw_l1 = growth_indicator(inst.dfa1);
    rep.raw_l2 = growth_indicator(inst.dfa2);

    const BridgeNfa a = build_bridge_nfa(inst);
    const auto pairs = extract_pair_languages(a, inst);
    rep.pair_languages = pairs.size();
    std::vector<GrowthClass> sigma(pairs.size()), rho(pairs.size());
    const long count = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        const auto& pl = pairs[static_cast<std::size_t>(i)];
        sigma[static_cast<std::size_t>(i)] = growth_indicator(determinize(pl.b_language));
        rho[static_cast<std::size_t>(i)] = growth_indicator(pl.r_language);
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        rep.sigma = max_growth(rep.sigma, sigma[i]);
        rep.rho = max_growth(rep.rho, rho[i]);
    }

    GrowthClass root_rho = rep.rho;
    if (root_rho.kind == GrowthKind::exponential) {
        root_rho.indicator = std::sqrt(rep.rho.indicator);
        root_rho.tolerance = rep.rho.tolerance / (2 * root_rho.indicator);
    }
    rep.eta = max_growth(rep.sigma, root_rho);

    const double lambda = rep.lambda.indicator;
    const double eta = rep.eta.indicator;
    rep.bounds_ok = std::sqrt(lambda) <= eta + tolerance && eta <= lambda + tolerance;
    rep.pair_maximum_ok =
        std::abs(lambda - std::max(rep.sigma.indicator, rep.rho.indicator)) <= tolerance;
    if (verdict.verdict == Verdict::regular) {
        rep.regular_equality_ok = std::abs(eta - lambda) <= tolerance && rep.rho.indicator <= 1.0 + tolerance;
    }
    return rep;
}

}  // namespace hairpin
