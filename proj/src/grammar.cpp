#include "hairpin/grammar.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hairpin/oracle.hpp"

namespace hairpin {

std::string to_string(const NonterminalId& x) {
    std::ostringstream out;
    out << (x.kind == NonterminalKind::B ? 'B' : 'R') << '(' << x.p1 << ',' << x.p2 << ',' << x.q1
        << ',' << x.q2 << ')';
    return out.str();
}

LinearGrammar::LinearGrammar(InvolutiveAlphabet alphabet, int kappa, std::vector<NonterminalId> nonterminals,
                             std::vector<std::size_t> axioms, std::vector<Rule> rules)
    : alphabet_(std::move(alphabet)), kappa_(kappa), nonterminals_(std::move(nonterminals)),
      axioms_(std::move(axioms)), rules_(std::move(rules)) {
    std::sort(axioms_.begin(), axioms_.end());
    std::sort(rules_.begin(), rules_.end());
    const std::size_t k = alphabet_.size();
    by_head_.assign(nonterminals_.size() * (k + 1), {});
    lhs_offsets_.assign(nonterminals_.size() + 1, 0);
    for (const Rule& rule : rules_) ++lhs_offsets_[rule.lhs + 1];
    for (std::size_t x = 0; x < nonterminals_.size(); ++x) lhs_offsets_[x + 1] += lhs_offsets_[x];
    for (std::size_t r = 0; r < rules_.size(); ++r) {
        const Rule& rule = rules_[r];
        const std::size_t head = rule.left.empty() ? k : rule.left.front();
        by_head_[rule.lhs * (k + 1) + head].push_back(r);
    }
}

std::optional<std::size_t> LinearGrammar::find(const NonterminalId& x) const {
    auto it = std::lower_bound(nonterminals_.begin(), nonterminals_.end(), x);
    if (it == nonterminals_.end() || *it != x) return std::nullopt;
    return static_cast<std::size_t>(it - nonterminals_.begin());
}

namespace {

std::vector<Word> all_words_of_length(std::size_t k, int length) {
    std::vector<Word> out{Word{}};
    for (int i = 0; i < length; ++i) {
        std::vector<Word> next;
        next.reserve(out.size() * k);
        for (const Word& w : out) {
            for (Letter a = 0; a < k; ++a) {
                Word x = w;
                x.push_back(a);
                next.push_back(std::move(x));
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace

LinearGrammar build_grammar(const HairpinInstance& inst, bool trimmed, int kappa_cap) {
    if (inst.kappa > kappa_cap) {
        throw Error("kappa " + std::to_string(inst.kappa) + " exceeds the cap " + std::to_string(kappa_cap));
    }
    const Dfa& d1 = inst.dfa1;
    const Dfa& d2 = inst.dfa2;
    const auto& sigma = inst.alphabet;
    const State n1 = static_cast<State>(d1.size()), n2 = static_cast<State>(d2.size());
    const std::size_t k = sigma.size();
    const std::size_t quads = static_cast<std::size_t>(n1) * n2 * n1 * n2;
    auto id = [&](NonterminalKind kind, State p1, State p2, State q1, State q2) {
        return (kind == NonterminalKind::B ? 0 : quads) + ((static_cast<std::size_t>(p1) * n2 + p2) * n1 + q1) * n2 + q2;
    };
    std::vector<NonterminalId> all(2 * quads);
    for (State p1 = 0; p1 < n1; ++p1)
        for (State p2 = 0; p2 < n2; ++p2)
            for (State q1 = 0; q1 < n1; ++q1)
                for (State q2 = 0; q2 < n2; ++q2)
                    for (auto kind : {NonterminalKind::B, NonterminalKind::R})
                        all[id(kind, p1, p2, q1, q2)] = {kind, p1, p2, q1, q2};

    const auto alphas = all_words_of_length(k, inst.kappa);
    std::vector<Rule> rules;
    for (State p1 = 0; p1 < n1; ++p1) {
        for (State p2 = 0; p2 < n2; ++p2) {
            rules.push_back({id(NonterminalKind::B, p1, p2, p1, p2), RuleShape::bridge_end, {}, std::nullopt});
            for (State q1 = 0; q1 < n1; ++q1) {
                for (State q2 = 0; q2 < n2; ++q2) {
                    for (Letter a = 0; a < k; ++a) {
                        const Letter abar = sigma.bar(a);
                        rules.push_back({id(NonterminalKind::B, p1, p2, q1, d2.next(q2, abar)), RuleShape::bridge_step,
                                         {a}, id(NonterminalKind::B, d1.next(p1, a), p2, q1, q2)});
                        const State s1 = d1.next(q1, abar), s2 = d2.next(q2, abar);
                        if (!d1.is_final(s1) && !d2.is_final(s2)) {
                            rules.push_back({id(NonterminalKind::R, p1, p2, s1, s2), RuleShape::wrap, {a},
                                             id(NonterminalKind::R, d1.next(p1, a), d2.next(p2, a), q1, q2)});
                        }
                    }
                    for (const Word& alpha : alphas) {
                        const Word alpha_bar = bar_word(sigma, alpha);
                        const State s1 = d1.step(q1, alpha_bar), s2 = d2.step(q2, alpha_bar);
                        if (d1.is_final(s1) || d2.is_final(s2)) {
                            rules.push_back({id(NonterminalKind::R, p1, p2, s1, s2), RuleShape::switch_to_bridge, alpha,
                                             id(NonterminalKind::B, d1.step(p1, alpha), d2.step(p2, alpha), q1, q2)});
                        }
                    }
                }
            }
        }
    }

    std::vector<std::size_t> axioms;
    for (State q1 = 0; q1 < n1; ++q1)
        for (State q2 = 0; q2 < n2; ++q2) axioms.push_back(id(NonterminalKind::R, d1.initial(), d2.initial(), q1, q2));

    if (!trimmed) return LinearGrammar(sigma, inst.kappa, std::move(all), std::move(axioms), std::move(rules));

    // productive fixed point
    std::vector<bool> productive(all.size(), false);
    for (bool changed = true; changed;) {
        changed = false;
        for (const Rule& r : rules) {
            if (productive[r.lhs]) continue;
            if (!r.rhs || productive[*r.rhs]) {
                productive[r.lhs] = true;
                changed = true;
            }
        }
    }
    std::vector<std::vector<std::size_t>> uses(all.size());
    for (const Rule& r : rules) {
        if (r.rhs && productive[*r.rhs]) uses[r.lhs].push_back(*r.rhs);
    }
    std::vector<bool> reachable(all.size(), false);
    std::vector<std::size_t> stack;
    for (std::size_t a : axioms) {
        if (productive[a] && !reachable[a]) { reachable[a] = true; stack.push_back(a); }
    }
    while (!stack.empty()) {
        std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t y : uses[x]) {
            if (!reachable[y]) { reachable[y] = true; stack.push_back(y); }
        }
    }
    // dense ids follow (kind, p1, p2, q1, q2) order, so renumbering keeps canonical order
    std::vector<std::size_t> renumber(all.size(), static_cast<std::size_t>(-1));
    std::vector<NonterminalId> kept;
    for (std::size_t x = 0; x < all.size(); ++x) {
        if (reachable[x]) { renumber[x] = kept.size(); kept.push_back(all[x]); }
    }
    std::vector<Rule> kept_rules;
    for (const Rule& r : rules) {
        if (!reachable[r.lhs] || (r.rhs && !reachable[*r.rhs])) continue;
        Rule c = r;
        c.lhs = renumber[r.lhs];
        if (c.rhs) c.rhs = renumber[*r.rhs];
        kept_rules.push_back(std::move(c));
    }
    std::vector<std::size_t> kept_axioms;
    for (std::size_t a : axioms) {
        if (reachable[a]) kept_axioms.push_back(renumber[a]);
    }
    return LinearGrammar(sigma, inst.kappa, std::move(kept), std::move(kept_axioms), std::move(kept_rules));
}

namespace {

std::size_t emitted_length(const Rule& r) {
    switch (r.shape) {
        case RuleShape::bridge_end: return 0;
        case RuleShape::bridge_step: return 1;
        default: return 2 * r.left.size();
    }
}

std::vector<std::vector<mpz_class>> count_table(const LinearGrammar& g, std::size_t max_len) {
    std::vector<std::vector<mpz_class>> cnt(g.nonterminals().size(), std::vector<mpz_class>(max_len + 1, 0));
    for (std::size_t m = 0; m <= max_len; ++m) {
        for (const Rule& r : g.rules()) {
            const std::size_t e = emitted_length(r);
            if (e > m) continue;
            if (!r.rhs) {
                if (m == 0) cnt[r.lhs][m] += 1;
            } else {
                cnt[r.lhs][m] += cnt[*r.rhs][m - e];
            }
        }
    }
    return cnt;
}

}  // namespace

std::vector<mpz_class> count_by_length(const LinearGrammar& g, std::size_t max_len) {
    auto cnt = count_table(g, max_len);
    std::vector<mpz_class> out(max_len + 1, 0);
    for (std::size_t a : g.axioms()) {
        for (std::size_t m = 0; m <= max_len; ++m) out[m] += cnt[a][m];
    }
    return out;
}

std::vector<Word> enumerate_grammar(const LinearGrammar& g, std::size_t max_len, std::size_t cap) {
    if (max_len > cap) throw LengthCapError(max_len, cap);
    auto cnt = count_table(g, max_len);
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Word>> memo;
    const auto& sigma = g.alphabet();
    auto words = [&](auto&& self, std::size_t x, std::size_t m) -> const std::vector<Word>& {
        auto key = std::make_pair(x, m);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::vector<Word> out;
        if (cnt[x][m] != 0) {
            for (const Rule& r : g.rules_of(x)) {
                const std::size_t e = emitted_length(r);
                if (e > m) continue;
                if (!r.rhs) {
                    if (m == 0) out.push_back({});
                    continue;
                }
                if (cnt[*r.rhs][m - e] == 0) continue;
                const Word right = r.shape == RuleShape::bridge_step ? Word{} : bar_word(sigma, r.left);
                for (const Word& inner : self(self, *r.rhs, m - e)) {
                    out.push_back(concat({&r.left, &inner, &right}));
                }
            }
        }
        return memo.emplace(key, std::move(out)).first->second;
    };
    std::vector<Word> all;
    for (std::size_t a : g.axioms()) {
        for (std::size_t m = 0; m <= max_len; ++m) {
            const auto& ws = words(words, a, m);
            all.insert(all.end(), ws.begin(), ws.end());
        }
    }
    std::sort(all.begin(), all.end(), ShortlexLess{});
    return all;
}

namespace {

struct Saturating {
    int v = 0;
};
inline void add_to(mpz_class& a, const mpz_class& b) { a += b; }
inline void add_to(Saturating& a, const Saturating& b) { a.v = std::min(2, a.v + b.v); }
inline bool is_zero(const mpz_class& a) { return a == 0; }
inline bool is_zero(const Saturating& a) { return a.v == 0; }

// Top-down tabular parse; memo keyed by (nonterminal, i, j) with generation stamps.
template <class Count>
class DerivationCounter {
public:
    explicit DerivationCounter(const LinearGrammar& g) : g_(g) {}

    Count count(const Word& w, std::size_t axiom) {
        prepare(w);
        return visit(axiom, 0, w.size());
    }

    Count count_all(const Word& w) {
        prepare(w);
        Count total{};
        for (std::size_t a : g_.axioms()) add_to(total, visit(a, 0, w.size()));
        return total;
    }

private:
    void prepare(const Word& w) {
        w_ = &w;
        width_ = w.size() + 1;
        const std::size_t need = g_.nonterminals().size() * width_ * width_;
        if (memo_.size() < need) {
            memo_.resize(need);
            stamp_.resize(need, 0);
        }
        ++generation_;
    }

    Count visit(std::size_t x, std::size_t i, std::size_t j) {
        const std::size_t slot = (x * width_ + i) * width_ + j;
        if (stamp_[slot] == generation_) return memo_[slot];
        Count total{};
        const Word& w = *w_;
        const auto& sigma = g_.alphabet();
        const std::size_t k = sigma.size();
        if (i == j) {
            for (std::size_t r : g_.rules_starting(x, k)) {
                (void)r;
                add_to(total, one());
            }
        } else {
            for (std::size_t ri : g_.rules_starting(x, w[i])) {
                const Rule& r = g_.rules()[ri];
                const std::size_t len = r.left.size();
                if (r.shape == RuleShape::bridge_step) {
                    add_to(total, visit(*r.rhs, i + 1, j));
                    continue;
                }
                if (j - i < 2 * len) continue;
                bool ok = true;
                for (std::size_t t = 0; t < len && ok; ++t) {
                    ok = w[i + t] == r.left[t] && w[j - 1 - t] == sigma.bar(r.left[t]);
                }
                if (ok) add_to(total, visit(*r.rhs, i + len, j - len));
            }
        }
        stamp_[slot] = generation_;
        memo_[slot] = total;
        return total;
    }

    static Count one() {
        if constexpr (std::is_same_v<Count, Saturating>) {
            return Saturating{1};
        } else {
            return Count(1);
        }
    }

    const LinearGrammar& g_;
    const Word* w_ = nullptr;
    std::size_t width_ = 0;
    std::vector<Count> memo_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t generation_ = 0;
};

int max_count_kernel(const LinearGrammar& g, std::size_t max_len, bool parallel) {
    const std::size_t k = g.alphabet().size();
    int best = 0;
    for (std::size_t len = 0; len <= max_len; ++len) {
        long total = 1;
        for (std::size_t i = 0; i < len; ++i) total *= static_cast<long>(k);
#pragma omp parallel if (parallel) reduction(max : best)
        {
            DerivationCounter<Saturating> counter(g);
            Word w(len);
#pragma omp for schedule(static)
            for (long idx = 0; idx < total; ++idx) {
                long rest = idx;
                for (std::size_t p = len; p > 0; --p) {
                    w[p - 1] = static_cast<Letter>(rest % static_cast<long>(k));
                    rest /= static_cast<long>(k);
                }
                best = std::max(best, counter.count_all(w).v);
            }
        }
    }
    return best;
}

}  // namespace

mpz_class count_derivations(const LinearGrammar& g, const Word& w) {
    DerivationCounter<mpz_class> counter(g);
    return counter.count_all(w);
}

int max_derivation_count(const LinearGrammar& g, std::size_t max_len) { return max_count_kernel(g, max_len, true); }

int max_derivation_count_serial(const LinearGrammar& g, std::size_t max_len) {
    return max_count_kernel(g, max_len, false);
}

std::vector<std::size_t> deriving_axioms(const LinearGrammar& g, const Word& w) {
    DerivationCounter<Saturating> counter(g);
    std::vector<std::size_t> out;
    for (std::size_t a : g.axioms()) {
        if (!is_zero(counter.count(w, a))) out.push_back(a);
    }
    return out;
}

std::string export_grammar(const LinearGrammar& g) {
    const auto& sigma = g.alphabet();
    const auto& nts = g.nonterminals();
    std::ostringstream out;
    out << "axioms:";
    for (std::size_t a : g.axioms()) out << ' ' << to_string(nts[a]);
    out << '\n';
    auto tokens = [&](const Word& w) {
        std::string s;
        for (Letter a : w) s += (s.empty() ? "" : " ") + sigma.token(a);
        return s;
    };
    for (const Rule& r : g.rules()) {
        out << to_string(nts[r.lhs]) << " -> ";
        switch (r.shape) {
            case RuleShape::bridge_end: out << '1'; break;
            case RuleShape::bridge_step: out << tokens(r.left) << ' ' << to_string(nts[*r.rhs]); break;
            default:
                out << tokens(r.left) << ' ' << to_string(nts[*r.rhs]) << ' ' << tokens(bar_word(sigma, r.left));
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace hairpin
