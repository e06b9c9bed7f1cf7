#include "hairpin/oracle.hpp"

#include <string>

namespace hairpin {

LengthCapError::LengthCapError(std::size_t requested, std::size_t cap)
    : Error("length " + std::to_string(requested) + " exceeds the enumeration cap " +
            std::to_string(cap)) {}

namespace {

// pi[i] pairs with pi[n-1-i] for all i < len.
bool folds(const Word& pi, std::size_t len, const InvolutiveAlphabet& sigma) {
    const std::size_t n = pi.size();
    for (std::size_t i = 0; i < len; ++i) {
        if (pi[i] != sigma.bar(pi[n - 1 - i])) return false;
    }
    return true;
}

bool prefix_in_l1(const Word& pi, std::size_t len, const HairpinInstance& inst) {
    State q = inst.dfa1.initial();
    for (std::size_t i = 0; i < len; ++i) q = inst.dfa1.next(q, pi[i]);
    return inst.dfa1.is_final(q);
}

// The suffix pi[from..] lies in L2 iff its bar is accepted by dfa2.
bool suffix_in_l2(const Word& pi, std::size_t from, const HairpinInstance& inst) {
    State q = inst.dfa2.initial();
    for (std::size_t i = pi.size(); i > from; --i) q = inst.dfa2.next(q, inst.alphabet.bar(pi[i - 1]));
    return inst.dfa2.is_final(q);
}

void check_cap(std::size_t max_len, std::size_t cap) {
    if (max_len > cap) throw LengthCapError(max_len, cap);
}

}  // namespace

std::vector<Word> completions_of_word(const Word& w, const HairpinInstance& inst, Side side) {
    const auto& sigma = inst.alphabet;
    const std::size_t n = w.size();
    const std::size_t kappa = static_cast<std::size_t>(inst.kappa);
    std::vector<Word> out;
    for (std::size_t t = 0; t + 2 * kappa <= n; ++t) {
        for (std::size_t a = kappa; t + 2 * a <= n; ++a) {
            bool ok = true;
            if (side == Side::right) {
                // w = gamma alpha beta bar(alpha): alpha = w[t, t+a), bar(alpha) = w[n-a, n)
                for (std::size_t i = 0; i < a && ok; ++i) ok = w[t + i] == sigma.bar(w[n - 1 - i]);
                if (!ok) continue;
                Word c = w;
                for (std::size_t i = t; i > 0; --i) c.push_back(sigma.bar(w[i - 1]));
                out.push_back(std::move(c));
            } else {
                // w = alpha beta bar(alpha) bar(gamma): alpha = w[0, a), bar(alpha) ends at n-t
                for (std::size_t i = 0; i < a && ok; ++i) ok = w[i] == sigma.bar(w[n - t - 1 - i]);
                if (!ok) continue;
                Word c;
                c.reserve(n + t);
                for (std::size_t i = n; i > n - t; --i) c.push_back(sigma.bar(w[i - 1]));
                c.insert(c.end(), w.begin(), w.end());
                out.push_back(std::move(c));
            }
        }
    }
    normalize_word_set(out);
    return out;
}

bool membership(const Word& pi, const HairpinInstance& inst) {
    const std::size_t n = pi.size();
    const std::size_t kappa = static_cast<std::size_t>(inst.kappa);
    // A split with |alpha| > kappa shares its prefix and suffix with the split at |alpha| = kappa,
    // so each t needs the fold of length t + kappa and one L1 / L2 check.
    std::vector<bool> prefix_final(n + 1), suffix_final(n + 1);
    State q = inst.dfa1.initial();
    prefix_final[0] = inst.dfa1.is_final(q);
    for (std::size_t i = 0; i < n; ++i) prefix_final[i + 1] = inst.dfa1.is_final(q = inst.dfa1.next(q, pi[i]));
    q = inst.dfa2.initial();
    suffix_final[n] = inst.dfa2.is_final(q);
    for (std::size_t i = n; i > 0; --i) {
        q = inst.dfa2.next(q, inst.alphabet.bar(pi[i - 1]));
        suffix_final[i - 1] = inst.dfa2.is_final(q);
    }
    for (std::size_t t = 0; 2 * (t + kappa) <= n; ++t) {
        const std::size_t len = t + kappa;
        if (t == 0) {
            if (!folds(pi, kappa, inst.alphabet)) return false;
        } else if (pi[len - 1] != inst.alphabet.bar(pi[n - len])) {
            return false;
        }
        if (prefix_final[n - t] || suffix_final[t]) return true;
    }
    return false;
}

std::optional<GammaAlphaSplit> minimal_gamma_alpha_prefix(const Word& pi, const HairpinInstance& inst) {
    const std::size_t n = pi.size();
    const std::size_t kappa = static_cast<std::size_t>(inst.kappa);
    for (std::size_t t = 0; 2 * (t + kappa) <= n; ++t) {
        if (!folds(pi, t + kappa, inst.alphabet)) break;
        if (prefix_in_l1(pi, n - t, inst) || suffix_in_l2(pi, t, inst)) {
            return GammaAlphaSplit{Word(pi.begin(), pi.begin() + t),
                                   Word(pi.begin() + t, pi.begin() + t + kappa)};
        }
    }
    return std::nullopt;
}

namespace {

struct Sources {
    std::vector<Word> l1;
    std::vector<Word> l2;  // words of L2 (already barred back from dfa2's language)
};

Sources oracle_sources(const HairpinInstance& inst, std::size_t max_len) {
    Sources s;
    s.l1 = enumerate_language(inst.dfa1, max_len);
    for (const Word& u : enumerate_language(inst.dfa2, max_len)) s.l2.push_back(bar_word(inst.alphabet, u));
    return s;
}

void append_short(std::vector<Word>& out, std::vector<Word>&& words, std::size_t max_len) {
    for (auto& w : words) {
        if (w.size() <= max_len) out.push_back(std::move(w));
    }
}

}  // namespace

std::vector<Word> oracle_hairpin_set_serial(const HairpinInstance& inst, std::size_t max_len,
                                            std::size_t cap) {
    check_cap(max_len, cap);
    Sources s = oracle_sources(inst, max_len);
    std::vector<Word> out;
    for (const Word& w : s.l1) append_short(out, completions_of_word(w, inst, Side::right), max_len);
    for (const Word& w : s.l2) append_short(out, completions_of_word(w, inst, Side::left), max_len);
    normalize_word_set(out);
    return out;
}

std::vector<Word> oracle_hairpin_set(const HairpinInstance& inst, std::size_t max_len, std::size_t cap) {
    check_cap(max_len, cap);
    Sources s = oracle_sources(inst, max_len);
    const std::size_t n1 = s.l1.size();
    const long total = static_cast<long>(n1 + s.l2.size());
    std::vector<Word> out;
#pragma omp parallel
    {
        std::vector<Word> local;
#pragma omp for schedule(dynamic, 64) nowait
        for (long i = 0; i < total; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            if (idx < n1) {
                append_short(local, completions_of_word(s.l1[idx], inst, Side::right), max_len);
            } else {
                append_short(local, completions_of_word(s.l2[idx - n1], inst, Side::left), max_len);
            }
        }
#pragma omp critical
        out.insert(out.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
    }
    normalize_word_set(out);
    return out;
}

}  // namespace hairpin
