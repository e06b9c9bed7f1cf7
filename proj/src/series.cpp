#include "hairpin/series.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "hairpin/grammar.hpp"
#include "hairpin/scc.hpp"

namespace hairpin {

Polynomial::Polynomial(std::vector<mpz_class> coefficients) : c_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(const mpz_class& c, std::size_t degree) {
    std::vector<mpz_class> v(degree + 1, 0);
    v[degree] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    std::vector<mpz_class> r = c_;
    for (auto& x : r) x = -x;
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] != 0) r[i + j] += c_[i] * o.c_[j];
        }
    }
    return Polynomial(std::move(r));
}

Polynomial Polynomial::scaled(const mpz_class& k) const {
    std::vector<mpz_class> r = c_;
    for (auto& x : r) x *= k;
    return Polynomial(std::move(r));
}

Polynomial Polynomial::exact_div(const mpz_class& k) const {
    std::vector<mpz_class> r = c_;
    for (auto& x : r) {
        if (x % k != 0) throw Error("inexact integer division of a polynomial");
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
    }
    return Polynomial(std::move(r));
}

Polynomial Polynomial::exact_div(const Polynomial& o) const {
    if (o.is_zero()) throw Error("polynomial division by zero");
    if (is_zero()) return {};
    if (degree() < o.degree()) throw Error("inexact polynomial division");
    std::vector<mpz_class> rem = c_;
    std::vector<mpz_class> q(c_.size() - o.c_.size() + 1, 0);
    const mpz_class& lead = o.c_.back();
    for (std::size_t i = q.size(); i > 0; --i) {
        const std::size_t top = i - 1 + o.c_.size() - 1;
        if (rem[top] == 0) continue;
        if (rem[top] % lead != 0) throw Error("inexact polynomial division");
        mpz_class f = rem[top] / lead;
        q[i - 1] = f;
        for (std::size_t j = 0; j < o.c_.size(); ++j) rem[i - 1 + j] -= f * o.c_[j];
    }
    for (const auto& x : rem) {
        if (x != 0) throw Error("inexact polynomial division");
    }
    return Polynomial(std::move(q));
}

mpz_class Polynomial::content() const {
    mpz_class g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Polynomial Polynomial::primitive() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (c_.back() < 0) g = -g;
    return exact_div(g);
}

namespace {

// a * lead(b)^(deg a - deg b + 1) mod b
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b) {
    const mpz_class lead = b.leading();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
        Polynomial t = Polynomial::monomial(a.leading(), shift) * b;
        a = a.scaled(lead) - t;
    }
    return a;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    Polynomial x = a.primitive(), y = b.primitive();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        Polynomial r = pseudo_remainder(x, y);
        x = std::move(y);
        y = r.primitive();
    }
    return x.primitive();
}

RationalSeries RationalSeries::normalized(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw Error("zero denominator");
    if (den.at(0) == 0) throw Error("denominator vanishes at zero");
    if (num.is_zero()) return RationalSeries{Polynomial{}, Polynomial::constant(1)};
    Polynomial g = gcd(num, den);
    if (g.degree() > 0) {
        num = num.exact_div(g);
        den = den.exact_div(g);
    }
    mpz_class c;
    mpz_class cn = num.content(), cd = den.content();
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (den.at(0) < 0) c = -c;
    if (c != 1) {
        num = num.exact_div(c);
        den = den.exact_div(c);
    }
    return RationalSeries{std::move(num), std::move(den)};
}

std::vector<mpz_class> RationalSeries::coefficients(std::size_t count) const {
    std::vector<mpz_class> out(count, 0);
    const mpz_class d0 = denominator.at(0);
    for (std::size_t m = 0; m < count; ++m) {
        mpz_class s = numerator.at(m);
        const std::size_t top = std::min<std::size_t>(m, static_cast<std::size_t>(std::max<long>(denominator.degree(), 0)));
        for (std::size_t i = 1; i <= top; ++i) s -= denominator.at(i) * out[m - i];
        if (s % d0 != 0) throw Error("series coefficient is not an integer");
        out[m] = s / d0;
    }
    return out;
}

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
    if (denominator == o.denominator) return normalized(numerator + o.numerator, denominator);
    return normalized(numerator * o.denominator + o.numerator * denominator, denominator * o.denominator);
}

RationalSeries RationalSeries::operator*(const RationalSeries& o) const {
    return normalized(numerator * o.numerator, denominator * o.denominator);
}

RationalSeries RationalSeries::substitute_power(std::size_t k) const {
    auto spread = [k](const Polynomial& p) {
        std::vector<mpz_class> c(p.is_zero() ? 0 : static_cast<std::size_t>(p.degree()) * k + 1, 0);
        for (std::size_t i = 0; i < p.coefficients().size(); ++i) c[i * k] = p.coefficients()[i];
        return Polynomial(std::move(c));
    };
    return normalized(spread(numerator), spread(denominator));
}

namespace {

RationalSeries solve_by_elimination(const TransferSystem& sys, const SccDecomposition& dec) {
    const std::size_t n = sys.constant.size();
    std::vector<RationalSeries> value(n);
    // components arrive sinks first, so every dependency outside the block is already solved
    for (const auto& comp : dec.components) {
        const std::size_t s = comp.size();
        std::vector<std::size_t> local(n, s);
        for (std::size_t i = 0; i < s; ++i) local[comp[i]] = i;
        // block (I - W) X = B / D with D a common denominator of the right-hand sides
        std::vector<RationalSeries> rhs(s);
        std::vector<std::vector<Polynomial>> m(s, std::vector<Polynomial>(s));
        for (std::size_t i = 0; i < s; ++i) {
            const std::size_t node = comp[i];
            m[i][i] = Polynomial::constant(1);
            RationalSeries r = RationalSeries::normalized(sys.constant[node], Polynomial::constant(1));
            for (const auto& [j, w] : sys.weights[node]) {
                if (local[j] < s) {
                    m[i][local[j]] = m[i][local[j]] - w;
                } else {
                    r = r + RationalSeries::normalized(w, Polynomial::constant(1)) * value[j];
                }
            }
            rhs[i] = std::move(r);
        }
        if (s == 1) {
            value[comp[0]] = RationalSeries::normalized(rhs[0].numerator, rhs[0].denominator * m[0][0]);
            continue;
        }
        // common denominator
        Polynomial common = Polynomial::constant(1);
        for (const auto& r : rhs) {
            Polynomial gg = gcd(common, r.denominator);
            common = common * r.denominator.exact_div(gg);
        }
        for (std::size_t i = 0; i < s; ++i) {
            m[i].push_back(rhs[i].numerator * common.exact_div(rhs[i].denominator));
        }
        // Bareiss elimination; leading principal minors equal 1 at z = 0, so no pivoting is needed
        Polynomial prev = Polynomial::constant(1);
        for (std::size_t k = 0; k + 1 < s; ++k) {
            for (std::size_t i = k + 1; i < s; ++i) {
                for (std::size_t j = k + 1; j <= s; ++j) {
                    m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev);
                }
                m[i][k] = Polynomial{};
            }
            prev = m[k][k];
        }
        std::vector<RationalSeries> x(s);
        for (std::size_t i = s; i > 0; --i) {
            const std::size_t r = i - 1;
            RationalSeries acc = RationalSeries::normalized(m[r][s], common);
            for (std::size_t j = r + 1; j < s; ++j) {
                if (m[r][j].is_zero()) continue;
                acc = acc + RationalSeries::normalized(-m[r][j], Polynomial::constant(1)) * x[j];
            }
            x[r] = RationalSeries::normalized(acc.numerator, acc.denominator * m[r][r]);
        }
        for (std::size_t i = 0; i < s; ++i) value[comp[i]] = std::move(x[i]);
    }
    RationalSeries total;
    for (std::size_t r : sys.roots) total = total + value[r];
    return total;
}

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    for (; e; e >>= 1, a = mul_mod(a, a, p)) {
        if (e & 1) r = mul_mod(r, a, p);
    }
    return r;
}

// Shortest linear recurrence of s modulo p: connection polynomial c (c[0] = 1) of length l.
std::pair<std::vector<u64>, std::size_t> berlekamp_massey(const std::vector<u64>& s, u64 p) {
    std::vector<u64> c{1}, b{1};
    std::size_t l = 0, shift = 1;
    u64 last = 1;
    for (std::size_t n = 0; n < s.size(); ++n) {
        u64 d = s[n];
        for (std::size_t i = 1; i <= l && i < c.size(); ++i) d = (d + mul_mod(c[i], s[n - i], p)) % p;
        if (d == 0) {
            ++shift;
            continue;
        }
        const u64 coef = mul_mod(d, pow_mod(last, p - 2, p), p);
        std::vector<u64> t = c;
        if (c.size() < b.size() + shift) c.resize(b.size() + shift, 0);
        for (std::size_t i = 0; i < b.size(); ++i) c[i + shift] = (c[i + shift] + p - mul_mod(coef, b[i], p)) % p;
        if (2 * l <= n) {
            l = n + 1 - l;
            b = std::move(t);
            last = d;
            shift = 1;
        } else {
            ++shift;
        }
    }
    c.resize(l + 1, 0);
    return {c, l};
}

// Root series coefficients s_0 .. s_{count-1}, exactly.
std::vector<mpz_class> root_counts(const TransferSystem& sys, std::size_t count) {
    const std::size_t n = sys.constant.size();
    std::vector<std::vector<mpz_class>> x(n, std::vector<mpz_class>(count, 0));
    // X_i(m) depends on X_j(m - d) with d >= 1, so increasing m is a valid order
    for (std::size_t m = 0; m < count; ++m) {
        for (std::size_t i = 0; i < n; ++i) {
            mpz_class v = sys.constant[i].at(m);
            for (const auto& [j, w] : sys.weights[i]) {
                const auto& cf = w.coefficients();
                for (std::size_t d = 1; d < cf.size() && d <= m; ++d) {
                    if (cf[d] != 0) v += cf[d] * x[j][m - d];
                }
            }
            x[i][m] = std::move(v);
        }
    }
    std::vector<mpz_class> out(count, 0);
    for (std::size_t r : sys.roots) {
        for (std::size_t m = 0; m < count; ++m) out[m] += x[r][m];
    }
    return out;
}

mpz_class symmetric(const mpz_class& r, const mpz_class& modulus) {
    mpz_class half = modulus / 2;
    return r > half ? mpz_class(r - modulus) : r;
}

// Recovers the reduced P/Q from enough exact coefficients. The degree bound on both numerator
// and denominator makes agreement on the first 2 * bound + 2 coefficients a proof of equality.
RationalSeries solve_by_recurrence(const TransferSystem& sys) {
    const std::size_t n = sys.constant.size();
    std::size_t row_degrees = 0, constant_degree = 0;
    for (std::size_t i = 0; i < n; ++i) {
        long d = 0;
        for (const auto& [j, w] : sys.weights[i]) d = std::max(d, w.degree());
        row_degrees += static_cast<std::size_t>(d);
        constant_degree = std::max<std::size_t>(constant_degree, static_cast<std::size_t>(std::max(0L, sys.constant[i].degree())));
    }
    // det(I - W) has degree <= row_degrees; adjugate-times-constants numerators have degree <= bound
    const std::size_t bound = row_degrees + constant_degree;
    const std::size_t count = 2 * bound + 2;
    const std::vector<mpz_class> s = root_counts(sys, count);

    mpz_class prime("4611686018427387904");  // 2^62
    mpz_class modulus = 1;
    std::size_t best = 0;
    std::vector<mpz_class> q_res, p_res;
    std::optional<std::pair<Polynomial, Polynomial>> previous;
    for (int round = 0; round < 4096; ++round) {
        mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
        const u64 p = prime.get_ui();
        std::vector<u64> sp(count);
        for (std::size_t m = 0; m < count; ++m) {
            mpz_class r = s[m] % prime;
            if (r < 0) r += prime;
            sp[m] = r.get_ui();
        }
        auto [c, l] = berlekamp_massey(sp, p);
        if (l < best) continue;  // the prime divides some resultant; skip it
        std::vector<u64> num(l, 0);
        for (std::size_t m = 0; m < l; ++m) {
            for (std::size_t i = 0; i <= m && i < c.size(); ++i) num[m] = (num[m] + mul_mod(c[i], sp[m - i], p)) % p;
        }
        if (l > best || q_res.empty()) {
            best = l;
            modulus = prime;
            q_res.assign(c.begin(), c.end());
            p_res.assign(num.begin(), num.end());
            previous.reset();
            continue;
        }
        // combine residues: x = a + M * ((b - a) * M^{-1} mod p)
        mpz_class inv;
        mpz_class mp = modulus % prime;
        mpz_invert(inv.get_mpz_t(), mp.get_mpz_t(), prime.get_mpz_t());
        auto combine = [&](std::vector<mpz_class>& acc, const std::vector<u64>& fresh) {
            for (std::size_t i = 0; i < acc.size(); ++i) {
                mpz_class diff = (mpz_class(static_cast<unsigned long>(fresh[i])) - acc[i] % prime) % prime;
                if (diff < 0) diff += prime;
                acc[i] += modulus * ((diff * inv) % prime);
            }
        };
        combine(q_res, c);
        combine(p_res, num);
        modulus *= prime;
        std::vector<mpz_class> qc(q_res.size()), pc(p_res.size());
        for (std::size_t i = 0; i < qc.size(); ++i) qc[i] = symmetric(q_res[i], modulus);
        for (std::size_t i = 0; i < pc.size(); ++i) pc[i] = symmetric(p_res[i], modulus);
        std::pair<Polynomial, Polynomial> candidate{Polynomial(pc), Polynomial(qc)};
        if (previous && *previous == candidate) {
            // exact check of Q * S = P on every computed coefficient
            const auto& qv = candidate.second.coefficients();
            bool ok = true;
            for (std::size_t m = 0; m < count && ok; ++m) {
                mpz_class acc = 0;
                for (std::size_t i = 0; i < qv.size() && i <= m; ++i) acc += qv[i] * s[m - i];
                ok = acc == candidate.first.at(m);
            }
            if (ok) return RationalSeries{candidate.first, candidate.second};
        }
        previous = std::move(candidate);
    }
    throw Error("rational reconstruction of a generating function did not converge");
}

}  // namespace

RationalSeries solve_transfer(const TransferSystem& sys, TransferMethod method) {
    const std::size_t n = sys.constant.size();
    Digraph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [j, w] : sys.weights[i]) {
            if (w.at(0) != 0) throw Error("transfer weight does not vanish at zero");
            if (!w.is_zero()) g[i].push_back(j);
        }
    }
    const auto dec = tarjan_scc(g);
    if (method == TransferMethod::automatic) {
        std::size_t largest = 0;
        for (const auto& comp : dec.components) largest = std::max(largest, comp.size());
        method = largest <= elimination_block_limit ? TransferMethod::elimination : TransferMethod::recurrence;
    }
    if (method == TransferMethod::elimination) return solve_by_elimination(sys, dec);
    return solve_by_recurrence(sys);
}

RationalSeries generating_function(const Nfa& m) {
    const Nfa t = trim(m);
    TransferSystem sys;
    sys.constant.resize(t.size());
    sys.weights.resize(t.size());
    const Polynomial z = Polynomial::monomial(1, 1);
    for (State q = 0; q < t.size(); ++q) {
        if (t.is_final(q)) sys.constant[q] = Polynomial::constant(1);
        std::map<std::size_t, mpz_class> per_target;
        for (const Arc& a : t.out(q)) per_target[a.to] += 1;
        for (const auto& [to, count] : per_target) sys.weights[q].emplace_back(to, Polynomial::monomial(count, 1));
    }
    sys.roots.assign(t.initials().begin(), t.initials().end());
    return solve_transfer(sys);
}

RationalSeries generating_function(const Dfa& d) { return generating_function(to_nfa(d)); }

RationalSeries grammar_generating_function(const LinearGrammar& g) {
    TransferSystem sys;
    const std::size_t n = g.nonterminals().size();
    sys.constant.resize(n);
    sys.weights.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
        std::map<std::pair<std::size_t, std::size_t>, mpz_class> terms;  // (target, degree) -> multiplicity
        for (const Rule& r : g.rules_of(x)) {
            if (!r.rhs) {
                sys.constant[x] = sys.constant[x] + Polynomial::constant(1);
                continue;
            }
            const std::size_t degree = r.shape == RuleShape::bridge_step ? 1 : 2 * r.left.size();
            terms[{*r.rhs, degree}] += 1;
        }
        std::map<std::size_t, Polynomial> per_target;
        for (const auto& [key, count] : terms) {
            per_target[key.first] = per_target[key.first] + Polynomial::monomial(count, key.second);
        }
        for (auto& [to, w] : per_target) sys.weights[x].emplace_back(to, std::move(w));
    }
    sys.roots = g.axioms();
    return solve_transfer(sys);
}

std::vector<mpz_class> count_paths(const Nfa& m, std::size_t max_len) {
    std::vector<mpz_class> current(m.size(), 0), out(max_len + 1, 0);
    for (State q : m.initials()) current[q] = 1;
    for (std::size_t len = 0; len <= max_len; ++len) {
        for (State f : m.finals()) out[len] += current[f];
        if (len == max_len) break;
        std::vector<mpz_class> next(m.size(), 0);
        for (const Arc& a : m.arcs()) {
            if (current[a.from] != 0) next[a.to] += current[a.from];
        }
        current = std::move(next);
    }
    return out;
}

std::vector<mpz_class> count_words(const Dfa& d, std::size_t max_len) { return count_paths(to_nfa(d), max_len); }

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        const mpz_class& c = p.coefficients()[i];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (mag != 1 || i == 0) out << mag.get_str();
        if (i > 0) out << (mag != 1 ? "*" : "") << 'z' << (i > 1 ? "^" + std::to_string(i) : "");
        first = false;
    }
    return out.str();
}

}  // namespace hairpin
