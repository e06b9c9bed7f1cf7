#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hairpin/automata.hpp"

namespace hairpin {

class LinearGrammar;

// Integer polynomial in z, coefficients in ascending degree, no trailing zeros.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<mpz_class> coefficients);
    static Polynomial constant(const mpz_class& c) { return Polynomial({c}); }
    static Polynomial monomial(const mpz_class& c, std::size_t degree);

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<mpz_class>& coefficients() const { return c_; }
    mpz_class at(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
    const mpz_class& leading() const { return c_.back(); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const mpz_class& k) const;
    // Exact division; throws Error if o does not divide *this over the integers.
    Polynomial exact_div(const Polynomial& o) const;
    Polynomial exact_div(const mpz_class& k) const;

    mpz_class content() const;
    Polynomial primitive() const;

    bool operator==(const Polynomial&) const = default;

private:
    void trim();
    std::vector<mpz_class> c_;
};

Polynomial gcd(const Polynomial& a, const Polynomial& b);

// numerator / denominator with gcd removed, common integer content removed,
// and a positive denominator constant term.
struct RationalSeries {
    Polynomial numerator;
    Polynomial denominator = Polynomial::constant(1);

    static RationalSeries normalized(Polynomial num, Polynomial den);
    // Taylor coefficients c_0 .. c_{count-1}.
    std::vector<mpz_class> coefficients(std::size_t count) const;
    bool operator==(const RationalSeries&) const = default;

    RationalSeries operator+(const RationalSeries& o) const;
    RationalSeries operator*(const RationalSeries& o) const;
    RationalSeries substitute_power(std::size_t k) const;  // f(z) -> f(z^k)
};

// X_i = constant_i + sum_j weight_ij X_j; the series of the system is the sum of X_r over roots.
struct TransferSystem {
    std::vector<Polynomial> constant;
    std::vector<std::vector<std::pair<std::size_t, Polynomial>>> weights;
    std::vector<std::size_t> roots;
};

enum class TransferMethod {
    automatic,    // elimination unless some strongly connected block exceeds the limit
    elimination,  // component by component, fraction-free (Bareiss) inside each block
    recurrence,   // exact counts, modular Berlekamp-Massey, CRT, exact verification
};
inline constexpr std::size_t elimination_block_limit = 12;

// Every weight must vanish at z = 0.
RationalSeries solve_transfer(const TransferSystem& system, TransferMethod method = TransferMethod::automatic);

RationalSeries generating_function(const Dfa& d);
// Caller guarantees unambiguity (one accepting path per accepted word).
RationalSeries generating_function(const Nfa& m);
RationalSeries grammar_generating_function(const LinearGrammar& g);

// Accepting path counts per length; word counts for unambiguous automata.
std::vector<mpz_class> count_paths(const Nfa& m, std::size_t max_len);
std::vector<mpz_class> count_words(const Dfa& d, std::size_t max_len);

std::string to_string(const Polynomial& p);

}  // namespace hairpin
