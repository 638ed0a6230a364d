#pragma once

#include "svol/qnum.hpp"

#include <map>
#include <string>

namespace svol {

// Basis element C(z,n) (-1)^{p z} q^{nu z}.
struct TermKey {
    Rational nu;
    int n = 0;
    int p = 0;
};

// Canonical order: nu descending, n descending, p ascending.
struct TermKeyOrder {
    bool operator()(const TermKey& a, const TermKey& b) const {
        if (a.nu != b.nu) return a.nu > b.nu;
        if (a.n != b.n) return a.n > b.n;
        return a.p < b.p;
    }
};

struct LeadingTerm {
    Rational ord;
    int deg0 = -1;  // -1 when the parity-0 part at the top order is absent
    int deg1 = -1;
    QNumber lead0;
    QNumber lead1;
    int degree() const { return deg0 > deg1 ? deg0 : deg1; }
};

// Finite sum of c * C(z,n) * (-1)^{p z} * q^{nu z}; zero coefficients are never stored.
class SuperQExpPoly {
public:
    using TermMap = std::map<TermKey, QNumber, TermKeyOrder>;

    SuperQExpPoly() = default;
    static SuperQExpPoly term(const QNumber& c, const Rational& nu, int n = 0, int p = 0);
    static SuperQExpPoly constant(const QNumber& c) { return term(c, 0); }
    // q^{nu z}
    static SuperQExpPoly q_exp(const Rational& nu) { return term(1, nu); }
    // C(z, n)
    static SuperQExpPoly binom(int n) { return term(1, 0, n); }
    // (-1)^z
    static SuperQExpPoly sign() { return term(1, 0, 0, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    QNumber coeff(const TermKey& k) const;
    void add_term(const TermKey& k, const QNumber& c);

    SuperQExpPoly operator-() const;
    SuperQExpPoly& operator+=(const SuperQExpPoly& o);
    SuperQExpPoly& operator-=(const SuperQExpPoly& o);
    friend SuperQExpPoly operator+(SuperQExpPoly a, const SuperQExpPoly& b) { return a += b; }
    friend SuperQExpPoly operator-(SuperQExpPoly a, const SuperQExpPoly& b) { return a -= b; }
    friend SuperQExpPoly operator*(const SuperQExpPoly& a, const SuperQExpPoly& b);
    friend SuperQExpPoly operator*(const SuperQExpPoly& a, const QNumber& c);
    friend SuperQExpPoly operator*(const QNumber& c, const SuperQExpPoly& a) { return a * c; }
    friend bool operator==(const SuperQExpPoly& a, const SuperQExpPoly& b);
    friend bool operator!=(const SuperQExpPoly& a, const SuperQExpPoly& b) { return !(a == b); }

    // f(z+1) - f(z).
    SuperQExpPoly difference() const;
    // The section of the difference operator with zero constant term on the
    // order-0 parity-0 part.
    SuperQExpPoly antidifference_free() const;
    // Sum f - (Sum f)(a): vanishes at a, and equals sum_{z=a}^{b-1} f(z) at b.
    SuperQExpPoly antidifference_anchored(long a) const;

    LeadingTerm leading_term() const;
    Rational order() const;

    // Exact value at z with denominator 1 or 2; a parity term at a strict
    // half-integer raises HalfIntegerParity.
    QNumber evaluate(const Rational& z) const;
    QNumber evaluate(long z) const { return evaluate(Rational(z)); }

    // z -> f(z + k).
    SuperQExpPoly shift(long k) const;
    // z -> f((z + k) / 2); f must be parity-free.
    SuperQExpPoly half_substitute(long k) const;
    // z -> f(2 z + j); the result is parity-free.
    SuperQExpPoly restrict_parity(long j) const;
    // Multiply by the indicator 1/2 (1 + (-1)^{z+k}) of z = k mod 2.
    SuperQExpPoly times_parity_indicator(long k) const;
    // Multiply by the exponential (-1)^{s z} q^{nu z}.
    SuperQExpPoly times_character(const Rational& nu, int s) const;

    bool is_primary() const;
    bool is_parity_free() const;

    // "coef * C(z,n) * (-1)^z * q^(nu z)" terms in canonical order.
    std::string to_string(const std::string& var = "z") const;
    std::string to_json() const;

private:
    TermMap terms_;
};

// Generalized binomial coefficient C(x, n) for rational x.
Rational binomial_value(const Rational& x, int n);

}  // namespace svol
