#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace svol {

using Rational = mpq_class;
using Integer = mpz_class;

// a/b in lowest terms; the two-argument mpq_class constructor does not reduce.
inline Rational frac(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

// Dense univariate polynomial with exact rational coefficients.
// Coefficient i multiplies u^i; the vector is kept trimmed so that the
// leading coefficient is nonzero (the zero polynomial is the empty vector).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(const Rational& c);  // NOLINT: constants convert implicitly
    Poly(long c) : Poly(Rational(c)) {}
    Poly(int c) : Poly(Rational(c)) {}

    static Poly monomial(const Rational& c, std::size_t exp);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    // Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Rational& leading() const { return c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    // Smallest exponent with a nonzero coefficient (0 for the zero polynomial).
    std::size_t low_degree() const;
    // gcd of all exponents carrying a nonzero coefficient (0 if only u^0 or zero).
    std::size_t exponent_gcd() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division; throws std::domain_error on a zero divisor.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    // Exact division; throws std::domain_error if the remainder is nonzero.
    Poly exact_div(const Poly& d) const;
    Poly monic() const;
    // Divide every exponent by k (caller guarantees divisibility).
    Poly compress(std::size_t k) const;
    // Multiply every exponent by k, i.e. substitute u -> u^k.
    Poly stretch(std::size_t k) const;
    // Divide by u^k (caller guarantees divisibility).
    Poly shift_down(std::size_t k) const;
    Poly shift_up(std::size_t k) const;

    Rational eval(const Rational& x) const;
    double eval(double x) const;
    long double eval(long double x) const;

    // Descending-power rendering in the variable `var`, with exponents scaled
    // by 1/level (so level 2 renders u^3 as q^{3/2}).
    std::string to_string(const std::string& var = "q", long level = 1) const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Monic gcd (gcd(0, 0) = 0).
Poly gcd(const Poly& a, const Poly& b);

// Render a rational exponent e as used in canonical output: "q", "q^2", "q^{5/2}".
std::string render_power(const std::string& var, const Rational& e);

}  // namespace svol
