#pragma once

#include "svol/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace svol {

// A q-number: a rational function of u = q^{1/h} with rational coefficients.
// Values are always canonical: num/den coprime, den monic, and the level h is
// the smallest one at which the value can be written.  Canonical values at
// different levels are therefore never equal, which makes == structural.
class QNumber {
public:
    QNumber() : num_(), den_(1), level_(1) {}
    QNumber(const Rational& c) : num_(c), den_(1), level_(1) {}  // NOLINT
    QNumber(long c) : QNumber(Rational(c)) {}                    // NOLINT
    QNumber(int c) : QNumber(Rational(c)) {}                     // NOLINT

    // Build from a numerator and denominator in u = q^{1/level}; reduces the
    // fraction and drops to the smallest admissible level.
    static QNumber from_polys(Poly num, Poly den, long level = 1);
    // q^e for a rational exponent e.
    static QNumber q_pow(const Rational& e);
    static QNumber q() { return q_pow(1); }
    // [m](q) = 1 + q + ... + q^{m-1}.
    static QNumber qbracket(long m);
    // The polynomial sum_i coeffs[i] * q^i.
    static QNumber polynomial(const std::vector<Rational>& coeffs);

    long level() const { return level_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return level_ == 1 && den_.is_one() && num_.is_one(); }
    // Level one after canonicalization.
    bool is_primary() const { return level_ == 1; }
    // True if the value is a Laurent polynomial in u, i.e. den is a power of u.
    bool is_laurent() const;
    // Constant rational value, if the number is a constant.
    bool is_rational() const { return den_.is_one() && num_.is_constant(); }
    Rational rational_value() const { return num_.coeff(0); }

    // Representation at level h (a multiple of level()); the pair is not
    // re-canonicalized, so the level is exactly h.
    struct Lifted {
        long level;
        Poly num;
        Poly den;
    };
    Lifted lift(long h) const;
    static QNumber canonicalize(const Lifted& l) { return from_polys(l.num, l.den, l.level); }

    QNumber operator-() const;
    QNumber inverse() const;
    // Multiply by q^e without a general gcd (only powers of u can cancel).
    QNumber times_q_pow(const Rational& e) const;
    QNumber pow(long e) const;

    friend QNumber operator+(const QNumber& a, const QNumber& b);
    friend QNumber operator-(const QNumber& a, const QNumber& b);
    friend QNumber operator*(const QNumber& a, const QNumber& b);
    friend QNumber operator/(const QNumber& a, const QNumber& b);
    QNumber& operator+=(const QNumber& o) { return *this = *this + o; }
    QNumber& operator-=(const QNumber& o) { return *this = *this - o; }
    QNumber& operator*=(const QNumber& o) { return *this = *this * o; }
    QNumber& operator/=(const QNumber& o) { return *this = *this / o; }
    friend bool operator==(const QNumber& a, const QNumber& b) {
        return a.level_ == b.level_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QNumber& a, const QNumber& b) { return !(a == b); }

    // Real value at q = q0 > 1 on the positive branch of q0^{1/h}.
    long double evaluate(long double q0) const;
    // Exact value at a rational q0; requires q0^{1/h} to be rational, which the
    // implementation only guarantees for level-one numbers or perfect powers.
    Rational evaluate_exact(const Rational& q0) const;

    // Canonical "num / den" text with descending exponents such as q^{5/2}.
    std::string to_string() const;
    // JSON form {level, num:[[exp, coeff]...], den:[...]} with exponents in q.
    std::string to_json() const;

private:
    Poly num_;
    Poly den_;
    long level_;
};

// a + b (-1)^z with q-number coefficients.
class ParityQNumber {
public:
    ParityQNumber() = default;
    ParityQNumber(QNumber even_coeff, QNumber odd_coeff)
        : a_(std::move(even_coeff)), b_(std::move(odd_coeff)) {}
    // From the values at even and at odd arguments.
    static ParityQNumber from_samples(const QNumber& value_even, const QNumber& value_odd);

    const QNumber& even_coeff() const { return a_; }
    const QNumber& odd_coeff() const { return b_; }
    QNumber value_at(long z) const { return (z % 2 == 0) ? a_ + b_ : a_ - b_; }
    QNumber value_even() const { return a_ + b_; }
    QNumber value_odd() const { return a_ - b_; }
    bool is_constant() const { return b_.is_zero(); }

    friend ParityQNumber operator+(const ParityQNumber& x, const ParityQNumber& y) {
        return {x.a_ + y.a_, x.b_ + y.b_};
    }
    friend ParityQNumber operator*(const ParityQNumber& x, const ParityQNumber& y) {
        return {x.a_ * y.a_ + x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
    }
    friend bool operator==(const ParityQNumber& x, const ParityQNumber& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    std::string to_string() const;

private:
    QNumber a_;
    QNumber b_;
};

}  // namespace svol
