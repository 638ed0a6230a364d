#include "svol/qnum.hpp"

#include "svol/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <numeric>

namespace svol {

namespace {

long lcm_level(long a, long b) { return std::lcm(a, b); }

}  // namespace

QNumber QNumber::from_polys(Poly num, Poly den, long level) {
    if (den.is_zero()) throw DivisionByZeroQNumber("zero denominator");
    if (level < 1) throw InvalidSpec("q-number level must be positive");
    QNumber r;
    if (num.is_zero()) return r;
    if (!den.is_constant()) {
        Poly g = gcd(num, den);
        if (!g.is_one()) {
            num = num.exact_div(g);
            den = den.exact_div(g);
        }
    }
    if (den.leading() != 1) {
        Rational s = 1 / den.leading();
        num *= s;
        den *= s;
    }
    std::size_t g = static_cast<std::size_t>(level);
    g = std::gcd(g, num.exponent_gcd());
    g = std::gcd(g, den.exponent_gcd());
    if (g > 1) {
        num = num.compress(g);
        den = den.compress(g);
        level /= static_cast<long>(g);
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.level_ = level;
    return r;
}

QNumber QNumber::q_pow(const Rational& e0) {
    Rational e = e0;
    e.canonicalize();
    long level = e.get_den().get_si();
    long k = e.get_num().get_si();
    QNumber r;
    r.level_ = level;
    if (k >= 0) {
        r.num_ = Poly::monomial(1, static_cast<std::size_t>(k));
        r.den_ = Poly(1);
    } else {
        r.num_ = Poly(1);
        r.den_ = Poly::monomial(1, static_cast<std::size_t>(-k));
    }
    return r;
}

QNumber QNumber::qbracket(long m) {
    if (m < 0) throw InvalidSpec("[m](q) needs m >= 0");
    std::vector<Rational> c(static_cast<std::size_t>(m), Rational(1));
    return polynomial(c);
}

QNumber QNumber::polynomial(const std::vector<Rational>& coeffs) {
    return from_polys(Poly(coeffs), Poly(1), 1);
}

bool QNumber::is_laurent() const {
    return den_.coeffs().size() >= 1 && den_.low_degree() == static_cast<std::size_t>(den_.degree());
}

QNumber::Lifted QNumber::lift(long h) const {
    if (h % level_ != 0) throw InvalidSpec("lift target level must be a multiple of the level");
    std::size_t k = static_cast<std::size_t>(h / level_);
    return {h, num_.stretch(k), den_.stretch(k)};
}

QNumber QNumber::operator-() const {
    QNumber r = *this;
    r.num_ = -r.num_;
    return r;
}

QNumber QNumber::inverse() const {
    if (is_zero()) throw DivisionByZeroQNumber("inverse of zero");
    QNumber r;
    Rational s = 1 / num_.leading();
    r.num_ = den_ * s;
    r.den_ = num_ * s;
    r.level_ = level_;
    return r;
}

QNumber QNumber::times_q_pow(const Rational& e0) const {
    if (is_zero() || e0 == 0) return *this;
    Rational e = e0;
    e.canonicalize();
    long h = lcm_level(level_, e.get_den().get_si());
    auto l = lift(h);
    long k = Rational(e * h).get_num().get_si();
    if (k >= 0)
        l.num = l.num.shift_up(static_cast<std::size_t>(k));
    else
        l.den = l.den.shift_up(static_cast<std::size_t>(-k));
    std::size_t common = std::min(l.num.low_degree(), l.den.low_degree());
    l.num = l.num.shift_down(common);
    l.den = l.den.shift_down(common);
    QNumber r;
    r.num_ = std::move(l.num);
    r.den_ = std::move(l.den);
    r.level_ = h;
    std::size_t gl = std::gcd(std::gcd(static_cast<std::size_t>(h), r.num_.exponent_gcd()),
                              r.den_.exponent_gcd());
    if (gl > 1) {
        r.num_ = r.num_.compress(gl);
        r.den_ = r.den_.compress(gl);
        r.level_ = h / static_cast<long>(gl);
    }
    return r;
}

QNumber QNumber::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QNumber result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

QNumber operator+(const QNumber& a, const QNumber& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long h = lcm_level(a.level_, b.level_);
    auto la = a.lift(h), lb = b.lift(h);
    if (la.den == lb.den) return QNumber::from_polys(la.num + lb.num, la.den, h);
    if (la.den.is_one()) return QNumber::from_polys(la.num * lb.den + lb.num, lb.den, h);
    if (lb.den.is_one()) return QNumber::from_polys(la.num + lb.num * la.den, la.den, h);
    Poly g = gcd(la.den, lb.den);
    Poly da = la.den.exact_div(g), db = lb.den.exact_div(g);
    return QNumber::from_polys(la.num * db + lb.num * da, la.den * db, h);
}

QNumber operator-(const QNumber& a, const QNumber& b) { return a + (-b); }

QNumber operator*(const QNumber& a, const QNumber& b) {
    if (a.is_zero() || b.is_zero()) return QNumber();
    if (a.is_rational()) {
        QNumber r = b;
        r.num_ *= a.rational_value();
        return r;
    }
    if (b.is_rational()) {
        QNumber r = a;
        r.num_ *= b.rational_value();
        return r;
    }
    long h = lcm_level(a.level_, b.level_);
    auto la = a.lift(h), lb = b.lift(h);
    // Cross-cancel so the product of the reduced pieces is already reduced.
    Poly g1 = gcd(la.num, lb.den), g2 = gcd(lb.num, la.den);
    Poly n1 = g1.is_one() ? la.num : la.num.exact_div(g1);
    Poly d2 = g1.is_one() ? lb.den : lb.den.exact_div(g1);
    Poly n2 = g2.is_one() ? lb.num : lb.num.exact_div(g2);
    Poly d1 = g2.is_one() ? la.den : la.den.exact_div(g2);
    Poly num = n1 * n2, den = d1 * d2;
    Rational s = 1 / den.leading();
    num *= s;
    den *= s;
    // Reduced already; only the level may drop.
    QNumber r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.level_ = h;
    std::size_t gl = std::gcd(std::gcd(static_cast<std::size_t>(h), r.num_.exponent_gcd()),
                              r.den_.exponent_gcd());
    if (gl > 1) {
        r.num_ = r.num_.compress(gl);
        r.den_ = r.den_.compress(gl);
        r.level_ = h / static_cast<long>(gl);
    }
    return r;
}

QNumber operator/(const QNumber& a, const QNumber& b) {
    if (b.is_zero()) throw DivisionByZeroQNumber("division by the zero q-number");
    return a * b.inverse();
}

long double QNumber::evaluate(long double q0) const {
    if (!(q0 > 1)) throw InvalidSpec("evaluation needs q0 > 1");
    long double u = std::pow(q0, 1.0L / static_cast<long double>(level_));
    long double d = den_.eval(u);
    if (d == 0) throw PoleAtSample("denominator vanishes at the sample point");
    return num_.eval(u) / d;
}

Rational QNumber::evaluate_exact(const Rational& q0) const {
    Rational u = q0;
    if (level_ != 1) {
        // Accept perfect powers only.
        Integer n = q0.get_num(), d = q0.get_den(), rn, rd;
        if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(level_)) ||
            !mpz_root(rd.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(level_)))
            throw InvalidSpec("exact evaluation at a non-perfect power needs a primary q-number");
        u = Rational(rn, rd);
    }
    Rational d = den_.eval(u);
    if (d == 0) throw PoleAtSample("denominator vanishes at the sample point");
    return num_.eval(u) / d;
}

std::string QNumber::to_string() const {
    std::string n = num_.to_string("q", level_);
    if (den_.is_one()) return n;
    std::string d = den_.to_string("q", level_);
    bool num_compound = num_.coeffs().size() > 1 && num_.low_degree() != static_cast<std::size_t>(num_.degree());
    bool den_compound = den_.low_degree() != static_cast<std::size_t>(den_.degree());
    if (num_compound) n = "(" + n + ")";
    if (den_compound) d = "(" + d + ")";
    return n + " / " + d;
}

std::string QNumber::to_json() const {
    auto terms = [this](const Poly& p) {
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t i = p.coeffs().size(); i-- > 0;) {
            if (p.coeffs()[i] == 0) continue;
            Rational e(static_cast<long>(i), level_);
            e.canonicalize();
            arr.push_back({e.get_str(), p.coeffs()[i].get_str()});
        }
        return arr;
    };
    nlohmann::json j;
    j["level"] = level_;
    j["num"] = terms(num_);
    j["den"] = terms(den_);
    return j.dump();
}

ParityQNumber ParityQNumber::from_samples(const QNumber& value_even, const QNumber& value_odd) {
    QNumber half(frac(1, 2));
    return {(value_even + value_odd) * half, (value_even - value_odd) * half};
}

std::string ParityQNumber::to_string() const {
    if (b_.is_zero()) return a_.to_string();
    return "(" + a_.to_string() + ") + (" + b_.to_string() + ")*(-1)^r";
}

}  // namespace svol
