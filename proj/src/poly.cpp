#include "svol/poly.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace svol {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    for (auto& x : c_) x.canonicalize();
    trim();
}

Poly::Poly(const Rational& c) {
    if (c != 0) {
        c_.push_back(c);
        c_.back().canonicalize();
    }
}

Poly Poly::monomial(const Rational& c, std::size_t exp) {
    Poly p;
    if (c == 0) return p;
    p.c_.assign(exp + 1, Rational(0));
    p.c_[exp] = c;
    p.c_[exp].canonicalize();
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t Poly::low_degree() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return i;
    return 0;
}

std::size_t Poly::exponent_gcd() const {
    std::size_t g = 0;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) g = std::gcd(g, i);
    return g;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            r[i + j] += a.c_[i] * b.c_[j];
        }
    }
    Poly p;
    p.c_ = std::move(r);
    p.trim();
    return p;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < d.degree()) return {Poly(), *this};
    std::vector<Rational> rem = c_;
    std::vector<Rational> quo(c_.size() - d.c_.size() + 1, Rational(0));
    const Rational inv = 1 / d.leading();
    const std::size_t dd = d.c_.size() - 1;
    for (std::size_t k = quo.size(); k-- > 0;) {
        Rational f = rem[k + dd] * inv;
        if (f == 0) continue;
        quo[k] = f;
        for (std::size_t j = 0; j <= dd; ++j)
            if (d.c_[j] != 0) rem[k + j] -= f * d.c_[j];
    }
    Poly q, r;
    q.c_ = std::move(quo);
    q.trim();
    r.c_ = std::move(rem);
    r.trim();
    return {q, r};
}

Poly Poly::exact_div(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
}

Poly Poly::monic() const {
    if (is_zero() || leading() == 1) return *this;
    Poly r = *this;
    r *= Rational(1) / leading();
    return r;
}

Poly Poly::compress(std::size_t k) const {
    if (k <= 1 || is_zero()) return *this;
    Poly r;
    r.c_.assign((c_.size() - 1) / k + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) r.c_[i / k] = c_[i];
    return r;
}

Poly Poly::stretch(std::size_t k) const {
    if (k <= 1 || is_zero()) return *this;
    Poly r;
    r.c_.assign((c_.size() - 1) * k + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
    return r;
}

Poly Poly::shift_down(std::size_t k) const {
    if (k == 0 || is_zero()) return *this;
    Poly r;
    r.c_.assign(c_.begin() + static_cast<long>(k), c_.end());
    return r;
}

Poly Poly::shift_up(std::size_t k) const {
    if (k == 0 || is_zero()) return *this;
    Poly r;
    r.c_.assign(k, Rational(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

double Poly::eval(double x) const {
    return static_cast<double>(eval(static_cast<long double>(x)));
}

long double Poly::eval(long double x) const {
    long double acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + static_cast<long double>(c_[i].get_d());
    return acc;
}

std::string render_power(const std::string& var, const Rational& e) {
    if (e == 0) return "1";
    if (e == 1) return var;
    std::ostringstream os;
    if (e.get_den() == 1 && e > 0) {
        os << var << "^" << e.get_num().get_str();
    } else {
        os << var << "^{" << e.get_str() << "}";
    }
    return os.str();
}

std::string Poly::to_string(const std::string& var, long level) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        Rational e(static_cast<long>(i), level);
        e.canonicalize();
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << render_power(var, e);
        }
    }
    return os.str();
}

Poly gcd(const Poly& a0, const Poly& b0) {
    if (a0.is_zero()) return b0.monic();
    if (b0.is_zero()) return a0.monic();
    if (a0.is_constant() || b0.is_constant()) return Poly(1);
    // Pull out the common power of u first; it is by far the most frequent factor.
    std::size_t la = a0.low_degree(), lb = b0.low_degree();
    std::size_t common = std::min(la, lb);
    Poly a = a0.shift_down(la).monic();
    Poly b = b0.shift_down(lb).monic();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.is_constant()) {
            a = Poly(1);
            break;
        }
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic().shift_up(common);
}

}  // namespace svol
