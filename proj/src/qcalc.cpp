#include "svol/qcalc.hpp"

#include "svol/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <vector>

namespace svol {

namespace {

Rational factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

// Coefficients d_m with P(z) = sum_m d_m C(z, m), from the values P(0..N).
std::vector<Rational> newton_coefficients(std::vector<Rational> values) {
    std::vector<Rational> d;
    d.reserve(values.size());
    while (!values.empty()) {
        d.push_back(values.front());
        for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
        values.pop_back();
    }
    return d;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

}  // namespace

Rational binomial_value(const Rational& x, int n) {
    if (n < 0) return 0;
    Rational r = 1;
    for (int i = 0; i < n; ++i) r *= (x - i);
    return r / factorial(n);
}

SuperQExpPoly SuperQExpPoly::term(const QNumber& c, const Rational& nu, int n, int p) {
    SuperQExpPoly f;
    Rational v = nu;
    v.canonicalize();
    f.add_term({v, n, p & 1}, c);
    return f;
}

QNumber SuperQExpPoly::coeff(const TermKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? QNumber() : it->second;
}

void SuperQExpPoly::add_term(const TermKey& k0, const QNumber& c) {
    if (c.is_zero()) return;
    if (k0.n < 0) throw InvalidSpec("negative binomial degree");
    TermKey k = k0;
    k.nu.canonicalize();
    k.p &= 1;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

SuperQExpPoly SuperQExpPoly::operator-() const {
    SuperQExpPoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

SuperQExpPoly& SuperQExpPoly::operator+=(const SuperQExpPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

SuperQExpPoly& SuperQExpPoly::operator-=(const SuperQExpPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

SuperQExpPoly operator*(const SuperQExpPoly& a, const QNumber& c) {
    SuperQExpPoly r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : a.terms_) r.terms_.emplace(k, v * c);
    return r;
}

SuperQExpPoly operator*(const SuperQExpPoly& a, const SuperQExpPoly& b) {
    SuperQExpPoly r;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            QNumber c = ca * cb;
            Rational nu = ka.nu + kb.nu;
            int p = (ka.p + kb.p) & 1;
            int lo = std::min(ka.n, kb.n);
            // C(z,a) C(z,b) = sum_k (a+b-k)! / (k! (a-k)! (b-k)!) C(z, a+b-k)
            for (int k = 0; k <= lo; ++k) {
                Rational m = factorial(ka.n + kb.n - k) /
                             (factorial(k) * factorial(ka.n - k) * factorial(kb.n - k));
                r.add_term({nu, ka.n + kb.n - k, p}, c * QNumber(m));
            }
        }
    }
    return r;
}

bool operator==(const SuperQExpPoly& a, const SuperQExpPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (ia->first.nu != ib->first.nu || ia->first.n != ib->first.n || ia->first.p != ib->first.p)
            return false;
        if (ia->second != ib->second) return false;
    }
    return true;
}

SuperQExpPoly SuperQExpPoly::difference() const {
    SuperQExpPoly r;
    for (const auto& [k, c] : terms_) {
        // lambda = (-1)^p q^nu; Delta[C(z,n) rho] = ((lambda-1) C(z,n) + lambda C(z,n-1)) rho
        QNumber lambda = QNumber::q_pow(k.nu);
        if (k.p) lambda = -lambda;
        r.add_term(k, c * (lambda - QNumber(1)));
        if (k.n > 0) r.add_term({k.nu, k.n - 1, k.p}, c * lambda);
    }
    return r;
}

SuperQExpPoly SuperQExpPoly::antidifference_free() const {
    SuperQExpPoly r;
    // Walk each (nu, p) component from the top degree down.
    std::map<std::pair<Rational, int>, std::map<int, QNumber>> comps;
    for (const auto& [k, c] : terms_) comps[{k.nu, k.p}][k.n] = c;
    for (const auto& [np, byDeg] : comps) {
        const Rational& nu = np.first;
        int p = np.second;
        int top = byDeg.rbegin()->first;
        if (nu == 0 && p == 0) {
            for (const auto& [n, c] : byDeg) r.add_term({nu, n + 1, p}, c);
            continue;
        }
        QNumber lambda = QNumber::q_pow(nu);
        if (p) lambda = -lambda;
        QNumber inv = (lambda - QNumber(1)).inverse();
        QNumber next;  // b_{n+1}
        for (int n = top; n >= 0; --n) {
            auto it = byDeg.find(n);
            QNumber a = it == byDeg.end() ? QNumber() : it->second;
            QNumber b = (a - lambda * next) * inv;
            r.add_term({nu, n, p}, b);
            next = b;
        }
    }
    return r;
}

SuperQExpPoly SuperQExpPoly::antidifference_anchored(long a) const {
    SuperQExpPoly s = antidifference_free();
    QNumber v = s.evaluate(a);
    s.add_term({0, 0, 0}, -v);
    return s;
}

Rational SuperQExpPoly::order() const {
    if (terms_.empty()) throw ZeroPolynomial("order of the zero polynomial");
    return terms_.begin()->first.nu;
}

LeadingTerm SuperQExpPoly::leading_term() const {
    if (terms_.empty()) throw ZeroPolynomial("leading term of the zero polynomial");
    LeadingTerm lt;
    lt.ord = terms_.begin()->first.nu;
    for (const auto& [k, c] : terms_) {
        if (k.nu != lt.ord) break;
        if (k.p == 0 && k.n > lt.deg0) {
            lt.deg0 = k.n;
            lt.lead0 = c;
        }
        if (k.p == 1 && k.n > lt.deg1) {
            lt.deg1 = k.n;
            lt.lead1 = c;
        }
    }
    return lt;
}

QNumber SuperQExpPoly::evaluate(const Rational& z0) const {
    Rational z = z0;
    z.canonicalize();
    if (z.get_den() != 1 && z.get_den() != 2)
        throw InvalidSpec("evaluation point must have denominator 1 or 2");
    bool integral = is_integer(z);
    bool odd = integral && mpz_odd_p(z.get_num().get_mpz_t());
    // Group by order so that each power of q is applied once.
    QNumber total;
    auto it = terms_.begin();
    while (it != terms_.end()) {
        Rational nu = it->first.nu;
        QNumber group;
        for (; it != terms_.end() && it->first.nu == nu; ++it) {
            const auto& [k, c] = *it;
            Rational b = binomial_value(z, k.n);
            if (b == 0) continue;
            if (k.p) {
                if (!integral) throw HalfIntegerParity("(-1)^z at a half-integer");
                if (odd) b = -b;
            }
            group += c * QNumber(b);
        }
        total += group.times_q_pow(nu * z);
    }
    return total;
}

SuperQExpPoly SuperQExpPoly::shift(long k) const {
    SuperQExpPoly r;
    for (const auto& [key, c] : terms_) {
        QNumber base = c.times_q_pow(key.nu * k);
        if (key.p && (k % 2 != 0)) base = -base;
        // Vandermonde: C(z+k, n) = sum_m C(k, n-m) C(z, m)
        for (int m = 0; m <= key.n; ++m) {
            Rational w = binomial_value(Rational(k), key.n - m);
            if (w != 0) r.add_term({key.nu, m, key.p}, base * QNumber(w));
        }
    }
    return r;
}

SuperQExpPoly SuperQExpPoly::half_substitute(long k) const {
    SuperQExpPoly r;
    for (const auto& [key, c] : terms_) {
        if (key.p) throw HalfIntegerParity("half substitution of a parity term");
        std::vector<Rational> values;
        for (int j = 0; j <= key.n; ++j) values.push_back(binomial_value(frac(j + k, 2), key.n));
        auto d = newton_coefficients(values);
        QNumber base = c.times_q_pow(key.nu * frac(k, 2));
        Rational nu = key.nu / 2;
        for (std::size_t m = 0; m < d.size(); ++m)
            if (d[m] != 0) r.add_term({nu, static_cast<int>(m), 0}, base * QNumber(d[m]));
    }
    return r;
}

SuperQExpPoly SuperQExpPoly::restrict_parity(long j) const {
    SuperQExpPoly r;
    for (const auto& [key, c] : terms_) {
        std::vector<Rational> values;
        for (int z = 0; z <= key.n; ++z) values.push_back(binomial_value(Rational(2 * z + j), key.n));
        auto d = newton_coefficients(values);
        QNumber base = c.times_q_pow(key.nu * j);
        if (key.p && (j % 2 != 0)) base = -base;
        Rational nu = key.nu * 2;
        for (std::size_t m = 0; m < d.size(); ++m)
            if (d[m] != 0) r.add_term({nu, static_cast<int>(m), 0}, base * QNumber(d[m]));
    }
    return r;
}

SuperQExpPoly SuperQExpPoly::times_parity_indicator(long k) const {
    SuperQExpPoly half = term(frac(1, 2), 0);
    half.add_term({0, 0, 1}, QNumber(frac((k % 2 == 0) ? 1 : -1, 2)));
    return *this * half;
}

SuperQExpPoly SuperQExpPoly::times_character(const Rational& nu, int s) const {
    SuperQExpPoly r;
    for (const auto& [k, c] : terms_) r.add_term({k.nu + nu, k.n, (k.p + s) & 1}, c);
    return r;
}

bool SuperQExpPoly::is_primary() const {
    for (const auto& [k, c] : terms_)
        if (!is_integer(k.nu) || !c.is_primary()) return false;
    return true;
}

bool SuperQExpPoly::is_parity_free() const {
    for (const auto& [k, c] : terms_)
        if (k.p) return false;
    return true;
}

std::string SuperQExpPoly::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += "(" + c.to_string() + ")";
        if (k.n > 0) out += " * C(" + var + "," + std::to_string(k.n) + ")";
        if (k.p) out += " * (-1)^" + var;
        if (k.nu != 0) {
            if (k.nu == 1)
                out += " * q^(" + var + ")";
            else
                out += " * q^(" + k.nu.get_str() + " " + var + ")";
        }
    }
    return out;
}

std::string SuperQExpPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, c] : terms_) {
        arr.push_back({{"order", k.nu.get_str()},
                       {"degree", k.n},
                       {"parity", k.p},
                       {"coeff", nlohmann::json::parse(c.to_json())}});
    }
    return arr.dump();
}

}  // namespace svol
