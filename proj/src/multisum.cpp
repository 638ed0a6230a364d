#include "svol/multisum.hpp"

#include "svol/errors.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace svol {

namespace {

int popcount(unsigned x) { return __builtin_popcount(x); }

// sum_e count_e q^e as a q-number.
QNumber from_exponent_counts(const std::map<Rational, Integer>& counts) {
    if (counts.empty()) return QNumber();
    long level = 1;
    Rational lo = counts.begin()->first;
    for (const auto& [e, c] : counts) level = std::lcm(level, e.get_den().get_si());
    std::vector<Rational> coeffs;
    Rational shift = lo < 0 ? lo : Rational(0);
    for (const auto& [e, c] : counts) {
        long k = Rational((e - shift) * level).get_num().get_si();
        if (coeffs.size() <= static_cast<std::size_t>(k)) coeffs.resize(static_cast<std::size_t>(k) + 1, Rational(0));
        coeffs[static_cast<std::size_t>(k)] += Rational(c);
    }
    long s = Rational(-shift * level).get_num().get_si();
    return QNumber::from_polys(Poly(coeffs), Poly::monomial(1, static_cast<std::size_t>(s)), level);
}

QNumber qpow_minus_one(const Rational& e) { return QNumber::q_pow(e) - QNumber(1); }

}  // namespace

bool SummationSpec::balanced() const {
    for (int x : w)
        if (x != 1) return false;
    return true;
}

bool SummationSpec::parity_free() const {
    for (const auto& x : e)
        if (x != 0) return false;
    return true;
}

int SummationSpec::weight_sum() const { return std::accumulate(w.begin(), w.end(), 0); }

void SummationSpec::validate() const {
    if (mu.empty()) throw InvalidSpec("a summation needs at least one variable");
    if (w.size() != mu.size()) throw InvalidSpec("weights and slopes differ in length");
    for (int x : w)
        if (x != 1 && x != 2) throw InvalidSpec("weights must be 1 or 2");
    for (const auto& m : mu)
        if (m < 0) throw InvalidSpec("slopes must be nonnegative");
    if (!e.empty() && e.size() != (std::size_t{1} << mu.size()))
        throw InvalidSpec("parity table must have 2^t entries");
}

std::string SummationSpec::to_string() const {
    std::ostringstream os;
    os << "w=(";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ") mu=(";
    for (std::size_t i = 0; i < mu.size(); ++i) os << (i ? "," : "") << mu[i].get_str();
    os << ") e=[";
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i].get_str();
    os << "]";
    return os.str();
}

ParityWeights weights_from_exponents(const SummationSpec& spec) {
    ParityWeights W(std::size_t{1} << spec.t());
    for (unsigned m = 0; m < W.size(); ++m) W[m] = QNumber::q_pow(spec.e_at(m));
    return W;
}

QNumber brute_force(const std::vector<int>& w, const std::vector<Rational>& mu,
                    const ParityWeights& weights, long z) {
    const int t = static_cast<int>(mu.size());
    std::vector<std::map<Rational, Integer>> byMask(std::size_t{1} << t);
    std::vector<long> c(static_cast<std::size_t>(t), 0);
    // Depth-first over c_0..c_{t-1} with the remaining budget.
    auto rec = [&](auto&& self, int i, long remaining, Rational expo, unsigned mask) -> void {
        if (i == t) {
            if (remaining == 0) byMask[mask][expo] += 1;
            return;
        }
        long minRest = 0;
        for (int j = i + 1; j < t; ++j) minRest += w[static_cast<std::size_t>(j)];
        for (long ci = 1; w[static_cast<std::size_t>(i)] * ci + minRest <= remaining; ++ci) {
            unsigned m = (ci & 1) ? (mask | (1u << i)) : mask;
            self(self, i + 1, remaining - w[static_cast<std::size_t>(i)] * ci,
                 expo + mu[static_cast<std::size_t>(i)] * ci, m);
        }
    };
    if (z >= 0) rec(rec, 0, z, Rational(0), 0u);
    QNumber total;
    for (unsigned m = 0; m < byMask.size(); ++m) {
        if (byMask[m].empty() || weights[m].is_zero()) continue;
        total += weights[m] * from_exponent_counts(byMask[m]);
    }
    return total;
}

QNumber brute_force(const SummationSpec& spec, long z) {
    spec.validate();
    return brute_force(spec.w, spec.mu, weights_from_exponents(spec), z);
}

SuperQExpPoly balanced_twisted(const std::vector<Rational>& mu, const std::vector<int>& s) {
    if (mu.empty()) throw InvalidSpec("a summation needs at least one variable");
    // T_1(z) = g_1(z); T_k(z) = g_k(z) * sum_{m=k-1}^{z-1} T_{k-1}(m) g_k(m)^{-1},
    // with g_i(z) = (-1)^{s_i z} q^{mu_i z}.
    SuperQExpPoly T = SuperQExpPoly::term(1, mu[0], 0, s[0] & 1);
    for (std::size_t k = 1; k < mu.size(); ++k) {
        SuperQExpPoly inner = T.times_character(-mu[k], s[k] & 1);
        T = inner.antidifference_anchored(static_cast<long>(k)).times_character(mu[k], s[k] & 1);
    }
    return T;
}

SuperQExpPoly balanced_with_weights(const std::vector<Rational>& mu, const ParityWeights& weights) {
    const int t = static_cast<int>(mu.size());
    const unsigned n = 1u << t;
    if (weights.size() != n) throw InvalidSpec("parity weights must have 2^t entries");
    SuperQExpPoly total;
    QNumber scale(frac(1, static_cast<long>(n)));
    for (unsigned S = 0; S < n; ++S) {
        // hat W(S) = 2^{-t} sum_s W(s) (-1)^{S.s}
        QNumber hat;
        for (unsigned s = 0; s < n; ++s) {
            if (weights[s].is_zero()) continue;
            if (popcount(S & s) & 1)
                hat -= weights[s];
            else
                hat += weights[s];
        }
        if (hat.is_zero()) continue;
        std::vector<int> signs(static_cast<std::size_t>(t));
        for (int i = 0; i < t; ++i) signs[static_cast<std::size_t>(i)] = (S >> i) & 1;
        total += balanced_twisted(mu, signs) * (hat * scale);
    }
    return total;
}

SuperQExpPoly weighted_with_weights(const std::vector<int>& w, const std::vector<Rational>& mu,
                                    const ParityWeights& weights) {
    const int t = static_cast<int>(mu.size());
    std::vector<int> i1, i2;
    for (int i = 0; i < t; ++i) (w[static_cast<std::size_t>(i)] == 1 ? i1 : i2).push_back(i);
    unsigned mask2 = 0;
    for (int i : i2) mask2 |= 1u << i;
    for (unsigned m = 0; m < weights.size(); ++m)
        if (weights[m] != weights[m & ~mask2])
            throw UnrepresentableParity(
                "the parity table depends on a weight-2 residue; the sum is periodic mod 4");
    // Write each weight-1 variable as c = 2d - s with d >= 1 and s in {0,1}.  Then
    // S(z) = sum_s W(s) q^{-mu_1.s} [z = |s| mod 2] S'((z + |s|)/2), where S' is the
    // balanced parity-free sum with slopes (2 mu_1, mu_2).
    std::vector<Rational> muPrime;
    for (int i : i1) muPrime.push_back(2 * mu[static_cast<std::size_t>(i)]);
    for (int i : i2) muPrime.push_back(mu[static_cast<std::size_t>(i)]);
    SuperQExpPoly Sprime = balanced_twisted(muPrime, std::vector<int>(muPrime.size(), 0));
    const int a = static_cast<int>(i1.size());
    std::vector<QNumber> byWeight(static_cast<std::size_t>(a) + 1);
    for (unsigned s = 0; s < (1u << a); ++s) {
        unsigned mask = 0;
        Rational expo = 0;
        for (int j = 0; j < a; ++j) {
            if ((s >> j) & 1) {
                mask |= 1u << i1[static_cast<std::size_t>(j)];
                expo -= mu[static_cast<std::size_t>(i1[static_cast<std::size_t>(j)])];
            }
        }
        if (weights[mask].is_zero()) continue;
        byWeight[static_cast<std::size_t>(popcount(s))] += weights[mask].times_q_pow(expo);
    }
    SuperQExpPoly total;
    for (int k = 0; k <= a; ++k) {
        if (byWeight[static_cast<std::size_t>(k)].is_zero()) continue;
        total += Sprime.half_substitute(k).times_parity_indicator(k) * byWeight[static_cast<std::size_t>(k)];
    }
    return total;
}

SuperQExpPoly closed_form_balanced(const SummationSpec& spec) {
    spec.validate();
    if (!spec.balanced() || !spec.parity_free())
        throw InvalidSpec("closed_form_balanced needs w == 1 and e == 0");
    return balanced_twisted(spec.mu, std::vector<int>(spec.mu.size(), 0));
}

SuperQExpPoly closed_form_parity(const SummationSpec& spec) {
    spec.validate();
    if (!spec.balanced()) throw InvalidSpec("closed_form_parity needs w == 1");
    if (spec.parity_free()) return closed_form_balanced(spec);
    return balanced_with_weights(spec.mu, weights_from_exponents(spec));
}

SuperQExpPoly closed_form_weighted(const SummationSpec& spec) {
    spec.validate();
    return weighted_with_weights(spec.w, spec.mu, weights_from_exponents(spec));
}

SuperQExpPoly closed_form(const SummationSpec& spec) {
    spec.validate();
    if (spec.balanced()) return closed_form_parity(spec);
    return closed_form_weighted(spec);
}

LeadingDisplay display_balanced(const SummationSpec& spec) {
    spec.validate();
    LeadingDisplay d;
    d.lemma = "balanced";
    Rational mx = *std::max_element(spec.mu.begin(), spec.mu.end());
    int cnt = 0;
    QNumber c = 1;
    for (const auto& m : spec.mu) {
        if (m == mx)
            ++cnt;
        else
            c /= qpow_minus_one(mx - m);
    }
    d.ord = mx;
    d.degree = cnt - 1;
    d.c0 = c;
    return d;
}

LeadingDisplay display_parity(const SummationSpec& spec) {
    spec.validate();
    LeadingDisplay d;
    d.lemma = "parity";
    const int t = spec.t();
    Rational mx = *std::max_element(spec.mu.begin(), spec.mu.end());
    int cnt = 0;
    QNumber cmu(Rational(1));
    for (const auto& m : spec.mu) {
        if (m == mx)
            ++cnt;
        else
            cmu /= qpow_minus_one(2 * (mx - m));
    }
    cmu *= QNumber(frac(1, 1L << cnt));
    QNumber s0, s1;
    for (unsigned s = 0; s < (1u << t); ++s) {
        Rational expo = spec.e_at(s);
        for (int i = 0; i < t; ++i)
            if ((s >> i) & 1) expo += mx - spec.mu[static_cast<std::size_t>(i)];
        QNumber v = QNumber::q_pow(expo);
        s0 += v;
        if (popcount(s) & 1)
            s1 -= v;
        else
            s1 += v;
    }
    d.ord = mx;
    d.degree = cnt - 1;
    d.c0 = cmu * s0;
    d.c1 = cmu * s1;
    return d;
}

LeadingDisplay display_weighted(const SummationSpec& spec) {
    spec.validate();
    if (!spec.parity_free()) throw InvalidSpec("the weighted display assumes e == 0");
    LeadingDisplay d;
    std::vector<Rational> mu1, mu2;
    for (int i = 0; i < spec.t(); ++i)
        (spec.w[static_cast<std::size_t>(i)] == 1 ? mu1 : mu2).push_back(spec.mu[static_cast<std::size_t>(i)]);
    std::optional<Rational> m1, m2;
    if (!mu1.empty()) m1 = *std::max_element(mu1.begin(), mu1.end());
    if (!mu2.empty()) m2 = *std::max_element(mu2.begin(), mu2.end());
    auto count = [](const std::vector<Rational>& v, const std::optional<Rational>& m) {
        int c = 0;
        for (const auto& x : v)
            if (m && x == *m) ++c;
        return c;
    };
    const int n1max = count(mu1, m1), n2max = count(mu2, m2);
    // sum over s in F_2^{i1 \ i1max} of q^{(mu1max - mu).s} = prod (1 + q^{mu1max - mu_i})
    auto sumOffMax1 = [&]() {
        QNumber s(1);
        for (const auto& x : mu1)
            if (x != *m1) s *= QNumber(1) + QNumber::q_pow(*m1 - x);
        return s;
    };
    if (m1 && (!m2 || 2 * *m1 > *m2)) {
        d.lemma = "weighted (2 mu1max > mu2max)";
        QNumber c(1);
        for (const auto& x : mu1)
            if (x != *m1) c /= qpow_minus_one(2 * *m1 - 2 * x);
        for (const auto& x : mu2) c /= qpow_minus_one(2 * *m1 - x);
        d.ord = *m1;
        d.degree = n1max - 1;
        d.c0 = c * sumOffMax1();
    } else if (!m1 || 2 * *m1 < *m2) {
        d.lemma = "weighted (2 mu1max < mu2max)";
        QNumber c(frac(1, 1L << n2max));
        for (const auto& x : mu1) c /= qpow_minus_one(*m2 - 2 * x);
        for (const auto& x : mu2)
            if (x != *m2) c /= qpow_minus_one(*m2 - x);
        QNumber s0(1), s1(1);
        for (const auto& x : mu1) {
            QNumber v = QNumber::q_pow(*m2 / 2 - x);
            s0 *= QNumber(1) + v;
            s1 *= QNumber(1) - v;
        }
        d.ord = *m2 / 2;
        d.degree = n2max - 1;
        d.c0 = c * s0;
        d.c1 = c * s1;
    } else {
        d.lemma = "weighted (2 mu1max = mu2max)";
        QNumber c(frac(1, 1L << n2max));
        for (const auto& x : mu1)
            if (x != *m1) c /= qpow_minus_one(2 * *m1 - 2 * x);
        for (const auto& x : mu2)
            if (x != *m2) c /= qpow_minus_one(2 * *m1 - x);
        d.ord = *m1;
        d.degree = n1max + n2max - 1;
        d.c0 = c * sumOffMax1();
    }
    return d;
}

std::optional<LeadingDisplay> display_for(const SummationSpec& spec) {
    if (spec.balanced()) {
        if (spec.parity_free()) return display_balanced(spec);
        return display_parity(spec);
    }
    if (spec.parity_free()) return display_weighted(spec);
    return std::nullopt;
}

bool leading_matches(const SuperQExpPoly& f, const LeadingDisplay& d) {
    if (f.is_zero()) return false;
    LeadingTerm lt = f.leading_term();
    if (lt.ord != d.ord || lt.deg0 != d.degree || lt.lead0 != d.c0) return false;
    if (d.c1.is_zero()) return lt.deg1 < d.degree;
    return lt.deg1 == d.degree && lt.lead1 == d.c1;
}

}  // namespace svol
