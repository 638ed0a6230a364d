#include "svol/volume.hpp"

#include "svol/errors.hpp"

#include <algorithm>
#include <map>

namespace svol {

std::string variant_name(Variant v) { return v == Variant::All ? "all" : "special"; }

TypeWeights TypeWeights::of(const ClassicalRootSystem& sys) {
    TypeWeights tw;
    const unsigned count = 1u << sys.rank();
    tw.poly.resize(count);
    tw.degree.resize(count);
    for (unsigned m = 0; m < count; ++m) {
        auto pp = poincare_parabolic(sys, TypeSubset{sys.rank(), m});
        tw.poly[m] = pp.poly;
        tw.degree[m] = pp.degree;
    }
    return tw;
}

namespace {

QNumber q_power_series(const std::map<long, long>& counts) {
    if (counts.empty()) return QNumber();
    std::vector<Rational> c(static_cast<std::size_t>(counts.rbegin()->first) + 1, Rational(0));
    for (const auto& [e, k] : counts) c[static_cast<std::size_t>(e)] += k;
    return QNumber::polynomial(c);
}

QNumber ssa_exact_with(const ClassicalRootSystem& sys, const TypeWeights& tw, long r, Variant v) {
    // counts[I][exponent - deg I]
    std::vector<std::map<long, long>> counts(tw.poly.size());
    const VertexMode mode = v == Variant::All ? VertexMode::All : VertexMode::Special;
    for_each_sphere_vertex(sys, r, mode, [&](const std::vector<long>& g2) {
        unsigned I = 0;
        for (std::size_t j = 0; j < g2.size(); ++j)
            if (g2[j] == 0) I |= 1u << j;
        long e = index_exponent_doubled(sys, g2) - tw.degree[I];
        if (e < 0) throw ReconciliationFailure("index exponent below the Poincare degree");
        ++counts[I][e];
    });
    QNumber total;
    for (unsigned I = 0; I < counts.size(); ++I)
        if (!counts[I].empty()) total += tw.poly[I] * q_power_series(counts[I]);
    return total;
}

QNumber weight_of(const TypeWeights& tw, unsigned I) { return tw.poly[I].times_q_pow(-tw.degree[I]); }

ParityWeights weights_from_table(const CosetData& d) {
    ParityWeights W(d.e.size());
    for (std::size_t s = 0; s < d.e.size(); ++s)
        if (d.e[s]) W[s] = QNumber::q_pow(*d.e[s]);
    return W;
}

bool all_zero(const ParityWeights& W) {
    return std::all_of(W.begin(), W.end(), [](const QNumber& x) { return x.is_zero(); });
}

// Weight-one indices outside I, as the cosets K they generate.
std::vector<unsigned> free_cosets(const ClassicalRootSystem& sys, const TypeSubset& I) {
    std::vector<int> free1;
    for (int j : sys.weight_one_indices())
        if (!I.contains(j)) free1.push_back(j);
    std::vector<unsigned> out;
    for (unsigned k = 0; k < (1u << free1.size()); ++k) {
        unsigned K = 0;
        for (std::size_t b = 0; b < free1.size(); ++b)
            if ((k >> b) & 1u) K |= 1u << (free1[b] - 1);
        out.push_back(K);
    }
    return out;
}

// Sum over special vertices of type I with sum h c = z of q^{2 rho(x)}.
SuperQExpPoly special_sum(const ClassicalRootSystem& sys, const TypeSubset& I) {
    SummationSpec s;
    for (int j : I.ell()) {
        s.w.push_back(sys.h()[static_cast<std::size_t>(j - 1)]);
        s.mu.push_back(Rational(sys.two_rho()[static_cast<std::size_t>(j - 1)]));
    }
    return closed_form_weighted(s);
}

// The same special sum through the balanced solver: c_i = h_i gamma_i, and
// classes with an odd c on an h = 2 coordinate get weight zero.
SuperQExpPoly special_sum_balanced(const ClassicalRootSystem& sys, const TypeSubset& I) {
    std::vector<int> ell = I.ell();
    std::vector<Rational> mu;
    unsigned twos = 0;
    for (std::size_t i = 0; i < ell.size(); ++i) {
        int h = sys.h()[static_cast<std::size_t>(ell[i] - 1)];
        mu.push_back(frac(sys.two_rho()[static_cast<std::size_t>(ell[i] - 1)], h));
        if (h == 2) twos |= 1u << i;
    }
    ParityWeights W(std::size_t{1} << ell.size());
    for (unsigned s = 0; s < W.size(); ++s) W[s] = (s & twos) ? QNumber() : QNumber(1);
    return balanced_with_weights(mu, W);
}

SummationSpec spec_from_table(const CosetData& d) {
    SummationSpec s;
    s.w = d.w;
    s.mu = d.mu;
    for (const auto& x : d.e) s.e.push_back(x ? *x : Rational(0));
    return s;
}

}  // namespace

QNumber ssa_exact(const ClassicalRootSystem& sys, long r, Variant v) {
    if (r < 0) throw InvalidSpec("radius must be nonnegative");
    return ssa_exact_with(sys, TypeWeights::of(sys), r, v);
}

std::vector<QNumber> ssa_exact_range(const ClassicalRootSystem& sys, long rmax, Variant v) {
    TypeWeights tw = TypeWeights::of(sys);
    std::vector<QNumber> out;
    for (long r = 0; r <= rmax; ++r) out.push_back(ssa_exact_with(sys, tw, r, v));
    return out;
}

QNumber sv_exact(const ClassicalRootSystem& sys, long r, Variant v) {
    if (r < 0) throw InvalidSpec("radius must be nonnegative");
    QNumber total;
    for (const auto& x : ssa_exact_range(sys, r, v)) total += x;
    return total;
}

SuperQExpPoly ssa_closed_form(const ClassicalRootSystem& sys, Variant v, Route route) {
    const int n = sys.rank();
    TypeWeights tw = TypeWeights::of(sys);
    SuperQExpPoly total;
    std::vector<unsigned> excluded = excluded_jump_sets(sys);
    for (unsigned Imask = 0; Imask + 1 < (1u << n); ++Imask) {
        TypeSubset I{n, Imask};
        QNumber weight = weight_of(tw, Imask);
        SuperQExpPoly part;
        if (v == Variant::Special) {
            part = route == Route::Uniform ? special_sum_balanced(sys, I) : special_sum(sys, I);
        } else if (route == Route::Uniform) {
            for (unsigned K : free_cosets(sys, I)) {
                CosetData d = parity_correction(sys, I, K);
                ParityWeights W = weights_from_table(d);
                if (all_zero(W)) continue;
                part += balanced_with_weights(d.mu, W).shift(d.radius_offset);
            }
        } else {
            switch (sys.family()) {
                case Family::A: {
                    SummationSpec s = spec_from_table(parity_correction(sys, I, 0u));
                    if (!s.parity_free()) throw ReconciliationFailure("type A index exponents must equal 2 rho");
                    part = closed_form_balanced(s);
                    break;
                }
                case Family::C:
                    part = closed_form_parity(spec_from_table(parity_correction(sys, I, 0u)));
                    break;
                case Family::B:
                case Family::D: {
                    for (const auto& tag : coset_tags(sys)) {
                        unsigned K = coset_mask(sys, tag);
                        if (K & Imask) continue;
                        CosetData d = parity_correction(sys, I, K, false);
                        part += closed_form_parity(spec_from_table(d)).shift(d.radius_offset);
                    }
                    SuperQExpPoly dagger = special_sum(sys, I);
                    for (unsigned J : excluded) {
                        if (J & Imask) continue;
                        JumpShift js = jump_shift(sys, J);
                        long shift = __builtin_popcount(J) - js.delta;
                        part -= dagger.shift(shift) * QNumber::q_pow(js.offset);
                    }
                    break;
                }
            }
        }
        total += part * weight;
    }
    return total;
}

namespace {

Reconciliation reconcile_values(const SuperQExpPoly& f, const std::vector<QNumber>& exact, long window) {
    Reconciliation rec;
    rec.window = window;
    const long R = static_cast<long>(exact.size()) - 1;
    long last_bad = -1;
    for (long r = 0; r <= R; ++r)
        if (f.evaluate(r) != exact[static_cast<std::size_t>(r)]) last_bad = r;
    rec.r0 = last_bad + 1;
    rec.ok = R - rec.r0 + 1 >= window;
    if (!rec.ok && last_bad >= 0) {
        rec.bad_r = last_bad;
        rec.expected = exact[static_cast<std::size_t>(last_bad)].to_string();
        rec.got = f.evaluate(last_bad).to_string();
    }
    return rec;
}

long search_horizon(const ClassicalRootSystem& sys, long window) {
    int maxh = *std::max_element(sys.h().begin(), sys.h().end());
    return 2 * maxh + window - 1;
}

}  // namespace

Reconciliation reconcile_ssa(const ClassicalRootSystem& sys, Variant v, const SuperQExpPoly& f, long window) {
    return reconcile_values(f, ssa_exact_range(sys, search_horizon(sys, window), v), window);
}

Reconciliation reconcile_sv(const ClassicalRootSystem& sys, Variant v, const SuperQExpPoly& f, long window) {
    auto ssa = ssa_exact_range(sys, search_horizon(sys, window), v);
    std::vector<QNumber> sv;
    QNumber acc;
    for (const auto& x : ssa) sv.push_back(acc += x);
    return reconcile_values(f, sv, window);
}

SuperQExpPoly sv_closed_form(const ClassicalRootSystem& sys, Variant v, long r0) {
    if (r0 < 1) throw InvalidSpec("the anchor radius must be at least 1");
    SuperQExpPoly f = ssa_closed_form(sys, v);
    // sum_{z=r0}^{r} F(z) = A(r + 1) with A anchored at r0
    SuperQExpPoly sv = f.antidifference_anchored(r0).shift(1);
    sv += SuperQExpPoly::constant(sv_exact(sys, r0 - 1, v));
    return sv;
}

AsymptoticProfile profile_of(const SuperQExpPoly& f) {
    LeadingTerm lt = f.leading_term();
    AsymptoticProfile p;
    p.epsilon = lt.degree();
    p.pi = lt.ord;
    p.constant = ParityQNumber(lt.deg0 == p.epsilon ? lt.lead0 : QNumber(),
                               lt.deg1 == p.epsilon ? lt.lead1 : QNumber());
    return p;
}

AsymptoticProfile asymptote(const ClassicalRootSystem& sys, Variant v, Quantity qty) {
    SuperQExpPoly f = qty == Quantity::SSA ? ssa_closed_form(sys, v) : sv_closed_form(sys, v);
    AsymptoticProfile p = profile_of(f);
    p.variant = v;
    p.quantity = qty;
    return p;
}

std::pair<int, Rational> table1_expected(Family f, int n) {
    switch (f) {
        case Family::A:
            if (n % 2 == 1) return {0, Rational((n + 1) / 2) * ((n + 1) / 2)};
            return {1, Rational((n / 2) * (n / 2 + 1))};
        case Family::B:
            if (n == 3) return {0, Rational(5)};
            return {0, frac(static_cast<long>(n) * n, 2)};
        case Family::C:
            return {0, Rational(n * (n + 1) / 2)};
        case Family::D:
            if (n == 4) return {2, Rational(6)};
            return {1, Rational(n * (n - 1) / 2)};
    }
    return {0, Rational(0)};
}

std::vector<QNumber> convolve(const std::vector<QNumber>& s1, const std::vector<QNumber>& s2) {
    const std::size_t len = std::min(s1.size(), s2.size());
    std::vector<QNumber> out(len);
    for (std::size_t r = 0; r < len; ++r)
        for (std::size_t a = 0; a <= r; ++a) out[r] += s1[a] * s2[r - a];
    return out;
}

namespace {

QNumber poly_q(std::vector<long> coeffsHighToLow) {
    std::vector<Rational> c;
    for (auto it = coeffsHighToLow.rbegin(); it != coeffsHighToLow.rend(); ++it) c.emplace_back(*it);
    return QNumber::polynomial(c);
}

QNumber qm(long k) { return QNumber::q_pow(k) - QNumber(1); }  // q^k - 1

QNumber weighted_type(const ClassicalRootSystem& sys, std::initializer_list<int> members) {
    unsigned m = 0;
    for (int j : members) m |= 1u << (j - 1);
    auto pp = poincare_parabolic(sys, TypeSubset{sys.rank(), m});
    return pp.poly.times_q_pow(-pp.degree);
}

}  // namespace

QNumber constant_B3_dagger() {
    return poly_q({1, 1, 1}) * poly_q({1, -1, 1}) * poly_q({1, 1}) * poly_q({1, -1, 1, 1, 1, 0, 1}) /
           (qm(1).pow(2) * QNumber::q_pow(9));
}

QNumber constant_B3() {
    return poly_q({1, 1, 1}) * poly_q({1, -1, 1}) * poly_q({1, 1}) * poly_q({1, 1, 3, 1, 5, 3, 4, 1, 1}) /
           (qm(1).pow(2) * QNumber::q_pow(9));
}

QNumber constant_D4_dagger() {
    return poly_q({1, 1, 1}) * poly_q({1, -1, 1}).pow(2) * poly_q({1, 0, 1}).pow(2) * poly_q({1, 1}).pow(3) /
           (qm(1) * QNumber::q_pow(12));
}

QNumber constant_D4() {
    return poly_q({1, 1, 1}) * poly_q({1, -1, 1}).pow(2) * poly_q({1, 0, 1}).pow(3) * poly_q({1, 1}).pow(4) /
           (qm(1) * QNumber::q_pow(12));
}

QNumber constant_B3_dagger_from_types() {
    auto sys = ClassicalRootSystem::build(Family::B, 3);
    return weighted_type(sys, {2, 3}) + weighted_type(sys, {2}) / qm(1) + weighted_type(sys, {3}) / qm(2) +
           weighted_type(sys, {}) / (qm(1) * qm(2));
}

QNumber constant_D4_dagger_from_types() {
    auto sys = ClassicalRootSystem::build(Family::D, 4);
    return weighted_type(sys, {2}) + weighted_type(sys, {}) / qm(2);
}

QNumber constant_B3_from_types() {
    auto sys = ClassicalRootSystem::build(Family::B, 3);
    return weighted_type(sys, {2, 3}) + weighted_type(sys, {2}) * poly_q({1, 1, 1}) / qm(1) +
           weighted_type(sys, {3}) * poly_q({1, 0, 0, 0, 1}) / qm(2) +
           weighted_type(sys, {}) * poly_q({1, 0, 2, 1, 1}) / (qm(1) * qm(2));
}

QNumber constant_D4_from_types() {
    auto sys = ClassicalRootSystem::build(Family::D, 4);
    return weighted_type(sys, {2}) * poly_q({1, 1}) + weighted_type(sys, {}) * poly_q({1, 0, 0, 1, 1, 1}) / qm(2);
}

}  // namespace svol

namespace svol {

namespace {

QNumber weighted(const ClassicalRootSystem& sys, unsigned mask) {
    auto pp = poincare_parabolic(sys, TypeSubset{sys.rank(), mask});
    return pp.poly.times_q_pow(-pp.degree);
}

bool has(unsigned mask, int j) { return (mask >> (j - 1)) & 1u; }

QNumber constant_A(const ClassicalRootSystem& sys) {
    const int n = sys.rank();
    QNumber total;
    for (unsigned I = 0; I + 1 < (1u << n); ++I) {
        auto ell = TypeSubset{n, I}.ell();
        QNumber term = weighted(sys, I);
        if (n % 2 == 1) {
            const int m = (n + 1) / 2;
            if (has(I, m)) continue;
            for (int l : ell)
                if (l != m) term /= qm(static_cast<long>(l - m) * (l - m));
        } else {
            const int m = n / 2;
            if (has(I, m) || has(I, m + 1)) continue;
            for (int l : ell)
                if (l != m && l != m + 1) term /= qm(static_cast<long>(l - m) * (l - m - 1));
        }
        total += term;
    }
    return total;
}

QNumber constant_C(const ClassicalRootSystem& sys, Variant v) {
    const int n = sys.rank();
    QNumber total;
    for (unsigned I = 0; I + 1 < (1u << n); ++I) {
        if (has(I, n)) continue;
        auto ell = TypeSubset{n, I}.ell();
        const int t = static_cast<int>(ell.size());
        QNumber term = weighted(sys, I);
        for (int i = 0; i + 1 < t; ++i) term /= qm(static_cast<long>(n - ell[i]) * (n + 1 - ell[i]));
        if (v == Variant::All) {
            // Sum of E(s) over s in F_2^{t-1}.
            QNumber esum;
            for (unsigned s = 0; s < (1u << (t - 1)); ++s) {
                Rational ex = 0;
                for (int i = 0; i < t; ++i) {
                    int parity = 0;
                    for (int i2 = i + 1; i2 < t; ++i2) {
                        parity ^= (s >> (i2 - 1)) & 1u;
                        long wi = ell[i] - (i ? ell[i - 1] : 0);
                        long wi2 = ell[i2] - ell[i2 - 1];
                        if (parity) ex += wi * wi2;
                    }
                }
                for (int i = 0; i + 1 < t; ++i)
                    if ((s >> i) & 1u) ex += frac(static_cast<long>(n - ell[i]) * (n + 1 - ell[i]), 2);
                esum += QNumber::q_pow(ex);
            }
            term *= esum;
        }
        total += term;
    }
    return total;
}

// Special vertices of B_n, n >= 4: values at even and odd radii.
ParityQNumber constant_B_dagger(const ClassicalRootSystem& sys) {
    const int n = sys.rank();
    const long nn = static_cast<long>(n) * n;
    QNumber even, odd;
    for (unsigned I = 0; I + 1 < (1u << n); ++I) {
        if (has(I, n)) continue;
        auto ell = TypeSubset{n, I}.ell();
        const int t = static_cast<int>(ell.size());
        QNumber term = weighted(sys, I);
        if (!has(I, 1)) {
            for (int i = 1; i + 1 < t; ++i) term /= qm(static_cast<long>(n - ell[i]) * (n - ell[i]));
            QNumber d = qm(nn - 2 * (2 * n - 1));
            even += term / d;
            odd += term * QNumber::q_pow(frac(nn, 2) - (2 * n - 1)) / d;
        } else {
            for (int i = 0; i + 1 < t; ++i) term /= qm(static_cast<long>(n - ell[i]) * (n - ell[i]));
            even += term;
        }
    }
    return ParityQNumber::from_samples(even, odd);
}

// Special vertices of D_n, n >= 5.
QNumber constant_D_dagger(const ClassicalRootSystem& sys) {
    const int n = sys.rank();
    QNumber total;
    for (unsigned I = 0; I + 1 < (1u << n); ++I) {
        if (has(I, n - 1) || has(I, n)) continue;
        auto ell = TypeSubset{n, I}.ell();
        const int t = static_cast<int>(ell.size());
        QNumber term = weighted(sys, I);
        auto f = [&](int i) { return qm(static_cast<long>(n - ell[i]) * (n - 1 - ell[i])); };
        if (!has(I, 1)) {
            for (int i = 1; i + 2 < t; ++i) term /= f(i);
            long pi = static_cast<long>(n) * (n - 1) / 2;
            term *= (QNumber(1) + QNumber::q_pow(pi - (2 * n - 2))) / qm(2 * pi - 2 * (2 * n - 2));
        } else {
            for (int i = 0; i + 2 < t; ++i) term /= f(i);
        }
        total += term;
    }
    return total;
}

}  // namespace

ParityQNumber summed_constant(const ParityQNumber& c, const Rational& pi) {
    QNumber Q = QNumber::q_pow(pi);
    return {c.even_coeff() * Q / (Q - QNumber(1)), c.odd_coeff() * Q / (Q + QNumber(1))};
}

std::optional<ParityQNumber> explicit_constant(const ClassicalRootSystem& sys, Variant v, Quantity qty) {
    const int n = sys.rank();
    std::optional<ParityQNumber> c;
    switch (sys.family()) {
        case Family::A:
            c = ParityQNumber(constant_A(sys), QNumber());
            break;
        case Family::C:
            c = ParityQNumber(constant_C(sys, v), QNumber());
            break;
        case Family::B:
            if (n == 3)
                c = ParityQNumber(v == Variant::All ? constant_B3_from_types() : constant_B3_dagger_from_types(),
                                  QNumber());
            else if (v == Variant::Special)
                c = constant_B_dagger(sys);
            break;
        case Family::D:
            if (n == 4)
                c = ParityQNumber(v == Variant::All ? constant_D4_from_types() : constant_D4_dagger_from_types(),
                                  QNumber());
            else if (v == Variant::Special)
                c = ParityQNumber(constant_D_dagger(sys), QNumber());
            break;
    }
    if (c && qty == Quantity::SV) c = summed_constant(*c, table1_expected(sys.family(), n).second);
    return c;
}

}  // namespace svol
