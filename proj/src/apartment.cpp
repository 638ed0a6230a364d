#include "svol/apartment.hpp"

#include "svol/errors.hpp"

#include <algorithm>
#include <sstream>

namespace svol {

namespace {

bool is_int(const Rational& x) { return x.get_den() == 1; }
bool is_half_int(const Rational& x) { return x.get_den() == 1 || x.get_den() == 2; }

Integer ceil_of(const Rational& x) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return r;
}

void check_point(const ClassicalRootSystem& sys, const ApartmentPoint& p) {
    if (static_cast<int>(p.gamma.size()) != sys.rank())
        throw InvalidSpec("point has " + std::to_string(p.gamma.size()) + " coordinates, expected " +
                          std::to_string(sys.rank()));
    for (const auto& g : p.gamma)
        if (g < 0) throw NegativeCoordinate("gamma " + p.to_string() + " leaves the closed chamber");
}

// Jump patterns that are lattice points but not vertices.
bool excluded_pattern(const ClassicalRootSystem& sys, unsigned J) {
    const int n = sys.rank();
    if (sys.family() == Family::B) {
        if (J == 1u) return true;
        for (int j = 1; j < n; ++j)
            if (J == (3u << (j - 1))) return true;
        return false;
    }
    if (sys.family() == Family::D) {
        unsigned top = (1u << (n - 2)) | (1u << (n - 1));  // {n-1, n}
        if (J == 1u) return true;
        for (int j = 1; j <= n - 3; ++j)
            if (J == (3u << (j - 1))) return true;
        if (J == top || J == (top | (1u << (n - 3)))) return true;
        return false;
    }
    return false;
}

// chi coordinates of the ambient model (chi_{n+1} = 0 for A).
std::vector<Rational> chi_coordinates(const ClassicalRootSystem& sys, const ApartmentPoint& p) {
    const int n = sys.rank();
    const auto& g = p.gamma;
    std::vector<Rational> chi(static_cast<std::size_t>(n));
    auto G = [&](int j) -> const Rational& { return g[static_cast<std::size_t>(j - 1)]; };
    switch (sys.family()) {
        case Family::A:
        case Family::B: {
            Rational s = 0;
            for (int i = n; i >= 1; --i) {
                s += G(i);
                chi[static_cast<std::size_t>(i - 1)] = s;
            }
            break;
        }
        case Family::C: {
            Rational s = G(n) / 2;
            chi[static_cast<std::size_t>(n - 1)] = s;
            for (int i = n - 1; i >= 1; --i) {
                s += G(i);
                chi[static_cast<std::size_t>(i - 1)] = s;
            }
            break;
        }
        case Family::D: {
            Rational s = (G(n - 1) + G(n)) / 2;
            chi[static_cast<std::size_t>(n - 2)] = s;
            chi[static_cast<std::size_t>(n - 1)] = (G(n) - G(n - 1)) / 2;
            for (int i = n - 2; i >= 1; --i) {
                s += G(i);
                chi[static_cast<std::size_t>(i - 1)] = s;
            }
            break;
        }
    }
    return chi;
}

}  // namespace

std::string ApartmentPoint::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gamma.size(); ++i) s += (i ? "," : "") + gamma[i].get_str();
    return s + ")";
}

Rational root_value(const std::vector<int>& root, const ApartmentPoint& p) {
    Rational v = 0;
    for (std::size_t j = 0; j < root.size(); ++j)
        if (root[j]) v += root[j] * p.gamma[j];
    return v;
}

unsigned type_of(const ApartmentPoint& p) {
    unsigned m = 0;
    for (std::size_t j = 0; j < p.gamma.size(); ++j)
        if (p.gamma[j] == 0) m |= 1u << j;
    return m;
}

unsigned jump_set(const ApartmentPoint& p) {
    unsigned m = 0;
    for (std::size_t j = 0; j < p.gamma.size(); ++j)
        if (!is_int(p.gamma[j])) m |= 1u << j;
    return m;
}

bool is_vertex(const ClassicalRootSystem& sys, const ApartmentPoint& p) {
    check_point(sys, p);
    const int n = sys.rank();
    const auto& g = p.gamma;
    switch (sys.family()) {
        case Family::A:
            return std::all_of(g.begin(), g.end(), is_int);
        case Family::C:
            for (int j = 0; j < n; ++j)
                if (!is_int(sys.h()[static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(j)])) return false;
            return true;
        case Family::B:
            if (!std::all_of(g.begin(), g.end(), is_half_int)) return false;
            return !excluded_pattern(sys, jump_set(p));
        case Family::D: {
            if (!std::all_of(g.begin(), g.end(), is_half_int)) return false;
            // The lattice 1/2 Z^n of chi coordinates: gamma_{n-1} and gamma_n
            // share their fractional part.
            if (!is_int(g[static_cast<std::size_t>(n - 2)] - g[static_cast<std::size_t>(n - 1)])) return false;
            return !excluded_pattern(sys, jump_set(p));
        }
    }
    return false;
}

bool is_vertex_chi(const ClassicalRootSystem& sys, const ApartmentPoint& p) {
    check_point(sys, p);
    auto chi = chi_coordinates(sys, p);
    const int n = sys.rank();
    int halves = 0;
    for (const auto& c : chi) {
        if (!is_half_int(c)) return false;
        if (!is_int(c)) ++halves;
    }
    switch (sys.family()) {
        case Family::A: return halves == 0;
        case Family::C: return true;
        case Family::B: return halves != 1;
        case Family::D: return halves != 1 && halves != n - 1;
    }
    return false;
}

bool is_special(const ClassicalRootSystem& sys, const ApartmentPoint& p) {
    check_point(sys, p);
    return std::all_of(p.gamma.begin(), p.gamma.end(), is_int);
}

Rational two_rho_value(const ClassicalRootSystem& sys, const ApartmentPoint& p) {
    return root_value(sys.two_rho(), p);
}

long distance(const ClassicalRootSystem& sys, const ApartmentPoint& p) {
    if (!is_vertex(sys, p)) throw NotAVertex(p.to_string() + " is not a vertex of " + sys.name());
    return ceil_of(root_value(sys.h(), p)).get_si();
}

long index_exponent(const ClassicalRootSystem& sys, const ApartmentPoint& p) {
    if (!is_vertex(sys, p)) throw NotAVertex(p.to_string() + " is not a vertex of " + sys.name());
    long s = 0;
    for (const auto& a : sys.positive_roots()) {
        Rational v = root_value(a, p);
        if (v > 0) s += ceil_of(v).get_si();
    }
    return s;
}

ApartmentPoint CosetData::point(const std::vector<long>& c) const {
    ApartmentPoint p;
    p.gamma.assign(static_cast<std::size_t>(type.n), Rational(0));
    for (std::size_t i = 0; i < ell.size(); ++i) {
        std::size_t j = static_cast<std::size_t>(ell[i] - 1);
        p.gamma[j] = Rational(c[i]) / h[i] - shift[j];
    }
    return p;
}

namespace {

long floor_div2(long v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }
long ceil_div2(long v) { return v >= 0 ? (v + 1) / 2 : -((-v) / 2); }

unsigned jump_set_doubled(const std::vector<long>& g2) {
    unsigned m = 0;
    for (std::size_t j = 0; j < g2.size(); ++j)
        if (g2[j] & 1) m |= 1u << j;
    return m;
}

// Calls f(c) for every c in Z_{>0}^t with sum w_i c_i = total.
void for_each_composition(const std::vector<int>& w, long total, std::vector<long>& c, std::size_t i,
                          const std::function<void(const std::vector<long>&)>& f) {
    if (i == w.size()) {
        if (total == 0) f(c);
        return;
    }
    long rest = 0;
    for (std::size_t k = i + 1; k < w.size(); ++k) rest += w[k];
    for (long v = 1; w[i] * v + rest <= total; ++v) {
        c[i] = v;
        for_each_composition(w, total - w[i] * v, c, i + 1, f);
    }
}

}  // namespace

bool is_vertex_doubled(const ClassicalRootSystem& sys, const std::vector<long>& g2) {
    const int n = sys.rank();
    unsigned J = jump_set_doubled(g2);
    switch (sys.family()) {
        case Family::A: return J == 0;
        case Family::C: return !(J >> (n - 1));
        case Family::B: return !excluded_pattern(sys, J);
        case Family::D:
            if (((J >> (n - 2)) & 1u) != ((J >> (n - 1)) & 1u)) return false;
            return !excluded_pattern(sys, J);
    }
    return false;
}

long index_exponent_doubled(const ClassicalRootSystem& sys, const std::vector<long>& g2) {
    long s = 0;
    for (const auto& a : sys.positive_roots()) {
        long v = 0;
        for (std::size_t j = 0; j < a.size(); ++j) v += a[j] * g2[j];
        if (v > 0) s += ceil_div2(v);
    }
    return s;
}

void for_each_sphere_vertex(const ClassicalRootSystem& sys, long r, VertexMode mode,
                            const std::function<void(const std::vector<long>&)>& f) {
    const int n = sys.rank();
    std::vector<long> g2(static_cast<std::size_t>(n), 0);
    if (r == 0) {
        f(g2);
        return;
    }
    std::vector<int> w1 = sys.weight_one_indices();
    for (unsigned Imask = 0; Imask + 1 < (1u << n); ++Imask) {
        TypeSubset I{n, Imask};
        std::vector<int> ell = I.ell();
        std::vector<int> hs;
        for (int j : ell) hs.push_back(sys.h()[static_cast<std::size_t>(j - 1)]);
        std::vector<long> c(ell.size());
        if (mode == VertexMode::Special) {
            // gamma_{l_i} = c_i with sum h_{l_i} c_i = r
            for_each_composition(hs, r, c, 0, [&](const std::vector<long>& cc) {
                std::fill(g2.begin(), g2.end(), 0);
                for (std::size_t i = 0; i < ell.size(); ++i) g2[static_cast<std::size_t>(ell[i] - 1)] = 2 * cc[i];
                f(g2);
            });
            continue;
        }
        std::vector<int> free1;
        for (int j : w1)
            if (!I.contains(j)) free1.push_back(j);
        std::vector<int> ones(ell.size(), 1);
        for (unsigned k = 0; k < (1u << free1.size()); ++k) {
            unsigned K = 0;
            for (std::size_t b = 0; b < free1.size(); ++b)
                if ((k >> b) & 1u) K |= 1u << (free1[b] - 1);
            long offset = __builtin_popcount(K) / 2;
            for_each_composition(ones, r + offset, c, 0, [&](const std::vector<long>& cc) {
                std::fill(g2.begin(), g2.end(), 0);
                for (std::size_t i = 0; i < ell.size(); ++i) {
                    std::size_t j = static_cast<std::size_t>(ell[i] - 1);
                    // 2 gamma = 2 c / h - [j in K]
                    g2[j] = (hs[i] == 1 ? 2 * cc[i] : cc[i]) - static_cast<long>((K >> j) & 1u);
                }
                if (is_vertex_doubled(sys, g2)) f(g2);
            });
        }
    }
}

namespace {

ApartmentPoint from_doubled(const std::vector<long>& g2) {
    ApartmentPoint p;
    for (long v : g2) p.gamma.push_back(frac(v, 2));
    return p;
}

// The chi-coordinate vertex test on doubled coordinates: 4 chi is an integer
// and chi is in 1/2 Z exactly when 4 chi is even.
bool is_vertex_chi_doubled(const ClassicalRootSystem& sys, const std::vector<long>& g2) {
    const int n = sys.rank();
    std::vector<long> chi4(static_cast<std::size_t>(n));
    auto G = [&](int j) { return g2[static_cast<std::size_t>(j - 1)]; };
    long s = 0;
    switch (sys.family()) {
        case Family::A:
        case Family::B:
            for (int i = n; i >= 1; --i) chi4[static_cast<std::size_t>(i - 1)] = 2 * (s += G(i));
            break;
        case Family::C:
            s = G(n);
            chi4[static_cast<std::size_t>(n - 1)] = s;
            for (int i = n - 1; i >= 1; --i) chi4[static_cast<std::size_t>(i - 1)] = (s += 2 * G(i));
            break;
        case Family::D:
            s = G(n - 1) + G(n);
            chi4[static_cast<std::size_t>(n - 2)] = s;
            chi4[static_cast<std::size_t>(n - 1)] = G(n) - G(n - 1);
            for (int i = n - 2; i >= 1; --i) chi4[static_cast<std::size_t>(i - 1)] = (s += 2 * G(i));
            break;
    }
    int halves = 0;
    for (long c : chi4) {
        if (c % 2 != 0) return false;
        if ((c / 2) % 2 != 0) ++halves;
    }
    switch (sys.family()) {
        case Family::A: return halves == 0;
        case Family::C: return true;
        case Family::B: return halves != 1;
        case Family::D: return halves != 1 && halves != n - 1;
    }
    return false;
}

void brute_scan(const ClassicalRootSystem& sys, long r, std::vector<long>& g2, std::size_t j, long used,
                VertexMode mode, std::vector<ApartmentPoint>& out) {
    const std::size_t n = g2.size();
    if (j == n) {
        // ceil(a_0) = r  <=>  sum h g2 in {2r - 1, 2r}
        if (used != 2 * r && used != 2 * r - 1) return;
        if (!is_vertex_chi_doubled(sys, g2)) return;
        if (mode == VertexMode::Special &&
            std::any_of(g2.begin(), g2.end(), [](long v) { return v % 2 != 0; }))
            return;
        out.push_back(from_doubled(g2));
        return;
    }
    long h = sys.h()[j];
    for (long v = 0; used + h * v <= 2 * r; ++v) {
        g2[j] = v;
        brute_scan(sys, r, g2, j + 1, used + h * v, mode, out);
    }
    g2[j] = 0;
}

}  // namespace

std::vector<ApartmentPoint> enumerate_sphere(const ClassicalRootSystem& sys, long r, VertexMode mode,
                                             EnumMethod method) {
    if (r < 0) throw InvalidSpec("sphere radius must be nonnegative");
    std::vector<ApartmentPoint> out;
    if (method == EnumMethod::Fast) {
        for_each_sphere_vertex(sys, r, mode, [&](const std::vector<long>& g2) { out.push_back(from_doubled(g2)); });
    } else {
        std::vector<long> g2(static_cast<std::size_t>(sys.rank()), 0);
        brute_scan(sys, r, g2, 0, 0, mode, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> coset_tags(const ClassicalRootSystem& sys) {
    switch (sys.family()) {
        case Family::A:
        case Family::C: return {"none"};
        case Family::B: return {"X0", "X1"};
        case Family::D: return {"X00", "X10", "X01", "X11"};
    }
    return {};
}

unsigned coset_mask(const ClassicalRootSystem& sys, const std::string& tag) {
    const int n = sys.rank();
    unsigned first = 1u, last = (1u << (n - 2)) | (1u << (n - 1));
    switch (sys.family()) {
        case Family::A:
        case Family::C:
            if (tag == "none") return 0;
            break;
        case Family::B:
            if (tag == "X0") return 0;
            if (tag == "X1") return first;
            break;
        case Family::D:
            if (tag == "X00") return 0;
            if (tag == "X10") return first;
            if (tag == "X01") return last;
            if (tag == "X11") return first | last;
            break;
    }
    throw UnsupportedCoset("coset '" + tag + "' does not exist for " + sys.name());
}

CosetData parity_correction(const ClassicalRootSystem& sys, const TypeSubset& I, unsigned K, bool verticesOnly) {
    const int n = sys.rank();
    for (int j = 1; j <= n; ++j) {
        if (!((K >> (j - 1)) & 1u)) continue;
        if (sys.h()[static_cast<std::size_t>(j - 1)] != 1 || I.contains(j))
            throw UnsupportedCoset("coset shift must use weight-one indices outside the type");
    }
    if (I.t() == 0) throw UnsupportedCoset("the full type has no composition parameters");
    CosetData d;
    d.type = I;
    d.coset = K;
    d.ell = I.ell();
    d.radius_offset = __builtin_popcount(K) / 2;
    d.shift.assign(static_cast<std::size_t>(n), Rational(0));
    for (int j = 1; j <= n; ++j)
        if ((K >> (j - 1)) & 1u) d.shift[static_cast<std::size_t>(j - 1)] = frac(1, 2);
    for (int j : d.ell) {
        int h = sys.h()[static_cast<std::size_t>(j - 1)];
        d.h.push_back(h);
        d.w.push_back(1);
        d.mu.push_back(frac(sys.two_rho()[static_cast<std::size_t>(j - 1)], h));
    }
    const std::size_t t = d.ell.size();
    d.e.resize(std::size_t{1} << t);
    std::vector<long> c(t), g2(static_cast<std::size_t>(n));
    for (unsigned s = 0; s < d.e.size(); ++s) {
        // Representative c_i = 2 - s_i of the residue class.
        Rational muc = 0;
        std::fill(g2.begin(), g2.end(), 0);
        for (std::size_t i = 0; i < t; ++i) {
            c[i] = 2 - static_cast<long>((s >> i) & 1u);
            muc += d.mu[i] * c[i];
            std::size_t j = static_cast<std::size_t>(d.ell[i] - 1);
            g2[j] = (d.h[i] == 1 ? 2 * c[i] : c[i]) - static_cast<long>((K >> j) & 1u);
        }
        if (verticesOnly && !is_vertex_doubled(sys, g2)) continue;
        d.e[s] = Rational(index_exponent_doubled(sys, g2)) - muc;
    }
    return d;
}

CosetData parity_correction(const ClassicalRootSystem& sys, const TypeSubset& I, const std::string& tag) {
    return parity_correction(sys, I, coset_mask(sys, tag));
}

JumpShift jump_shift(const ClassicalRootSystem& sys, unsigned J) {
    JumpShift js;
    js.jumps = J;
    int ones = 0;
    for (int j : sys.weight_one_indices())
        if ((J >> (j - 1)) & 1u) ++ones;
    js.delta = (ones + 1) / 2;
    // sum over positive roots of ceil(-a(1/2 omega_J))
    for (const auto& a : sys.positive_roots()) {
        long v = 0;
        for (std::size_t j = 0; j < a.size(); ++j)
            if ((J >> j) & 1u) v += a[j];
        js.offset += -floor_div2(v);
    }
    return js;
}

std::vector<unsigned> excluded_jump_sets(const ClassicalRootSystem& sys) {
    std::vector<unsigned> out;
    const int n = sys.rank();
    if (sys.family() != Family::B && sys.family() != Family::D) return out;
    for (unsigned J = 1; J < (1u << n); ++J)
        if (excluded_pattern(sys, J)) out.push_back(J);
    return out;
}

std::string sphere_csv(const ClassicalRootSystem& sys, long r, const std::vector<ApartmentPoint>& pts) {
    std::ostringstream os;
    os << "family,n,r";
    for (int j = 1; j <= sys.rank(); ++j) os << ",gamma_" << j;
    os << ",type_bitmask,special_flag,exponent\n";
    for (const auto& p : pts) {
        os << family_letter(sys.family()) << "," << sys.rank() << "," << r;
        for (const auto& g : p.gamma) os << "," << g.get_str();
        os << "," << type_of(p) << "," << (is_special(sys, p) ? 1 : 0) << "," << index_exponent(sys, p) << "\n";
    }
    return os.str();
}

}  // namespace svol
