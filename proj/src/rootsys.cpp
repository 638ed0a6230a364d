#include "svol/rootsys.hpp"

#include "svol/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>

namespace svol {

char family_letter(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
    }
    return '?';
}

Family parse_family(const std::string& s) {
    if (s.size() == 1) {
        switch (std::toupper(static_cast<unsigned char>(s[0]))) {
            case 'A': return Family::A;
            case 'B': return Family::B;
            case 'C': return Family::C;
            case 'D': return Family::D;
            default: break;
        }
    }
    throw InvalidConfig("unknown family '" + s + "'");
}

std::vector<int> TypeSubset::ell() const {
    std::vector<int> out;
    for (int j = 1; j <= n; ++j)
        if (!contains(j)) out.push_back(j);
    return out;
}

std::string TypeSubset::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int j = 1; j <= n; ++j) {
        if (!contains(j)) continue;
        if (!first) s += ",";
        first = false;
        s += std::to_string(j);
    }
    return s + "}";
}

namespace {

// sum of a_i .. a_{j-1} (1-based, i < j) added into v with multiplicity m.
void add_range(std::vector<int>& v, int i, int j, int m = 1) {
    for (int k = i; k < j; ++k) v[static_cast<std::size_t>(k - 1)] += m;
}

std::vector<std::vector<int>> roots_for(Family f, int n) {
    std::vector<std::vector<int>> roots;
    auto zero = [n] { return std::vector<int>(static_cast<std::size_t>(n), 0); };
    switch (f) {
        case Family::A:
            // chi_i - chi_j = a_i + ... + a_{j-1}, 1 <= i < j <= n+1
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n + 1; ++j) {
                    auto v = zero();
                    add_range(v, i, j);
                    roots.push_back(v);
                }
            break;
        case Family::B:
            for (int i = 1; i <= n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                    auto v = zero();  // chi_i - chi_j
                    add_range(v, i, j);
                    roots.push_back(v);
                    auto w = zero();  // chi_i + chi_j
                    add_range(w, i, j);
                    add_range(w, j, n + 1, 2);
                    roots.push_back(w);
                }
                auto v = zero();  // chi_i
                add_range(v, i, n + 1);
                roots.push_back(v);
            }
            break;
        case Family::C:
            for (int i = 1; i <= n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                    auto v = zero();  // chi_i - chi_j
                    add_range(v, i, j);
                    roots.push_back(v);
                    auto w = zero();  // chi_i + chi_j
                    add_range(w, i, j);
                    add_range(w, j, n, 2);
                    w[static_cast<std::size_t>(n - 1)] += 1;
                    roots.push_back(w);
                }
                auto v = zero();  // 2 chi_i
                add_range(v, i, n, 2);
                v[static_cast<std::size_t>(n - 1)] += 1;
                roots.push_back(v);
            }
            break;
        case Family::D:
            for (int i = 1; i <= n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                    auto v = zero();  // chi_i - chi_j
                    add_range(v, i, j);
                    roots.push_back(v);
                    auto w = zero();  // chi_i + chi_j
                    if (j == n) {
                        add_range(w, i, n - 1);
                        w[static_cast<std::size_t>(n - 1)] += 1;
                    } else if (j == n - 1) {
                        add_range(w, i, n + 1);
                    } else {
                        add_range(w, i, j);
                        add_range(w, j, n - 1, 2);
                        w[static_cast<std::size_t>(n - 2)] += 1;
                        w[static_cast<std::size_t>(n - 1)] += 1;
                    }
                    roots.push_back(w);
                }
            }
            break;
    }
    return roots;
}

}  // namespace

ClassicalRootSystem ClassicalRootSystem::build(Family family, int n) {
    int lo = family == Family::A ? 1 : family == Family::B ? 3 : family == Family::C ? 2 : 4;
    if (n < lo || n > 64)
        throw RankOutOfRange(std::string(1, family_letter(family)) + std::to_string(n) +
                             " is outside the supported ranks (minimum " + std::to_string(lo) + ")");
    ClassicalRootSystem s;
    s.family_ = family;
    s.n_ = n;
    s.roots_ = roots_for(family, n);
    // The highest root is the unique root of maximal height.
    s.h_ = *std::max_element(s.roots_.begin(), s.roots_.end(), [](const auto& a, const auto& b) {
        int ha = 0, hb = 0;
        for (int x : a) ha += x;
        for (int x : b) hb += x;
        return ha < hb;
    });
    s.two_rho_.assign(static_cast<std::size_t>(n), 0);
    for (const auto& r : s.roots_)
        for (int j = 0; j < n; ++j) s.two_rho_[static_cast<std::size_t>(j)] += r[static_cast<std::size_t>(j)];
    switch (family) {
        case Family::A:
            for (int i = 2; i <= n + 1; ++i) s.degrees_.push_back(i);
            break;
        case Family::B:
        case Family::C:
            for (int i = 1; i <= n; ++i) s.degrees_.push_back(2 * i);
            break;
        case Family::D:
            for (int i = 1; i <= n - 1; ++i) s.degrees_.push_back(2 * i);
            s.degrees_.push_back(n);
            std::sort(s.degrees_.begin(), s.degrees_.end());
            break;
    }
    return s;
}

std::string ClassicalRootSystem::name() const { return std::string(1, family_letter(family_)) + std::to_string(n_); }

std::vector<int> ClassicalRootSystem::weight_one_indices() const {
    std::vector<int> out;
    for (int j = 1; j <= n_; ++j)
        if (h_[static_cast<std::size_t>(j - 1)] == 1) out.push_back(j);
    return out;
}

Integer ClassicalRootSystem::weyl_order() const {
    Integer w = 1;
    for (int d : degrees_) w *= d;
    return w;
}

std::string ClassicalRootSystem::to_json() const {
    nlohmann::json j;
    j["family"] = std::string(1, family_letter(family_));
    j["rank"] = n_;
    j["positive_roots"] = roots_;
    j["highest_root"] = h_;
    j["two_rho"] = two_rho_;
    j["degrees"] = degrees_;
    j["weyl_order"] = weyl_order().get_str();
    return j.dump();
}

QNumber poincare(const ClassicalRootSystem& sys) {
    QNumber p(1);
    for (int d : sys.degrees()) p *= QNumber::qbracket(d);
    return p;
}

namespace {

bool supported_on(const std::vector<int>& root, const TypeSubset& I) {
    for (std::size_t j = 0; j < root.size(); ++j)
        if (root[j] != 0 && !I.contains(static_cast<int>(j) + 1)) return false;
    return true;
}

}  // namespace

int subsystem_root_count(const ClassicalRootSystem& sys, const TypeSubset& I) {
    int c = 0;
    for (const auto& r : sys.positive_roots())
        if (supported_on(r, I)) ++c;
    return c;
}

QNumber poincare_subsystem(const ClassicalRootSystem& sys, const TypeSubset& I) {
    std::map<int, int> byHeight;
    int top = 0;
    for (const auto& r : sys.positive_roots()) {
        if (!supported_on(r, I)) continue;
        int ht = 0;
        for (int x : r) ht += x;
        ++byHeight[ht];
        top = std::max(top, ht);
    }
    // Exponent k occurs m_k - m_{k+1} times; degrees are exponents plus one.
    QNumber p(1);
    for (int k = 1; k <= top; ++k) {
        int mult = byHeight[k] - byHeight[k + 1];
        for (int i = 0; i < mult; ++i) p *= QNumber::qbracket(k + 1);
    }
    return p;
}

ParabolicPoincare poincare_parabolic(const ClassicalRootSystem& sys, const TypeSubset& I) {
    QNumber whole = poincare(sys), sub = poincare_subsystem(sys, I);
    auto [quot, rem] = whole.num().divmod(sub.num());
    if (!rem.is_zero()) throw NonDivisible("Poincare polynomial of " + sys.name() + " by subsystem " + I.to_string());
    ParabolicPoincare out;
    out.poly = QNumber::from_polys(quot, Poly(1), 1);
    out.degree = static_cast<int>(sys.positive_roots().size()) - subsystem_root_count(sys, I);
    return out;
}

QNumber q_factorial(long m) {
    QNumber p(1);
    for (long i = 2; i <= m; ++i) p *= QNumber::qbracket(i);
    return p;
}

QNumber q_double_factorial(long m2) {
    QNumber p(1);
    for (long i = 2; i <= m2; i += 2) p *= QNumber::qbracket(i);
    return p;
}

QNumber poincare_parabolic_closed(const ClassicalRootSystem& sys, const TypeSubset& I) {
    const long n = sys.rank();
    std::vector<int> l = I.ell();
    const long t = static_cast<long>(l.size());
    auto ellAt = [&](long i) -> long { return i == 0 ? 0 : l[static_cast<std::size_t>(i - 1)]; };
    QNumber den(1);
    switch (sys.family()) {
        case Family::A: {
            for (long i = 1; i <= t; ++i) den *= q_factorial(ellAt(i) - ellAt(i - 1));
            den *= q_factorial(n + 1 - ellAt(t));
            return q_factorial(n + 1) / den;
        }
        case Family::B:
        case Family::C: {
            for (long i = 1; i <= t; ++i) den *= q_factorial(ellAt(i) - ellAt(i - 1));
            den *= q_double_factorial(2 * (n - ellAt(t)));
            return q_double_factorial(2 * n) / den;
        }
        case Family::D: {
            QNumber whole = q_double_factorial(2 * (n - 1)) * QNumber::qbracket(n);
            if (I.contains(static_cast<int>(n) - 1) && I.contains(static_cast<int>(n))) {
                for (long i = 1; i <= t; ++i) den *= q_factorial(ellAt(i) - ellAt(i - 1));
                den *= q_double_factorial(2 * (n - ellAt(t) - 1)) * QNumber::qbracket(n - ellAt(t));
            } else {
                for (long i = 1; i <= t - 1; ++i) den *= q_factorial(ellAt(i) - ellAt(i - 1));
                den *= q_factorial(n - ellAt(t - 1));
            }
            return whole / den;
        }
    }
    return QNumber(1);
}

}  // namespace svol
