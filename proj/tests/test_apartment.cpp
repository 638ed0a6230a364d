#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "svol/apartment.hpp"
#include "svol/errors.hpp"

using namespace svol;

namespace {

ApartmentPoint pt(std::vector<std::pair<long, long>> g) {
    ApartmentPoint p;
    for (auto [a, b] : g) p.gamma.push_back(frac(a, b));
    return p;
}

ClassicalRootSystem sys(Family f, int n) { return ClassicalRootSystem::build(f, n); }

std::vector<ClassicalRootSystem> small_grid() {
    return {sys(Family::A, 1), sys(Family::A, 2), sys(Family::A, 3), sys(Family::A, 4), sys(Family::B, 3),
            sys(Family::B, 4), sys(Family::C, 2), sys(Family::C, 3), sys(Family::D, 4), sys(Family::D, 5)};
}

}  // namespace

TEST_CASE("vertex tests") {
    CHECK(is_vertex(sys(Family::C, 3), pt({{1, 2}, {0, 1}, {0, 1}})));
    CHECK_FALSE(is_vertex(sys(Family::B, 3), pt({{1, 2}, {0, 1}, {0, 1}})));
    CHECK(is_vertex(sys(Family::B, 3), pt({{0, 1}, {1, 2}, {0, 1}})));
    CHECK_THROWS_AS(is_vertex(sys(Family::A, 2), pt({{-1, 1}, {0, 1}})), NegativeCoordinate);
}

TEST_CASE("gamma rules agree with chi coordinates") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<ClassicalRootSystem> systems{sys(Family::A, n)};
        if (n >= 3) systems.push_back(sys(Family::B, n));
        if (n >= 2) systems.push_back(sys(Family::C, n));
        if (n >= 4) systems.push_back(sys(Family::D, n));
        for (const auto& s : systems) {
            // every gamma in {0, 1/4, 1/2, 3/4, 1, 3/2}^n
            const std::vector<std::pair<long, long>> vals{{0, 1}, {1, 4}, {1, 2}, {3, 4}, {1, 1}, {3, 2}};
            std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
            while (true) {
                ApartmentPoint p;
                for (auto k : idx) p.gamma.push_back(frac(vals[k].first, vals[k].second));
                CAPTURE(s.name());
                CAPTURE(p.to_string());
                CHECK(is_vertex(s, p) == is_vertex_chi(s, p));
                std::size_t i = 0;
                while (i < idx.size() && ++idx[i] == vals.size()) idx[i++] = 0;
                if (i == idx.size()) break;
            }
        }
    }
}

TEST_CASE("distance and index exponent") {
    CHECK(distance(sys(Family::A, 3), pt({{1, 1}, {2, 1}, {1, 1}})) == 4);
    CHECK(distance(sys(Family::B, 4), pt({{0, 1}, {1, 2}, {0, 1}, {1, 2}})) == 2);
    CHECK(distance(sys(Family::D, 5), pt({{1, 2}, {0, 1}, {0, 1}, {1, 2}, {1, 2}})) == 2);
    CHECK(index_exponent(sys(Family::A, 2), pt({{0, 1}, {1, 1}})) == 2);
    CHECK(index_exponent(sys(Family::C, 2), pt({{1, 2}, {0, 1}})) == 3);
    CHECK_THROWS_AS(distance(sys(Family::B, 3), pt({{1, 2}, {0, 1}, {0, 1}})), NotAVertex);
    auto c3 = sys(Family::C, 3);
    auto p = pt({{2, 1}, {1, 1}, {3, 1}});
    CHECK(Rational(index_exponent(c3, p)) == two_rho_value(c3, p));
}

TEST_CASE("sphere examples") {
    for (auto m : {EnumMethod::Fast, EnumMethod::Brute}) {
        auto a1 = enumerate_sphere(sys(Family::A, 1), 1, VertexMode::All, m);
        REQUIRE(a1.size() == 1);
        CHECK(a1[0] == pt({{1, 1}}));
        auto c2 = enumerate_sphere(sys(Family::C, 2), 1, VertexMode::All, m);
        REQUIRE(c2.size() == 2);
        CHECK(c2[0] == pt({{0, 1}, {1, 1}}));
        CHECK(c2[1] == pt({{1, 2}, {0, 1}}));
        auto b3 = enumerate_sphere(sys(Family::B, 3), 1, VertexMode::Special, m);
        REQUIRE(b3.size() == 1);
        CHECK(b3[0] == pt({{1, 1}, {0, 1}, {0, 1}}));
    }
}

TEST_CASE("fast and brute enumerations agree") {
    for (const auto& s : small_grid()) {
        for (long r = 0; r <= 7; ++r) {
            CAPTURE(s.name());
            CAPTURE(r);
            auto fast = enumerate_sphere(s, r, VertexMode::All, EnumMethod::Fast);
            CHECK(fast == enumerate_sphere(s, r, VertexMode::All, EnumMethod::Brute));
            auto special = enumerate_sphere(s, r, VertexMode::Special, EnumMethod::Fast);
            CHECK(special == enumerate_sphere(s, r, VertexMode::Special, EnumMethod::Brute));
            CHECK(std::includes(fast.begin(), fast.end(), special.begin(), special.end()));
            if (s.family() == Family::A) CHECK(fast == special);
            for (const auto& p : fast) CHECK(distance(s, p) == r);
        }
    }
}

TEST_CASE("parity tables reproduce index exponents") {
    for (const auto& s : small_grid()) {
        const int n = s.rank();
        std::vector<int> w1 = s.weight_one_indices();
        for (unsigned I = 0; I + 1 < (1u << n); ++I) {
            TypeSubset T{n, I};
            for (unsigned K = 0; K < (1u << n); ++K) {
                bool ok = true;
                for (int j = 1; j <= n; ++j)
                    if (((K >> (j - 1)) & 1u) && (T.contains(j) || s.h()[static_cast<std::size_t>(j - 1)] != 1))
                        ok = false;
                if (!ok) {
                    if (K) CHECK_THROWS_AS(parity_correction(s, T, K), UnsupportedCoset);
                    continue;
                }
                CosetData d = parity_correction(s, T, K);
                // Walk all c with sum up to t + 5.
                std::vector<long> c(d.ell.size(), 1);
                while (true) {
                    auto p = d.point(c);
                    unsigned mask = 0;
                    long sum = 0;
                    Rational muc = 0;
                    for (std::size_t i = 0; i < c.size(); ++i) {
                        if (c[i] & 1) mask |= 1u << i;
                        sum += c[i];
                        muc += d.mu[i] * c[i];
                    }
                    CAPTURE(s.name());
                    CAPTURE(p.to_string());
                    CHECK(is_vertex(s, p) == d.e[mask].has_value());
                    if (d.e[mask]) {
                        CHECK(Rational(index_exponent(s, p)) == muc + *d.e[mask]);
                        CHECK(distance(s, p) == sum - d.radius_offset);
                    }
                    std::size_t i = 0;
                    while (i < c.size() && ++c[i] > 4) c[i++] = 1;
                    if (i == c.size()) break;
                }
            }
        }
    }
    auto c2 = sys(Family::C, 2);
    CHECK_THROWS_AS(parity_correction(c2, TypeSubset{2, 0}, "X1"), UnsupportedCoset);
    CHECK_NOTHROW(parity_correction(c2, TypeSubset{2, 0}, "none"));
}

TEST_CASE("jump shifts") {
    auto js = jump_shift(sys(Family::B, 3), 0b110);
    CHECK(js.delta == 0);
    CHECK(js.offset == -6);
    js = jump_shift(sys(Family::D, 4), 0b0001);
    CHECK(js.delta == 1);
    CHECK(js.offset == 0);
    CHECK(excluded_jump_sets(sys(Family::C, 3)).empty());
}

TEST_CASE("excluded patterns map onto shifted special vertices") {
    for (const auto& s : {sys(Family::B, 3), sys(Family::B, 4), sys(Family::D, 4), sys(Family::D, 5)}) {
        const int n = s.rank();
        for (unsigned J : excluded_jump_sets(s)) {
            JumpShift js = jump_shift(s, J);
            for (long r = 1; r <= 6; ++r) {
                long rs = r + __builtin_popcount(J) - js.delta;
                for (const auto& x : enumerate_sphere(s, rs, VertexMode::Special, EnumMethod::Fast)) {
                    if (type_of(x) & J) continue;
                    ApartmentPoint y = x;
                    for (int j = 0; j < n; ++j)
                        if ((J >> j) & 1u) y.gamma[static_cast<std::size_t>(j)] -= frac(1, 2);
                    CAPTURE(y.to_string());
                    CHECK_FALSE(is_vertex(s, y));
                    CHECK(jump_set(y) == J);
                    CHECK(type_of(y) == type_of(x));
                    // ceil(a_0) of the shifted point and its exponent
                    Rational a0 = root_value(s.h(), y);
                    CHECK(a0 <= r);
                    CHECK(a0 > r - 1);
                    long e = 0;
                    for (const auto& a : s.positive_roots()) {
                        Rational v = root_value(a, y);
                        if (v > 0) {
                            Integer c;
                            mpz_cdiv_q(c.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
                            e += c.get_si();
                        }
                    }
                    CHECK(Rational(e) == two_rho_value(s, x) + js.offset);
                }
            }
        }
    }
}

TEST_CASE("sphere CSV") {
    auto c2 = sys(Family::C, 2);
    auto pts = enumerate_sphere(c2, 1, VertexMode::All, EnumMethod::Fast);
    CHECK(sphere_csv(c2, 1, pts) == "family,n,r,gamma_1,gamma_2,type_bitmask,special_flag,exponent\n"
                                    "C,2,1,0,1,1,1,3\nC,2,1,1/2,0,2,0,3\n");
}
