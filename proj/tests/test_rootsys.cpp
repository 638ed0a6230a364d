#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "svol/errors.hpp"
#include "svol/rootsys.hpp"

using namespace svol;

namespace {

std::vector<ClassicalRootSystem> grid(int maxRank) {
    std::vector<ClassicalRootSystem> out;
    for (int n = 1; n <= maxRank; ++n) out.push_back(ClassicalRootSystem::build(Family::A, n));
    for (int n = 3; n <= maxRank; ++n) out.push_back(ClassicalRootSystem::build(Family::B, n));
    for (int n = 2; n <= maxRank; ++n) out.push_back(ClassicalRootSystem::build(Family::C, n));
    for (int n = 4; n <= maxRank; ++n) out.push_back(ClassicalRootSystem::build(Family::D, n));
    return out;
}

long factorial(long n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("build examples") {
    auto a2 = ClassicalRootSystem::build(Family::A, 2);
    CHECK(a2.h() == std::vector<int>{1, 1});
    CHECK(a2.two_rho() == std::vector<int>{2, 2});
    CHECK(a2.positive_roots().size() == 3);
    auto c3 = ClassicalRootSystem::build(Family::C, 3);
    CHECK(c3.h() == std::vector<int>{2, 2, 1});
    CHECK(c3.two_rho() == std::vector<int>{6, 10, 6});
    CHECK(c3.positive_roots().size() == 9);
    auto d5 = ClassicalRootSystem::build(Family::D, 5);
    CHECK(d5.h() == std::vector<int>{1, 2, 2, 1, 1});
    CHECK(d5.positive_roots().size() == 20);
    CHECK_THROWS_AS(ClassicalRootSystem::build(Family::D, 3), RankOutOfRange);
    CHECK_THROWS_AS(ClassicalRootSystem::build(Family::B, 2), RankOutOfRange);
    CHECK_THROWS_AS(ClassicalRootSystem::build(Family::C, 1), RankOutOfRange);
    CHECK_THROWS_AS(ClassicalRootSystem::build(Family::A, 0), RankOutOfRange);
}

TEST_CASE("root data invariants") {
    for (const auto& s : grid(7)) {
        const long n = s.rank();
        CAPTURE(s.name());
        std::size_t count = s.family() == Family::A ? n * (n + 1) / 2 : s.family() == Family::D ? n * (n - 1) : n * n;
        CHECK(s.positive_roots().size() == count);
        std::vector<int> h(static_cast<std::size_t>(n), 2), rho(static_cast<std::size_t>(n));
        for (long i = 1; i <= n; ++i) {
            auto k = static_cast<std::size_t>(i - 1);
            switch (s.family()) {
                case Family::A: h[k] = 1; rho[k] = static_cast<int>(i * (n + 1 - i)); break;
                case Family::B: rho[k] = static_cast<int>(i * (2 * n - i)); break;
                case Family::C: rho[k] = static_cast<int>(i < n ? i * (2 * n + 1 - i) : n * (n + 1) / 2); break;
                case Family::D: rho[k] = static_cast<int>(i <= n - 2 ? i * (2 * n - 1 - i) : n * (n - 1) / 2); break;
            }
        }
        if (s.family() == Family::B) h[0] = 1;
        if (s.family() == Family::C) h[static_cast<std::size_t>(n - 1)] = 1;
        if (s.family() == Family::D) h[0] = h[static_cast<std::size_t>(n - 2)] = h[static_cast<std::size_t>(n - 1)] = 1;
        CHECK(s.h() == h);
        CHECK(s.two_rho() == rho);
    }
}

TEST_CASE("Poincare polynomials") {
    auto a2 = ClassicalRootSystem::build(Family::A, 2);
    CHECK(poincare(a2) == QNumber::polynomial({1, 1}) * QNumber::polynomial({1, 1, 1}));
    auto c2 = ClassicalRootSystem::build(Family::C, 2);
    CHECK(poincare(c2) == QNumber::polynomial({1, 1}) * QNumber::polynomial({1, 1, 1, 1}));
    CHECK(poincare(c2).evaluate_exact(1) == 8);
    auto d4 = ClassicalRootSystem::build(Family::D, 4);
    QNumber want = QNumber::qbracket(2) * QNumber::qbracket(4) * QNumber::qbracket(6) * QNumber::qbracket(4);
    CHECK(poincare(d4) == want);
    CHECK(poincare(d4).num().degree() == 12);

    CHECK(poincare_parabolic(a2, {2, 0b01}).poly == QNumber::polynomial({1, 1, 1}));
    CHECK(poincare_parabolic(a2, {2, 0b01}).degree == 2);
    CHECK(poincare_parabolic(c2, {2, 0b01}).poly == QNumber::qbracket(4));
    CHECK(poincare_parabolic(c2, {2, 0b01}).degree == 3);
    CHECK(poincare_parabolic(d4, {4, 0b1111}).poly == QNumber(1));
    CHECK(poincare_parabolic(d4, {4, 0b1111}).degree == 0);
}

TEST_CASE("Weyl group orders") {
    for (const auto& s : grid(7)) {
        const long n = s.rank();
        long want = s.family() == Family::A   ? factorial(n + 1)
                    : s.family() == Family::D ? (1L << (n - 1)) * factorial(n)
                                              : (1L << n) * factorial(n);
        CHECK(poincare(s).evaluate_exact(1) == want);
        CHECK(s.weyl_order() == want);
        CHECK(poincare(s).num().degree() == static_cast<long>(s.positive_roots().size()));
    }
}

TEST_CASE("product formulas agree with division for every type") {
    for (const auto& s : grid(6)) {
        for (unsigned m = 0; m < (1u << s.rank()); ++m) {
            TypeSubset I{s.rank(), m};
            CAPTURE(s.name());
            CAPTURE(I.to_string());
            auto pp = poincare_parabolic(s, I);
            CHECK(poincare_parabolic_closed(s, I) == pp.poly);
            CHECK(pp.poly.num().degree() == pp.degree);
        }
    }
}

TEST_CASE("type subsets") {
    TypeSubset I{5, 0b01010};
    CHECK(I.t() == 3);
    CHECK(I.ell() == std::vector<int>{1, 3, 5});
    CHECK(I.to_string() == "{2,4}");
}
