#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "svol/errors.hpp"
#include "svol/multisum.hpp"

#include <random>

using namespace svol;

namespace {

QNumber q() { return QNumber::q(); }
using F = SuperQExpPoly;

SummationSpec spec(std::vector<int> w, std::vector<Rational> mu, std::vector<Rational> e = {}) {
    return {std::move(w), std::move(mu), std::move(e)};
}

}  // namespace

TEST_CASE("brute force examples") {
    CHECK(brute_force(spec({1, 1}, {1, 0}), 4) == q() + q() * q() + q() * q() * q());
    CHECK(brute_force(spec({2}, {0}), 5).is_zero());
    // e(c) = 1 when c_1 is odd: (1,2) -> q, (2,1) -> 1
    CHECK(brute_force(spec({1, 1}, {0, 0}, {0, 1, 0, 1}), 3) == q() + QNumber(1));
}

TEST_CASE("balanced closed forms") {
    QNumber inv = (q() - QNumber(1)).inverse();
    CHECK(closed_form_balanced(spec({1, 1}, {1, 0})) == F::term(inv, 1) - F::constant(q() * inv));
    CHECK(closed_form_balanced(spec({1, 1}, {1, 1})) == F::term(1, 1, 1) - F::term(1, 1));
    CHECK(closed_form_balanced(spec({1}, {0})) == F::constant(1));
    auto s = spec({1, 1}, {1, 0});
    CHECK(leading_matches(closed_form(s), display_balanced(s)));
}

TEST_CASE("parity closed forms") {
    CHECK(balanced_twisted({0, 0}, {1, 0}) == F::constant(frac(-1, 2)) + F::term(frac(-1, 2), 0, 0, 1));
    CHECK(closed_form_parity(spec({1, 1}, {1, 1}, {0, 0, 0, 0})) == closed_form_balanced(spec({1, 1}, {1, 1})));
    auto s = spec({1, 1}, {2, 0}, {0, 0, 1, 1});
    F f = closed_form_parity(s);
    for (long z = 2; z <= 20; ++z) CHECK(f.evaluate(z) == brute_force(s, z));
    auto lt = f.leading_term();
    CHECK(lt.ord == 2);
    CHECK(lt.degree() == 0);
    CHECK(leading_matches(f, display_parity(s)));
}

TEST_CASE("weighted closed forms") {
    CHECK(closed_form_weighted(spec({2}, {0})) == F::constant(frac(1, 2)) + F::term(frac(1, 2), 0, 0, 1));
    F want = F::term(frac(1, 2), 1, 1) + F::term(frac(-3, 4), 1) + F::term(frac(-1, 4), 1, 0, 1);
    CHECK(closed_form_weighted(spec({1, 2}, {1, 2})) == want);
    auto s = spec({2, 2}, {6, 4});
    F f = closed_form_weighted(s);
    for (long z = 4; z <= 20; ++z) CHECK(f.evaluate(z) == brute_force(s, z));
    auto lt = f.leading_term();
    QNumber c = (q() * q() - QNumber(1)).inverse() * QNumber(frac(1, 2));
    CHECK(lt.ord == 3);
    CHECK(lt.lead0 == c);
    CHECK(lt.lead1 == c);
    CHECK_THROWS_AS(closed_form_weighted(spec({2}, {0}, {0, 1})), UnrepresentableParity);
}

TEST_CASE("random specs agree with the oracle and the displays") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> tdist(1, 4), wdist(1, 2), mudist(0, 12), edist(0, 2), coin(0, 2);
    int checked = 0;
    for (int it = 0; it < 500; ++it) {
        SummationSpec s;
        int t = tdist(rng);
        for (int i = 0; i < t; ++i) {
            s.w.push_back(wdist(rng));
            s.mu.push_back(frac(mudist(rng), 2));
        }
        unsigned mask1 = 0;
        for (int i = 0; i < t; ++i)
            if (s.w[static_cast<std::size_t>(i)] == 1) mask1 |= 1u << i;
        if (coin(rng) != 0) {
            // Random parity table; it may only see weight-1 residues.
            std::vector<Rational> base(std::size_t{1} << t);
            for (auto& v : base) v = frac(edist(rng), 2);
            s.e.resize(base.size());
            for (unsigned m = 0; m < base.size(); ++m) s.e[m] = base[m & mask1];
        }
        F f = closed_form(s);
        for (long z = s.weight_sum(); z <= 30; ++z) REQUIRE(f.evaluate(z) == brute_force(s, z));
        if (auto d = display_for(s)) CHECK_MESSAGE(leading_matches(f, *d), s.to_string());
        if (!f.is_zero())
            for (long double q0 : {2.0L, 3.0L, 5.0L})
                CHECK(f.evaluate(static_cast<long>(s.weight_sum()) + 1 + (it % 2)).evaluate(q0) >= 0);
        ++checked;
    }
    CHECK(checked == 500);
}
