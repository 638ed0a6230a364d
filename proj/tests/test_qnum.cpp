#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "svol/errors.hpp"
#include "svol/qnum.hpp"

#include <cmath>
#include <random>

using namespace svol;

namespace {

QNumber q() { return QNumber::q(); }
QNumber qp(long a, long b = 1) { return QNumber::q_pow(frac(a, b)); }

QNumber random_qnumber(std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3), expo(0, 4), lev(1, 2), kind(0, 3);
    long h = lev(rng);
    QNumber num;
    for (int i = 0; i < 3; ++i) num += QNumber(coef(rng)) * qp(expo(rng), h);
    if (num.is_zero()) num = QNumber(1);
    // Denominators built only from factors that cannot vanish for q > 1.
    QNumber den = qp(expo(rng), h);
    int k = kind(rng);
    if (k == 1) den *= qp(expo(rng) + 1, h) - QNumber(1);
    if (k == 2) den *= qp(expo(rng) + 1, h) + QNumber(1);
    return num / den;
}

}  // namespace

TEST_CASE("field operations") {
    CHECK((q() - QNumber(1)).inverse() * (q() - QNumber(1)) == QNumber(1));
    CHECK((qp(1, 2) + QNumber(1)) * (qp(1, 2) - QNumber(1)) == q() - QNumber(1));
    CHECK(QNumber::qbracket(2) * QNumber::qbracket(4) == QNumber::polynomial({1, 2, 2, 2, 1}));
    CHECK_THROWS_AS(QNumber(1) / QNumber(), DivisionByZeroQNumber);
}

TEST_CASE("evaluation") {
    CHECK((q() - QNumber(1)).inverse().evaluate(2.0L) == doctest::Approx(1.0));
    CHECK((qp(1, 2) + QNumber(1)).evaluate(4.0L) == doctest::Approx(3.0));
    CHECK(QNumber::qbracket(4).evaluate(2.0L) == doctest::Approx(15.0));
    CHECK_THROWS_AS(((q() - QNumber(2)).inverse()).evaluate(2.0L), PoleAtSample);
    CHECK(QNumber::qbracket(4).evaluate_exact(Rational(2)) == 15);
}

TEST_CASE("primarity and canonical levels") {
    CHECK((q() * q() + QNumber(1)).is_primary());
    CHECK_FALSE(qp(1, 2).is_primary());
    CHECK((qp(1, 2) * qp(1, 2)).is_primary());
    CHECK(qp(1, 2) * qp(1, 2) == q());
    auto l = qp(3, 2).lift(4);
    CHECK(l.level == 4);
    CHECK(QNumber::canonicalize(l) == qp(3, 2));
}

TEST_CASE("printing") {
    CHECK(qp(5, 2).to_string() == "q^{5/2}");
    CHECK((q() - QNumber(1)).inverse().to_string() == "1 / (q - 1)");
    CHECK(QNumber::qbracket(3).to_string() == "q^2 + q + 1");
}

TEST_CASE("random arithmetic agrees with sampled evaluation") {
    std::mt19937 rng(7);
    for (int it = 0; it < 300; ++it) {
        QNumber a = random_qnumber(rng), b = random_qnumber(rng);
        for (long double q0 : {2.0L, 3.0L, 5.0L}) {
            long double x = a.evaluate(q0), y = b.evaluate(q0);
            CHECK((a + b).evaluate(q0) == doctest::Approx(static_cast<double>(x + y)).epsilon(1e-9));
            CHECK((a - b).evaluate(q0) == doctest::Approx(static_cast<double>(x - y)).epsilon(1e-9));
            CHECK((a * b).evaluate(q0) == doctest::Approx(static_cast<double>(x * y)).epsilon(1e-9));
            if (std::fabs(static_cast<double>(y)) > 1e-6)
                CHECK((a / b).evaluate(q0) == doctest::Approx(static_cast<double>(x / y)).epsilon(1e-9));
        }
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
        CHECK(QNumber::canonicalize(a.lift(a.level() * 2)) == a);
    }
}

TEST_CASE("parity q-numbers") {
    QNumber even = q() + QNumber(1), odd = qp(2) - QNumber(3);
    auto p = ParityQNumber::from_samples(even, odd);
    CHECK(p.value_at(4) == even);
    CHECK(p.value_at(7) == odd);
    CHECK(p.value_even() == even);
    CHECK(p.value_odd() == odd);
}
