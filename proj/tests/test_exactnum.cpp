#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "linkfol/exactnum.hpp"
#include "linkfol/parse.hpp"

using namespace linkfol;

namespace {
QuadraticNumber qn(long long a, long long b, long long den, long long d) {
    return QuadraticNumber(Rational(a, den), Rational(b, den), d);
}

std::mt19937_64 rng(20240517);

QuadraticNumber random_qn(long long d) {
    std::uniform_int_distribution<long long> num(-6, 6);
    std::uniform_int_distribution<long long> den(1, 4);
    return QuadraticNumber(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), d);
}
} // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
    Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational(2, 3).inv() == Rational(3, 2));
    CHECK_THROWS_AS(Rational(0).inv(), ZeroInverse);
    CHECK(Rational(-7, 3).str() == "-7/3");
    CHECK(Rational(5).str() == "5");
}

TEST_CASE("squarefree extraction") {
    auto [s, m] = squarefree_part(BigInt(-12));
    CHECK(s == -3);
    CHECK(m == 2);
    auto [s2, m2] = squarefree_part(BigInt(49));
    CHECK(s2 == 1);
    CHECK(m2 == 7);
}

TEST_CASE("unit norm product: the two roots of t^2 - t + 1 multiply to 1") {
    QuadraticNumber a = qn(1, 1, 2, -3);   // (1+sqrt(-3))/2
    QuadraticNumber b = qn(1, -1, 2, -3);  // (1-sqrt(-3))/2
    CHECK(qn_mul(a, b).is_one());
    CHECK(qn_inv(a) == b);
    CHECK(qn_norm(a) == Rational(1));
}

TEST_CASE("imaginary unit") {
    QuadraticNumber i = qn(0, 1, 1, -1);
    CHECK(qn_add(i, qn_neg(i)).is_zero());
    CHECK(qn_norm(i) == Rational(1));
    CHECK((i * i) == QuadraticNumber(-1));
}

TEST_CASE("pure rational norm") {
    CHECK(qn_norm(QuadraticNumber(Rational(3), Rational(0), 5)) == Rational(9));
}

TEST_CASE("field mismatch is detected, rational operands coerce") {
    QuadraticNumber a = qn(0, 1, 1, 2);
    QuadraticNumber b = qn(0, 1, 1, 3);
    CHECK_THROWS_AS(a * b, FieldMismatch);
    CHECK((a + QuadraticNumber(2)) == qn(2, 1, 1, 2));
}

TEST_CASE("discriminant normalization absorbs square factors") {
    QuadraticNumber x(Rational(0), Rational(1), -4);  // sqrt(-4) = 2 sqrt(-1)
    CHECK(x.discriminant() == -1);
    CHECK(x.radical_part() == Rational(2));
    QuadraticNumber y(Rational(3), Rational(5), 1);  // sqrt(1) collapses
    CHECK(y.is_rational());
    CHECK(y.rational_part() == Rational(8));
}

TEST_CASE("root of unity orders") {
    QuadraticNumber lam = qn(1, 1, 2, -3);
    CHECK(root_of_unity_order(-lam) == 6);
    CHECK(root_of_unity_order(QuadraticNumber(1)) == 1);
    CHECK(root_of_unity_order(qn(1, 1, 2, 5)) == std::nullopt);  // golden ratio grows
    QuadraticNumber i = qn(0, 1, 1, -1);
    CHECK(root_of_unity_order(i) == 4);
    // order k means x^k = 1 and no smaller power is 1
    QuadraticNumber p(1);
    for (int j = 1; j < 6; ++j) {
        p = p * (-lam);
        CHECK(!p.is_one());
    }
    CHECK((p * (-lam)).is_one());
}

TEST_CASE("solve_monic_quadratic") {
    SUBCASE("t^2 - t + 1: the sixth-root pair") {
        auto [r1, r2] = solve_monic_quadratic(Rational(-1), Rational(1));
        CHECK(r1 == qn(1, 1, 2, -3));
        CHECK(r2 == qn(1, -1, 2, -3));
    }
    SUBCASE("perfect square discriminant gives rational double root") {
        auto [r1, r2] = solve_monic_quadratic(Rational(2), Rational(1));
        CHECK(r1 == QuadraticNumber(-1));
        CHECK(r2 == QuadraticNumber(-1));
        CHECK(r1.is_rational());
    }
    SUBCASE("t^2 - 5t + 1") {
        auto [r1, r2] = solve_monic_quadratic(Rational(-5), Rational(1));
        // check by substitution
        for (const auto& r : {r1, r2})
            CHECK((r * r - QuadraticNumber(5) * r + QuadraticNumber(1)).is_zero());
        CHECK(r1.discriminant() == 21);
    }
    SUBCASE("vieta holds exactly on random monic quadratics") {
        std::uniform_int_distribution<long long> coeff(-9, 9);
        std::uniform_int_distribution<long long> den(1, 5);
        for (int trial = 0; trial < 200; ++trial) {
            Rational p(coeff(rng), den(rng)), q(coeff(rng), den(rng));
            auto [r1, r2] = solve_monic_quadratic(p, q);
            CHECK((r1 + r2) == QuadraticNumber(-p));
            CHECK((r1 * r2) == QuadraticNumber(q));
        }
    }
}

TEST_CASE("multiplicativity of the norm on random samples") {
    for (int trial = 0; trial < 200; ++trial) {
        QuadraticNumber x = random_qn(-3), y = random_qn(-3);
        CHECK(qn_norm(x * y) == qn_norm(x) * qn_norm(y));
    }
    for (int trial = 0; trial < 100; ++trial) {
        QuadraticNumber x = random_qn(7), y = random_qn(7);
        CHECK(qn_norm(x * y) == qn_norm(x) * qn_norm(y));
    }
}

TEST_CASE("x * inv(x) = 1 for nonzero samples") {
    for (int trial = 0; trial < 200; ++trial) {
        QuadraticNumber x = random_qn(-5);
        if (x.is_zero() || x.norm_q().is_zero()) continue;
        CHECK((x * x.inv()).is_one());
    }
    CHECK_THROWS_AS(QuadraticNumber(0).inv(), ZeroInverse);
}

TEST_CASE("textual round-trip of exact numbers") {
    std::vector<QuadraticNumber> samples = {
        QuadraticNumber(0),
        QuadraticNumber(Rational(22, 7)),
        QuadraticNumber(Rational(-3)),
        qn(1, 1, 2, -3),
        qn(1, -1, 2, -3),
        qn(0, 1, 1, -1),
        qn(0, -2, 3, 5),
        qn(-4, 7, 6, 21),
    };
    for (const auto& v : samples) {
        CAPTURE(v.str());
        CHECK(parse_quadratic(v.str()) == v);
    }
    for (int trial = 0; trial < 100; ++trial) {
        QuadraticNumber v = random_qn(-7);
        CHECK(parse_quadratic(v.str()) == v);
    }
}

TEST_CASE("sqrt_in_field") {
    CHECK(sqrt_in_field(QuadraticNumber(Rational(9, 4))) == QuadraticNumber(Rational(3, 2)));
    // sqrt of a nonsquare rational generates its own extension
    auto r = sqrt_in_field(QuadraticNumber(Rational(8)));
    REQUIRE(r.has_value());
    CHECK((*r * *r) == QuadraticNumber(Rational(8)));
    // (1 + sqrt(2))^2 = 3 + 2 sqrt(2)
    auto s = sqrt_in_field(qn(3, 2, 1, 2));
    REQUIRE(s.has_value());
    CHECK((*s * *s) == qn(3, 2, 1, 2));
    CHECK(!sqrt_in_field(qn(1, 1, 1, 2)).has_value());
}

TEST_CASE("cube roots of rationals") {
    CHECK(cbrt_rational(Rational(27, 8)) == Rational(3, 2));
    CHECK(cbrt_rational(Rational(-64)) == Rational(-4));
    CHECK(!cbrt_rational(Rational(2)).has_value());
}
