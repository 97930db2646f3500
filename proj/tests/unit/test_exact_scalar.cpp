#include <doctest.h>

#include <cmath>
#include <random>

#include "qlab/exact_scalar.hpp"

using namespace qlab;

TEST_CASE("monomials and the defining relation") {
    CHECK(scalar_new(2, QuarterInt::integer(0)).is_one());
    ExactScalar r2 = scalar_new(2, QuarterInt::half(1)); // q^{1/2} = s^2 at q=2
    CHECK(r2.eval() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(r2.serialize() == "0/1|0/1|1/1|0/1");

    // s * s^3 = q
    ExactScalar s = scalar_new(2, QuarterInt::quarter(1));
    ExactScalar s3 = scalar_new(2, QuarterInt::quarter(3));
    CHECK(s * s3 == ExactScalar::from_int(2, 2));
    // (s^2)^2 = 2
    CHECK(r2 * r2 == ExactScalar::from_int(2, 2));
    // (1+s)(1-s) = 1 - s^2
    ExactScalar one = ExactScalar::one(2);
    CHECK((one + s) * (one - s) == one - s * s);
}

TEST_CASE("reduced bases") {
    // q = 4 = 2^2: q^{1/4} = sqrt(2), degree-2 basis
    ExactScalar a = scalar_new(4, QuarterInt::quarter(1));
    CHECK(a.degree() == 2);
    CHECK(a.eval() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(a * a == ExactScalar::from_int(4, 2));
    // q = 16 = 2^4: everything rational
    ExactScalar b = scalar_new(16, QuarterInt::quarter(1));
    CHECK(b.degree() == 1);
    CHECK(b == ExactScalar::from_int(16, 2));
    CHECK(b.serialize() == "2/1|0/1|0/1|0/1");
    // q = 3: full degree 4
    CHECK(scalar_new(3, QuarterInt::quarter(1)).degree() == 4);
}

TEST_CASE("inversion") {
    ExactScalar half = scalar_new(2, QuarterInt::half(1)).inv();
    CHECK(half == scalar_new(2, QuarterInt::half(-1)));
    CHECK((half * scalar_new(2, QuarterInt::half(1))).is_one());

    // (1 + sqrt 2)^-1 = sqrt 2 - 1
    ExactScalar r2 = scalar_new(2, QuarterInt::half(1));
    ExactScalar v = ExactScalar::one(2) + r2;
    CHECK(v.inv() == r2 - ExactScalar::one(2));
    CHECK((v * v.inv()).is_one());

    CHECK_THROWS_AS(ExactScalar::zero(2).inv(), DivisionByZero);
    CHECK_THROWS_AS(scalar_new(1, QuarterInt::integer(0)), InvalidBase);
    CHECK_THROWS_AS(scalar_new(2, QuarterInt::integer(0)) +
                        scalar_new(3, QuarterInt::integer(0)),
                    BaseMismatch);
}

TEST_CASE("exponent additivity and ring axioms on random samples") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long long> exp_dist(-8 * 4, 8 * 4);
    std::uniform_int_distribution<int> coef_dist(-5, 5);
    for (long long q : {2, 3, 4, 9, 16}) {
        for (int trial = 0; trial < 50; ++trial) {
            QuarterInt a{exp_dist(rng)}, b{exp_dist(rng)};
            CHECK(scalar_new(q, a) * scalar_new(q, b) == scalar_new(q, a + b));
        }
        auto rand_scalar = [&] {
            ExactScalar v = ExactScalar::zero(q);
            for (int t = 0; t < 4; ++t)
                v += scalar_new(q, QuarterInt::quarter(t)).scaled(Rational(coef_dist(rng)));
            return v;
        };
        for (int trial = 0; trial < 30; ++trial) {
            ExactScalar x = rand_scalar(), y = rand_scalar(), z = rand_scalar();
            CHECK((x + y) * z == x * z + y * z);
            CHECK(x * (y * z) == (x * y) * z);
            CHECK(x * y == y * x);
            // evaluation is a ring homomorphism
            double lhs = (x * y + z).eval();
            double rhs = x.eval() * y.eval() + z.eval();
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
            if (!x.is_zero()) CHECK((x * x.inv()).is_one());
        }
    }
}

TEST_CASE("serialization round trip") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    for (long long q : {2, 3, 4, 5, 16}) {
        for (int trial = 0; trial < 40; ++trial) {
            ExactScalar v = ExactScalar::zero(q);
            for (int t = 0; t < 4; ++t)
                v += scalar_new(q, QuarterInt::quarter(t))
                         .scaled(Rational(coef(rng), den(rng)));
            CHECK(ExactScalar::deserialize(q, v.serialize()) == v);
        }
    }
}

TEST_CASE("gaussian binomials") {
    CHECK(gaussian_binomial(2, 1, 2) == 3);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(5, 0, 7) == 1);
    CHECK(gaussian_binomial(3, 1, 3) == 13);
    CHECK_THROWS_AS(gaussian_binomial(2, 3, 2), OutOfRange);
}

TEST_CASE("q-brackets") {
    CHECK(qbracket_sym(1, 2).is_one());
    CHECK(qbracket_sym(0, 2).is_zero());
    // [2]_q = q + q^-1 = 5/2 at q = 2
    CHECK(qbracket_sym(2, 2) == ExactScalar::from_rational(2, Rational(5, 2)));
    CHECK(qbracket_sym(-2, 2) == -qbracket_sym(2, 2));

    CHECK(qbracket_gauss(2, 2) == 3);
    CHECK(qbracket_gauss(0, 5) == 0);
    CHECK(qbracket_gauss(3, 3) == 13);
}
