#include <doctest.h>

#include "qlab/finite_field.hpp"

using namespace qlab;

TEST_CASE("prime field arithmetic") {
    const Field& F5 = field_of(5);
    CHECK(F5.mul(2, 3) == 1);
    CHECK(F5.add(4, 3) == 2);
    CHECK(F5.inv(2) == 3);
    CHECK_THROWS_AS(F5.inv(0), DivisionByZero);
}

TEST_CASE("F_4 uses the modulus x^2 + x + 1") {
    const Field& F4 = field_of(4);
    CHECK(F4.modulus() == std::vector<int>{1, 1});
    // alpha has index 2 (coefficients (0,1)); alpha^2 = alpha + 1 has index 3
    CHECK(F4.mul(2, 2) == 3);
    CHECK(F4.abs_trace(2) == 1); // Tr(alpha) = alpha + alpha^2 = 1
    CHECK(F4.abs_trace(0) == 0);
}

TEST_CASE("not a prime power") {
    CHECK_THROWS_AS(field_new(6), NotPrimePower);
    CHECK_THROWS_AS(field_new(1), NotPrimePower);
    CHECK_THROWS_AS(field_new(100), NotPrimePower); // over the q <= 64 cap
}

TEST_CASE("squares") {
    const Field& F3 = field_of(3);
    CHECK(F3.is_square(0));
    CHECK(F3.is_square(1));
    CHECK_FALSE(F3.is_square(2));
    const Field& F4 = field_of(4);
    for (int a = 0; a < 4; ++a) CHECK(F4.is_square(static_cast<uint8_t>(a)));
    // odd q: exactly (q+1)/2 squares including 0
    for (long long q : {3, 5, 7, 9, 25}) {
        const Field& F = field_of(q);
        int count = 0;
        for (int a = 0; a < q; ++a) count += F.is_square(static_cast<uint8_t>(a));
        CHECK(count == (q + 1) / 2);
    }
}

TEST_CASE("frobenius and trace properties") {
    for (long long q : {2, 3, 4, 8, 9, 16}) {
        const Field& F = field_of(q);
        // Frobenius additive, exhaustively
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                CHECK(F.frobenius(F.add(static_cast<uint8_t>(a), static_cast<uint8_t>(b))) ==
                      F.add(F.frobenius(static_cast<uint8_t>(a)),
                            F.frobenius(static_cast<uint8_t>(b))));
        // trace F_p-linear and surjective onto F_p
        std::vector<bool> hit(F.p(), false);
        for (int a = 0; a < q; ++a) {
            uint8_t t = F.abs_trace(static_cast<uint8_t>(a));
            CHECK(t < F.p());
            hit[t] = true;
            for (int b = 0; b < q; ++b)
                CHECK(F.abs_trace(F.add(static_cast<uint8_t>(a), static_cast<uint8_t>(b))) ==
                      (F.abs_trace(static_cast<uint8_t>(a)) +
                       F.abs_trace(static_cast<uint8_t>(b))) % F.p());
        }
        for (int t = 0; t < F.p(); ++t) CHECK(hit[t]);
        // inverses, exhaustively
        for (int a = 1; a < q; ++a)
            CHECK(F.mul(static_cast<uint8_t>(a), F.inv(static_cast<uint8_t>(a))) == 1);
    }
}
