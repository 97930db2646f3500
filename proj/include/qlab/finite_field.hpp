#pragma once

#include <cstdint>
#include <vector>

#include "qlab/errors.hpp"

namespace qlab {

/// F_q for a prime power q <= 64, table driven.
///
/// Elements are integers in [0, q). For extension fields the index encodes the
/// polynomial-basis coordinates base p (index = sum c_i p^i with c_i the
/// coefficient of alpha^i), so indices 0..p-1 are exactly the prime subfield.
/// The modulus is the lexicographically least monic irreducible polynomial,
/// which makes every table reproducible across runs and platforms.
class Field {
public:
    static Field make(long long q);

    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }
    /// Modulus coefficients c_0..c_{m-1} of x^m + c_{m-1}x^{m-1} + ... + c_0 (empty for m=1).
    const std::vector<int>& modulus() const { return modulus_; }

    uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * q_ + neg_[b]]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t inv(uint8_t a) const;
    uint8_t frobenius(uint8_t a) const { return frob_[a]; }
    uint8_t pow(uint8_t a, long long e) const;

    bool is_square(uint8_t a) const { return square_[a] != 0; }
    /// Absolute trace Tr(a) = a + a^p + ... + a^{p^{m-1}}, an element of F_p.
    uint8_t abs_trace(uint8_t a) const { return trace_[a]; }

private:
    Field() = default;
    void build_tables();
    void check_axioms() const;

    int p_ = 0, m_ = 0, q_ = 0;
    std::vector<int> modulus_;
    std::vector<uint8_t> add_, mul_, neg_, inv_, frob_, trace_, square_;
};

/// Shared immutable field instance for q (cached; thread safe).
const Field& field_of(long long q);

/// The spec's field_new operation.
inline Field field_new(long long q) { return Field::make(q); }

bool is_prime_power(long long q, int* p_out = nullptr, int* m_out = nullptr);

} // namespace qlab
