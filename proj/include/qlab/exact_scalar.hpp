#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "qlab/rational.hpp"

namespace qlab {

/// Exponent with denominator 4, kept as exact integer quarters.
struct QuarterInt {
    long long quarters = 0;

    static QuarterInt integer(long long n) { return {4 * n}; }
    static QuarterInt half(long long n) { return {2 * n}; }
    static QuarterInt quarter(long long n) { return {n}; }

    QuarterInt operator+(QuarterInt o) const { return {quarters + o.quarters}; }
    QuarterInt operator-(QuarterInt o) const { return {quarters - o.quarters}; }
    QuarterInt operator-() const { return {-quarters}; }
    QuarterInt operator*(long long n) const { return {quarters * n}; }
    bool operator==(const QuarterInt&) const = default;

    bool is_integer() const { return quarters % 4 == 0; }
    double value() const { return static_cast<double>(quarters) / 4.0; }
    std::string str() const;
};

/// Element of Q(q^{1/4}) for a fixed integer base q >= 2.
///
/// The stored basis is reduced by the base: if q = w^4 everything is rational,
/// if q = w^2 the basis is {1, sqrt(w)}, otherwise {1, s, s^2, s^3} with s^4 = q.
/// x^4 - q is irreducible for any q that is not a perfect square, so in every
/// case the scalars form a field and inversion is total on nonzero values.
class ExactScalar {
public:
    static ExactScalar zero(long long base_q);
    static ExactScalar one(long long base_q);
    static ExactScalar from_rational(long long base_q, const Rational& r);
    static ExactScalar from_int(long long base_q, long long v);
    /// q^k for a quarter-integer exponent k (the spec's scalar_new).
    static ExactScalar qpow(long long base_q, QuarterInt k);

    long long base() const { return base_q_; }
    int degree() const { return deg_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Value as a rational; throws NonInvertible-free OutOfRange if irrational.
    Rational as_rational() const;

    ExactScalar operator+(const ExactScalar& o) const;
    ExactScalar operator-(const ExactScalar& o) const;
    ExactScalar operator-() const;
    ExactScalar operator*(const ExactScalar& o) const;
    ExactScalar operator/(const ExactScalar& o) const;
    ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
    ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
    ExactScalar inv() const;
    ExactScalar scaled(const Rational& r) const;
    bool operator==(const ExactScalar& o) const;
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }

    double eval() const;

    /// "c0|c1|c2|c3" over the degree-4 basis {1, q^{1/4}, q^{1/2}, q^{3/4}};
    /// reduced bases zero-pad. Bit-exact round trip with deserialize().
    std::string serialize() const;
    static ExactScalar deserialize(long long base_q, const std::string& s);

    /// Human-oriented rendering, e.g. "1/2 + 3/2*s^2".
    std::string str() const;

private:
    explicit ExactScalar(long long base_q);
    void check_same_base(const ExactScalar& o) const;

    long long base_q_;
    int deg_;        // 1, 2 or 4
    long long red_;  // s^deg_ = red_ (q when deg 4, w when deg 2, q^{1/4} when deg 1)
    std::array<Rational, 4> c_;
};

ExactScalar scalar_new(long long base_q, QuarterInt k);
ExactScalar scalar_mul(const ExactScalar& a, const ExactScalar& b);
ExactScalar scalar_inv(const ExactScalar& a);

/// Number of k-dimensional subspaces of F_q^n, as an exact integer.
Int gaussian_binomial(int n, int k, long long q);

/// Symmetric q-number (q^x - q^{-x}) / (q - q^{-1}) in the exact scalar ring.
ExactScalar qbracket_sym(long long x, long long base_q);

/// Gaussian q-number (q^x - 1) / (q - 1) = 1 + q + ... + q^{x-1}.
Int qbracket_gauss(long long x, long long q);

} // namespace qlab
