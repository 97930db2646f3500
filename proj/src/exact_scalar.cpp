#include "qlab/exact_scalar.hpp"

#include <sstream>
#include <vector>

namespace qlab {

namespace {

// Integer k-th root if exact, else 0.
long long exact_root(long long q, int k) {
    long long r = static_cast<long long>(std::llround(std::pow(static_cast<double>(q), 1.0 / k)));
    for (long long cand = std::max(1LL, r - 2); cand <= r + 2; ++cand) {
        long long p = 1;
        for (int i = 0; i < k; ++i) p *= cand;
        if (p == q) return cand;
    }
    return 0;
}

struct BasisInfo {
    int deg;
    long long red;
};

BasisInfo basis_for(long long q) {
    if (q < 2) throw InvalidBase("ExactScalar base must be >= 2, got " + std::to_string(q));
    if (long long w = exact_root(q, 4); w != 0) return {1, w};
    if (long long w = exact_root(q, 2); w != 0) return {2, w};
    return {4, q};
}

} // namespace

std::string QuarterInt::str() const {
    if (quarters % 4 == 0) return std::to_string(quarters / 4);
    if (quarters % 2 == 0) return std::to_string(quarters / 2) + "/2";
    return std::to_string(quarters) + "/4";
}

ExactScalar::ExactScalar(long long base_q) : base_q_(base_q) {
    auto b = basis_for(base_q);
    deg_ = b.deg;
    red_ = b.red;
}

ExactScalar ExactScalar::zero(long long base_q) { return ExactScalar(base_q); }

ExactScalar ExactScalar::one(long long base_q) {
    ExactScalar r(base_q);
    r.c_[0] = 1;
    return r;
}

ExactScalar ExactScalar::from_rational(long long base_q, const Rational& v) {
    ExactScalar r(base_q);
    r.c_[0] = v;
    return r;
}

ExactScalar ExactScalar::from_int(long long base_q, long long v) {
    return from_rational(base_q, Rational(v));
}

ExactScalar ExactScalar::qpow(long long base_q, QuarterInt k) {
    ExactScalar r(base_q);
    long long m = k.quarters;
    long long a = m >= 0 ? m / 4 : -((-m + 3) / 4); // floor division
    int rem = static_cast<int>(m - 4 * a);          // 0..3
    Rational whole = rat_pow(base_q, a);
    switch (r.deg_) {
    case 4:
        r.c_[rem] = whole;
        break;
    case 2: {
        // q^{1/4} = sqrt(w): q^{rem/4} = w^{rem/2} * sqrt(w)^{rem%2}
        Rational f = whole * rat_pow(r.red_, rem / 2);
        r.c_[rem % 2] = f;
        break;
    }
    case 1:
        r.c_[0] = whole * rat_pow(r.red_, rem);
        break;
    }
    return r;
}

bool ExactScalar::is_zero() const {
    for (int i = 0; i < deg_; ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool ExactScalar::is_one() const {
    if (c_[0] != 1) return false;
    for (int i = 1; i < deg_; ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool ExactScalar::is_rational() const {
    for (int i = 1; i < deg_; ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational ExactScalar::as_rational() const {
    if (!is_rational()) throw OutOfRange("ExactScalar value is irrational: " + str());
    return c_[0];
}

void ExactScalar::check_same_base(const ExactScalar& o) const {
    if (base_q_ != o.base_q_)
        throw BaseMismatch("ExactScalar bases differ: " + std::to_string(base_q_) + " vs " +
                           std::to_string(o.base_q_));
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
    check_same_base(o);
    ExactScalar r(base_q_);
    for (int i = 0; i < deg_; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const {
    check_same_base(o);
    ExactScalar r(base_q_);
    for (int i = 0; i < deg_; ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar r(base_q_);
    for (int i = 0; i < deg_; ++i) r.c_[i] = -c_[i];
    return r;
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
    check_same_base(o);
    ExactScalar r(base_q_);
    if (deg_ == 1) {
        r.c_[0] = c_[0] * o.c_[0];
        return r;
    }
    Rational red(red_);
    for (int i = 0; i < deg_; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < deg_; ++j) {
            if (o.c_[j] == 0) continue;
            int k = i + j;
            Rational term = c_[i] * o.c_[j];
            if (k >= deg_) {
                k -= deg_;
                term *= red; // s^deg = red
            }
            r.c_[k] += term;
        }
    }
    return r;
}

ExactScalar ExactScalar::inv() const {
    if (is_zero()) throw DivisionByZero("ExactScalar inverse of zero");
    if (is_rational()) return from_rational(base_q_, Rational(1) / c_[0]);
    // Solve a*x = 1 over the coefficient basis: columns of M are a*s^j.
    int n = deg_;
    std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n + 1));
    for (int j = 0; j < n; ++j) {
        // a * s^j: shift coefficients, reducing s^deg = red
        for (int i = 0; i < n; ++i) {
            int k = i + j;
            Rational v = c_[i];
            if (k >= n) {
                k -= n;
                v *= Rational(red_);
            }
            M[k][j] += v;
        }
    }
    M[0][n] = 1; // right-hand side e_0
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
            if (M[row][col] != 0) { piv = row; break; }
        if (piv < 0) throw NonInvertible("ExactScalar not invertible: " + str());
        std::swap(M[col], M[piv]);
        Rational d = M[col][col];
        for (int j = col; j <= n; ++j) M[col][j] /= d;
        for (int row = 0; row < n; ++row) {
            if (row == col || M[row][col] == 0) continue;
            Rational f = M[row][col];
            for (int j = col; j <= n; ++j) M[row][j] -= f * M[col][j];
        }
    }
    ExactScalar r(base_q_);
    for (int i = 0; i < n; ++i) r.c_[i] = M[i][n];
    return r;
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const { return *this * o.inv(); }

ExactScalar ExactScalar::scaled(const Rational& v) const {
    ExactScalar r(base_q_);
    for (int i = 0; i < deg_; ++i) r.c_[i] = c_[i] * v;
    return r;
}

bool ExactScalar::operator==(const ExactScalar& o) const {
    check_same_base(o);
    for (int i = 0; i < deg_; ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

double ExactScalar::eval() const {
    double s = 0;
    double root;
    switch (deg_) {
    case 1: return rat_to_double(c_[0]);
    case 2: root = std::sqrt(static_cast<double>(red_)); break;
    default: root = std::pow(static_cast<double>(base_q_), 0.25); break;
    }
    double p = 1;
    for (int i = 0; i < deg_; ++i) {
        s += rat_to_double(c_[i]) * p;
        p *= root;
    }
    return s;
}

std::string ExactScalar::serialize() const {
    // Map the reduced basis onto the degree-4 basis {1, q^{1/4}, q^{1/2}, q^{3/4}}.
    std::array<Rational, 4> d{};
    switch (deg_) {
    case 4: d = c_; break;
    case 2: d[0] = c_[0]; d[1] = c_[1]; break;  // sqrt(w) is exactly q^{1/4}
    case 1: d[0] = c_[0]; break;
    }
    return rat_to_string(d[0]) + "|" + rat_to_string(d[1]) + "|" + rat_to_string(d[2]) + "|" +
           rat_to_string(d[3]);
}

ExactScalar ExactScalar::deserialize(long long base_q, const std::string& s) {
    std::array<Rational, 4> d;
    size_t start = 0;
    for (int i = 0; i < 4; ++i) {
        size_t end = i < 3 ? s.find('|', start) : s.size();
        if (end == std::string::npos) throw IoError("bad ExactScalar encoding: " + s);
        d[i] = rat_from_string(s.substr(start, end - start));
        start = end + 1;
    }
    ExactScalar r(base_q);
    switch (r.deg_) {
    case 4:
        r.c_ = d;
        break;
    case 2: {
        Rational w(r.red_);
        r.c_[0] = d[0] + w * d[2];
        r.c_[1] = d[1] + w * d[3];
        break;
    }
    case 1: {
        Rational w(r.red_);
        r.c_[0] = d[0] + w * d[1] + w * w * d[2] + w * w * w * d[3];
        break;
    }
    }
    return r;
}

std::string ExactScalar::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < deg_; ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << c_[i];
        if (i > 0) os << "*s^" << i;
        first = false;
    }
    return os.str();
}

ExactScalar scalar_new(long long base_q, QuarterInt k) { return ExactScalar::qpow(base_q, k); }
ExactScalar scalar_mul(const ExactScalar& a, const ExactScalar& b) { return a * b; }
ExactScalar scalar_inv(const ExactScalar& a) { return a.inv(); }

Int gaussian_binomial(int n, int k, long long q) {
    if (k < 0 || n < 0 || k > n) throw OutOfRange("gaussian_binomial: need 0 <= k <= n");
    if (q < 2) throw InvalidBase("gaussian_binomial: q must be >= 2");
    Int num = 1, den = 1;
    for (int i = 1; i <= k; ++i) {
        num *= int_pow(q, n - k + i) - 1;
        den *= int_pow(q, i) - 1;
    }
    Int quot, rem;
    boost::multiprecision::divide_qr(num, den, quot, rem);
    if (rem != 0) throw Error("gaussian_binomial: non-exact division (internal)");
    return quot;
}

ExactScalar qbracket_sym(long long x, long long base_q) {
    // [x] = q^{x-1} + q^{x-3} + ... + q^{1-x}; odd number of terms for odd x
    ExactScalar r = ExactScalar::zero(base_q);
    long long ax = x >= 0 ? x : -x;
    for (long long j = 0; j < ax; ++j)
        r += ExactScalar::qpow(base_q, QuarterInt::integer(ax - 1 - 2 * j));
    return x >= 0 ? r : -r;
}

Int qbracket_gauss(long long x, long long q) {
    if (x < 0) throw OutOfRange("qbracket_gauss: x must be >= 0");
    Int r = 0;
    for (long long j = 0; j < x; ++j) r += int_pow(q, j);
    return r;
}

} // namespace qlab
