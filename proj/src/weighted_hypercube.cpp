#include "qlab/weighted_hypercube.hpp"

namespace qlab {

CubeContext make_cube_context(int n, long long base_q, QuarterInt t) {
    if (n < 0 || n > 20) throw OutOfRange("cube dimension out of range");
    if (base_q < 2) throw InvalidBase("cube base must be >= 2");
    CubeContext ctx;
    ctx.n = n;
    ctx.base_q = base_q;
    ctx.t = t;
    ctx.labels.reserve(ctx.size());
    for (int v = 0; v < ctx.size(); ++v) ctx.labels.push_back(cube_label(n, v));
    return ctx;
}

std::string cube_label(int n, int vertex) {
    std::string s(n, '0');
    for (int k = 1; k <= n; ++k)
        if (cube_bit(n, vertex, k)) s[k - 1] = '1';
    return s;
}

int cube_bit(int n, int vertex, int k) { return (vertex >> (n - k)) & 1; }

Operator build_Aq(const CubeContext& ctx) {
    Operator A(ctx.base_q, ctx.labels, ctx.labels);
    const int n = ctx.n;
    for (int x = 0; x < ctx.size(); ++x) {
        for (int i = 1; i <= n; ++i) {
            int y = x ^ (1 << (n - i));
            long long tail = 0;
            for (int j = i + 1; j <= n; ++j) tail += cube_bit(n, x, j);
            // exponent (i - n + 2*tail) * t; x and y agree beyond i so the
            // matrix is symmetric by construction
            QuarterInt e = ctx.t * (i - n + 2 * tail);
            A.set(y, x, ExactScalar::qpow(ctx.base_q, e));
        }
    }
    return A;
}

namespace {

// Plain Kronecker product on row-major scalar grids.
struct Grid {
    int n = 1;
    std::vector<ExactScalar> e;
};

Grid kron(const Grid& a, const Grid& b, long long q) {
    Grid r;
    r.n = a.n * b.n;
    r.e.assign(static_cast<size_t>(r.n) * r.n, ExactScalar::zero(q));
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            if (a.e[i * a.n + j].is_zero()) continue;
            for (int k = 0; k < b.n; ++k)
                for (int l = 0; l < b.n; ++l) {
                    if (b.e[k * b.n + l].is_zero()) continue;
                    r.e[static_cast<size_t>(i * b.n + k) * r.n + (j * b.n + l)] =
                        a.e[i * a.n + j] * b.e[k * b.n + l];
                }
        }
    return r;
}

} // namespace

Operator build_Aq_tensor(const CubeContext& ctx) {
    const long long q = ctx.base_q;
    ExactScalar z = ExactScalar::zero(q), one = ExactScalar::one(q);
    Grid id2{2, {one, z, z, one}};
    Grid sx{2, {z, one, one, z}};
    // q^{-sigma_z} at scale t: diag((q^t)^{-1}, (q^t)^{+1})
    Grid dz{2,
            {ExactScalar::qpow(q, -ctx.t), z, z, ExactScalar::qpow(q, ctx.t)}};

    Operator A(q, ctx.labels, ctx.labels);
    for (int i = 1; i <= ctx.n; ++i) {
        Grid term{1, {one}};
        for (int j = 1; j <= ctx.n; ++j)
            term = kron(term, j == i ? sx : (j < i ? id2 : dz), q);
        for (int r = 0; r < ctx.size(); ++r)
            for (int c = 0; c < ctx.size(); ++c)
                if (!term.e[static_cast<size_t>(r) * ctx.size() + c].is_zero())
                    A.add_to(r, c, term.e[static_cast<size_t>(r) * ctx.size() + c]);
    }
    return A;
}

Operator reversal_permutation(const CubeContext& ctx) {
    Operator P(ctx.base_q, ctx.labels, ctx.labels);
    ExactScalar one = ExactScalar::one(ctx.base_q);
    for (int x = 0; x < ctx.size(); ++x) {
        int y = 0;
        for (int k = 1; k <= ctx.n; ++k)
            if (cube_bit(ctx.n, x, k)) y |= 1 << (k - 1);
        P.set(y, x, one); // P|x> = |reverse(x)>
    }
    return P;
}

std::vector<BinMat> hamming_distance_matrices(int n) {
    if (n < 0 || n > 12) throw LimitExceeded("hamming_distance_matrices: n must be <= 12");
    const int sz = 1 << n;
    std::vector<BinMat> A(n + 1, BinMat(sz));
    for (int x = 0; x < sz; ++x)
        for (int y = 0; y < sz; ++y) A[__builtin_popcount(x ^ y)].set(x, y, 1);
    return A;
}

Report check_hamming_recurrence(int n) {
    Report rep;
    auto A = hamming_distance_matrices(n);
    for (int i = 0; i <= n; ++i) {
        IMat lhs = mul(A[1], A[i]);
        IMat rhs(lhs.size());
        for (int r = 0; r < lhs.size(); ++r)
            for (int c = 0; c < lhs.size(); ++c) {
                long long v = 0;
                if (i + 1 <= n) v += static_cast<long long>(i + 1) * A[i + 1].at(r, c);
                if (i - 1 >= 0) v += static_cast<long long>(n - i + 1) * A[i - 1].at(r, c);
                rhs.at(r, c) = v;
            }
        rep.check_true("A1*A" + std::to_string(i) + " three-term", lhs == rhs);
    }
    return rep;
}

Rational krawtchouk(int i, const Rational& x, const Rational& p, int n) {
    if (i < 0 || i > n) throw OutOfRange("krawtchouk: need 0 <= i <= n");
    Rational sum = 0, term;
    for (int k = 0; k <= i; ++k) {
        Rational num = 1, den = 1;
        for (int l = 0; l < k; ++l) {
            num *= Rational(-i + l) * (-x + l);
            den *= Rational(-n + l) * (l + 1);
        }
        term = num / den;
        Rational pk = 1;
        for (int l = 0; l < k; ++l) pk /= p;
        sum += term * pk;
    }
    return sum;
}

QMat krawtchouk_matrix(int i, const QMat& X, const Rational& p, int n) {
    if (i < 0 || i > n) throw OutOfRange("krawtchouk_matrix: need 0 <= i <= n");
    const int sz = X.rows();
    QMat sum(sz, sz);
    QMat poch = QMat::identity(sz); // (-X)(-X+1)...(-X+k-1)
    for (int k = 0; k <= i; ++k) {
        Rational c = 1;
        for (int l = 0; l < k; ++l) c *= Rational(-i + l) / (Rational(-n + l) * (l + 1) * p);
        if (c != 0) sum = sum + poch.scaled(c);
        if (k < i) {
            QMat shifted = X.scaled(-1);
            for (int t = 0; t < sz; ++t) shifted.at(t, t) += k;
            poch = poch * shifted;
        }
    }
    return sum;
}

Report check_kp_identity(int n) {
    Report rep;
    auto A = hamming_distance_matrices(n);
    QMat A1 = to_qmat(A[1]);
    // matrix argument n/2 - A1/2
    QMat X = A1.scaled(Rational(-1, 2));
    for (int t = 0; t < X.rows(); ++t) X.at(t, t) += Rational(n, 2);
    for (int i = 0; i <= n; ++i) {
        Rational binom = 1;
        for (int l = 1; l <= i; ++l) binom = binom * (n - l + 1) / l;
        QMat rhs = krawtchouk_matrix(i, X, Rational(1, 2), n).scaled(binom);
        rep.check_true("A" + std::to_string(i) + " = binom*K_i(n/2 - A1/2)",
                       rhs == to_qmat(A[i]));
    }
    return rep;
}

} // namespace qlab
