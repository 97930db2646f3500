#include "qlab/dual_polar.hpp"

#include <map>
#include <sstream>

#include "qlab/scheme.hpp"

namespace qlab {

uint8_t SymplecticSpace::form(const VecFq& u, const VecFq& v) const {
    const Field& F = *field;
    uint8_t s = 0;
    for (int i = 0; i < d; ++i) {
        s = F.add(s, F.mul(u[i], v[d + i]));
        s = F.sub(s, F.mul(u[d + i], v[i]));
    }
    return s;
}

std::string IsotropicVertex::to_string() const {
    std::ostringstream os;
    os << "d=" << basis.rows() << ";q=" << basis.field().q() << ";m=";
    for (int i = 0; i < basis.rows(); ++i) {
        if (i) os << "|";
        for (int j = 0; j < basis.cols(); ++j) {
            if (j) os << ",";
            os << int(basis.at(i, j));
        }
    }
    return os.str();
}

Int lagrangian_count(int d, long long q) {
    Int c = 1;
    for (int i = 1; i <= d; ++i) c *= int_pow(q, i) + 1;
    return c;
}

namespace {

std::string rref_key(const MatFq& M) {
    std::string s;
    s.reserve(static_cast<size_t>(M.rows()) * M.cols());
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j) s.push_back(static_cast<char>('0' + M.at(i, j)));
    return s;
}

} // namespace

std::vector<IsotropicVertex> enumerate_lagrangians(int d, const Field& F, long long limit) {
    if (d < 1) throw OutOfRange("enumerate_lagrangians: d must be >= 1");
    Int total = lagrangian_count(d, F.q());
    if (total > limit)
        throw LimitExceeded("Lagrangian count " + total.str() + " exceeds limit " +
                            std::to_string(limit));
    SymplecticSpace sp{d, &F};
    const int n = 2 * d;
    const int q = F.q();
    long long nvec = 1;
    for (int i = 0; i < n; ++i) nvec *= q;

    // level-by-level isotropic flag extension, deduplicated by RREF
    std::map<std::string, MatFq> level;
    level.emplace(std::string(), MatFq(F, 0, n));
    for (int k = 0; k < d; ++k) {
        std::map<std::string, MatFq> next;
        for (const auto& [key, B] : level) {
            for (long long w = 1; w < nvec; ++w) {
                VecFq v(n);
                long long t = w;
                for (int i = 0; i < n; ++i) {
                    v[i] = static_cast<uint8_t>(t % q);
                    t /= q;
                }
                bool iso = true;
                for (int r = 0; r < B.rows() && iso; ++r)
                    iso = (sp.form(B.row(r), v) == 0);
                if (!iso) continue; // B(v,v) = 0 automatically for the alternating form
                MatFq stacked(F, k + 1, n);
                for (int r = 0; r < k; ++r)
                    for (int j = 0; j < n; ++j) stacked.set(r, j, B.at(r, j));
                for (int j = 0; j < n; ++j) stacked.set(k, j, v[j]);
                MatFq red = rref_basis(stacked);
                if (red.rows() != k + 1) continue; // v in span(B)
                next.emplace(rref_key(red), std::move(red));
            }
        }
        level = std::move(next);
    }
    std::vector<IsotropicVertex> out;
    out.reserve(level.size());
    for (auto& [key, B] : level) out.push_back(IsotropicVertex{std::move(B)});
    if (Int(static_cast<long long>(out.size())) != total)
        throw Error("Lagrangian enumeration count mismatch: got " +
                    std::to_string(out.size()) + ", expected " + total.str());
    return out;
}

DualPolarGraph build_distance_matrices(std::vector<IsotropicVertex> vertices, const Field& F) {
    if (vertices.empty()) throw OutOfRange("no vertices");
    const int d = vertices[0].basis.rows();
    const int n = 2 * d;
    const int V = static_cast<int>(vertices.size());
    DualPolarGraph G;
    G.d = d;
    G.field = &F;
    G.vertices = std::move(vertices);
    for (const auto& v : G.vertices) G.labels.push_back(v.to_string());
    G.A.assign(d + 1, BinMat(V));
    for (int a = 0; a < V; ++a) {
        G.A[0].set(a, a, 1);
        for (int b = a + 1; b < V; ++b) {
            MatFq stacked(F, 2 * d, n);
            for (int r = 0; r < d; ++r)
                for (int j = 0; j < n; ++j) {
                    stacked.set(r, j, G.vertices[a].basis.at(r, j));
                    stacked.set(d + r, j, G.vertices[b].basis.at(r, j));
                }
            int inter = 2 * d - rank(stacked); // dim a + dim b - dim(a + b)
            int dist = d - inter;
            G.A[dist].set(a, b, 1);
            G.A[dist].set(b, a, 1);
        }
    }
    return G;
}

DualPolarGraph build_dual_polar(int d, const Field& F, long long limit) {
    return build_distance_matrices(enumerate_lagrangians(d, F, limit), F);
}

Report check_distance_regularity(const std::vector<BinMat>& A, IntersectionArray* out) {
    Report rep;
    const int N = static_cast<int>(A.size()) - 1;
    const int V = A[0].size();
    std::vector<uint8_t> dist(static_cast<size_t>(V) * V, 255);
    for (int i = 0; i <= N; ++i)
        for (int x = 0; x < V; ++x)
            for (int y = 0; y < V; ++y)
                if (A[i].at(x, y)) dist[static_cast<size_t>(x) * V + y] = static_cast<uint8_t>(i);

    std::vector<std::vector<long long>> table(
        static_cast<size_t>(N + 1) * (N + 1)); // per (i,j): counts indexed by k, -1 initially
    for (auto& t : table) t.assign(N + 1, -1);
    bool ok = true;
    std::string witness;
    std::vector<long long> counts(static_cast<size_t>(N + 1) * (N + 1));
    for (int x = 0; x < V && ok; ++x)
        for (int y = 0; y < V && ok; ++y) {
            std::fill(counts.begin(), counts.end(), 0);
            const uint8_t* dx = &dist[static_cast<size_t>(x) * V];
            for (int z = 0; z < V; ++z)
                ++counts[static_cast<size_t>(dx[z]) * (N + 1) + dist[static_cast<size_t>(z) * V + y]];
            int k = dist[static_cast<size_t>(x) * V + y];
            for (int i = 0; i <= N && ok; ++i)
                for (int j = 0; j <= N && ok; ++j) {
                    auto& slot = table[static_cast<size_t>(i) * (N + 1) + j][k];
                    long long c = counts[static_cast<size_t>(i) * (N + 1) + j];
                    if (slot < 0)
                        slot = c;
                    else if (slot != c) {
                        ok = false;
                        witness = "p_{" + std::to_string(i) + "," + std::to_string(j) +
                                  "}^" + std::to_string(k) + " differs at pair (" +
                                  std::to_string(x) + "," + std::to_string(y) + ")";
                    }
                }
        }
    rep.check_true("distance-regular (p_ij^k constant)", ok, witness);
    if (ok && out) {
        out->b.assign(N + 1, 0);
        out->c.assign(N + 1, 0);
        out->a.assign(N + 1, 0);
        for (int i = 0; i <= N; ++i) {
            out->a[i] = table[static_cast<size_t>(1) * (N + 1) + i][i];
            if (i < N) out->b[i] = table[static_cast<size_t>(1) * (N + 1) + (i + 1)][i];
            if (i > 0) out->c[i] = table[static_cast<size_t>(1) * (N + 1) + (i - 1)][i];
        }
    }
    return rep;
}

Report check_ttr2(const DualPolarGraph& G, QuarterInt e) {
    Report rep;
    const int N = G.d;
    const long long q = G.q();
    const int V = G.size();
    ExactScalar qe = ExactScalar::qpow(q, e);
    ExactScalar one = ExactScalar::one(q);
    for (int i = 0; i <= N; ++i) {
        IMat lhs = mul(G.A[1], G.A[i]);
        // coefficients with Gaussian brackets
        ExactScalar c1 = ExactScalar::from_rational(q, Rational(qbracket_gauss(i + 1, q)));
        ExactScalar c2 = (qe - one).scaled(Rational(qbracket_gauss(i, q)));
        ExactScalar c3 = ExactScalar::qpow(q, QuarterInt::integer(i - 1) + e)
                             .scaled(Rational(qbracket_gauss(N - i + 1, q)));
        // entries of the A matrices are 0/1: precompute the 8 combination values
        std::array<ExactScalar, 8> combo{
            ExactScalar::zero(q), ExactScalar::zero(q), ExactScalar::zero(q),
            ExactScalar::zero(q), ExactScalar::zero(q), ExactScalar::zero(q),
            ExactScalar::zero(q), ExactScalar::zero(q)};
        for (int bits = 0; bits < 8; ++bits) {
            ExactScalar v = ExactScalar::zero(q);
            if (bits & 1) v += c1;
            if (bits & 2) v += c2;
            if (bits & 4) v += c3;
            combo[bits] = v;
        }
        bool ok = true;
        std::string witness;
        for (int x = 0; x < V && ok; ++x)
            for (int y = 0; y < V && ok; ++y) {
                int bits = 0;
                if (i + 1 <= N && G.A[i + 1].at(x, y)) bits |= 1;
                if (G.A[i].at(x, y)) bits |= 2;
                if (i - 1 >= 0 && G.A[i - 1].at(x, y)) bits |= 4;
                if (combo[bits] != ExactScalar::from_int(q, lhs.at(x, y))) {
                    ok = false;
                    witness = "entry (" + std::to_string(x) + "," + std::to_string(y) + ")";
                }
            }
        rep.check_true("A1*A" + std::to_string(i) + " three-term (Gaussian brackets)", ok,
                       witness);
    }
    return rep;
}

namespace {

ExactScalar qpoch(const ExactScalar& a, long long q, int k) {
    // (a; q)_k = prod_{l<k} (1 - a q^l)
    ExactScalar r = ExactScalar::one(a.base());
    ExactScalar term = a;
    ExactScalar qs = ExactScalar::from_int(a.base(), q);
    for (int l = 0; l < k; ++l) {
        r *= ExactScalar::one(a.base()) - term;
        term *= qs;
    }
    return r;
}

} // namespace

ExactScalar dual_q_krawtchouk(int i, int j, const ExactScalar& c, int N, long long q) {
    if (i < 0 || i > N || j < 0 || j > N)
        throw OutOfRange("dual_q_krawtchouk: need 0 <= i, j <= N");
    // 3phi2(q^-i, q^-j, c q^{j-N}; q^-N, 0 | q; q)
    ExactScalar sum = ExactScalar::zero(c.base());
    for (int k = 0; k <= i; ++k) {
        ExactScalar num = qpoch(ExactScalar::qpow(q, QuarterInt::integer(-i)), q, k) *
                          qpoch(ExactScalar::qpow(q, QuarterInt::integer(-j)), q, k) *
                          qpoch(c * ExactScalar::qpow(q, QuarterInt::integer(j - N)), q, k);
        ExactScalar den = qpoch(ExactScalar::from_int(c.base(), q), q, k) *
                          qpoch(ExactScalar::qpow(q, QuarterInt::integer(-N)), q, k);
        sum += num * den.inv() * ExactScalar::qpow(q, QuarterInt::integer(k));
    }
    return sum;
}

std::vector<ExactScalar> dual_q_krawtchouk_poly(int i, const ExactScalar& c, int N, long long q) {
    if (i < 0 || i > N) throw OutOfRange("dual_q_krawtchouk_poly: need 0 <= i <= N");
    // K_i(lambda) = sum_k coef_k prod_{l<k} (1 - q^l lambda + c q^{2l-N});
    // the product of the two x-dependent Pochhammers collapses to a polynomial
    // in lambda = q^{-x} + c q^{x-N}.
    const long long base = c.base();
    std::vector<ExactScalar> sum{ExactScalar::zero(base)};
    std::vector<ExactScalar> part{ExactScalar::one(base)}; // running product
    for (int k = 0; k <= i; ++k) {
        ExactScalar coef = qpoch(ExactScalar::qpow(q, QuarterInt::integer(-i)), q, k) *
                           (qpoch(ExactScalar::from_int(base, q), q, k) *
                            qpoch(ExactScalar::qpow(q, QuarterInt::integer(-N)), q, k))
                               .inv() *
                           ExactScalar::qpow(q, QuarterInt::integer(k));
        if (sum.size() < part.size()) sum.resize(part.size(), ExactScalar::zero(base));
        for (size_t t = 0; t < part.size(); ++t) sum[t] += coef * part[t];
        if (k < i) {
            // multiply part by (1 + c q^{2k-N}) - q^k lambda
            ExactScalar a0 = ExactScalar::one(base) +
                             c * ExactScalar::qpow(q, QuarterInt::integer(2 * k - N));
            ExactScalar a1 = -ExactScalar::qpow(q, QuarterInt::integer(k));
            std::vector<ExactScalar> next(part.size() + 1, ExactScalar::zero(base));
            for (size_t t = 0; t < part.size(); ++t) {
                next[t] += part[t] * a0;
                next[t + 1] += part[t] * a1;
            }
            part = std::move(next);
        }
    }
    sum.resize(i + 1, ExactScalar::zero(base));
    return sum;
}

Report check_dqk_identity(const DualPolarGraph& G, QuarterInt e) {
    Report rep;
    const int N = G.d;
    const long long q = G.q();
    const int V = G.size();
    ExactScalar qe = ExactScalar::qpow(q, e);
    ExactScalar c = -qe;

    // powers of A_1 as integer matrices
    std::vector<IMat> pw;
    {
        IMat I(V);
        for (int i = 0; i < V; ++i) I.at(i, i) = 1;
        pw.push_back(std::move(I));
        for (int k = 1; k <= N; ++k) {
            IMat nxt(V);
            const IMat& prev = pw.back();
            for (int x = 0; x < V; ++x)
                for (int t = 0; t < V; ++t) {
                    long long a = prev.at(x, t);
                    if (!a) continue;
                    for (int y = 0; y < V; ++y)
                        if (G.A[1].at(t, y)) nxt.at(x, y) += a;
                }
            pw.push_back(std::move(nxt));
        }
    }

    // lambda(A_1) = alpha A_1 + beta I
    ExactScalar alpha =
        ExactScalar::from_rational(q, rat_pow(q, -N) * (Rational(1) - Rational(q)));
    ExactScalar beta = ExactScalar::qpow(q, QuarterInt::integer(-N)) *
                       (ExactScalar::one(q) - qe);

    bool printed_ok = true;
    for (int i = 0; i <= N; ++i) {
        auto lampoly = dual_q_krawtchouk_poly(i, c, N, q);
        // compose with the affine argument: coefficients over powers of A_1
        std::vector<ExactScalar> coefA(N + 1, ExactScalar::zero(q));
        {
            // (alpha A + beta I)^m expanded binomially
            for (size_t m = 0; m < lampoly.size(); ++m) {
                if (lampoly[m].is_zero()) continue;
                ExactScalar binom = ExactScalar::one(q);
                for (size_t t = 0; t <= m; ++t) {
                    // binom(m, t) alpha^t beta^{m-t}
                    ExactScalar term = lampoly[m].scaled(Rational(1)) * binom;
                    for (size_t l = 0; l < t; ++l) term *= alpha;
                    for (size_t l = 0; l < m - t; ++l) term *= beta;
                    coefA[t] += term;
                    binom = binom.scaled(Rational(static_cast<long long>(m - t),
                                                  static_cast<long long>(t + 1)));
                }
            }
        }
        ExactScalar pref = ExactScalar::qpow(q, QuarterInt::integer(i * (i - 1) / 2))
                               .scaled(Rational(gaussian_binomial(N, i, q)));
        if (i % 2) pref = -pref;
        for (auto& cc : coefA) cc *= pref;

        bool ok = true;
        std::string witness;
        for (int x = 0; x < V && ok; ++x)
            for (int y = 0; y < V && ok; ++y) {
                ExactScalar acc = ExactScalar::zero(q);
                for (int t = 0; t <= N; ++t) {
                    long long a = pw[t].at(x, y);
                    if (a) acc += coefA[t].scaled(Rational(a));
                }
                if (acc != ExactScalar::from_int(q, G.A[i].at(x, y))) {
                    ok = false;
                    witness = "entry (" + std::to_string(x) + "," + std::to_string(y) + ")";
                }
            }
        printed_ok = printed_ok && ok;
        rep.check_true("A" + std::to_string(i) + " = dual q-Krawtchouk identity (as printed)",
                       ok, witness);
    }

    // eigenvalue labeling: with eigenvalues descending, does the affine map
    // send theta_j to lambda(j) or to lambda(N-j)?
    try {
        SchemeData S(G.A);
        auto th = S.eigenvalues();
        if (static_cast<int>(th.size()) == N + 1) {
            auto lam = [&](int j) {
                return ExactScalar::qpow(q, QuarterInt::integer(-j)) +
                       c * ExactScalar::qpow(q, QuarterInt::integer(j - N));
            };
            bool natural = true, reversed = true;
            for (int j = 0; j <= N; ++j) {
                ExactScalar mapped = alpha.scaled(th[j]) + beta;
                if (mapped != lam(j)) natural = false;
                if (mapped != lam(N - j)) reversed = false;
            }
            std::string which = natural   ? "natural"
                                : reversed ? "reversed"
                                           : "none";
            rep.check_true("eigenvalue labeling matches exactly one convention (" + which + ")",
                           natural != reversed, "natural=" + std::to_string(natural) +
                                                    " reversed=" + std::to_string(reversed));
        } else {
            rep.skip("eigenvalue labeling", "eigenvalue count != N+1");
        }
    } catch (const Error& err) {
        rep.skip("eigenvalue labeling", err.what());
    }

    if (!printed_ok) {
        // fall back to the recurrence-generated polynomials v_i from eq ttr2
        std::vector<std::vector<ExactScalar>> v;
        v.push_back({ExactScalar::one(q)});
        v.push_back({ExactScalar::zero(q), ExactScalar::one(q)}); // v_1 = A_1
        for (int i = 1; i < N; ++i) {
            // v_{i+1} = (x v_i - (q^e-1)[i] v_i - q^{i-1+e}[N-i+1] v_{i-1}) / [i+1]
            std::vector<ExactScalar> next(i + 2, ExactScalar::zero(q));
            for (size_t t = 0; t < v[i].size(); ++t) next[t + 1] += v[i][t];
            ExactScalar c2 = (qe - ExactScalar::one(q)).scaled(Rational(qbracket_gauss(i, q)));
            for (size_t t = 0; t < v[i].size(); ++t) next[t] -= v[i][t] * c2;
            ExactScalar c3 = ExactScalar::qpow(q, QuarterInt::integer(i - 1) + e)
                                 .scaled(Rational(qbracket_gauss(N - i + 1, q)));
            for (size_t t = 0; t < v[i - 1].size(); ++t) next[t] -= v[i - 1][t] * c3;
            ExactScalar inv_c1 =
                ExactScalar::from_rational(q, Rational(1) / Rational(qbracket_gauss(i + 1, q)));
            for (auto& cc : next) cc *= inv_c1;
            v.push_back(std::move(next));
        }
        for (int i = 0; i <= N; ++i) {
            bool ok = true;
            for (int x = 0; x < V && ok; ++x)
                for (int y = 0; y < V && ok; ++y) {
                    ExactScalar acc = ExactScalar::zero(q);
                    for (size_t t = 0; t < v[i].size(); ++t) {
                        long long a = pw[t].at(x, y);
                        if (a) acc += v[i][t].scaled(Rational(a));
                    }
                    if (acc != ExactScalar::from_int(q, G.A[i].at(x, y))) ok = false;
                }
            rep.check_true("fallback: A" + std::to_string(i) + " = v_i(A_1) from ttr2", ok, "");
        }
    }
    return rep;
}

} // namespace qlab
