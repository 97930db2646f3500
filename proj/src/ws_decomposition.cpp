#include "qlab/ws_decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include <Eigen/Dense>

namespace qlab {

std::vector<MatFq> enumerate_sym_matrices(int d, const Field& F, long long limit) {
    const int cells = d * (d + 1) / 2;
    Int total = int_pow(F.q(), cells);
    if (total > limit)
        throw LimitExceeded("symmetric matrix count " + total.str() + " exceeds limit " +
                            std::to_string(limit));
    std::vector<std::pair<int, int>> pos;
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) pos.emplace_back(i, j);
    std::vector<MatFq> out;
    out.reserve(total.convert_to<size_t>());
    std::vector<uint8_t> digits(cells, 0);
    const int q = F.q();
    for (;;) {
        MatFq S(F, d, d);
        for (int t = 0; t < cells; ++t) {
            S.set(pos[t].first, pos[t].second, digits[t]);
            S.set(pos[t].second, pos[t].first, digits[t]);
        }
        out.push_back(std::move(S));
        int t = cells - 1;
        while (t >= 0 && digits[t] == q - 1) digits[t--] = 0;
        if (t < 0) break;
        ++digits[t];
    }
    return out;
}

namespace {

// Kernel basis of a matrix over F_q (vectors in the column space dimension).
std::vector<VecFq> kernel_basis(const MatFq& M) {
    const Field& F = M.field();
    const int nc = M.cols();
    MatFq R = rref(M);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(nc, false);
    for (int i = 0; i < R.rows(); ++i) {
        int p = -1;
        for (int j = 0; j < nc; ++j)
            if (R.at(i, j) != 0) { p = j; break; }
        if (p >= 0) {
            pivot_col.push_back(p);
            is_pivot[p] = true;
        }
    }
    std::vector<VecFq> ker;
    for (int j = 0; j < nc; ++j) {
        if (is_pivot[j]) continue;
        VecFq v(nc, 0);
        v[j] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = F.neg(R.at(r, j));
        ker.push_back(std::move(v));
    }
    return ker;
}

// Quadratic form value f(x) = sum_{i<=j} S_ij x_i x_j.
uint8_t quad_value(const MatFq& S, const VecFq& x) {
    const Field& F = S.field();
    uint8_t s = 0;
    for (int i = 0; i < S.rows(); ++i)
        for (int j = i; j < S.rows(); ++j)
            s = F.add(s, F.mul(S.at(i, j), F.mul(x[i], x[j])));
    return s;
}

// Square root in F_{2^m}: a^{2^{m-1}} (Frobenius inverse).
uint8_t field_sqrt_char2(const Field& F, uint8_t a) {
    uint8_t r = a;
    for (int i = 0; i < F.m() - 1; ++i) r = F.frobenius(r);
    return r;
}

TypeEps type_eps_odd(const MatFq& S) {
    const Field& F = S.field();
    const int d = S.rows();
    MatFq M = S;
    std::vector<uint8_t> diag;
    auto swap_rc = [&](int a, int b) {
        for (int j = 0; j < d; ++j) {
            uint8_t t = M.at(a, j);
            M.set(a, j, M.at(b, j));
            M.set(b, j, t);
        }
        for (int i = 0; i < d; ++i) {
            uint8_t t = M.at(i, a);
            M.set(i, a, M.at(i, b));
            M.set(i, b, t);
        }
    };
    for (int k = 0; k < d; ++k) {
        if (M.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < d; ++i)
                if (M.at(i, i) != 0) { piv = i; break; }
            if (piv >= 0) {
                swap_rc(k, piv);
            } else {
                // all-zero diagonal in the trailing block; bring in an
                // off-diagonal pivot by a row+col addition (odd char: 2 != 0)
                int ri = -1, rj = -1;
                for (int i = k; i < d && ri < 0; ++i)
                    for (int j = i + 1; j < d; ++j)
                        if (M.at(i, j) != 0) {
                            ri = i;
                            rj = j;
                            break;
                        }
                if (ri < 0) break; // trailing block is zero
                for (int t = 0; t < d; ++t) M.set(ri, t, F.add(M.at(ri, t), M.at(rj, t)));
                for (int t = 0; t < d; ++t) M.set(t, ri, F.add(M.at(t, ri), M.at(t, rj)));
                if (ri != k) swap_rc(k, ri);
            }
        }
        if (M.at(k, k) == 0) break;
        uint8_t pinv = F.inv(M.at(k, k));
        for (int i = k + 1; i < d; ++i) {
            uint8_t f = F.mul(M.at(i, k), pinv);
            if (f == 0) continue;
            for (int t = 0; t < d; ++t) M.set(i, t, F.sub(M.at(i, t), F.mul(f, M.at(k, t))));
            for (int t = 0; t < d; ++t) M.set(t, i, F.sub(M.at(t, i), F.mul(f, M.at(t, k))));
        }
        diag.push_back(M.at(k, k));
    }
    int r = static_cast<int>(diag.size());
    if (r % 2 == 1) return {r, 0};
    if (r == 0) return {0, 1};
    uint8_t det = 1;
    for (uint8_t v : diag) det = F.mul(det, v);
    uint8_t sign = F.pow(F.neg(1), r / 2);
    return {r, F.is_square(F.mul(sign, det)) ? 1 : -1};
}

TypeEps type_eps_char2(const MatFq& S) {
    const Field& F = S.field();
    const int d = S.rows();
    // polar form of f(x) = x^t upper(S) x: the off-diagonal part of S
    MatFq polar(F, d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (i != j) polar.set(i, j, S.at(i, j));
    auto rad = kernel_basis(polar);
    // f restricted to the radical is additive with linear square root; its
    // kernel is the true radical of the quadratic form
    std::vector<VecFq> K0;
    {
        MatFq ell(F, 1, static_cast<int>(rad.size()));
        for (size_t t = 0; t < rad.size(); ++t)
            ell.set(0, static_cast<int>(t), field_sqrt_char2(F, quad_value(S, rad[t])));
        auto cmb = kernel_basis(ell);
        for (const auto& comb : cmb) {
            VecFq v(d, 0);
            for (size_t t = 0; t < rad.size(); ++t)
                for (int i = 0; i < d; ++i)
                    v[i] = F.add(v[i], F.mul(comb[t], rad[t][i]));
            K0.push_back(std::move(v));
        }
    }
    int rank = d - static_cast<int>(K0.size());
    int defect = static_cast<int>(rad.size()) - static_cast<int>(K0.size());
    if (defect) return {rank, 0};
    if (rank == 0) return {0, 1};
    // Arf invariant on a complement of the radical: symplectic Gram-Schmidt
    std::vector<VecFq> rem;
    {
        // complete rad to a basis; the complement vectors carry the form
        MatFq stack(F, d + static_cast<int>(rad.size()), d);
        for (size_t t = 0; t < rad.size(); ++t)
            for (int i = 0; i < d; ++i) stack.set(static_cast<int>(t), i, rad[t][i]);
        std::vector<VecFq> have = rad;
        for (int j = 0; j < d; ++j) {
            VecFq e(d, 0);
            e[j] = 1;
            MatFq test(F, static_cast<int>(have.size()) + 1, d);
            for (size_t t = 0; t < have.size(); ++t)
                for (int i = 0; i < d; ++i) test.set(static_cast<int>(t), i, have[t][i]);
            for (int i = 0; i < d; ++i) test.set(static_cast<int>(have.size()), i, e[i]);
            if (qlab::rank(test) == static_cast<int>(have.size()) + 1) {
                have.push_back(e);
                rem.push_back(e);
            }
        }
    }
    auto B = [&](const VecFq& x, const VecFq& y) {
        uint8_t s = 0;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (i != j) s = F.add(s, F.mul(x[i], F.mul(S.at(i, j), y[j])));
        return s;
    };
    uint8_t arf = 0;
    while (!rem.empty()) {
        VecFq u = rem.front();
        rem.erase(rem.begin());
        int vi = -1;
        for (size_t t = 0; t < rem.size(); ++t)
            if (B(u, rem[t]) != 0) { vi = static_cast<int>(t); break; }
        if (vi < 0) throw Error("polar form degenerate on complement (internal)");
        VecFq v = rem[vi];
        rem.erase(rem.begin() + vi);
        uint8_t scale = F.inv(B(u, v));
        for (auto& c : v) c = F.mul(c, scale);
        for (auto& w : rem) {
            uint8_t fv = B(w, v), fu = B(w, u);
            for (int i = 0; i < d; ++i)
                w[i] = F.add(w[i], F.add(F.mul(fv, u[i]), F.mul(fu, v[i])));
        }
        arf = F.add(arf, F.mul(quad_value(S, u), quad_value(S, v)));
    }
    // hyperbolic iff the absolute trace of the Arf sum vanishes
    uint8_t tr = F.abs_trace(arf);
    return {rank, tr == 0 ? 1 : -1};
}

} // namespace

TypeEps type_eps(const MatFq& S) {
    const Field& F = S.field();
    for (int i = 0; i < S.rows(); ++i)
        for (int j = 0; j < i; ++j)
            if (S.at(i, j) != S.at(j, i)) throw NotSymplectic("type_eps: matrix not symmetric");
    return F.p() == 2 ? type_eps_char2(S) : type_eps_odd(S);
}

IsotropicVertex unipotent_action(const MatFq& T, const IsotropicVertex& v) {
    const Field& F = T.field();
    const int d = T.rows();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < i; ++j)
            if (T.at(i, j) != T.at(j, i))
                throw NotSymplectic("unipotent_action: T not symmetric");
    MatFq M(F, d, 2 * d);
    for (int r = 0; r < d; ++r) {
        for (int j = 0; j < 2 * d; ++j) M.set(r, j, v.basis.at(r, j));
        for (int i = 0; i < d; ++i) {
            uint8_t acc = M.at(r, d + i);
            for (int j = 0; j < d; ++j) acc = F.add(acc, F.mul(T.at(i, j), v.basis.at(r, j)));
            M.set(r, d + i, acc);
        }
    }
    return IsotropicVertex{rref_basis(M)};
}

std::vector<int> unipotent_action_perm(const MatFq& T, const DualPolarGraph& G) {
    std::vector<int> perm(G.size());
    std::map<std::string, int> index;
    for (int i = 0; i < G.size(); ++i) index.emplace(G.labels[i], i);
    for (int v = 0; v < G.size(); ++v) {
        auto img = unipotent_action(T, G.vertices[v]);
        auto it = index.find(img.to_string());
        if (it == index.end()) throw Error("unipotent action left the vertex set (internal)");
        perm[v] = it->second;
    }
    return perm;
}

namespace {

// Character exponent <S,T> in F_p-trace form; pairing depends on parity.
int character_exponent(const MatFq& S, const MatFq& T) {
    const Field& F = S.field();
    const int d = S.rows();
    uint8_t s = 0;
    if (F.p() == 2) {
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) s = F.add(s, F.mul(S.at(i, j), T.at(i, j)));
    } else {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) s = F.add(s, F.mul(S.at(i, j), T.at(j, i)));
    }
    return F.abs_trace(s);
}

struct ProjectorSet {
    // exact path (characteristic 2): rational projectors
    std::vector<QMat> exact;
    // floating path (odd characteristic): complex projectors
    std::vector<Eigen::MatrixXcd> cplx;
    bool is_exact = false;
};

ProjectorSet build_projectors(const std::vector<MatFq>& syms, const DualPolarGraph& G) {
    const Field& F = *G.field;
    const int V = G.size();
    const int p = F.p();
    std::vector<std::vector<int>> perms;
    perms.reserve(syms.size());
    for (const auto& T : syms) perms.push_back(unipotent_action_perm(T, G));
    ProjectorSet ps;
    ps.is_exact = (p == 2);
    const Rational H(static_cast<long long>(syms.size()));
    if (ps.is_exact) {
        for (const auto& S : syms) {
            QMat P(V, V);
            for (size_t t = 0; t < syms.size(); ++t) {
                Rational chi = character_exponent(S, syms[t]) == 0 ? Rational(1) : Rational(-1);
                for (int v = 0; v < V; ++v) P.at(perms[t][v], v) += chi;
            }
            ps.exact.push_back(P.scaled(Rational(1) / H));
        }
    } else {
        const double w = 2.0 * std::numbers::pi / p;
        for (const auto& S : syms) {
            Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(V, V);
            for (size_t t = 0; t < syms.size(); ++t) {
                int ex = character_exponent(S, syms[t]);
                std::complex<double> chi = std::polar(1.0, -w * ex); // conjugate of psi
                for (int v = 0; v < V; ++v) P(perms[t][v], v) += chi;
            }
            ps.cplx.push_back(P / static_cast<double>(syms.size()));
        }
    }
    return ps;
}

Eigen::MatrixXcd to_eigen(const QMat& M) {
    Eigen::MatrixXcd R(M.rows(), M.cols());
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j) R(i, j) = rat_to_double(M.at(i, j));
    return R;
}

std::vector<double> comparison_spectrum(int eps, int d, const LatticeContext& lattice) {
    const long long q = lattice.q();
    Operator K = build_K(lattice);
    Operator Y = build_Y(lattice);
    ExactScalar qd2 = ExactScalar::qpow(q, QuarterInt::half(d));
    Operator M = K.scaled(qd2.scaled(Rational(eps))) -
                 Operator::identity(q, lattice.labels) + Y.scaled(qd2);
    auto dense = M.eval_dense();
    const int n = M.rows();
    Eigen::MatrixXd E(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) E(i, j) = dense[static_cast<size_t>(i) * n + j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(E);
    std::vector<double> out(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + n);
    std::sort(out.begin(), out.end());
    return out;
}

Int subspace_total(int n, long long q) {
    Int c = 0;
    for (int k = 0; k <= n; ++k) c += gaussian_binomial(n, k, q);
    return c;
}

struct SpectralSide {
    long long rank = 0;
    std::vector<long long> mult; // per eigenvalue of A_1 (descending order)
    double round_residual = 0;   // worst distance of a trace from its integer
};

SpectralSide restricted_spectrum_exact(const QMat& P, const SchemeData& scheme) {
    SpectralSide side;
    Rational tr = P.trace();
    if (boost::multiprecision::denominator(tr) != 1)
        throw Error("exact projector trace is not an integer");
    side.rank = boost::multiprecision::numerator(tr).convert_to<long long>();
    for (const auto& Ej : scheme.idempotent_list()) {
        Rational m = 0;
        for (int x = 0; x < P.rows(); ++x)
            for (int y = 0; y < P.rows(); ++y)
                if (P.at(x, y) != 0 && Ej.at(y, x) != 0) m += P.at(x, y) * Ej.at(y, x);
        if (boost::multiprecision::denominator(m) != 1)
            throw Error("exact multiplicity is not an integer");
        side.mult.push_back(boost::multiprecision::numerator(m).convert_to<long long>());
    }
    return side;
}

SpectralSide restricted_spectrum_cplx(const Eigen::MatrixXcd& P, const SchemeData& scheme) {
    SpectralSide side;
    double tr = P.trace().real();
    side.rank = std::llround(tr);
    side.round_residual = std::abs(tr - static_cast<double>(side.rank));
    for (const auto& Ej : scheme.idempotent_list()) {
        std::complex<double> m = 0;
        for (int x = 0; x < P.rows(); ++x)
            for (int y = 0; y < P.rows(); ++y)
                if (Ej.at(y, x) != 0) m += P(x, y) * rat_to_double(Ej.at(y, x));
        long long mm = std::llround(m.real());
        side.round_residual =
            std::max(side.round_residual, std::abs(m - std::complex<double>(mm, 0)));
        side.mult.push_back(mm);
    }
    return side;
}

void rws_compare(Report& rep, const std::string& tag, const SpectralSide& side, int eps,
                 int d, const LatticeContext& lattice, const SchemeData& scheme, double tol) {
    Int expect = subspace_total(lattice.n, lattice.q());
    rep.check_true(tag + " rank(P_S) = |L_" + std::to_string(lattice.n) + "|",
                   Int(side.rank) == expect,
                   "rank " + std::to_string(side.rank) + " vs " + expect.str());
    // expand side multiset and compare with comparison-operator spectrum
    std::vector<double> lhs;
    const auto& th = scheme.eigenvalues();
    for (size_t j = 0; j < th.size(); ++j)
        for (long long t = 0; t < side.mult[j]; ++t) lhs.push_back(rat_to_double(th[j]));
    std::sort(lhs.begin(), lhs.end());
    auto rhs = comparison_spectrum(eps, d, lattice);
    if (lhs.size() != rhs.size()) {
        rep.fail(tag + " spectra match eps q^{d/2}K - 1 + q^{d/2}Y", "1",
                 "multiset sizes " + std::to_string(lhs.size()) + " vs " +
                     std::to_string(rhs.size()));
        return;
    }
    double res = 0;
    for (size_t t = 0; t < lhs.size(); ++t) res = std::max(res, std::abs(lhs[t] - rhs[t]));
    res = std::max(res, side.round_residual);
    auto render = [](const std::vector<double>& v) {
        std::string s = "{";
        for (size_t t = 0; t < v.size(); ++t) {
            char buf[24];
            std::snprintf(buf, sizeof(buf), "%.6g", v[t]);
            s += std::string(t ? "," : "") + buf;
        }
        return s + "}";
    };
    CheckResult c;
    c.name = tag + " spectra match eps q^{d/2}K - 1 + q^{d/2}Y";
    c.status = res <= tol ? CheckStatus::Pass : CheckStatus::Fail;
    c.residual = format_residual(res);
    c.witness = "restricted " + render(lhs) + " vs comparison " + render(rhs);
    rep.add(std::move(c));
}

} // namespace

ComplexOperator character_projector(const MatFq& S, const DualPolarGraph& G) {
    auto syms = enumerate_sym_matrices(S.rows(), *G.field);
    const int V = G.size();
    ComplexOperator P;
    P.n = V;
    P.labels = G.labels;
    P.e.assign(static_cast<size_t>(V) * V, 0.0);
    const Field& F = *G.field;
    const double w = 2.0 * std::numbers::pi / F.p();
    for (const auto& T : syms) {
        auto perm = unipotent_action_perm(T, G);
        int ex = character_exponent(S, T);
        std::complex<double> chi = std::polar(1.0, -w * ex);
        for (int v = 0; v < V; ++v) P.at(perm[v], v) += chi / static_cast<double>(syms.size());
    }
    return P;
}

Report check_rws(const MatFq& S, const DualPolarGraph& G, const LatticeContext& lattice,
                 const SchemeData& scheme, double tol) {
    Report rep;
    auto te = type_eps(S);
    if (lattice.n != G.d - te.rank)
        throw DimensionMismatch("check_rws: lattice must be L_{d - rank(S)}(q)");
    auto syms = enumerate_sym_matrices(G.d, *G.field);
    // build only this S's projector
    const Field& F = *G.field;
    const int V = G.size();
    if (F.p() == 2) {
        QMat P(V, V);
        for (const auto& T : syms) {
            auto perm = unipotent_action_perm(T, G);
            Rational chi = character_exponent(S, T) == 0 ? Rational(1) : Rational(-1);
            for (int v = 0; v < V; ++v) P.at(perm[v], v) += chi;
        }
        P = P.scaled(Rational(1, static_cast<long long>(syms.size())));
        rep.check_true("P_S idempotent", P * P == P);
        QMat A1 = to_qmat(G.A[1]);
        rep.check_true("[A_1, P_S] = 0", A1 * P == P * A1);
        rws_compare(rep, "", restricted_spectrum_exact(P, scheme), te.eps, G.d, lattice,
                    scheme, tol);
    } else {
        ComplexOperator P = character_projector(S, G);
        Eigen::MatrixXcd PE(V, V);
        for (int i = 0; i < V; ++i)
            for (int j = 0; j < V; ++j) PE(i, j) = P.at(i, j);
        Eigen::MatrixXcd A1 = to_eigen(to_qmat(G.A[1]));
        rep.check_residual("P_S idempotent", (PE * PE - PE).cwiseAbs().maxCoeff(), 1e-10);
        rep.check_residual("[A_1, P_S] = 0", (A1 * PE - PE * A1).cwiseAbs().maxCoeff(), 1e-10);
        rws_compare(rep, "", restricted_spectrum_cplx(PE, scheme), te.eps, G.d, lattice,
                    scheme, tol);
    }
    return rep;
}

Report run_ws_decomposition(int d, long long q, double tol, long long limit) {
    Report rep;
    const Field& F = field_of(q);
    DualPolarGraph G = build_dual_polar(d, F, limit);
    SchemeData scheme(G.A);
    scheme.idempotent_list(); // force exact idempotents up front
    auto syms = enumerate_sym_matrices(d, F, limit);

    // representation property rho(T1) rho(T2) = rho(T1 + T2), exhaustively
    {
        std::vector<std::vector<int>> perms;
        std::map<std::string, size_t> sym_index;
        std::vector<std::string> keys;
        for (const auto& T : syms) {
            perms.push_back(unipotent_action_perm(T, G));
            std::string key;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) key.push_back(static_cast<char>('0' + T.at(i, j)));
            sym_index.emplace(key, keys.size());
            keys.push_back(key);
        }
        auto add_index = [&](const MatFq& A, const MatFq& B) {
            std::string key;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    key.push_back(static_cast<char>('0' + F.add(A.at(i, j), B.at(i, j))));
            return sym_index.at(key);
        };
        bool ok = true;
        for (size_t a = 0; a < syms.size() && ok; ++a)
            for (size_t b = 0; b < syms.size() && ok; ++b) {
                size_t ab = add_index(syms[a], syms[b]);
                for (int v = 0; v < G.size() && ok; ++v)
                    if (perms[a][perms[b][v]] != perms[ab][v]) ok = false;
            }
        rep.check_true("rho(T1) rho(T2) = rho(T1 + T2)", ok);
    }

    ProjectorSet ps = build_projectors(syms, G);
    const int V = G.size();

    // completeness and orthogonality
    if (ps.is_exact) {
        QMat sum(V, V);
        for (const auto& P : ps.exact) sum = sum + P;
        rep.check_true("sum_S P_S = I", sum == QMat::identity(V));
        // all pairs on the desk-scale instances, a deterministic sample on the
        // large opt-in ones (full pairwise products grow as |Sym| * |X|^3)
        bool sample = ps.exact.size() > 32;
        bool orth = true;
        for (size_t a = 0; a < ps.exact.size() && orth; ++a) {
            if (sample) {
                size_t b1 = (a + 1) % ps.exact.size();
                size_t b2 = (a + ps.exact.size() / 2) % ps.exact.size();
                for (size_t b : {b1, b2})
                    if (b != a && orth) orth = (ps.exact[a] * ps.exact[b]).is_zero();
            } else {
                for (size_t b = a + 1; b < ps.exact.size() && orth; ++b)
                    orth = (ps.exact[a] * ps.exact[b]).is_zero();
            }
        }
        rep.check_true(sample ? "P_S P_S' = 0 (S != S', sampled pairs)"
                              : "P_S P_S' = 0 (S != S')",
                       orth);
        QMat A1 = to_qmat(G.A[1]);
        bool comm = true;
        for (const auto& P : ps.exact)
            if (!(A1 * P == P * A1)) comm = false;
        rep.check_true("[A_1, P_S] = 0", comm);
    } else {
        Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(V, V);
        for (const auto& P : ps.cplx) sum += P;
        rep.check_residual("sum_S P_S = I",
                           (sum - Eigen::MatrixXcd::Identity(V, V)).cwiseAbs().maxCoeff(),
                           1e-10);
        double orth = 0;
        for (size_t a = 0; a < ps.cplx.size(); ++a)
            for (size_t b = a + 1; b < ps.cplx.size(); ++b)
                orth = std::max(orth, (ps.cplx[a] * ps.cplx[b]).cwiseAbs().maxCoeff());
        rep.check_residual("P_S P_S' = 0 (S != S')", orth, 1e-10);
        double idem = 0, comm = 0;
        Eigen::MatrixXcd A1 = to_eigen(to_qmat(G.A[1]));
        for (const auto& P : ps.cplx) {
            idem = std::max(idem, (P * P - P).cwiseAbs().maxCoeff());
            comm = std::max(comm, (A1 * P - P * A1).cwiseAbs().maxCoeff());
        }
        rep.check_residual("P_S idempotent", idem, 1e-10);
        rep.check_residual("[A_1, P_S] = 0", comm, 1e-10);
    }

    // per-S spectra, total rank, dimension bookkeeping, spectrum reassembly
    std::map<int, LatticeContext> lattices;
    long long total_rank = 0;
    Int dim_expected = lagrangian_count(d, q);
    Int dim_book = 0;
    std::vector<long long> mult_sum(scheme.eigenvalues().size(), 0);
    for (size_t s = 0; s < syms.size(); ++s) {
        auto te = type_eps(syms[s]);
        int n = d - te.rank;
        if (!lattices.count(n)) lattices.emplace(n, build_lattice(n, F));
        dim_book += subspace_total(n, q);
        SpectralSide side = ps.is_exact ? restricted_spectrum_exact(ps.exact[s], scheme)
                                        : restricted_spectrum_cplx(ps.cplx[s], scheme);
        total_rank += side.rank;
        for (size_t j = 0; j < side.mult.size(); ++j) mult_sum[j] += side.mult[j];
        std::string tag = "S#" + std::to_string(s) + " (rank " + std::to_string(te.rank) +
                          ", eps " + std::to_string(te.eps) + ")";
        rws_compare(rep, tag, side, te.eps, d, lattices.at(n), scheme, tol);
    }
    rep.check_true("sum_S rank(P_S) = |X|", total_rank == V,
                   std::to_string(total_rank) + " vs " + std::to_string(V));
    rep.check_true("sum_S |L_{d-rank S}| = |X|", dim_book == dim_expected,
                   dim_book.str() + " vs " + dim_expected.str());
    {
        auto mult = scheme.multiplicities();
        bool ok = true;
        for (size_t j = 0; j < mult.size(); ++j) ok = ok && (mult_sum[j] == mult[j]);
        rep.check_true("per-S multiplicities reassemble the spectrum of A_1", ok);
    }
    return rep;
}

} // namespace qlab
