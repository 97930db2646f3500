#include "qlab/scheme.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qlab {

namespace {

std::string entry_witness(int i, int j, const std::string& what) {
    std::ostringstream os;
    os << what << " at entry (" << i << ", " << j << ")";
    return os.str();
}

// ----- small exact polynomial helpers (coefficients low-first) -----

using QPoly = std::vector<Rational>;

void poly_trim(QPoly& a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    if (a.empty()) a.assign(1, Rational(0));
}

bool poly_is_zero_q(const QPoly& a) { return a.size() == 1 && a[0] == 0; }

QPoly poly_rem(QPoly a, const QPoly& b) {
    poly_trim(a);
    while (!poly_is_zero_q(a) && a.size() >= b.size()) {
        Rational f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

QPoly poly_monic(QPoly a) {
    poly_trim(a);
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    return a;
}

QPoly poly_gcd(QPoly a, QPoly b) {
    poly_trim(a);
    poly_trim(b);
    while (!poly_is_zero_q(b)) {
        QPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

QPoly poly_lcm(const QPoly& a, const QPoly& b) {
    QPoly g = poly_gcd(a, b);
    QPoly prod = poly_mul(a, b);
    // exact division prod / g
    QPoly quot(prod.size() - g.size() + 1, Rational(0));
    QPoly rem = prod;
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        Rational f = rem[k + g.size() - 1] / g.back();
        quot[k] = f;
        for (size_t i = 0; i < g.size(); ++i) rem[k + i] -= f * g[i];
    }
    return poly_monic(quot);
}

// Minimal polynomial of the Krylov sequence columns[0..], stopping at the
// first linear dependency. Vectors are the columns of stored matrix powers.
QPoly krylov_min_poly(const std::vector<IMat>& powers, int col) {
    const int V = powers[0].size();
    // rows: reduced Krylov vectors with their expression in original indices
    std::vector<std::vector<Rational>> basis;
    std::vector<int> pivot;
    std::vector<std::vector<Rational>> expr;
    for (size_t k = 0; k < powers.size(); ++k) {
        std::vector<Rational> v(V);
        for (int i = 0; i < V; ++i) v[i] = powers[k].at(i, col);
        std::vector<Rational> ex(k + 1, Rational(0));
        ex[k] = 1;
        for (size_t t = 0; t < basis.size(); ++t) {
            Rational f = v[pivot[t]];
            if (f == 0) continue;
            for (int i = 0; i < V; ++i) v[i] -= f * basis[t][i];
            for (size_t i = 0; i < expr[t].size() && i < ex.size(); ++i) ex[i] -= f * expr[t][i];
        }
        int p = -1;
        for (int i = 0; i < V; ++i)
            if (v[i] != 0) { p = i; break; }
        if (p < 0) return ex; // monic by construction (ex[k] = 1)
        Rational d = v[p];
        for (int i = 0; i < V; ++i) v[i] /= d;
        for (auto& c : ex) c /= d;
        basis.push_back(std::move(v));
        pivot.push_back(p);
        expr.push_back(std::move(ex));
    }
    throw UnsupportedScheme("A_1 minimal polynomial degree exceeds class count + 1");
}

// Integer divisors of |n| in ascending order.
std::vector<Int> divisors_of(Int n) {
    if (n < 0) n = -n;
    std::vector<Int> d;
    for (Int t = 1; t * t <= n; ++t)
        if (n % t == 0) {
            d.push_back(t);
            if (t * t != n) d.push_back(n / t);
        }
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

std::vector<Rational> minimal_polynomial(const QMat& M) {
    if (M.rows() != M.cols()) throw DimensionMismatch("minimal_polynomial: not square");
    const int V = M.rows();
    // Krylov per probe column with lcm aggregation, then a dense verification.
    std::vector<QMat> powers{QMat::identity(V)};
    auto ensure_power = [&](size_t k) {
        while (powers.size() <= k) powers.push_back(powers.back() * M);
    };
    QPoly m{Rational(1)};
    for (int col = 0; col < V; ++col) {
        ensure_power(m.size()); // at least current degree + 1
        // grow powers until dependency for this probe
        QPoly probe;
        for (size_t cap = m.size();; ++cap) {
            ensure_power(cap);
            std::vector<IMat> dummy; // unused path
            // local krylov on rational powers
            std::vector<std::vector<Rational>> basis;
            std::vector<int> pivot;
            std::vector<std::vector<Rational>> expr;
            bool found = false;
            for (size_t k = 0; k <= cap && !found; ++k) {
                std::vector<Rational> v(V);
                for (int i = 0; i < V; ++i) v[i] = powers[k].at(i, col);
                std::vector<Rational> ex(k + 1, Rational(0));
                ex[k] = 1;
                for (size_t t = 0; t < basis.size(); ++t) {
                    Rational f = v[pivot[t]];
                    if (f == 0) continue;
                    for (int i = 0; i < V; ++i) v[i] -= f * basis[t][i];
                    for (size_t i = 0; i < expr[t].size() && i < ex.size(); ++i)
                        ex[i] -= f * expr[t][i];
                }
                int p = -1;
                for (int i = 0; i < V; ++i)
                    if (v[i] != 0) { p = i; break; }
                if (p < 0) {
                    probe = ex;
                    found = true;
                    break;
                }
                Rational d = v[p];
                for (int i = 0; i < V; ++i) v[i] /= d;
                for (auto& c : ex) c /= d;
                basis.push_back(std::move(v));
                pivot.push_back(p);
                expr.push_back(std::move(ex));
            }
            if (found) break;
        }
        m = poly_lcm(m, probe);
        if (static_cast<int>(m.size()) == V + 1) break;
    }
    // verify m(M) = 0
    ensure_power(m.size() - 1);
    QMat acc(V, V);
    for (size_t k = 0; k < m.size(); ++k)
        if (m[k] != 0) acc = acc + powers[k].scaled(m[k]);
    if (!acc.is_zero()) throw Error("minimal_polynomial: verification failed (internal)");
    return m;
}

SchemeData::SchemeData(std::vector<BinMat> matrices) : A_(std::move(matrices)) {
    if (A_.empty()) throw DimensionMismatch("SchemeData: no matrices");
    for (const auto& M : A_)
        if (M.size() != A_[0].size()) throw DimensionMismatch("SchemeData: sizes differ");
}

const std::vector<uint8_t>& SchemeData::class_index() const {
    if (!class_index_.empty()) return class_index_;
    const int V = npoints();
    class_index_.assign(static_cast<size_t>(V) * V, 255);
    for (size_t i = 0; i < A_.size(); ++i)
        for (int x = 0; x < V; ++x)
            for (int y = 0; y < V; ++y)
                if (A_[i].at(x, y)) {
                    auto& c = class_index_[static_cast<size_t>(x) * V + y];
                    if (c != 255)
                        throw AxiomViolation("matrices overlap at (" + std::to_string(x) + "," +
                                             std::to_string(y) + ")");
                    c = static_cast<uint8_t>(i);
                }
    for (size_t t = 0; t < class_index_.size(); ++t)
        if (class_index_[t] == 255)
            throw AxiomViolation("matrices do not sum to J (uncovered entry)");
    return class_index_;
}

const std::vector<std::vector<std::vector<long long>>>& SchemeData::p_table() const {
    if (!p_.empty()) return p_;
    const int N = classes();
    const int V = npoints();
    const auto& cls = class_index();
    p_.assign(N + 1, std::vector<std::vector<long long>>(
                         N + 1, std::vector<long long>(N + 1, -1)));
    for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j) {
            IMat prod = mul(A_[i], A_[j]);
            for (int x = 0; x < V; ++x)
                for (int y = 0; y < V; ++y) {
                    int k = cls[static_cast<size_t>(x) * V + y];
                    long long v = prod.at(x, y);
                    auto& slot = p_[i][j][k];
                    if (slot < 0)
                        slot = v;
                    else if (slot != v)
                        throw AxiomViolation("closure fails: (A" + std::to_string(i) + " A" +
                                             std::to_string(j) + ") not constant on class " +
                                             std::to_string(k) + " " + entry_witness(x, y, ""));
                }
        }
    return p_;
}

const std::vector<Rational>& SchemeData::eigenvalues() const {
    if (!eigs_.empty()) return eigs_;
    const int N = classes();
    // IMat powers of A_1 up to degree N+1; probe-lcm minimal polynomial with
    // exact integer verification.
    IMat I0(npoints());
    for (int i = 0; i < npoints(); ++i) I0.at(i, i) = 1;
    std::vector<IMat> powers{std::move(I0)};
    for (int k = 1; k <= N + 1; ++k) {
        IMat nxt(npoints());
        const IMat& prev = powers.back();
        const BinMat& A1 = A_[1];
        const int V = npoints();
        for (int i = 0; i < V; ++i)
            for (int t = 0; t < V; ++t) {
                long long a = prev.at(i, t);
                if (!a) continue;
                for (int j = 0; j < V; ++j)
                    if (A1.at(t, j)) nxt.at(i, j) += a;
            }
        powers.push_back(std::move(nxt));
    }
    QPoly m{Rational(1)};
    for (int col = 0; col < npoints(); ++col) {
        QPoly probe = krylov_min_poly(powers, col);
        m = poly_lcm(m, probe);
        // verify candidate on the stored powers
        if (static_cast<int>(m.size()) > static_cast<int>(powers.size()))
            throw NonRationalEigenvalue("minimal polynomial degree exceeded bound");
        bool zero = true;
        const int V = npoints();
        for (int i = 0; i < V && zero; ++i)
            for (int j = 0; j < V && zero; ++j) {
                Rational acc = 0;
                for (size_t k = 0; k < m.size(); ++k)
                    if (m[k] != 0) acc += m[k] * powers[k].at(i, j);
                if (acc != 0) zero = false;
            }
        if (zero) break;
        if (col == npoints() - 1) throw Error("minimal polynomial not found (internal)");
    }
    // rational (integer) root extraction with deflation
    QPoly cur = m;
    std::vector<Rational> roots;
    while (cur.size() > 1) {
        Rational root;
        bool found = false;
        if (cur[0] == 0) {
            root = 0;
            found = true;
        } else {
            Int c0num = boost::multiprecision::numerator(cur[0]);
            // monic integer polynomial: rational roots are integer divisors of c0
            for (const Int& dv : divisors_of(c0num)) {
                for (int sign = 1; sign >= -1 && !found; sign -= 2) {
                    Rational cand = Rational(dv * sign);
                    Rational val = 0;
                    for (int k = static_cast<int>(cur.size()) - 1; k >= 0; --k)
                        val = val * cand + cur[k];
                    if (val == 0) {
                        root = cand;
                        found = true;
                    }
                }
                if (found) break;
            }
        }
        if (!found)
            throw NonRationalEigenvalue("A_1 minimal polynomial has a non-rational root");
        roots.push_back(root);
        // synthetic division by (x - root)
        QPoly next(cur.size() - 1);
        Rational carry = 0;
        for (int k = static_cast<int>(cur.size()) - 1; k >= 1; --k) {
            carry = cur[k] + carry * root;
            next[k - 1] = carry;
        }
        cur = std::move(next);
    }
    std::sort(roots.begin(), roots.end(), std::greater<Rational>());
    eigs_ = std::move(roots);
    return eigs_;
}

const std::vector<QMat>& SchemeData::idempotent_list() const {
    if (!E_.empty()) return E_;
    const auto& th = eigenvalues();
    const int V = npoints();
    QMat A1 = to_qmat(A_[1]);
    for (size_t j = 0; j < th.size(); ++j) {
        QMat E = QMat::identity(V);
        for (size_t l = 0; l < th.size(); ++l) {
            if (l == j) continue;
            QMat f = A1;
            for (int t = 0; t < V; ++t) f.at(t, t) -= th[l];
            E = E * f.scaled(Rational(1) / (th[j] - th[l]));
        }
        E_.push_back(std::move(E));
    }
    return E_;
}

const QMat& SchemeData::P() const {
    if (P_.rows() > 0) return P_;
    const int N = classes();
    const auto& E = idempotent_list();
    if (static_cast<int>(E.size()) != N + 1)
        throw UnsupportedScheme("A_1 has " + std::to_string(E.size()) +
                                " distinct eigenvalues but the scheme has " +
                                std::to_string(N + 1) + " classes (not P-polynomial)");
    auto mult = multiplicities();
    const int V = npoints();
    QMat P(N + 1, N + 1);
    for (int j = 0; j <= N; ++j)
        for (int i = 0; i <= N; ++i) {
            // p_i(j) = trace(A_i E_j) / m_j
            Rational tr = 0;
            for (int x = 0; x < V; ++x)
                for (int y = 0; y < V; ++y)
                    if (A_[i].at(x, y)) tr += E[j].at(y, x);
            P.at(j, i) = tr / mult[j];
        }
    // reconstruction check: A_i = sum_j p_i(j) E_j
    for (int i = 0; i <= N; ++i) {
        QMat rec(V, V);
        for (int j = 0; j <= N; ++j) rec = rec + E[j].scaled(P.at(j, i));
        if (!(rec == to_qmat(A_[i])))
            throw UnsupportedScheme("A_" + std::to_string(i) +
                                    " is not a combination of the A_1 eigenprojectors");
    }
    P_ = std::move(P);
    return P_;
}

const QMat& SchemeData::Q() const {
    if (Q_.rows() > 0) return Q_;
    Q_ = P().inverse().scaled(Rational(npoints()));
    return Q_;
}

std::vector<long long> SchemeData::multiplicities() const {
    const auto& E = idempotent_list();
    std::vector<long long> m;
    for (const auto& Ej : E) {
        Rational tr = Ej.trace();
        Int num = boost::multiprecision::numerator(tr);
        Int den = boost::multiprecision::denominator(tr);
        if (den != 1) throw UnsupportedScheme("idempotent trace is not an integer");
        m.push_back(num.convert_to<long long>());
    }
    return m;
}

const std::vector<std::vector<std::vector<Rational>>>& SchemeData::krein_table() const {
    if (!krein_.empty()) return krein_;
    const int N = classes();
    const QMat& Pm = P();
    const QMat& Qm = Q();
    const Rational X(npoints());
    krein_.assign(N + 1, std::vector<std::vector<Rational>>(N + 1,
                                                            std::vector<Rational>(N + 1, 0)));
    for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j)
            for (int k = 0; k <= N; ++k) {
                Rational s = 0;
                for (int l = 0; l <= N; ++l) s += Qm.at(l, i) * Qm.at(l, j) * Pm.at(k, l);
                krein_[i][j][k] = s / X;
            }
    // defensive verification: E_i o E_j = |X|^-1 sum_k q_ij^k E_k, exactly
    const auto& E = idempotent_list();
    for (int i = 0; i <= N; ++i)
        for (int j = i; j <= N; ++j) {
            QMat lhs = E[i].hadamard(E[j]);
            QMat rhs(npoints(), npoints());
            for (int k = 0; k <= N; ++k)
                if (krein_[i][j][k] != 0) rhs = rhs + E[k].scaled(krein_[i][j][k]);
            rhs = rhs.scaled(Rational(1) / X);
            if (!(lhs == rhs))
                throw InconsistentExpansion("Krein expansion failed for (i,j) = (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
        }
    return krein_;
}

Report verify_axioms(const SchemeData& S) {
    Report rep;
    const int N = S.classes();
    const int V = S.npoints();
    // (i) A_0 = I
    {
        bool ok = true;
        std::string w;
        for (int x = 0; x < V && ok; ++x)
            for (int y = 0; y < V && ok; ++y)
                if (S.A(0).at(x, y) != (x == y)) {
                    ok = false;
                    w = entry_witness(x, y, "A_0 != I");
                }
        rep.check_true("axiom (i): A_0 = I", ok, w);
    }
    // (ii) sum = J and (iii) symmetry
    {
        bool ok = true;
        std::string w;
        try {
            S.class_index();
        } catch (const AxiomViolation& e) {
            ok = false;
            w = e.what();
        }
        rep.check_true("axiom (ii): sum A_i = J", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i <= N && ok; ++i)
            for (int x = 0; x < V && ok; ++x)
                for (int y = x + 1; y < V && ok; ++y)
                    if (S.A(i).at(x, y) != S.A(i).at(y, x)) {
                        ok = false;
                        w = "A_" + std::to_string(i) + " " + entry_witness(x, y, "asymmetric");
                    }
        rep.check_true("axiom (iii): A_i symmetric", ok, w);
    }
    // (iv) closure with constant nonnegative integer structure constants
    {
        bool ok = true;
        std::string w;
        try {
            S.p_table();
        } catch (const AxiomViolation& e) {
            ok = false;
            w = e.what();
        }
        rep.check_true("axiom (iv): Bose-Mesner closure", ok, w);
    }
    return rep;
}

std::vector<Rational> eigenvalues_of_A1(const SchemeData& S) { return S.eigenvalues(); }

std::vector<QMat> idempotents(const SchemeData& S) { return S.idempotent_list(); }

std::pair<QMat, QMat> eigenmatrices(const SchemeData& S) { return {S.P(), S.Q()}; }

std::vector<std::vector<std::vector<Rational>>> krein_parameters(const SchemeData& S) {
    return S.krein_table();
}

std::vector<QMat> dual_adjacency(const SchemeData& S, int x0) {
    const auto& E = S.idempotent_list();
    const int V = S.npoints();
    std::vector<QMat> dual;
    for (const auto& Ej : E) {
        QMat D(V, V);
        for (int x = 0; x < V; ++x) D.at(x, x) = Rational(V) * Ej.at(x, x0);
        dual.push_back(std::move(D));
    }
    return dual;
}

Report check_dual_bose_mesner(const SchemeData& S, int x0) {
    Report rep;
    const int N = S.classes();
    const int V = S.npoints();
    const auto& E = S.idempotent_list();
    const auto& q = S.krein_table();
    // A_0* = I
    {
        bool ok = true;
        for (int x = 0; x < V && ok; ++x) ok = (Rational(V) * E[0].at(x, x0) == 1);
        rep.check_true("A_0* = I", ok);
    }
    bool ok = true;
    std::string w;
    for (int i = 0; i <= N && ok; ++i)
        for (int j = 0; j <= N && ok; ++j)
            for (int x = 0; x < V && ok; ++x) {
                Rational lhs = Rational(V) * E[i].at(x, x0) * Rational(V) * E[j].at(x, x0);
                Rational rhs = 0;
                for (int k = 0; k <= N; ++k) rhs += q[i][j][k] * Rational(V) * E[k].at(x, x0);
                if (lhs != rhs) {
                    ok = false;
                    w = "(i,j,x) = (" + std::to_string(i) + "," + std::to_string(j) + "," +
                        std::to_string(x) + ")";
                }
            }
    rep.check_true("dual Bose-Mesner relations A_i* A_j* = sum q_ij^k A_k*", ok, w);
    return rep;
}

Report check_P_and_Q_polynomial(const SchemeData& S) {
    Report rep;
    const int N = S.classes();
    const auto& p = S.p_table();
    {
        bool tri = true;
        std::string w;
        for (int i = 0; i <= N && tri; ++i)
            for (int k = 0; k <= N && tri; ++k)
                if (std::abs(i - k) > 1 && p[1][i][k] != 0) {
                    tri = false;
                    w = "p_{1," + std::to_string(i) + "}^" + std::to_string(k) + " = " +
                        std::to_string(p[1][i][k]);
                }
        for (int i = 0; i < N && tri; ++i)
            if (p[1][i][i + 1] == 0) {
                tri = false;
                w = "c_" + std::to_string(i + 1) + " = 0: recurrence does not reach A_" +
                    std::to_string(i + 1);
            }
        rep.check_true("P-polynomial (p_1i^k tridiagonal, recurrence closes)", tri, w);
    }
    try {
        const auto& q = S.krein_table();
        auto tridiagonal = [&](bool reversed) {
            for (int i = 0; i <= N; ++i)
                for (int k = 0; k <= N; ++k) {
                    int ii = reversed ? N - i : i;
                    int kk = reversed ? N - k : k;
                    int one = reversed ? N - 1 : 1;
                    if (std::abs(i - k) > 1 && q[one][ii][kk] != 0) return false;
                }
            return true;
        };
        if (tridiagonal(false))
            rep.pass("Q-polynomial (ordering: natural)");
        else if (tridiagonal(true))
            rep.pass("Q-polynomial (ordering: reversed)");
        else
            rep.fail("Q-polynomial", "1", "q_1i^k not tridiagonal in natural or reversed order");
    } catch (const Error& e) {
        rep.fail("Q-polynomial", "1", e.what());
    }
    return rep;
}

Report check_bose_mesner_duality(const SchemeData& S) {
    Report rep;
    const int N = S.classes();
    const int V = S.npoints();
    const auto& E = S.idempotent_list();
    // idempotency, orthogonality, completeness, symmetry
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i <= N && ok; ++i)
            for (int j = 0; j <= N && ok; ++j) {
                QMat prod = E[i] * E[j];
                QMat want = (i == j) ? E[i] : QMat(V, V);
                if (!(prod == want)) {
                    ok = false;
                    w = "E_" + std::to_string(i) + " E_" + std::to_string(j);
                }
            }
        rep.check_true("E_i E_j = delta_ij E_i", ok, w);
    }
    {
        QMat sum(V, V);
        for (const auto& Ej : E) sum = sum + Ej;
        rep.check_true("sum E_j = I", sum == QMat::identity(V));
    }
    {
        bool ok = true;
        for (int j = 0; j <= N && ok; ++j) ok = (E[j] == E[j].transpose());
        rep.check_true("E_j symmetric", ok);
    }
    // PQ = |X| I, Q structure, multiplicities
    {
        const QMat& Pm = S.P();
        const QMat& Qm = S.Q();
        QMat prod = Pm * Qm;
        rep.check_true("PQ = |X| I", prod == QMat::identity(N + 1).scaled(Rational(V)));
        bool ones = true;
        for (int i = 0; i <= N && ones; ++i) ones = (Qm.at(i, 0) == 1);
        rep.check_true("first column of Q is all ones", ones);
        bool valency = true;
        for (int i = 0; i <= N && valency; ++i) {
            long long rowsum = 0;
            for (int y = 0; y < V; ++y) rowsum += S.A(i).at(0, y);
            valency = (Pm.at(0, i) == rowsum);
        }
        rep.check_true("row 0 of P is the valency row", valency);
        auto mult = S.multiplicities();
        bool mok = true;
        for (int j = 0; j <= N && mok; ++j) mok = (Qm.at(0, j) == mult[j]);
        rep.check_true("q_0(j) = m_j = rank E_j", mok);
    }
    // Krein nonnegativity
    {
        const auto& q = S.krein_table();
        bool ok = true;
        std::string w;
        for (int i = 0; i <= N && ok; ++i)
            for (int j = 0; j <= N && ok; ++j)
                for (int k = 0; k <= N && ok; ++k)
                    if (q[i][j][k] < 0) {
                        ok = false;
                        w = "q_{" + std::to_string(i) + std::to_string(j) + "}^" +
                            std::to_string(k) + " = " + rat_to_string(q[i][j][k]);
                    }
        rep.check_true("Krein parameters nonnegative", ok, w);
        bool kron = true;
        for (int j = 0; j <= N && kron; ++j)
            for (int k = 0; k <= N && kron; ++k) kron = (q[0][j][k] == (j == k ? 1 : 0));
        rep.check_true("q_0j^k = delta_jk", kron);
    }
    return rep;
}

namespace {

// Exact span tracker over flattened rational matrices.
class SpanBasis {
public:
    explicit SpanBasis(size_t dim) : dim_(dim) {}

    bool insert(std::vector<Rational> v) {
        for (size_t t = 0; t < rows_.size(); ++t) {
            Rational f = v[pivot_[t]];
            if (f == 0) continue;
            for (size_t i = 0; i < dim_; ++i) v[i] -= f * rows_[t][i];
        }
        size_t p = dim_;
        for (size_t i = 0; i < dim_; ++i)
            if (v[i] != 0) { p = i; break; }
        if (p == dim_) return false;
        Rational d = v[p];
        for (size_t i = 0; i < dim_; ++i) v[i] /= d;
        rows_.push_back(std::move(v));
        pivot_.push_back(p);
        return true;
    }

    size_t size() const { return rows_.size(); }

private:
    size_t dim_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<size_t> pivot_;
};

std::vector<Rational> flatten(const QMat& M) {
    std::vector<Rational> v;
    v.reserve(static_cast<size_t>(M.rows()) * M.cols());
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j) v.push_back(M.at(i, j));
    return v;
}

} // namespace

Report check_terwilliger_dimension(const SchemeData& S, int x0, int size_cap) {
    Report rep;
    const int V = S.npoints();
    if (V > size_cap) {
        rep.skip("Terwilliger dimension sanity",
                 "|X| = " + std::to_string(V) + " exceeds cap " + std::to_string(size_cap));
        return rep;
    }
    const int N = S.classes();
    QMat A1 = to_qmat(S.A(1));
    auto dual = dual_adjacency(S, x0);
    const QMat& A1s = dual[1];

    // span of words in {A_1, A_1*}
    SpanBasis words(static_cast<size_t>(V) * V);
    std::vector<QMat> frontier{QMat::identity(V)};
    words.insert(flatten(frontier[0]));
    while (!frontier.empty()) {
        std::vector<QMat> next;
        for (const auto& Wm : frontier)
            for (const QMat* g : {static_cast<const QMat*>(&A1), &A1s}) {
                QMat prod = Wm * *g;
                if (words.insert(flatten(prod))) next.push_back(std::move(prod));
            }
        frontier = std::move(next);
    }
    // span of sampled monomials A_i A_j* A_k
    SpanBasis monomials(static_cast<size_t>(V) * V);
    for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j)
            for (int k = 0; k <= N; ++k)
                monomials.insert(flatten(to_qmat(S.A(i)) * dual[j] * to_qmat(S.A(k))));
    std::string detail = "dim<A_1,A_1*> = " + std::to_string(words.size()) +
                         ", dim span{A_i A_j* A_k} = " + std::to_string(monomials.size());
    rep.check_true("Terwilliger dimension sanity (" + detail + ")",
                   words.size() >= monomials.size(), detail);
    return rep;
}

} // namespace qlab
