#include "qlab/fq_linalg.hpp"

#include <algorithm>
#include <sstream>

#include "qlab/exact_scalar.hpp"

namespace qlab {

VecFq MatFq::row(int i) const {
    VecFq r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

namespace {

// In-place forward elimination; returns rank. Columns processed left to right.
int rref_inplace(MatFq& M) {
    const Field& F = M.field();
    int lead = 0, r = 0;
    for (; r < M.rows() && lead < M.cols(); ++lead) {
        int piv = -1;
        for (int i = r; i < M.rows(); ++i)
            if (M.at(i, lead) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < M.cols(); ++j) {
                uint8_t t = M.at(r, j);
                M.set(r, j, M.at(piv, j));
                M.set(piv, j, t);
            }
        uint8_t inv = F.inv(M.at(r, lead));
        for (int j = 0; j < M.cols(); ++j) M.set(r, j, F.mul(M.at(r, j), inv));
        for (int i = 0; i < M.rows(); ++i) {
            if (i == r) continue;
            uint8_t f = M.at(i, lead);
            if (f == 0) continue;
            for (int j = 0; j < M.cols(); ++j)
                M.set(i, j, F.sub(M.at(i, j), F.mul(f, M.at(r, j))));
        }
        ++r;
    }
    return r;
}

} // namespace

MatFq rref(const MatFq& M) {
    MatFq R = M;
    rref_inplace(R);
    return R;
}

int rank(const MatFq& M) {
    MatFq R = M;
    return rref_inplace(R);
}

MatFq rref_basis(const MatFq& M) {
    MatFq R = M;
    int r = rref_inplace(R);
    MatFq B(M.field(), r, M.cols());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < M.cols(); ++j) B.set(i, j, R.at(i, j));
    return B;
}

Subspace::Subspace(const Field& F, int n, MatFq tau, std::vector<uint8_t> profile)
    : F_(&F), n_(n), tau_(std::move(tau)), profile_(std::move(profile)) {
    dim_ = 0;
    for (uint8_t b : profile_) dim_ += b;
}

std::vector<VecFq> Subspace::basis() const {
    std::vector<VecFq> rows;
    for (int j = 0; j < n_; ++j) {
        if (!profile_[j]) continue;
        VecFq v(n_);
        for (int i = 0; i < n_; ++i) v[i] = tau_.at(i, j);
        rows.push_back(std::move(v));
    }
    return rows;
}

std::vector<std::pair<int, int>> Subspace::free_positions() const {
    std::vector<std::pair<int, int>> pos;
    for (int i = 0; i < n_; ++i) {
        if (profile_[i]) continue;
        for (int j = i + 1; j < n_; ++j)
            if (profile_[j]) pos.emplace_back(i, j);
    }
    std::sort(pos.begin(), pos.end());
    return pos;
}

std::string Subspace::to_string() const {
    std::ostringstream os;
    os << "n=" << n_ << ";q=" << F_->q() << ";p=";
    for (uint8_t b : profile_) os << int(b);
    auto fp = free_positions();
    if (!fp.empty()) {
        os << ";f=";
        for (size_t k = 0; k < fp.size(); ++k)
            os << (k ? "," : "") << int(tau_.at(fp[k].first, fp[k].second));
    }
    return os.str();
}

Subspace tau_canonical(const std::vector<VecFq>& vectors, int n, const Field& F) {
    // Echelon form with pivots at the *last* nonzero coordinate of each basis
    // vector; this is the unique shape of the canonical upper-triangular form,
    // with the basis vectors as columns.
    std::vector<VecFq> rows;
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != n) throw DimensionMismatch("vector length != ambient");
        rows.push_back(v);
    }
    std::vector<VecFq> basis; // basis[t] has trailing pivot pivcol[t], zero at other pivots
    std::vector<int> pivcol;
    for (auto v : rows) {
        // one pass suffices: basis vectors vanish at each other's pivots
        for (size_t t = 0; t < basis.size(); ++t) {
            uint8_t f = v[pivcol[t]];
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) v[j] = F.sub(v[j], F.mul(f, basis[t][j]));
        }
        int last = -1;
        for (int j = n - 1; j >= 0; --j)
            if (v[j] != 0) { last = j; break; }
        if (last < 0) continue; // dependent
        uint8_t inv = F.inv(v[last]);
        for (int j = 0; j < n; ++j) v[j] = F.mul(v[j], inv);
        for (size_t t = 0; t < basis.size(); ++t) {
            uint8_t f = basis[t][last];
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) basis[t][j] = F.sub(basis[t][j], F.mul(f, v[j]));
        }
        basis.push_back(v);
        pivcol.push_back(last);
    }
    MatFq tau(F, n, n);
    std::vector<uint8_t> profile(n, 0);
    for (size_t k = 0; k < basis.size(); ++k) {
        int j = pivcol[k];
        profile[j] = 1;
        for (int i = 0; i <= j; ++i) tau.set(i, j, basis[k][i]);
    }
    return Subspace(F, n, std::move(tau), std::move(profile));
}

bool covers(const Subspace& V, const Subspace& U) {
    if (V.ambient() != U.ambient() || V.field().q() != U.field().q())
        throw DimensionMismatch("covers: ambient space mismatch");
    const int n = V.ambient();
    const Field& F = V.field();
    // (i) profiles at Hamming distance 1, extra pivot at k in V
    int k = -1;
    for (int j = 0; j < n; ++j) {
        if (V.profile()[j] == U.profile()[j]) continue;
        if (V.profile()[j] == 0 || k >= 0) return false;
        k = j;
    }
    if (k < 0) return false;
    // (ii) columns equal left of k
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i)
            if (V.tau().at(i, j) != U.tau().at(i, j)) return false;
    // (iii) u_j = v_j + c_j v_k; row k of v is e_k there, so c_j = u_{kj}
    for (int j = k + 1; j < n; ++j) {
        uint8_t c = U.tau().at(k, j);
        for (int i = 0; i < n; ++i) {
            uint8_t expect = F.add(V.tau().at(i, j), F.mul(c, V.tau().at(i, k)));
            if (U.tau().at(i, j) != expect) return false;
        }
    }
    return true;
}

Int cover_count(const std::vector<uint8_t>& x, int k, long long q) {
    if (k < 0 || k >= static_cast<int>(x.size()) || x[k] != 1)
        throw InvalidPosition("cover_count: x[k] must be 1");
    long long e = 0;
    for (size_t j = k + 1; j < x.size(); ++j) e += x[j];
    return int_pow(q, e);
}

long long profile_free_count(const std::vector<uint8_t>& x) {
    long long e = 0;
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i])
            for (size_t j = 0; j < i; ++j) e += 1 - x[j];
    return e;
}

Int profile_preimage_size(const std::vector<uint8_t>& x, long long q) {
    return int_pow(q, profile_free_count(x));
}

std::vector<Subspace> enumerate_subspaces(int n, const Field& F, long long limit) {
    if (n < 0) throw OutOfRange("enumerate_subspaces: n < 0");
    Int total = 0;
    for (int k = 0; k <= n; ++k) total += gaussian_binomial(n, k, F.q());
    if (total > limit)
        throw LimitExceeded("subspace count " + total.str() + " exceeds limit " +
                            std::to_string(limit));
    std::vector<Subspace> out;
    out.reserve(total.convert_to<size_t>());
    const int q = F.q();
    for (long long mask = 0; mask < (1LL << n); ++mask) {
        std::vector<uint8_t> profile(n);
        for (int i = 0; i < n; ++i) profile[i] = (mask >> (n - 1 - i)) & 1; // x_1 is the MSB
        std::vector<std::pair<int, int>> freepos;
        for (int i = 0; i < n; ++i) {
            if (profile[i]) continue;
            for (int j = i + 1; j < n; ++j)
                if (profile[j]) freepos.emplace_back(i, j);
        }
        std::sort(freepos.begin(), freepos.end());
        std::vector<uint8_t> digits(freepos.size(), 0);
        for (;;) {
            MatFq tau(F, n, n);
            for (int j = 0; j < n; ++j)
                if (profile[j]) tau.set(j, j, 1);
            for (size_t t = 0; t < freepos.size(); ++t)
                tau.set(freepos[t].first, freepos[t].second, digits[t]);
            out.emplace_back(F, n, std::move(tau), profile);
            // odometer, first position most significant
            int t = static_cast<int>(digits.size()) - 1;
            while (t >= 0 && digits[t] == q - 1) digits[t--] = 0;
            if (t < 0) break;
            ++digits[t];
        }
    }
    return out;
}

int intersect_dim(const Subspace& V, const Subspace& U) {
    if (V.ambient() != U.ambient() || V.field().q() != U.field().q())
        throw DimensionMismatch("intersect_dim: ambient space mismatch");
    auto bv = V.basis();
    auto bu = U.basis();
    MatFq stack(V.field(), static_cast<int>(bv.size() + bu.size()), V.ambient());
    int r = 0;
    for (const auto& v : bv) {
        for (int j = 0; j < V.ambient(); ++j) stack.set(r, j, v[j]);
        ++r;
    }
    for (const auto& v : bu) {
        for (int j = 0; j < V.ambient(); ++j) stack.set(r, j, v[j]);
        ++r;
    }
    return V.dim() + U.dim() - rank(stack);
}

} // namespace qlab
