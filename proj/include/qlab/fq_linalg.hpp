#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlab/finite_field.hpp"
#include "qlab/rational.hpp"

namespace qlab {

using VecFq = std::vector<uint8_t>;

/// Dense matrix over F_q.
class MatFq {
public:
    MatFq(const Field& F, int rows, int cols)
        : F_(&F), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return *F_; }
    uint8_t at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
    void set(int i, int j, uint8_t v) { e_[static_cast<size_t>(i) * cols_ + j] = v; }
    VecFq row(int i) const;
    bool operator==(const MatFq& o) const { return e_ == o.e_ && rows_ == o.rows_ && cols_ == o.cols_; }

private:
    const Field* F_;
    int rows_, cols_;
    std::vector<uint8_t> e_;
};

/// Reduced row echelon form (row space preserved).
MatFq rref(const MatFq& M);
int rank(const MatFq& M);
/// RREF restricted to the nonzero rows (rank many rows).
MatFq rref_basis(const MatFq& M);

/// Subspace of F_q^n held in the canonical upper-triangular form:
/// diagonal in {0,1} (the profile), each nonzero column has its lowest nonzero
/// entry 1 on the diagonal, and rows holding a pivot vanish elsewhere. The
/// implication "entry (i,j) nonzero => diag(i) = 0 and diag(j) = 1" is enforced
/// off the diagonal only.
class Subspace {
public:
    Subspace(const Field& F, int n, MatFq tau, std::vector<uint8_t> profile);

    int ambient() const { return n_; }
    int dim() const { return dim_; }
    const Field& field() const { return *F_; }
    const MatFq& tau() const { return tau_; }
    const std::vector<uint8_t>& profile() const { return profile_; }
    /// Basis vectors = pivot columns of tau, as rows.
    std::vector<VecFq> basis() const;
    /// Free (off-diagonal, non-pivot-row) positions in row-major order.
    std::vector<std::pair<int, int>> free_positions() const;

    /// "n=..;q=..;p=010;f=a,b,..." with free entries row-major (f omitted when none).
    std::string to_string() const;

    bool operator==(const Subspace& o) const { return tau_ == o.tau_; }

private:
    const Field* F_;
    int n_, dim_;
    MatFq tau_;
    std::vector<uint8_t> profile_;
};

/// Canonical form of the span of the given vectors (empty input: zero subspace).
Subspace tau_canonical(const std::vector<VecFq>& vectors, int n, const Field& F);

/// Covering test: dim V = dim U + 1 and U inside V, evaluated through the
/// canonical-form conditions (profiles at Hamming distance 1 with the extra
/// pivot at k in V; columns equal left of k; columns right of k differ by
/// multiples of column k).
bool covers(const Subspace& V, const Subspace& U);

/// Number of covered subspaces with profile x - e_k below a fixed coverer of
/// profile x: q^{sum_{j>k} x_j}. k is a 0-based index with x[k] = 1.
Int cover_count(const std::vector<uint8_t>& x, int k, long long q);

/// Size of the tau_diag preimage of profile x: q^{sum_i sum_{j<i} x_i (1 - x_j)}.
Int profile_preimage_size(const std::vector<uint8_t>& x, long long q);
/// The exponent in the above (number of free entries).
long long profile_free_count(const std::vector<uint8_t>& x);

/// All subspaces of F_q^n, ordered by (profile lexicographic, free entries
/// lexicographic). Throws LimitExceeded if the count would exceed limit.
std::vector<Subspace> enumerate_subspaces(int n, const Field& F, long long limit = 1000000);

int intersect_dim(const Subspace& V, const Subspace& U);

} // namespace qlab
