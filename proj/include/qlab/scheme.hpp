#pragma once

#include "qlab/matrix.hpp"
#include "qlab/report.hpp"

namespace qlab {

/// A candidate symmetric association scheme: 0/1 matrices A_0..A_N on one
/// vertex set, plus everything derived from them. Derived data is computed
/// once on demand; operations that need a valid P-polynomial scheme throw
/// (NonRationalEigenvalue / UnsupportedScheme) on unsupported input.
class SchemeData {
public:
    explicit SchemeData(std::vector<BinMat> matrices);

    int classes() const { return static_cast<int>(A_.size()) - 1; }
    int npoints() const { return A_[0].size(); }
    const BinMat& A(int i) const { return A_[i]; }
    const std::vector<BinMat>& matrices() const { return A_; }

    /// Distance-class index of an entry (the unique i with (A_i)_{xy} = 1);
    /// AxiomViolation if the matrices do not partition J.
    const std::vector<uint8_t>& class_index() const;

    const std::vector<std::vector<std::vector<long long>>>& p_table() const;
    const std::vector<Rational>& eigenvalues() const;  // of A_1, sorted descending
    const std::vector<QMat>& idempotent_list() const;
    const QMat& P() const;
    const QMat& Q() const;
    std::vector<long long> multiplicities() const; // rank E_j = trace E_j
    const std::vector<std::vector<std::vector<Rational>>>& krein_table() const;

private:
    std::vector<BinMat> A_;
    mutable std::vector<uint8_t> class_index_;
    mutable std::vector<std::vector<std::vector<long long>>> p_;
    mutable std::vector<Rational> eigs_;
    mutable std::vector<QMat> E_;
    mutable QMat P_{0, 0}, Q_{0, 0};
    mutable std::vector<std::vector<std::vector<Rational>>> krein_;
};

/// Monic minimal polynomial of a rational matrix, low coefficient first
/// (coeffs c_0..c_{d-1} of x^d + c_{d-1} x^{d-1} + ... + c_0).
std::vector<Rational> minimal_polynomial(const QMat& M);

/// Axioms (i)-(iv): A_0 = I, sum = J, symmetry, closure with constant
/// nonnegative integer p_ij^k. Witness entries on failure.
Report verify_axioms(const SchemeData& S);

/// Eigenvalues of A_1 as exact rationals via rational-root extraction from the
/// minimal polynomial; NonRationalEigenvalue if extraction is incomplete.
std::vector<Rational> eigenvalues_of_A1(const SchemeData& S);

/// Primitive idempotents by Lagrange interpolation in A_1 (valid for
/// P-polynomial schemes; E_0 is the all-ones eigenspace projector).
std::vector<QMat> idempotents(const SchemeData& S);

/// First and second eigenmatrices: P[j][i] = p_i(j), Q = |X| P^{-1}.
std::pair<QMat, QMat> eigenmatrices(const SchemeData& S);

std::vector<std::vector<std::vector<Rational>>> krein_parameters(const SchemeData& S);

/// Diagonal dual matrices A_i*(x0) with (A_i*)_{xx} = |X| (E_i)_{x,x0}.
std::vector<QMat> dual_adjacency(const SchemeData& S, int x0);

/// Dual Bose-Mesner relations A_i* A_j* = sum_k q_ij^k A_k*, exactly.
Report check_dual_bose_mesner(const SchemeData& S, int x0);

/// Tridiagonality of p_1i^k, and of q_1i^k under the natural order or its
/// reversal; the witnessing ordering is recorded.
Report check_P_and_Q_polynomial(const SchemeData& S);

/// Idempotent identities, reconstruction, PQ = |X| I, Krein nonnegativity.
Report check_bose_mesner_duality(const SchemeData& S);

/// Sanity dimension count: span of words in {A_1, A_1*} at least as large as
/// the span of the sampled monomials {A_i A_j* A_k}.
Report check_terwilliger_dimension(const SchemeData& S, int x0, int size_cap = 48);

} // namespace qlab
