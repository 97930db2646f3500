#pragma once

#include <complex>

#include "qlab/dual_polar.hpp"
#include "qlab/scheme.hpp"
#include "qlab/subspace_lattice.hpp"

namespace qlab {

/// Complex floating matrix with vertex labels; residuals of every floating
/// statement about it carry explicit tolerances.
struct ComplexOperator {
    int n = 0;
    std::vector<std::string> labels;
    std::vector<std::complex<double>> e;

    std::complex<double> at(int i, int j) const { return e[static_cast<size_t>(i) * n + j]; }
    std::complex<double>& at(int i, int j) { return e[static_cast<size_t>(i) * n + j]; }
};

/// All d x d symmetric matrices over F_q, upper triangle in row-major
/// lexicographic order; count q^{d(d+1)/2}.
std::vector<MatFq> enumerate_sym_matrices(int d, const Field& F, long long limit = 100000);

struct TypeEps {
    int rank;
    int eps; // -1, 0, +1
};

/// Rank and type of the symmetric matrix S. In odd characteristic this is the
/// matrix rank with eps read off the square class of (-1)^{r/2} det(Q) after
/// congruence diagonalization. In characteristic 2 the invariants are those of
/// the quadratic form x^t S x (rank = codim of its radical; defective forms
/// get eps = 0, nondefective ones +-1 by the Arf invariant), which is the
/// reading under which the W(S) spectra close up.
TypeEps type_eps(const MatFq& S);

/// The symplectic map (x, y) -> (x, y + Tx) applied to a Lagrangian,
/// re-canonicalized; permutes the vertex set.
IsotropicVertex unipotent_action(const MatFq& T, const IsotropicVertex& v);

/// The whole permutation: result[v] = index of T applied to vertex v.
std::vector<int> unipotent_action_perm(const MatFq& T, const DualPolarGraph& G);

/// Character projector P_S = q^{-d(d+1)/2} sum_T conj(chi_S(T)) rho(T) with
/// chi_S(T) = psi(<S,T>), psi the canonical additive character. The pairing is
/// tr(ST) for odd q and tr(upper(S) T) in characteristic 2 (where tr(ST)
/// itself is degenerate).
ComplexOperator character_projector(const MatFq& S, const DualPolarGraph& G);

/// Per-S verification of the W(S) identification: projector rank equals the
/// subspace count of F_q^{d-rank(S)}, and the spectrum of A_1 on range(P_S)
/// matches eps q^{d/2} K - 1 + q^{d/2} Y on L_{d-rank(S)}(q) within tol.
Report check_rws(const MatFq& S, const DualPolarGraph& G, const LatticeContext& lattice,
                 const SchemeData& scheme, double tol = 1e-8);

/// Full decomposition run: representation property, completeness,
/// orthogonality, commutation, per-S spectra, and dimension bookkeeping.
Report run_ws_decomposition(int d, long long q, double tol = 1e-8, long long limit = 100000);

} // namespace qlab
