#pragma once

#include "qlab/subspace_lattice.hpp"
#include "qlab/weighted_hypercube.hpp"

namespace qlab {

/// The isometry from the cube module into the lattice module: column x holds
/// q^{-m/2} at every subspace of profile x, where q^m is the preimage size.
/// Columns are orthonormal and their supports partition the vertex set.
struct ZetaMap {
    Operator matrix; // rows: subspaces of L_n(q); cols: binary sequences
    std::vector<int> profile_of_vertex; // cube index of each lattice vertex's profile
};

ZetaMap build_zeta(const LatticeContext& ctx);

/// Lemma-level action formulas: R zeta(x), L zeta(x) expand over neighbors
/// with exponent (k-1)/2 - sum_{j<k} x_j / 2 + sum_{j>k} x_j / 2, and
/// E_i* zeta(x) = [i = |x|] zeta(x). Also matches each coefficient against the
/// counting ratio n_k * sqrt(preimage ratio).
Report check_action_formulas(const LatticeContext& ctx);

/// Column spaces of R zeta, L zeta, E_i* zeta stay inside the column space of
/// zeta (exact residual after projecting with zeta zeta^T), and zeta zeta^T
/// commutes with Y.
Report check_submodule_closure(const LatticeContext& ctx);

/// The quotient identity Y zeta = zeta (pi^-1 A_{1/sqrt(q)} pi), exactly.
Report check_quotient_identity(const LatticeContext& ctx);

} // namespace qlab
