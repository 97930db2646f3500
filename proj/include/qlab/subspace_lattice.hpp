#pragma once

#include <unordered_map>

#include "qlab/fq_linalg.hpp"
#include "qlab/matrix.hpp"
#include "qlab/report.hpp"

namespace qlab {

/// The subspace lattice L_n(q): all subspaces of F_q^n in the deterministic
/// enumeration order, with an index for vertex lookup.
struct LatticeContext {
    int n;
    const Field* field;
    std::vector<Subspace> vertices;
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;

    long long q() const { return field->q(); }
    int size() const { return static_cast<int>(vertices.size()); }
    int index_of(const Subspace& s) const;
};

LatticeContext build_lattice(int n, const Field& F, long long limit = 1000000);

struct LatticeOps {
    Operator R; ///< (U,V) = 1 iff U covers V
    Operator L; ///< R transposed
    Operator K; ///< diag q^{n/2 - dim}
    std::vector<Operator> E; ///< E_i* projects onto dimension-i vertices
};

LatticeOps build_RLKE(const LatticeContext& ctx);
Operator build_K(const LatticeContext& ctx);
Operator build_K_inverse(const LatticeContext& ctx);
/// diag q^{(n/2 - dim)/2}; only used to cross-check the factored form of Y.
Operator build_K_sqrt(const LatticeContext& ctx);

/// Adjacency matrix of the weighted subspace lattice,
/// Y = q^{(1-n)/4} (q^{1/4} L + q^{-1/4} R) K^{1/2}, materialized entrywise in
/// half-integer powers: out of a dim-i column, covered rows get q^{(1-i)/2}
/// and covering rows get q^{-i/2}.
Operator build_Y(const LatticeContext& ctx);

/// Exact verification of the U_{sqrt(q)}(su(2)) relations under both
/// homomorphisms (the direct one and its theta twist).
Report check_uq_relations(const LatticeContext& ctx);

} // namespace qlab
