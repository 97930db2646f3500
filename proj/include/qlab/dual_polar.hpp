#pragma once

#include "qlab/fq_linalg.hpp"
#include "qlab/matrix.hpp"
#include "qlab/report.hpp"

namespace qlab {

/// F_q^{2d} with the alternating form B(u,v) = sum_i (u_i v_{d+i} - u_{d+i} v_i).
struct SymplecticSpace {
    int d;
    const Field* field;

    uint8_t form(const VecFq& u, const VecFq& v) const;
};

/// Maximal isotropic (Lagrangian) subspace, stored as its d x 2d RREF basis.
struct IsotropicVertex {
    MatFq basis;

    bool operator==(const IsotropicVertex& o) const { return basis == o.basis; }
    std::string to_string() const;
};

/// Every Lagrangian of F_q^{2d}, exactly once, in RREF-lexicographic order;
/// count is prod_{i=1..d} (1 + q^i). Built by depth-first extension of
/// isotropic flags with RREF deduplication at each level.
std::vector<IsotropicVertex> enumerate_lagrangians(int d, const Field& F,
                                                   long long limit = 100000);

Int lagrangian_count(int d, long long q);

struct DualPolarGraph {
    int d;
    const Field* field;
    std::vector<IsotropicVertex> vertices;
    std::vector<std::string> labels;
    std::vector<BinMat> A; // A_0..A_d; (A_i)_{UV} = 1 iff dim(U ^ V) = d - i

    long long q() const { return field->q(); }
    int size() const { return static_cast<int>(vertices.size()); }
};

DualPolarGraph build_distance_matrices(std::vector<IsotropicVertex> vertices, const Field& F);
DualPolarGraph build_dual_polar(int d, const Field& F, long long limit = 100000);

struct IntersectionArray {
    std::vector<long long> b, c, a;
};

/// Distance regularity by exhaustive counting; on success returns {b_i,c_i,a_i}
/// through out (if given). Works for any P-polynomial-orderable family of 0/1
/// matrices partitioning J.
Report check_distance_regularity(const std::vector<BinMat>& A, IntersectionArray* out = nullptr);

/// A_1 A_i = [i+1] A_{i+1} + (q^e - 1)[i] A_i + q^{i-1+e} [N-i+1] A_{i-1} with
/// Gaussian brackets (the convention that matches the graphs; see report).
Report check_ttr2(const DualPolarGraph& G, QuarterInt e = QuarterInt::integer(1));

/// Dual q-Krawtchouk K_i(lambda(j); c, N | q) via the terminating 3phi2 sum,
/// lambda(j) = q^{-j} + c q^{j-N}.
ExactScalar dual_q_krawtchouk(int i, int j, const ExactScalar& c, int N, long long q);

/// Coefficients of K_i(lambda; c, N | q) as a polynomial in lambda
/// (independent route used for matrix evaluation; degree i).
std::vector<ExactScalar> dual_q_krawtchouk_poly(int i, const ExactScalar& c, int N, long long q);

/// A_i = (-1)^i q^binom(i,2) gauss(N,i) K_i(q^-N (1-q) A_1 + q^-N (1-q^e); -q^e, N | q)
/// as an exact matrix identity; also records which eigenvalue labeling of
/// lambda matches, and falls back to the recurrence-generated v_i(A_1) if the
/// printed identity were to fail.
Report check_dqk_identity(const DualPolarGraph& G, QuarterInt e = QuarterInt::integer(1));

} // namespace qlab
