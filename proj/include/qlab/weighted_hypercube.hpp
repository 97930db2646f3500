#pragma once

#include "qlab/matrix.hpp"
#include "qlab/report.hpp"

namespace qlab {

/// Vertex set {0,1}^n in lexicographic order with x_1 as the most significant
/// coordinate; exponent_scale t builds A_{q^t} (t = -1/2 gives A_{1/sqrt(q)}).
struct CubeContext {
    int n;
    long long base_q;
    QuarterInt t = QuarterInt::integer(1);
    std::vector<std::string> labels;

    int size() const { return 1 << n; }
};

CubeContext make_cube_context(int n, long long base_q, QuarterInt t = QuarterInt::integer(1));

std::string cube_label(int n, int vertex);
/// Bit x_k (1-based position k) of a vertex index.
int cube_bit(int n, int vertex, int k);

/// Weighted cube adjacency from the explicit weight formula: the entry between
/// x and y differing exactly at position i is (q^t)^{i - n + 2*sum_{j>i} x_j}.
Operator build_Aq(const CubeContext& ctx);

/// The same matrix assembled as sum_i I^(i-1) (x) sigma_x (x) (q^-sigma_z)^(n-i)
/// by honest Kronecker products (independent construction).
Operator build_Aq_tensor(const CubeContext& ctx);

/// Coordinate-reversal permutation pi |x_1..x_n> = |x_n..x_1>.
Operator reversal_permutation(const CubeContext& ctx);

/// Hamming distance matrices A_0..A_n of Q_n (n <= 12).
std::vector<BinMat> hamming_distance_matrices(int n);

/// A_1 A_i = (i+1) A_{i+1} + (n-i+1) A_{i-1}, exactly, all i.
Report check_hamming_recurrence(int n);

/// Krawtchouk polynomial K_i(x; p, n) = sum_k (-i)_k (-x)_k / ((-n)_k k!) p^-k.
Rational krawtchouk(int i, const Rational& x, const Rational& p, int n);
/// Same polynomial evaluated at a matrix argument.
QMat krawtchouk_matrix(int i, const QMat& X, const Rational& p, int n);

/// A_i = binom(n,i) K_i(n/2 - A_1/2; 1/2, n) as an exact matrix identity.
Report check_kp_identity(int n);

} // namespace qlab
