#include <doctest.h>

#include "qlab/dual_polar.hpp"
#include "qlab/scheme.hpp"
#include "qlab/weighted_hypercube.hpp"

using namespace qlab;

namespace {

SchemeData hamming_scheme(int n) { return SchemeData(hamming_distance_matrices(n)); }

// m disjoint cliques of size s: a valid 3-class scheme that is not P-polynomial.
SchemeData disjoint_cliques(int m, int s) {
    const int V = m * s;
    std::vector<BinMat> A(3, BinMat(V));
    for (int x = 0; x < V; ++x)
        for (int y = 0; y < V; ++y) {
            if (x == y)
                A[0].set(x, y, 1);
            else if (x / s == y / s)
                A[1].set(x, y, 1);
            else
                A[2].set(x, y, 1);
        }
    return SchemeData(std::move(A));
}

} // namespace

TEST_CASE("axioms pass on hamming and dual polar") {
    for (int n = 1; n <= 5; ++n) CHECK(verify_axioms(hamming_scheme(n)).ok());
    for (auto [d, q] : std::vector<std::pair<int, long long>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}}) {
        SchemeData S(build_dual_polar(d, field_of(q)).A);
        CHECK(verify_axioms(S).ok());
    }
}

TEST_CASE("negative control: a permutation matrix in place of A_2 breaks closure") {
    auto mats = hamming_distance_matrices(3);
    BinMat perm(8);
    for (int x = 0; x < 8; ++x) perm.set(x, (x + 1) % 8, 1);
    // keep the partition property violated too; verify_axioms must fail
    mats[2] = perm;
    SchemeData S(mats);
    CHECK_FALSE(verify_axioms(S).ok());
}

TEST_CASE("eigenvalues of small schemes") {
    {
        auto th = eigenvalues_of_A1(hamming_scheme(3));
        CHECK(th == std::vector<Rational>{3, 1, -1, -3});
    }
    {
        SchemeData S(build_dual_polar(1, field_of(2)).A); // triangle
        CHECK(eigenvalues_of_A1(S) == std::vector<Rational>{2, -1});
    }
}

TEST_CASE("minimal polynomial helper") {
    // A_1 of the 4-cycle: minimal polynomial x^3 - 4x (eigenvalues 2, 0, -2)
    auto H = hamming_distance_matrices(2);
    auto m = minimal_polynomial(to_qmat(H[1]));
    CHECK(m == std::vector<Rational>{0, -4, 0, 1});
}

TEST_CASE("idempotent ranks") {
    {
        SchemeData S(build_dual_polar(1, field_of(2)).A);
        auto E = idempotents(S);
        // E_0 = J/3
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) CHECK(E[0].at(x, y) == Rational(1, 3));
    }
    {
        SchemeData S = hamming_scheme(2);
        CHECK(S.multiplicities() == std::vector<long long>{1, 2, 1});
    }
    {
        SchemeData S(build_dual_polar(2, field_of(2)).A);
        CHECK(S.multiplicities() == std::vector<long long>{1, 9, 5});
    }
}

TEST_CASE("eigenmatrices") {
    SchemeData S = hamming_scheme(1);
    auto [P, Q] = eigenmatrices(S);
    CHECK(P.at(0, 0) == 1);
    CHECK(P.at(0, 1) == 1);
    CHECK(P.at(1, 0) == 1);
    CHECK(P.at(1, 1) == -1);
    CHECK(Q == P);
    for (int n = 1; n <= 4; ++n) {
        SchemeData H = hamming_scheme(n);
        auto [Pm, Qm] = eigenmatrices(H);
        CHECK(Pm * Qm == QMat::identity(n + 1).scaled(Rational(H.npoints())));
    }
}

TEST_CASE("krein parameters and duality") {
    for (int n = 1; n <= 5; ++n) {
        SchemeData S = hamming_scheme(n);
        auto q = krein_parameters(S);
        for (int j = 0; j <= n; ++j)
            for (int k = 0; k <= n; ++k) CHECK(q[0][j][k] == (j == k ? 1 : 0));
        CHECK(check_bose_mesner_duality(S).ok());
        CHECK(check_dual_bose_mesner(S, 0).ok());
    }
    for (auto [d, qv] : std::vector<std::pair<int, long long>>{{2, 2}, {2, 3}}) {
        SchemeData S(build_dual_polar(d, field_of(qv)).A);
        CHECK(check_bose_mesner_duality(S).ok());
        CHECK(check_dual_bose_mesner(S, 0).ok());
    }
}

TEST_CASE("dual adjacency basics") {
    SchemeData S = hamming_scheme(2);
    auto dual = dual_adjacency(S, 0);
    // A_0* = I
    CHECK(dual[0] == QMat::identity(4));
    // sum_i A_i* = |X| diag(delta_{x,x0})
    QMat sum(4, 4);
    for (const auto& D : dual) sum = sum + D;
    for (int x = 0; x < 4; ++x) CHECK(sum.at(x, x) == (x == 0 ? 4 : 0));
}

TEST_CASE("P and Q polynomial tests") {
    for (int n = 2; n <= 5; ++n) CHECK(check_P_and_Q_polynomial(hamming_scheme(n)).ok());
    for (auto [d, qv] : std::vector<std::pair<int, long long>>{{2, 2}, {2, 3}}) {
        SchemeData S(build_dual_polar(d, field_of(qv)).A);
        CHECK(check_P_and_Q_polynomial(S).ok());
    }
    // the disjoint-cliques control fails the P-polynomial closure
    SchemeData C = disjoint_cliques(3, 3);
    CHECK(verify_axioms(C).ok());
    Report rep = check_P_and_Q_polynomial(C);
    bool p_failed = false;
    for (const auto& c : rep.checks())
        if (c.name.find("P-polynomial") != std::string::npos &&
            c.status == CheckStatus::Fail)
            p_failed = true;
    CHECK(p_failed);
}

TEST_CASE("terwilliger dimension sanity") {
    SchemeData H3 = hamming_scheme(3);
    CHECK(check_terwilliger_dimension(H3, 0).ok());
    SchemeData C22(build_dual_polar(2, field_of(2)).A);
    CHECK(check_terwilliger_dimension(C22, 0).ok());
    // the cap produces a skip, not a failure
    SchemeData H5 = hamming_scheme(5);
    Report rep = check_terwilliger_dimension(H5, 0, 20);
    CHECK(rep.ok());
    CHECK(rep.count(CheckStatus::Skip) == 1);
}
