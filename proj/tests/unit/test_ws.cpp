#include <doctest.h>

#include <cmath>

#include "qlab/ws_decomposition.hpp"

using namespace qlab;

TEST_CASE("symmetric matrix enumeration") {
    CHECK(enumerate_sym_matrices(1, field_of(2)).size() == 2);
    CHECK(enumerate_sym_matrices(2, field_of(2)).size() == 8);
    CHECK(enumerate_sym_matrices(2, field_of(3)).size() == 27);
    CHECK_THROWS_AS(enumerate_sym_matrices(4, field_of(5), 100), LimitExceeded);
}

TEST_CASE("type eps in odd characteristic") {
    const Field& F3 = field_of(3);
    MatFq zero(F3, 2, 2);
    CHECK(type_eps(zero).rank == 0);
    CHECK(type_eps(zero).eps == 1);

    MatFq one1(F3, 1, 1);
    one1.set(0, 0, 1);
    CHECK(type_eps(one1).rank == 1);
    CHECK(type_eps(one1).eps == 0);

    MatFq diag11(F3, 2, 2);
    diag11.set(0, 0, 1);
    diag11.set(1, 1, 1);
    CHECK(type_eps(diag11).rank == 2);
    CHECK(type_eps(diag11).eps == -1); // -det = -1 = 2, a non-square mod 3

    MatFq hyp(F3, 2, 2); // [[0,1],[1,0]]: -det = 1, a square
    hyp.set(0, 1, 1);
    hyp.set(1, 0, 1);
    CHECK(type_eps(hyp).rank == 2);
    CHECK(type_eps(hyp).eps == 1);

    // all-zero-diagonal pivot path with a 3x3 matrix
    MatFq off(F3, 3, 3);
    off.set(0, 1, 1);
    off.set(1, 0, 1);
    CHECK(type_eps(off).rank == 2);
}

TEST_CASE("type eps in characteristic 2 follows the quadratic form") {
    const Field& F2 = field_of(2);
    auto mk = [&](int a, int b, int c) {
        MatFq S(F2, 2, 2);
        S.set(0, 0, static_cast<uint8_t>(a));
        S.set(0, 1, static_cast<uint8_t>(b));
        S.set(1, 0, static_cast<uint8_t>(b));
        S.set(1, 1, static_cast<uint8_t>(c));
        return S;
    };
    // x1^2 + x2^2 = (x1 + x2)^2: rank 1, defective
    CHECK(type_eps(mk(1, 0, 1)).rank == 1);
    CHECK(type_eps(mk(1, 0, 1)).eps == 0);
    // x1 x2: hyperbolic
    CHECK(type_eps(mk(0, 1, 0)).rank == 2);
    CHECK(type_eps(mk(0, 1, 0)).eps == 1);
    // x1^2 + x1 x2 + x2^2: anisotropic (elliptic)
    CHECK(type_eps(mk(1, 1, 1)).rank == 2);
    CHECK(type_eps(mk(1, 1, 1)).eps == -1);
    // x1^2: rank 1
    CHECK(type_eps(mk(1, 0, 0)).rank == 1);
    CHECK(type_eps(mk(1, 0, 0)).eps == 0);
    CHECK(type_eps(MatFq(F2, 2, 2)).eps == 1);
}

TEST_CASE("unipotent action on C_1(2)") {
    const Field& F2 = field_of(2);
    DualPolarGraph G = build_dual_polar(1, F2);
    MatFq T(F2, 1, 1);
    T.set(0, 0, 1);
    auto perm = unipotent_action_perm(T, G);
    // fixes span{e_2} (the vertex with x-part zero), swaps the other two
    int fixed = 0, moved = 0;
    for (int v = 0; v < 3; ++v) {
        if (perm[v] == v)
            ++fixed;
        else
            ++moved;
    }
    CHECK(fixed == 1);
    CHECK(moved == 2);
    MatFq Z(F2, 1, 1);
    auto id = unipotent_action_perm(Z, G);
    for (int v = 0; v < 3; ++v) CHECK(id[v] == v);
}

TEST_CASE("unipotent action is additive") {
    for (auto [d, q] : std::vector<std::pair<int, long long>>{{2, 2}, {2, 3}}) {
        const Field& F = field_of(q);
        DualPolarGraph G = build_dual_polar(d, F);
        auto syms = enumerate_sym_matrices(d, F);
        for (const auto& T1 : syms)
            for (const auto& T2 : syms) {
                MatFq sum(F, d, d);
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j)
                        sum.set(i, j, F.add(T1.at(i, j), T2.at(i, j)));
                auto p1 = unipotent_action_perm(T1, G);
                auto p2 = unipotent_action_perm(T2, G);
                auto ps = unipotent_action_perm(sum, G);
                for (int v = 0; v < G.size(); ++v) CHECK(p1[p2[v]] == ps[v]);
            }
    }
}

TEST_CASE("projector ranks on the triangle") {
    const Field& F2 = field_of(2);
    DualPolarGraph G = build_dual_polar(1, F2);
    auto syms = enumerate_sym_matrices(1, F2);
    ComplexOperator P0 = character_projector(syms[0], G);
    ComplexOperator P1 = character_projector(syms[1], G);
    auto cplx_trace = [](const ComplexOperator& P) {
        std::complex<double> t = 0;
        for (int i = 0; i < P.n; ++i) t += P.at(i, i);
        return t.real();
    };
    CHECK(cplx_trace(P0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(cplx_trace(P1) == doctest::Approx(1.0).epsilon(1e-12));
    // completeness
    double res = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::complex<double> s = P0.at(i, j) + P1.at(i, j) - ((i == j) ? 1.0 : 0.0);
            res = std::max(res, std::abs(s));
        }
    CHECK(res < 1e-12);
}

TEST_CASE("check_rws on the hand-computed d=1, q=2 spectra") {
    const Field& F2 = field_of(2);
    DualPolarGraph G = build_dual_polar(1, F2);
    SchemeData scheme(G.A);
    auto syms = enumerate_sym_matrices(1, F2);
    // S = 0: eps = 1, L_1(2), spectra {2, -1}
    LatticeContext L1 = build_lattice(1, F2);
    CHECK(check_rws(syms[0], G, L1, scheme).ok());
    // S = [1]: eps = 0, L_0(2), leftover eigenvalue {-1}
    LatticeContext L0 = build_lattice(0, F2);
    CHECK(check_rws(syms[1], G, L0, scheme).ok());
    CHECK_THROWS_AS(check_rws(syms[1], G, L1, scheme), DimensionMismatch);
}

TEST_CASE("full decomposition runs") {
    CHECK(run_ws_decomposition(1, 2).ok());
    CHECK(run_ws_decomposition(1, 3).ok());
    CHECK(run_ws_decomposition(2, 2).ok());
    CHECK(run_ws_decomposition(2, 3).ok());
}
