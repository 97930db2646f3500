#include <doctest.h>

#include <random>

#include "qlab/exact_scalar.hpp"
#include "qlab/fq_linalg.hpp"

using namespace qlab;

namespace {

Subspace span_of(const std::vector<VecFq>& vecs, int n, const Field& F) {
    return tau_canonical(vecs, n, F);
}

// Brute-force containment: every basis vector of U lies in the row space of V.
bool contains_brute(const Subspace& V, const Subspace& U) {
    if (U.dim() == 0) return true;
    return intersect_dim(V, U) == U.dim();
}

} // namespace

TEST_CASE("rref basics") {
    const Field& F2 = field_of(2);
    MatFq M(F2, 2, 2);
    M.set(0, 0, 1);
    M.set(0, 1, 1);
    M.set(1, 0, 1);
    M.set(1, 1, 1);
    MatFq R = rref(M);
    CHECK(R.at(0, 0) == 1);
    CHECK(R.at(0, 1) == 1);
    CHECK(R.at(1, 0) == 0);
    CHECK(R.at(1, 1) == 0);
    CHECK(rank(M) == 1);

    const Field& F3 = field_of(3);
    MatFq N(F3, 2, 2);
    N.set(0, 1, 1);
    N.set(1, 0, 1);
    MatFq RN = rref(N);
    CHECK(RN.at(0, 0) == 1);
    CHECK(RN.at(1, 1) == 1);
    CHECK(RN.at(0, 1) == 0);
}

TEST_CASE("tau canonical form shapes") {
    const Field& F2 = field_of(2);
    // span{e_2} in F_2^2: profile (0,1), column 2 = e_2
    Subspace s = span_of({{0, 1}}, 2, F2);
    CHECK(s.profile() == std::vector<uint8_t>{0, 1});
    CHECK(s.tau().at(1, 1) == 1);
    CHECK(s.tau().at(0, 1) == 0);
    // span{(1,1)}: profile (0,1), column 2 = (1,1)^T
    Subspace diag = span_of({{1, 1}}, 2, F2);
    CHECK(diag.profile() == std::vector<uint8_t>{0, 1});
    CHECK(diag.tau().at(0, 1) == 1);
    CHECK(diag.tau().at(1, 1) == 1);
    // full space: identity
    Subspace full = span_of({{1, 0}, {0, 1}}, 2, F2);
    CHECK(full.profile() == std::vector<uint8_t>{1, 1});
    CHECK(full.tau().at(0, 1) == 0);
    CHECK(full.tau().at(0, 0) == 1);
}

TEST_CASE("profile (0,1,0,1,1) has free entries exactly at the paper positions") {
    std::vector<uint8_t> profile{0, 1, 0, 1, 1};
    const Field& F2 = field_of(2);
    // build any subspace with this profile and read the free positions
    auto subs = enumerate_subspaces(5, F2);
    for (const auto& s : subs) {
        if (s.profile() != profile) continue;
        auto fp = s.free_positions();
        std::vector<std::pair<int, int>> expect{{0, 1}, {0, 3}, {0, 4}, {2, 3}, {2, 4}};
        CHECK(fp == expect);
        break;
    }
    CHECK(profile_free_count(profile) == 5);
    CHECK(profile_preimage_size(profile, 3) == 243);
}

TEST_CASE("canonical form is idempotent and basis independent") {
    std::mt19937 rng(99);
    for (long long q : {2, 3, 4}) {
        const Field& F = field_of(q);
        const int n = 4;
        std::uniform_int_distribution<int> elem(0, static_cast<int>(q) - 1);
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<VecFq> vecs(3, VecFq(n));
            for (auto& v : vecs)
                for (auto& x : v) x = static_cast<uint8_t>(elem(rng));
            Subspace a = span_of(vecs, n, F);
            // re-canonicalize from its own basis
            CHECK(span_of(a.basis(), n, F) == a);
            // random invertible recombination of the spanning set
            std::vector<VecFq> mixed = vecs;
            for (int round = 0; round < 6; ++round) {
                int i = rng() % mixed.size(), j = rng() % mixed.size();
                if (i == j) continue;
                uint8_t c = static_cast<uint8_t>(1 + elem(rng) % (q - 1));
                for (int t = 0; t < n; ++t)
                    mixed[i][t] = F.add(mixed[i][t], F.mul(c, mixed[j][t]));
            }
            CHECK(span_of(mixed, n, F) == a);
        }
    }
}

TEST_CASE("enumeration counts and order") {
    const Field& F2 = field_of(2);
    CHECK(enumerate_subspaces(2, F2).size() == 5);
    CHECK(enumerate_subspaces(3, F2).size() == 16);
    CHECK(enumerate_subspaces(1, field_of(5)).size() == 2);
    const Field& F3 = field_of(3);
    auto subs = enumerate_subspaces(3, F3);
    Int expect = 0;
    for (int k = 0; k <= 3; ++k) expect += gaussian_binomial(3, k, 3);
    CHECK(Int(static_cast<long long>(subs.size())) == expect);
    // no duplicates
    for (size_t i = 1; i < subs.size(); ++i)
        CHECK_FALSE(subs[i - 1].to_string() == subs[i].to_string());
    CHECK_THROWS_AS(enumerate_subspaces(5, F3, 100), LimitExceeded);
}

TEST_CASE("gaussian binomial counts each dimension of the enumeration") {
    for (long long q : {2, 3, 4}) {
        const Field& F = field_of(q);
        for (int n = 1; n <= 4; ++n) {
            auto subs = enumerate_subspaces(n, F);
            for (int k = 0; k <= n; ++k) {
                long long count = 0;
                for (const auto& s : subs) count += (s.dim() == k);
                CHECK(Int(count) == gaussian_binomial(n, k, q));
            }
        }
    }
}

TEST_CASE("covers agrees with the brute-force definition") {
    for (long long q : {2, 3}) {
        const Field& F = field_of(q);
        for (int n = 1; n <= 3; ++n) {
            auto subs = enumerate_subspaces(n, F);
            for (const auto& V : subs)
                for (const auto& U : subs) {
                    bool brute = V.dim() == U.dim() + 1 && contains_brute(V, U);
                    CHECK(covers(V, U) == brute);
                }
        }
    }
}

TEST_CASE("covering examples") {
    const Field& F2 = field_of(2);
    Subspace full = span_of({{1, 0}, {0, 1}}, 2, F2);
    Subspace diag = span_of({{1, 1}}, 2, F2);
    Subspace zero = span_of({}, 2, F2);
    Subspace e1 = span_of({{1, 0}}, 2, F2);
    Subspace e2 = span_of({{0, 1}}, 2, F2);
    CHECK(covers(full, diag));
    CHECK(covers(e2, zero));
    CHECK_FALSE(covers(e1, e2));
}

TEST_CASE("cover counts against enumeration") {
    // x = (1,1,0), k = 1 (0-based 0), q = 2 -> 2; x = (1,1,1), k = 1, q = 3 -> 9
    CHECK(cover_count({1, 1, 0}, 0, 2) == 2);
    CHECK(cover_count({1, 1, 1}, 0, 3) == 9);
    CHECK(cover_count({1, 0, 0}, 0, 5) == 1);
    CHECK_THROWS_AS(cover_count({0, 1}, 0, 2), InvalidPosition);

    // oracle: enumerate all U covered by each V with the stated profiles
    for (long long q : {2, 3}) {
        const Field& F = field_of(q);
        auto subs = enumerate_subspaces(3, F);
        for (const auto& V : subs) {
            for (int k = 0; k < 3; ++k) {
                if (!V.profile()[k]) continue;
                auto target = V.profile();
                target[k] = 0;
                long long count = 0;
                for (const auto& U : subs)
                    if (U.profile() == target && covers(V, U)) ++count;
                CHECK(Int(count) == cover_count(V.profile(), k, q));
            }
        }
    }
}

TEST_CASE("preimage sizes") {
    CHECK(profile_preimage_size({0, 1}, 3) == 3);
    CHECK(profile_preimage_size({0, 0, 0}, 7) == 1);
    // sum over profiles = total subspace count
    for (long long q : {2, 3}) {
        const Field& F = field_of(q);
        for (int n = 1; n <= 4; ++n) {
            Int total = 0;
            for (int mask = 0; mask < (1 << n); ++mask) {
                std::vector<uint8_t> prof(n);
                for (int i = 0; i < n; ++i) prof[i] = (mask >> (n - 1 - i)) & 1;
                total += profile_preimage_size(prof, q);
            }
            CHECK(Int(static_cast<long long>(enumerate_subspaces(n, F).size())) == total);
        }
    }
}

TEST_CASE("appendix lemmas") {
    // Lemma: U inside V forces profile(U) <= profile(V) coordinatewise
    for (long long q : {2, 3}) {
        const Field& F = field_of(q);
        for (int n = 1; n <= 3; ++n) {
            auto subs = enumerate_subspaces(n, F);
            for (const auto& V : subs)
                for (const auto& U : subs) {
                    if (!contains_brute(V, U)) continue;
                    for (int i = 0; i < n; ++i)
                        CHECK(U.profile()[i] <= V.profile()[i]);
                }
        }
    }
    // Lemma: at a pivot position j, the j-th coordinate of sum c_i column_i is c_j
    std::mt19937 rng(5);
    const Field& F3 = field_of(3);
    auto subs = enumerate_subspaces(4, F3);
    std::uniform_int_distribution<int> elem(0, 2);
    for (int trial = 0; trial < 100; ++trial) {
        const Subspace& V = subs[rng() % subs.size()];
        VecFq c(4);
        for (auto& x : c) x = static_cast<uint8_t>(elem(rng));
        VecFq combo(4, 0);
        for (int col = 0; col < 4; ++col)
            for (int row = 0; row < 4; ++row)
                combo[row] = F3.add(combo[row], F3.mul(c[col], V.tau().at(row, col)));
        for (int j = 0; j < 4; ++j)
            if (V.profile()[j]) CHECK(combo[j] == c[j]);
    }
}

TEST_CASE("intersection dimensions") {
    const Field& F2 = field_of(2);
    Subspace plane = span_of({{1, 0, 0}, {0, 1, 0}}, 3, F2);
    Subspace line_in = span_of({{1, 1, 0}}, 3, F2);
    Subspace line_out = span_of({{0, 0, 1}}, 3, F2);
    CHECK(intersect_dim(plane, plane) == 2);
    CHECK(intersect_dim(plane, line_in) == 1);
    CHECK(intersect_dim(plane, line_out) == 0);
    CHECK(intersect_dim(line_in, line_out) == 0);
}
