#include "qlab/subspace_lattice.hpp"

namespace qlab {

int LatticeContext::index_of(const Subspace& s) const {
    auto it = index.find(s.to_string());
    if (it == index.end()) throw OutOfRange("subspace not in lattice: " + s.to_string());
    return it->second;
}

LatticeContext build_lattice(int n, const Field& F, long long limit) {
    LatticeContext ctx;
    ctx.n = n;
    ctx.field = &F;
    ctx.vertices = enumerate_subspaces(n, F, limit);
    ctx.labels.reserve(ctx.vertices.size());
    for (size_t i = 0; i < ctx.vertices.size(); ++i) {
        ctx.labels.push_back(ctx.vertices[i].to_string());
        ctx.index.emplace(ctx.labels.back(), static_cast<int>(i));
    }
    return ctx;
}

LatticeOps build_RLKE(const LatticeContext& ctx) {
    const long long q = ctx.q();
    Operator R(q, ctx.labels, ctx.labels);
    ExactScalar one = ExactScalar::one(q);
    for (int u = 0; u < ctx.size(); ++u)
        for (int v = 0; v < ctx.size(); ++v) {
            if (ctx.vertices[u].dim() != ctx.vertices[v].dim() + 1) continue;
            if (covers(ctx.vertices[u], ctx.vertices[v])) R.set(u, v, one);
        }
    std::vector<Operator> E;
    for (int i = 0; i <= ctx.n; ++i) {
        Operator Ei(q, ctx.labels, ctx.labels);
        for (int v = 0; v < ctx.size(); ++v)
            if (ctx.vertices[v].dim() == i) Ei.set(v, v, one);
        E.push_back(std::move(Ei));
    }
    return {R, R.transpose(), build_K(ctx), std::move(E)};
}

namespace {

Operator diagonal_qpow(const LatticeContext& ctx, long long num_quarters_scale,
                       long long offset_quarters) {
    // diag q^{(offset + scale*dim)/4} in quarter units
    Operator D(ctx.q(), ctx.labels, ctx.labels);
    for (int v = 0; v < ctx.size(); ++v) {
        QuarterInt e{offset_quarters + num_quarters_scale * ctx.vertices[v].dim()};
        D.set(v, v, ExactScalar::qpow(ctx.q(), e));
    }
    return D;
}

} // namespace

Operator build_K(const LatticeContext& ctx) {
    // q^{n/2 - i}
    return diagonal_qpow(ctx, -4, 2LL * ctx.n);
}

Operator build_K_inverse(const LatticeContext& ctx) {
    return diagonal_qpow(ctx, 4, -2LL * ctx.n);
}

Operator build_K_sqrt(const LatticeContext& ctx) {
    // q^{(n/2 - i)/2}
    return diagonal_qpow(ctx, -2, ctx.n);
}

Operator build_Y(const LatticeContext& ctx) {
    const long long q = ctx.q();
    Operator Y(q, ctx.labels, ctx.labels);
    for (int u = 0; u < ctx.size(); ++u)
        for (int v = 0; v < ctx.size(); ++v) {
            int du = ctx.vertices[u].dim(), dv = ctx.vertices[v].dim();
            if (du == dv + 1 && covers(ctx.vertices[u], ctx.vertices[v])) {
                // R part: q^{-i/2} out of the dim-i column v
                Y.set(u, v, ExactScalar::qpow(q, QuarterInt::half(-dv)));
            } else if (dv == du + 1 && covers(ctx.vertices[v], ctx.vertices[u])) {
                // L part: q^{(1-i)/2} out of the dim-i column v
                Y.set(u, v, ExactScalar::qpow(q, QuarterInt::half(1 - dv)));
            }
        }
    return Y;
}

Report check_uq_relations(const LatticeContext& ctx) {
    Report rep;
    const long long q = ctx.q();
    auto ops = build_RLKE(ctx);
    const Operator& R = ops.R;
    const Operator& L = ops.L;
    const Operator& K = ops.K;
    Operator Kinv = build_K_inverse(ctx);
    Operator I = Operator::identity(q, ctx.labels);

    ExactScalar sq = ExactScalar::from_int(q, q);
    ExactScalar sqinv = sq.inv();

    rep.check_zero("K*K^-1 = I", K * Kinv - I);
    rep.check_zero("K L K^-1 = q L", K * L * Kinv - L.scaled(sq));
    rep.check_zero("K R K^-1 = q^-1 R", K * R * Kinv - R.scaled(sqinv));

    // q^{(1-n)/2} (LR - RL) = (K - K^-1) / (q^{1/2} - q^{-1/2})
    ExactScalar pref = ExactScalar::qpow(q, QuarterInt::half(1 - ctx.n));
    ExactScalar denom =
        ExactScalar::qpow(q, QuarterInt::half(1)) - ExactScalar::qpow(q, QuarterInt::half(-1));
    Operator lhs = (L * R - R * L).scaled(pref);
    Operator rhs = (K - Kinv).scaled(denom.inv());
    rep.check_zero("q^{(1-n)/2}[L,R] = (K - K^-1)/(q^{1/2} - q^{-1/2})", lhs - rhs);

    // theta twist: e -> q^{(1-n)/4} R, f -> q^{(1-n)/4} L, k -> K^-1
    rep.check_zero("theta: K^-1 R K = q R", Kinv * R * K - R.scaled(sq));
    rep.check_zero("theta: K^-1 L K = q^-1 L", Kinv * L * K - L.scaled(sqinv));
    Operator lhs2 = (R * L - L * R).scaled(pref);
    Operator rhs2 = (Kinv - K).scaled(denom.inv());
    rep.check_zero("theta: q^{(1-n)/2}[R,L] = (K^-1 - K)/(q^{1/2} - q^{-1/2})", lhs2 - rhs2);
    return rep;
}

} // namespace qlab
