#include "qlab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "qlab/dual_polar.hpp"
#include "qlab/quotient_map.hpp"
#include "qlab/scheme.hpp"
#include "qlab/subspace_lattice.hpp"
#include "qlab/weighted_hypercube.hpp"
#include "qlab/ws_decomposition.hpp"

namespace qlab {

namespace {

const std::vector<long long> kFieldWindow{2, 3, 4, 5};

bool in_field_window(long long q) {
    return std::find(kFieldWindow.begin(), kFieldWindow.end(), q) != kFieldWindow.end();
}

std::string grid_tag(const std::string& var, int n, long long q) {
    return "[" + var + "=" + std::to_string(n) + ",q=" + std::to_string(q) + "] ";
}

using Clock = std::chrono::steady_clock;

// Attach the elapsed time of the producing verification call to its checks.
void stamp(Report& r, Clock::time_point t0) {
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    for (auto& c : r.checks())
        if (c.wall_ms == 0) c.wall_ms = ms;
}

std::vector<long long> q_list(const SuiteOptions& opt, std::vector<long long> defaults) {
    if (opt.q) return {*opt.q};
    return defaults;
}

void skip_window(Report& rep, const std::string& suite, long long q) {
    rep.skip(suite, "q=" + std::to_string(q) + " outside supported window {2,3,4,5}");
}

// ---- individual suites ----

Report run_lattice_uq(const SuiteOptions& opt) {
    Report rep;
    for (long long q : q_list(opt, {2, 3, 4})) {
        if (!in_field_window(q)) {
            skip_window(rep, "lattice-uq", q);
            continue;
        }
        std::vector<int> ns;
        if (opt.n)
            ns = {*opt.n};
        else
            for (int n = 1; n <= 4; ++n) ns.push_back(n);
        for (int n : ns) {
            if (n < 1 || n > 5) {
                rep.skip("lattice-uq" + grid_tag("n", n, q), "n outside supported window 1..5");
                continue;
            }
            Int expect = 0;
            for (int k = 0; k <= n; ++k) expect += gaussian_binomial(n, k, q);
            if (expect > 600) {
                rep.skip("lattice-uq" + grid_tag("n", n, q),
                         "lattice size " + expect.str() + " exceeds the dense matrix budget (600)");
                continue;
            }
            auto t0 = Clock::now();
            LatticeContext ctx = build_lattice(n, field_of(q), 10 * opt.limit);
            Report r;
            r.check_true("vertex count = sum gaussian binomials",
                         Int(ctx.size()) == expect,
                         std::to_string(ctx.size()) + " vs " + expect.str());
            r.merge(check_uq_relations(ctx));
            // Y: entrywise form against the factored product
            Operator Y = build_Y(ctx);
            auto ops = build_RLKE(ctx);
            ExactScalar a = ExactScalar::qpow(q, QuarterInt::quarter(1));
            ExactScalar b = ExactScalar::qpow(q, QuarterInt::quarter(-1));
            Operator factored = (ops.L.scaled(a) + ops.R.scaled(b)) * build_K_sqrt(ctx);
            factored = factored.scaled(ExactScalar::qpow(q, QuarterInt::quarter(1 - n)));
            r.check_zero("Y entrywise = factored q^{(1-n)/4}(q^{1/4}L + q^{-1/4}R)K^{1/2}",
                         Y - factored);
            r.check_zero("Y symmetric", Y - Y.transpose());
            stamp(r, t0);
            rep.merge(r, grid_tag("n", n, q));
        }
    }
    return rep;
}

Report run_cube_tensor(const SuiteOptions& opt) {
    Report rep;
    for (long long q : q_list(opt, {2, 3})) {
        if (q < 2) {
            rep.skip("cube-tensor", "q must be >= 2");
            continue;
        }
        std::vector<int> ns;
        if (opt.n)
            ns = {*opt.n};
        else
            for (int n = 1; n <= 8; ++n) ns.push_back(n);
        for (int n : ns) {
            if (n < 1 || n > 8) {
                rep.skip("cube-tensor" + grid_tag("n", n, q), "n outside supported window 1..8");
                continue;
            }
            auto t0 = Clock::now();
            Report r;
            CubeContext ctx = make_cube_context(n, q);
            Operator A = build_Aq(ctx);
            r.check_zero("A_q weight formula = tensor form", A - build_Aq_tensor(ctx));
            r.check_zero("A_q symmetric", A - A.transpose());
            CubeContext flat = make_cube_context(n, q, QuarterInt::integer(0));
            Operator A0 = build_Aq(flat);
            bool zero_one = true;
            for (int i = 0; i < A0.rows() && zero_one; ++i)
                for (int j = 0; j < A0.cols() && zero_one; ++j) {
                    int dist = __builtin_popcount(static_cast<unsigned>(i ^ j));
                    const ExactScalar& v = A0.at(i, j);
                    zero_one = (dist == 1) ? v.is_one() : v.is_zero();
                }
            r.check_true("t=0 gives the 0/1 hypercube adjacency", zero_one);
            stamp(r, t0);
            rep.merge(r, grid_tag("n", n, q));
        }
    }
    return rep;
}

Report run_hamming(const SuiteOptions& opt) {
    Report rep;
    std::vector<int> ns;
    if (opt.n)
        ns = {*opt.n};
    else
        for (int n = 1; n <= 6; ++n) ns.push_back(n);
    for (int n : ns) {
        if (n < 1 || n > 8) {
            rep.skip("hamming[n=" + std::to_string(n) + "] ",
                     "n outside supported window 1..8");
            continue;
        }
        auto t0 = Clock::now();
        Report r;
        r.merge(check_hamming_recurrence(n));
        r.merge(check_kp_identity(n));
        stamp(r, t0);
        rep.merge(r, "[n=" + std::to_string(n) + "] ");
    }
    return rep;
}

Report run_quotient(const SuiteOptions& opt) {
    Report rep;
    std::vector<std::pair<int, long long>> grid;
    if (opt.n && opt.q)
        grid = {{*opt.n, *opt.q}};
    else if (opt.q) {
        for (int n = 1; n <= (*opt.q == 2 ? 4 : 3); ++n) grid.emplace_back(n, *opt.q);
    } else if (opt.n) {
        grid = {{*opt.n, 2}, {*opt.n, 3}};
    } else {
        grid = {{1, 2}, {2, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 2}};
    }
    for (auto [n, q] : grid) {
        if (!in_field_window(q)) {
            skip_window(rep, "quotient", q);
            continue;
        }
        if (n < 1 || n > (q == 2 ? 4 : 3)) {
            rep.skip("quotient" + grid_tag("n", n, q), "n outside supported window for this q");
            continue;
        }
        auto t0 = Clock::now();
        LatticeContext ctx = build_lattice(n, field_of(q), 10 * opt.limit);
        Report r;
        r.merge(check_action_formulas(ctx));
        r.merge(check_submodule_closure(ctx));
        r.merge(check_quotient_identity(ctx));
        stamp(r, t0);
        rep.merge(r, grid_tag("n", n, q));
    }
    return rep;
}

Report run_dualpolar_drg(const SuiteOptions& opt) {
    Report rep;
    // vertex-count checks (cheap, wider grid)
    std::vector<std::pair<int, long long>> count_grid;
    if (opt.n && opt.q)
        count_grid = {{*opt.n, *opt.q}};
    else if (opt.q) {
        for (int d = 1; d <= (*opt.q == 2 ? 4 : 3); ++d) count_grid.emplace_back(d, *opt.q);
    } else {
        count_grid = {{1, 2}, {2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}};
    }
    for (auto [d, q] : count_grid) {
        if (!in_field_window(q)) {
            skip_window(rep, "dualpolar-drg", q);
            continue;
        }
        Int expect = lagrangian_count(d, q);
        if (expect > opt.limit) {
            rep.skip("dualpolar-drg" + grid_tag("d", d, q),
                     "count " + expect.str() + " exceeds --limit");
            continue;
        }
        auto L = enumerate_lagrangians(d, field_of(q), opt.limit);
        rep.check_true(grid_tag("d", d, q) + "Lagrangian count = prod (1 + q^i)",
                       Int(static_cast<long long>(L.size())) == expect,
                       std::to_string(L.size()) + " vs " + expect.str());
    }
    // matrix checks
    std::vector<std::pair<int, long long>> grid;
    if (opt.n && opt.q)
        grid = {{*opt.n, *opt.q}};
    else if (opt.q) {
        for (int d = 1; d <= (*opt.q == 2 ? 3 : 2); ++d) grid.emplace_back(d, *opt.q);
    } else if (opt.n) {
        grid = {{*opt.n, 2}, {*opt.n, 3}};
    } else {
        grid = {{1, 2}, {2, 2}, {3, 2}, {2, 3}};
        rep.skip("dualpolar-drg[d=3,q=3] ", "optional; run with --d 3 --q 3");
    }
    for (auto [d, q] : grid) {
        if (!in_field_window(q)) {
            skip_window(rep, "dualpolar-drg", q);
            continue;
        }
        if (lagrangian_count(d, q) > opt.limit) {
            rep.skip("dualpolar-drg" + grid_tag("d", d, q), "count exceeds --limit");
            continue;
        }
        auto t0 = Clock::now();
        DualPolarGraph G = build_dual_polar(d, field_of(q), opt.limit);
        Report r;
        IntersectionArray ia;
        r.merge(check_distance_regularity(G.A, &ia));
        if (!ia.b.empty()) {
            bool ok = true;
            std::string w;
            for (int i = 0; i <= d; ++i) {
                Int ci = qbracket_gauss(i, q);
                Int bi = i < d ? int_pow(q, i + 1) * qbracket_gauss(d - i, q) : Int(0);
                if (i > 0 && Int(ia.c[i]) != ci) {
                    ok = false;
                    w = "c_" + std::to_string(i);
                }
                if (i < d && Int(ia.b[i]) != bi) {
                    ok = false;
                    w = "b_" + std::to_string(i);
                }
            }
            r.check_true("intersection numbers c_i = [i]_q, b_i = q^{i+1}[d-i]_q", ok, w);
        }
        r.merge(check_ttr2(G));
        stamp(r, t0);
        rep.merge(r, grid_tag("d", d, q));
    }
    // the C_2(2) spectrum, pinned
    if ((!opt.n || *opt.n == 2) && (!opt.q || *opt.q == 2)) {
        DualPolarGraph G = build_dual_polar(2, field_of(2), opt.limit);
        SchemeData S(G.A);
        auto th = S.eigenvalues();
        auto mult = S.multiplicities();
        bool ok = th.size() == 3 && th[0] == 6 && th[1] == 1 && th[2] == -3 &&
                  mult == std::vector<long long>{1, 9, 5};
        rep.check_true("[d=2,q=2] spectrum of C_2(2) = {6^1, 1^9, (-3)^5}", ok);
    }
    return rep;
}

Report run_dualpolar_dqk(const SuiteOptions& opt) {
    Report rep;
    std::vector<std::pair<int, long long>> grid;
    if (opt.n && opt.q)
        grid = {{*opt.n, *opt.q}};
    else if (opt.q) {
        for (int d = 1; d <= (*opt.q == 2 ? 3 : 2); ++d) grid.emplace_back(d, *opt.q);
    } else if (opt.n) {
        grid = {{*opt.n, 2}, {*opt.n, 3}};
    } else {
        grid = {{1, 2}, {2, 2}, {3, 2}, {2, 3}};
        rep.skip("dualpolar-dqk[d=3,q=3] ", "optional; run with --d 3 --q 3");
    }
    for (auto [d, q] : grid) {
        if (!in_field_window(q)) {
            skip_window(rep, "dualpolar-dqk", q);
            continue;
        }
        if (lagrangian_count(d, q) > opt.limit) {
            rep.skip("dualpolar-dqk" + grid_tag("d", d, q), "count exceeds --limit");
            continue;
        }
        auto t0 = Clock::now();
        DualPolarGraph G = build_dual_polar(d, field_of(q), opt.limit);
        Report r = check_dqk_identity(G);
        stamp(r, t0);
        rep.merge(r, grid_tag("d", d, q));
    }
    return rep;
}

Report run_scheme(const SuiteOptions& opt) {
    Report rep;
    auto run_instance = [&](const std::string& tag, SchemeData& S, bool terwilliger) {
        auto t0 = Clock::now();
        Report r;
        r.merge(verify_axioms(S));
        try {
            r.merge(check_bose_mesner_duality(S));
            r.merge(check_dual_bose_mesner(S, 0));
            r.merge(check_P_and_Q_polynomial(S));
            if (terwilliger) r.merge(check_terwilliger_dimension(S, 0, 20));
        } catch (const Error& e) {
            r.fail("scheme derived data", "1", e.what());
        }
        stamp(r, t0);
        rep.merge(r, tag);
    };
    std::vector<int> hamming_ns;
    if (!opt.n && !opt.q)
        hamming_ns = {2, 3, 4, 5};
    else if (opt.n && !opt.q)
        hamming_ns = {*opt.n};
    for (int n : hamming_ns) {
        if (n < 1 || n > 6) {
            rep.skip("scheme[hamming n=" + std::to_string(n) + "] ", "n outside window 1..6");
            continue;
        }
        SchemeData S(hamming_distance_matrices(n));
        run_instance("[hamming n=" + std::to_string(n) + "] ", S, n <= 4);
    }
    std::vector<std::pair<int, long long>> grid;
    if (opt.n && opt.q)
        grid = {{*opt.n, *opt.q}};
    else if (opt.q)
        grid = {{1, *opt.q}, {2, *opt.q}};
    else if (opt.n)
        grid = {{*opt.n, 2}, {*opt.n, 3}};
    else
        grid = {{1, 2}, {2, 2}, {1, 3}, {2, 3}};
    for (auto [d, q] : grid) {
        if (!in_field_window(q)) {
            skip_window(rep, "scheme", q);
            continue;
        }
        if (d < 1 || d > 3 || lagrangian_count(d, q) > opt.limit ||
            lagrangian_count(d, q) > 300) {
            rep.skip("scheme" + grid_tag("d", d, q),
                     "outside window (d <= 3, vertex count <= 300 and <= --limit)");
            continue;
        }
        DualPolarGraph G = build_dual_polar(d, field_of(q), opt.limit);
        SchemeData S(G.A);
        run_instance("[C_" + std::to_string(d) + "(" + std::to_string(q) + ")] ", S,
                     G.size() <= 20);
    }
    return rep;
}

Report run_ws_suite(const SuiteOptions& opt) {
    Report rep;
    std::vector<std::pair<int, long long>> grid;
    if (opt.n && opt.q)
        grid = {{*opt.n, *opt.q}};
    else if (opt.q)
        grid = {{1, *opt.q}, {2, *opt.q}};
    else if (opt.n)
        grid = {{*opt.n, 2}, {*opt.n, 3}};
    else
        grid = {{1, 2}, {2, 2}, {1, 3}, {2, 3}};
    for (auto [d, q] : grid) {
        if (!in_field_window(q)) {
            skip_window(rep, "ws-decomp", q);
            continue;
        }
        if (d < 1 || d > 3) {
            rep.skip("ws-decomp" + grid_tag("d", d, q), "d outside supported window 1..3");
            continue;
        }
        Int syms = int_pow(q, d * (d + 1) / 2);
        if (lagrangian_count(d, q) > opt.limit || syms > opt.limit ||
            lagrangian_count(d, q) > 300) {
            rep.skip("ws-decomp" + grid_tag("d", d, q),
                     "instance exceeds the projector budget (vertex count <= 300, <= --limit)");
            continue;
        }
        auto t0 = Clock::now();
        Report r = run_ws_decomposition(d, q, opt.tol, opt.limit);
        stamp(r, t0);
        rep.merge(r, grid_tag("d", d, q));
    }
    return rep;
}

struct SuiteEntry {
    std::string name;
    std::function<Report(const SuiteOptions&)> run;
};

const std::vector<SuiteEntry>& registry() {
    static const std::vector<SuiteEntry> entries{
        {"lattice-uq", run_lattice_uq},
        {"cube-tensor", run_cube_tensor},
        {"hamming", run_hamming},
        {"quotient", run_quotient},
        {"dualpolar-drg", run_dualpolar_drg},
        {"dualpolar-dqk", run_dualpolar_dqk},
        {"scheme", run_scheme},
        {"ws-decomp", run_ws_suite},
    };
    return entries;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& e : registry()) v.push_back(e.name);
        v.push_back("all");
        return v;
    }();
    return names;
}

SuiteReport run_suite(const std::string& suite, const SuiteOptions& opt) {
    SuiteReport out;
    out.suite = suite;
    if (opt.n) out.params["n"] = std::to_string(*opt.n);
    if (opt.q) out.params["q"] = std::to_string(*opt.q);
    {
        std::ostringstream os;
        os << opt.tol;
        out.params["tol"] = os.str();
    }
    out.params["limit"] = std::to_string(opt.limit);

    if (suite == "all") {
        for (const auto& e : registry()) out.report.merge(e.run(opt), e.name + "/");
        return out;
    }
    for (const auto& e : registry()) {
        if (e.name == suite) {
            out.report = e.run(opt);
            return out;
        }
    }
    throw OutOfRange("unknown suite: " + suite +
                     " (known: lattice-uq, cube-tensor, hamming, quotient, dualpolar-drg, "
                     "dualpolar-dqk, scheme, ws-decomp, all)");
}

} // namespace qlab
