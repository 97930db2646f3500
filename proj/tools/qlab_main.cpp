#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlab/dual_polar.hpp"
#include "qlab/matrix_io.hpp"
#include "qlab/quotient_map.hpp"
#include "qlab/scheme.hpp"
#include "qlab/subspace_lattice.hpp"
#include "qlab/suites.hpp"
#include "qlab/weighted_hypercube.hpp"

namespace {

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw qlab::IoError("cannot open for writing: " + path);
    f << text;
}

int run_verify(const std::string& suite, qlab::SuiteOptions opt, const std::string& format,
               const std::string& out, bool timings) {
    qlab::SuiteReport rep = qlab::run_suite(suite, opt);
    std::string text = format == "text" ? qlab::suite_report_text(rep, timings)
                                        : qlab::suite_report_json(rep, timings);
    write_output(text, out);
    return rep.ok() ? 0 : 1;
}

int run_dualpolar_export(int d, long long q, long long limit, const std::string& emit) {
    const qlab::Field& F = qlab::field_of(q);
    qlab::DualPolarGraph G = qlab::build_dual_polar(d, F, limit);
    nlohmann::ordered_json j;
    j["schema"] = "qlab-dualpolar/1";
    j["d"] = d;
    j["q"] = q;
    j["vertices"] = G.labels;
    nlohmann::ordered_json mats = nlohmann::ordered_json::array();
    for (size_t i = 0; i < G.A.size(); ++i) {
        qlab::Operator op = qlab::to_operator(G.A[i], q, G.labels);
        mats.push_back(nlohmann::ordered_json::parse(qlab::matrix_to_json(op)));
    }
    j["distance_matrices"] = mats;
    qlab::IntersectionArray ia;
    qlab::Report drg = qlab::check_distance_regularity(G.A, &ia);
    if (drg.ok()) {
        j["intersection_array"] = {{"b", ia.b}, {"c", ia.c}, {"a", ia.a}};
    }
    write_output(j.dump(2) + "\n", emit);
    std::cerr << G.size() << " vertices exported\n";
    return 0;
}

int run_lattice_export(int n, long long q, long long limit, const std::string& op_name,
                       const std::string& emit) {
    qlab::LatticeContext ctx = qlab::build_lattice(n, qlab::field_of(q), limit);
    qlab::Operator op = [&] {
        if (op_name == "Y") return qlab::build_Y(ctx);
        if (op_name == "K") return qlab::build_K(ctx);
        auto ops = qlab::build_RLKE(ctx);
        if (op_name == "R") return ops.R;
        if (op_name == "L") return ops.L;
        throw qlab::OutOfRange("unknown operator: " + op_name + " (expected R, L, K or Y)");
    }();
    write_output(qlab::matrix_to_json(op), emit);
    return 0;
}

int run_scheme_export(const std::string& family, int nd, long long q, long long limit,
                      const std::string& emit) {
    std::vector<qlab::BinMat> mats = [&] {
        if (family == "hamming") return qlab::hamming_distance_matrices(nd);
        if (family == "dualpolar")
            return qlab::build_dual_polar(nd, qlab::field_of(q), limit).A;
        throw qlab::OutOfRange("unknown family: " + family + " (hamming or dualpolar)");
    }();
    qlab::SchemeData S(std::move(mats));
    nlohmann::ordered_json j;
    j["schema"] = "qlab-scheme/1";
    j["family"] = family;
    j["n"] = nd;
    if (family == "dualpolar") j["q"] = q;
    j["npoints"] = S.npoints();
    j["p_table"] = S.p_table();
    nlohmann::ordered_json eig = nlohmann::ordered_json::array();
    for (const auto& th : S.eigenvalues()) eig.push_back(qlab::rat_to_string(th));
    j["eigenvalues"] = eig;
    j["multiplicities"] = S.multiplicities();
    nlohmann::ordered_json krein = nlohmann::ordered_json::array();
    for (const auto& plane : S.krein_table()) {
        nlohmann::ordered_json pj = nlohmann::ordered_json::array();
        for (const auto& row : plane) {
            nlohmann::ordered_json rj = nlohmann::ordered_json::array();
            for (const auto& v : row) rj.push_back(qlab::rat_to_string(v));
            pj.push_back(rj);
        }
        krein.push_back(pj);
    }
    j["krein"] = krein;
    write_output(j.dump(2) + "\n", emit);
    return 0;
}

int run_cube_export(int n, long long q, const std::string& t_str, const std::string& emit) {
    qlab::QuarterInt t = qlab::QuarterInt::integer(1);
    if (t_str == "-1/2")
        t = qlab::QuarterInt::half(-1);
    else if (t_str == "0")
        t = qlab::QuarterInt::integer(0);
    else if (t_str == "1")
        t = qlab::QuarterInt::integer(1);
    else
        throw qlab::OutOfRange("unsupported scale: " + t_str + " (expected 1, 0 or -1/2)");
    qlab::CubeContext ctx = qlab::make_cube_context(n, q, t);
    write_output(qlab::matrix_to_json(qlab::build_Aq(ctx)), emit);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qlab: exact verification of the q-analogs of the hypercube"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suite = "all";
    qlab::SuiteOptions opt;
    std::string format = "json", out;
    bool timings = false;
    int nd = -1;
    long long qv = -1;
    verify->add_option("--suite", suite, "suite name")->required();
    verify->add_option("--n,--d", nd, "dimension / Witt index");
    verify->add_option("--q", qv, "field size or deformation base");
    verify->add_option("--tol", opt.tol, "tolerance for floating checks (default 1e-8)");
    verify->add_option("--limit", opt.limit, "enumeration cap (default 100000)");
    verify->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", out, "write the report to a file instead of stdout");
    verify->add_flag("--timings", timings, "include wall times in the report");

    // dualpolar export
    auto* dp = app.add_subcommand("dualpolar", "build C_d(q) and export it");
    int dp_d = 2;
    long long dp_q = 2, dp_limit = 100000;
    std::string dp_emit;
    dp->add_option("--d", dp_d, "Witt index")->required();
    dp->add_option("--q", dp_q, "field size")->required();
    dp->add_option("--limit", dp_limit, "enumeration cap");
    dp->add_option("--emit", dp_emit, "output path (stdout if omitted)");

    // lattice operator export
    auto* lat = app.add_subcommand("lattice", "build L_n(q) and export an operator");
    int lat_n = 1;
    long long lat_q = 2, lat_limit = 1000000;
    std::string lat_op = "Y", lat_emit;
    lat->add_option("--n", lat_n, "dimension")->required();
    lat->add_option("--q", lat_q, "field size")->required();
    lat->add_option("--op", lat_op, "R, L, K or Y (default Y)");
    lat->add_option("--limit", lat_limit, "enumeration cap");
    lat->add_option("--emit", lat_emit, "output path (stdout if omitted)");

    // scheme data export
    auto* sch = app.add_subcommand("scheme", "compute scheme data (p-table, eigenvalues, "
                                             "multiplicities, Krein) and export it");
    std::string sch_family = "dualpolar";
    int sch_n = 2;
    long long sch_q = 2, sch_limit = 100000;
    std::string sch_emit;
    sch->add_option("--family", sch_family, "hamming or dualpolar (default dualpolar)");
    sch->add_option("--n,--d", sch_n, "dimension / Witt index")->required();
    sch->add_option("--q", sch_q, "field size (dualpolar only)");
    sch->add_option("--limit", sch_limit, "enumeration cap");
    sch->add_option("--emit", sch_emit, "output path (stdout if omitted)");

    // cube export
    auto* cube = app.add_subcommand("cube", "build the weighted cube A_{q^t} and export it");
    int cube_n = 1;
    long long cube_q = 2;
    std::string cube_t = "1", cube_emit;
    cube->add_option("--n", cube_n, "dimension")->required();
    cube->add_option("--q", cube_q, "deformation base")->required();
    cube->add_option("--t", cube_t, "exponent scale: 1, 0 or -1/2");
    cube->add_option("--emit", cube_emit, "output path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            if (nd >= 0) opt.n = nd;
            if (qv >= 0) opt.q = qv;
            return run_verify(suite, opt, format, out, timings);
        }
        if (*dp) return run_dualpolar_export(dp_d, dp_q, dp_limit, dp_emit);
        if (*sch) return run_scheme_export(sch_family, sch_n, sch_q, sch_limit, sch_emit);
        if (*lat) return run_lattice_export(lat_n, lat_q, lat_limit, lat_op, lat_emit);
        if (*cube) return run_cube_export(cube_n, cube_q, cube_t, cube_emit);
    } catch (const qlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
