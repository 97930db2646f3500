#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qlab/dual_polar.hpp"
#include "qlab/matrix_io.hpp"
#include "qlab/quotient_map.hpp"
#include "qlab/subspace_lattice.hpp"
#include "qlab/suites.hpp"
#include "qlab/weighted_hypercube.hpp"

namespace py = pybind11;
using namespace qlab;

namespace {

SuiteOptions make_options(std::optional<int> n, std::optional<long long> q, double tol,
                          long long limit) {
    SuiteOptions opt;
    opt.n = n;
    opt.q = q;
    opt.tol = tol;
    opt.limit = limit;
    return opt;
}

} // namespace

PYBIND11_MODULE(_qlab, m) {
    m.doc() = "exact q-analogs of the hypercube: subspace lattice, weighted cube, "
              "symplectic dual polar graph, and the identities connecting them";

    py::register_exception<Error>(m, "QlabError");

    m.def(
        "gaussian_binomial",
        [](int n, int k, long long q) { return gaussian_binomial(n, k, q).str(); },
        py::arg("n"), py::arg("k"), py::arg("q"),
        "number of k-subspaces of F_q^n, as a decimal string");
    m.def(
        "qbracket_gauss",
        [](long long x, long long q) { return qbracket_gauss(x, q).str(); },
        py::arg("x"), py::arg("q"));
    m.def(
        "subspace_count",
        [](int n, long long q) {
            Int c = 0;
            for (int k = 0; k <= n; ++k) c += gaussian_binomial(n, k, q);
            return c.str();
        },
        py::arg("n"), py::arg("q"), "number of vertices of L_n(q)");
    m.def(
        "lagrangian_count",
        [](int d, long long q) { return lagrangian_count(d, q).str(); },
        py::arg("d"), py::arg("q"), "number of vertices of C_d(q)");

    m.def("suite_names", [] { return suite_names(); });
    m.def(
        "run_suite",
        [](const std::string& suite, std::optional<int> n, std::optional<long long> q,
           double tol, long long limit, bool timings) {
            SuiteReport rep = run_suite(suite, make_options(n, q, tol, limit));
            return py::make_tuple(rep.ok(), suite_report_json(rep, timings));
        },
        py::arg("suite"), py::arg("n") = std::nullopt, py::arg("q") = std::nullopt,
        py::arg("tol") = 1e-8, py::arg("limit") = 100000, py::arg("timings") = false,
        "runs a verification suite; returns (ok, report_json)");

    m.def(
        "lattice_operator_json",
        [](int n, long long q, const std::string& which) {
            LatticeContext ctx = build_lattice(n, field_of(q));
            if (which == "Y") return matrix_to_json(build_Y(ctx));
            if (which == "K") return matrix_to_json(build_K(ctx));
            auto ops = build_RLKE(ctx);
            if (which == "R") return matrix_to_json(ops.R);
            if (which == "L") return matrix_to_json(ops.L);
            throw OutOfRange("unknown operator " + which);
        },
        py::arg("n"), py::arg("q"), py::arg("op") = "Y");

    m.def(
        "cube_matrix_json",
        [](int n, long long q, int t_quarters) {
            CubeContext ctx = make_cube_context(n, q, QuarterInt{t_quarters});
            return matrix_to_json(build_Aq(ctx));
        },
        py::arg("n"), py::arg("q"), py::arg("t_quarters") = 4,
        "weighted cube A_{q^t} with t given in quarter units (4 = t=1)");

    m.def(
        "dual_polar_labels",
        [](int d, long long q, long long limit) {
            auto L = enumerate_lagrangians(d, field_of(q), limit);
            std::vector<std::string> out;
            for (const auto& v : L) out.push_back(v.to_string());
            return out;
        },
        py::arg("d"), py::arg("q"), py::arg("limit") = 100000);

    m.def("matrix_roundtrip", [](const std::string& text) {
        return matrix_to_json(matrix_from_json(text));
    });
}
