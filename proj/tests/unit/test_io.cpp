#include <doctest.h>

#include <cstdio>
#include <random>

#include "qlab/matrix_io.hpp"
#include "qlab/report.hpp"
#include "qlab/subspace_lattice.hpp"
#include "qlab/suites.hpp"

using namespace qlab;

TEST_CASE("matrix json round trip is bit exact") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coef(-6, 6);
    for (long long q : {2, 3, 4}) {
        Operator op(q, {"r0", "r1", "r2"}, {"c0", "c1"});
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 2; ++j) {
                ExactScalar v = ExactScalar::zero(q);
                for (int t = 0; t < 4; ++t)
                    v += ExactScalar::qpow(q, QuarterInt::quarter(t))
                             .scaled(Rational(coef(rng), 3));
                op.set(i, j, v);
            }
        std::string text = matrix_to_json(op);
        Operator back = matrix_from_json(text);
        CHECK(back == op);
        CHECK(matrix_to_json(back) == text);
    }
}

TEST_CASE("empty matrix exports an empty entry list") {
    Operator op(2, {"a"}, {"b"});
    std::string text = matrix_to_json(op);
    CHECK(text.find("\"entries\": []") != std::string::npos);
    CHECK(matrix_from_json(text) == op);
}

TEST_CASE("the n=1 lattice Y exports two unit nonzeros") {
    LatticeContext ctx = build_lattice(1, field_of(2));
    std::string text = matrix_to_json(build_Y(ctx));
    size_t count = 0, pos = 0;
    while ((pos = text.find("\"1/1|0/1|0/1|0/1\"", pos)) != std::string::npos) {
        ++count;
        pos += 10;
    }
    CHECK(count == 2);
}

TEST_CASE("file round trip") {
    Operator op(3, {"x"}, {"y"});
    op.set(0, 0, ExactScalar::qpow(3, QuarterInt::quarter(3)));
    std::string path = "qlab_io_test.json";
    export_matrix(op, path);
    Operator back = import_matrix(path);
    CHECK(back == op);
    std::remove(path.c_str());
    CHECK_THROWS_AS(import_matrix("does_not_exist.json"), IoError);
    CHECK_THROWS_AS(matrix_from_json("{\"schema\":\"nope\"}"), IoError);
}

TEST_CASE("reports serialize deterministically, checks sorted by name") {
    SuiteReport rep;
    rep.suite = "demo";
    rep.params["q"] = "2";
    rep.report.pass("b-check");
    rep.report.fail("a-check", "1", "because");
    rep.report.skip("c-check", "later");
    std::string j1 = suite_report_json(rep);
    std::string j2 = suite_report_json(rep);
    CHECK(j1 == j2);
    CHECK(j1.find("a-check") < j1.find("b-check"));
    CHECK(j1.find("b-check") < j1.find("c-check"));
    CHECK_FALSE(rep.ok());
    CHECK(rep.report.count(CheckStatus::Fail) == 1);
    // timings only on request
    CHECK(j1.find("wall_ms") == std::string::npos);
    CHECK(suite_report_json(rep, true).find("wall_ms") != std::string::npos);
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("nope", {}), OutOfRange); }

TEST_CASE("suite skips outside the field window") {
    SuiteOptions opt;
    opt.q = 7;
    SuiteReport rep = run_suite("lattice-uq", opt);
    CHECK(rep.ok()); // skips do not fail
    CHECK(rep.report.count(CheckStatus::Skip) > 0);
    CHECK(rep.report.count(CheckStatus::Pass) == 0);
}
