#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bpfib/cli.hpp"
#include "bpfib/json_io.hpp"
#include "generators.hpp"

using namespace bpfib;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, Term) {
    EXPECT_EQ(run({"term", "--kind", "q", "--n", "5", "--a", "2", "--b", "3"}).out, "55\n");
    EXPECT_EQ(run({"term", "--kind", "l", "--n", "5", "--a", "1", "--b", "1"}).out, "11\n");
    EXPECT_EQ(run({"term", "--kind", "qpoly", "--n", "4", "--a", "2", "--b", "3"}).out, "12x^3 + 4x\n");
    EXPECT_EQ(run({"term", "--n", "-4", "--a", "2", "--b", "3"}).out, "-16\n");
    Json j = Json::parse(run({"term", "--n", "3", "--a", "1/2", "--b", "3", "--json"}).out);
    EXPECT_EQ(rational_from_json(j["value"]), Rational(5, 2));
}

TEST(Cli, Table) {
    Result csv = run({"table", "--kind", "q", "--from", "0", "--to", "4", "--a", "2", "--b", "2"});
    EXPECT_EQ(csv.out, "n,value\n0,0\n1,1\n2,2\n3,5\n4,12\n");
    Json j = Json::parse(run({"table", "--kind", "l", "--from", "-1", "--to", "1", "--a", "1", "--b", "1",
                              "--format", "json"})
                             .out);
    ASSERT_EQ(j.size(), 3u);
    EXPECT_EQ(j[0]["n"], -1);
    EXPECT_EQ(rational_from_json(j[0]["value"]), Rational{-1});
    EXPECT_EQ(run({"table", "--from", "3", "--to", "1", "--a", "1", "--b", "1"}).code, 2);
}

TEST(Cli, Matrix) {
    Result r = run({"matrix", "--which", "qq", "--n", "0", "--a", "2", "--b", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "[[1, 0], [0, 1]]\ndet: 1\ntrace: 2\n");
    r = run({"matrix", "--which", "qq", "--n", "2", "--a", "2", "--b", "3", "--method", "pow"});
    EXPECT_EQ(r.out, "[[21/2, 9/2], [3, 3/2]]\ndet: 9/4\ntrace: 12\n");
    EXPECT_EQ(run({"matrix", "--which", "ql", "--n", "1", "--a", "1", "--b", "1", "--x", "2"}).code, 2);
    r = run({"matrix", "--which", "ql", "--n", "-1", "--a", "-2", "--b", "2"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("ab = -4"), std::string::npos) << r.err;
}

TEST(CliProperty, PowAndClosedAgree) {
    for (int i = 0; i < 40; ++i) {
        ParamSet p = gen::nondegenerate_params();
        std::string n = std::to_string(gen::int_in(-12, 20));
        std::vector<std::string> base{"matrix", "--n", n, "--a", p.a().to_string(), "--b", p.b().to_string(), "--json"};
        for (std::string which : {"qq", "ql"}) {
            for (std::string x : {"1", "-3/2", "sym"}) {
                if (which == "ql" && x != "1") continue;
                auto args = base;
                args.insert(args.end(), {"--which", which});
                if (which == "qq") args.insert(args.end(), {"--x", x});
                auto pow_args = args, closed_args = args;
                pow_args.insert(pow_args.end(), {"--method", "pow"});
                closed_args.insert(closed_args.end(), {"--method", "closed"});
                Result a = run(pow_args), b = run(closed_args);
                ASSERT_EQ(a.code, 0) << a.err;
                ASSERT_EQ(a.out, b.out);
                Json j = Json::parse(a.out);
                if (x == "sym")
                    EXPECT_EQ(to_json(poly_matrix_from_json(j["matrix"])), j["matrix"]);
                else
                    EXPECT_EQ(to_json(rational_matrix_from_json(j["matrix"])), j["matrix"]);
            }
        }
    }
}

TEST(Cli, Hadamard) {
    Result r = run({"hadamard", "--which", "q", "--n", "2", "--a", "1", "--b", "1", "--spectrum"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("H: [[2, -1], [-1, 2]]"), std::string::npos);
    EXPECT_NE(r.out.find("det: 3\n"), std::string::npos);
    EXPECT_NE(r.out.find("eigenvalues: [1, 3]"), std::string::npos);
    Json j = Json::parse(run({"hadamard", "--which", "l", "--n", "1", "--a", "1", "--b", "1", "--spectrum", "--json"}).out);
    HadamardSpectrum s = spectrum_from_json(j["spectrum"]);
    EXPECT_EQ(s.trace, Rational(-12, 5));
    EXPECT_EQ(run({"hadamard", "--which", "l", "--n", "1", "--a", "-1", "--b", "4"}).code, 1);
}

TEST(Cli, Binet) {
    EXPECT_EQ(run({"binet", "--n", "5", "--a", "2", "--b", "3"}).out, "55\n");
    EXPECT_NEAR(std::stod(run({"binet", "--n", "5", "--a", "2", "--b", "3", "--float"}).out), 55.0, 55.0 * 1e-9);
    Result r = run({"binet", "--n", "5", "--a", "1", "--b", "-1", "--x", "2"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("-4"), std::string::npos) << r.err;
    EXPECT_EQ(run({"binet", "--n", "5", "--a", "1", "--b", "1", "--x", "0"}).code, 1);
}

TEST(Cli, Verify) {
    const std::string path = ::testing::TempDir() + "bpfib_grid.json";
    {
        std::ofstream f(path);
        f << R"({"a": ["1", "2"], "b": ["3", "-1"], "nMax": 8, "mMax": 6, "x": ["1"]})";
    }
    Result r = run({"verify", "--suite", "all", "--grid", path});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("0 FAIL"), std::string::npos);
    r = run({"verify", "--suite", "errata", "--grid", path, "--format", "json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out).size(), 4u);
    EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, 2);
    EXPECT_EQ(run({"verify", "--grid", "/nonexistent/grid.json"}).code, 2);
    {
        std::ofstream f(path);
        f << R"({"a": []})";
    }
    EXPECT_EQ(run({"verify", "--grid", path}).code, 2);
    std::remove(path.c_str());
}

TEST(Cli, BenchCrossCheck) {
    Result r = run({"bench", "--n", "5000", "--a", "1", "--b", "1", "--method", "matpow", "--repeat", "1", "--mod",
                    "2305843009213693951"});
    ASSERT_EQ(r.code, 0) << r.err;
    Json j = Json::parse(r.out);
    EXPECT_TRUE(j["agree"].get<bool>());
    EXPECT_EQ(j["digits"], 1045);
    r = run({"bench", "--n", "300", "--a", "2", "--b", "1/3", "--method", "naive", "--repeat", "2", "--mod", "1000003"});
    j = Json::parse(r.out);
    EXPECT_TRUE(j["agree"].get<bool>());
    EXPECT_EQ(j["seconds"].size(), 2u);
    EXPECT_EQ(run({"bench", "--n", "10", "--a", "1", "--b", "1", "--method", "binet-float", "--mod", "7"}).code, 2);
}

TEST(Cli, UsageAndParameterErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"term", "--n", "1", "--a", "1", "--b", "1", "--bogus"}).code, 2);
    EXPECT_EQ(run({"term", "--n", "x", "--a", "1", "--b", "1"}).code, 2);
    EXPECT_EQ(run({"term", "--n", "1", "--a", "1.5", "--b", "1"}).code, 2);
    EXPECT_EQ(run({"term", "--n", "1", "--b", "1"}).code, 2);
    Result r = run({"term", "--n", "1", "--a", "0", "--b", "1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("a must be nonzero"), std::string::npos);
    EXPECT_EQ(run({"--help"}).code, 0);
}
