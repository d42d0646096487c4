#include "polyalg/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "polyalg");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = polyalg::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = ::testing::TempDir() + name;
    std::ofstream(path, std::ios::binary) << text;
    return path;
}

// aa = b, ab = a, ba = bb = 0 with a unit c: (aa)a = ba = 0 but a(aa) = ab = a.
const char* kCorrupted = R"({
  "dim": 3,
  "basis": ["a", "b", "c"],
  "unit": ["0", "0", "1"],
  "table": [
    [["0", "1", "0"], ["1", "0", "0"], ["1", "0", "0"]],
    [["0", "0", "0"], ["0", "0", "0"], ["0", "1", "0"]],
    [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
  ]
}
)";

}  // namespace

TEST(Cli, HelpSucceeds) {
    const Result r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "zerodiv"));
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"eval", "x"}).code, 2);
    EXPECT_EQ(run({"eval", "x", "--at", "1,0,0,1"}).code, 2);  // no --algebra
    EXPECT_EQ(run({"--algebra", "builtin:matrix2", "eval", "x +", "--at", "1,0,0,1"}).code, 2);
    EXPECT_EQ(run({"--algebra", "builtin:nothing", "zerodiv", "1"}).code, 2);
    EXPECT_EQ(run({"--algebra", "builtin:matrix2", "--bind", "bad", "zerodiv", "1"}).code, 2);
    EXPECT_EQ(run({"--algebra", "builtin:matrix2", "reduce", "x", "--by", "x", "--side", "up"}).code, 2);
    EXPECT_EQ(run({"demo", "nothing"}).code, 2);
}

TEST(Cli, JsonErrorOnStderr) {
    const Result r = run({"--json", "--algebra", "builtin:matrix2", "eval", "a y", "--at", "1,0,0,1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.out.empty());
    const auto j = nlohmann::json::parse(r.err);
    EXPECT_EQ(j["error"], "UnboundIdentifier");

    const Result syntax = run({"--json", "--algebra", "builtin:matrix2", "eval", "x + )", "--at", "1,0,0,1"});
    EXPECT_EQ(nlohmann::json::parse(syntax.err)["offset"], 4);

    const Result singular = run({"--json", "--algebra", "builtin:dual", "solve", "eps*x", "1"});
    EXPECT_EQ(singular.code, 1);
    EXPECT_EQ(nlohmann::json::parse(singular.err)["error"], "SingularTensor");
}

TEST(Cli, Validate) {
    const Result ok = run({"--algebra", "builtin:quaternions", "validate"});
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(ok.out, "PASS: dim 4, associative with two-sided unit\n");

    const std::string path = write_temp("polyalg_corrupted.json", kCorrupted);
    const Result bad = run({"validate", path});
    EXPECT_EQ(bad.code, 1);
    EXPECT_TRUE(contains(bad.out, "FAIL: associativity fails at (i,j,k,m)"));

    const Result js = run({"--json", "validate", path});
    EXPECT_EQ(js.code, 1);
    const auto j = nlohmann::json::parse(js.err);
    EXPECT_EQ(j["error"], "AssociativityViolation");
    EXPECT_EQ(j["indices"].size(), 4u);
    std::remove(path.c_str());
}

TEST(Cli, ExportThenValidate) {
    const Result exported = run({"export", "matrix2"});
    ASSERT_EQ(exported.code, 0);
    const std::string path = write_temp("polyalg_m2.json", exported.out);
    EXPECT_EQ(run({"validate", path}).code, 0);
    const Result twice = run({"--algebra", path, "export", "matrix2"});
    EXPECT_EQ(twice.out, exported.out);
    std::remove(path.c_str());
}

TEST(Cli, ZeroDivisorWitnesses) {
    const Result r = run({"--algebra", "builtin:matrix3", "zerodiv", "E12"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "left zero divisor: yes, witness w = E11, a*w = 0"));
    EXPECT_TRUE(contains(r.out, "right zero divisor: yes, witness w = E12, w*a = 0"));
    const Result h = run({"--algebra", "builtin:quaternions", "zerodiv", "i + j"});
    EXPECT_TRUE(contains(h.out, "left zero divisor: no"));
    EXPECT_TRUE(contains(h.out, "right zero divisor: no"));
}

TEST(Cli, EvalMulAdd) {
    const Result e = run({"--algebra", "builtin:matrix2", "eval", "E11 x E22", "--at", "1,2,3,4"});
    EXPECT_EQ(e.code, 0);
    EXPECT_EQ(e.out, "p(x) = 2*E12\ncoords: [0, 2, 0, 0]\n");
    const Result at_expr = run({"--algebra", "builtin:matrix2", "eval", "x x", "--at", "E12 + E21"});
    EXPECT_EQ(at_expr.out, "p(x) = E11 + E22\ncoords: [1, 0, 0, 1]\n");
    const Result m = run({"--algebra", "builtin:dual", "mul", "x - 1", "x + 1"});
    EXPECT_EQ(m.code, 0);
    EXPECT_TRUE(contains(m.out, "degree: 2"));
    const Result a = run({"--algebra", "builtin:dual", "add", "x", "(-x)"});
    EXPECT_EQ(a.out, "degree: -inf\n0\n");
}

TEST(Cli, BindConstants) {
    const Result r = run({"--algebra", "builtin:matrix2", "--bind", "a=1,1,0,1", "--bind", "b=0,0,1,0", "eval", "a x b",
                          "--at", "1,0,0,1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "p(x) = E11 + E21\ncoords: [1, 0, 1, 0]\n");
    EXPECT_EQ(run({"--algebra", "builtin:matrix2", "--bind", "a=1,2", "zerodiv", "a"}).code, 1);
}

TEST(Cli, Reduce) {
    const Result r = run({"--algebra", "builtin:dual", "reduce", "x^2", "--by", "x - 1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "remainder: 1\n"));
    EXPECT_TRUE(contains(r.out, "verified: identity holds at 4 points"));
    const Result left = run({"--json", "--algebra", "builtin:matrix2", "reduce", "E12 x E21 x", "--by", "x + E11",
                             "--side", "left"});
    EXPECT_EQ(left.code, 0);
    const auto j = nlohmann::json::parse(left.out);
    EXPECT_EQ(j["side"], "left");
    EXPECT_EQ(run({"--algebra", "builtin:matrix2", "reduce", "x", "--by", "x^2"}).code, 2);
    EXPECT_EQ(run({"--algebra", "builtin:dual", "reduce", "x", "--by", "eps x"}).code, 1);
}

TEST(Cli, InvTensorAndSolve) {
    const Result inv = run({"--algebra", "builtin:matrix2", "invtensor", "2 x + E12 x E21"});
    EXPECT_EQ(inv.code, 0);
    EXPECT_TRUE(contains(inv.out, "nonsingular: yes"));
    EXPECT_EQ(run({"--algebra", "builtin:matrix2", "invtensor", "E11 x"}).code, 1);
    EXPECT_EQ(run({"--algebra", "builtin:matrix2", "invtensor", "x + 1"}).code, 2);

    const Result s = run({"--algebra", "builtin:quaternions", "solve", "i x j", "k"});
    EXPECT_EQ(s.code, 0);
    // i x j = k gives x = i^-1 k j^-1 = 1.
    EXPECT_EQ(s.out, "x = 1\ncoords: [1, 0, 0, 0]\n");
    EXPECT_EQ(run({"--algebra", "builtin:dual", "solve", "eps x", "eps"}).code, 1);
    const Result forced = run({"--json", "--algebra", "builtin:dual", "solve", "--force", "eps x", "eps"});
    EXPECT_EQ(forced.code, 1);
    EXPECT_EQ(nlohmann::json::parse(forced.err)["error"], "ManySolutions");
}

TEST(Cli, Demos) {
    const Result e = run({"demo", "e12e23"});
    EXPECT_EQ(e.code, 0);
    EXPECT_TRUE(contains(e.out, "E12*E23 = E13\n"));
    EXPECT_TRUE(contains(e.out, "E23*E12 = 0\n"));
    const Result x = run({"demo", "exe"});
    EXPECT_TRUE(contains(x.out, "p(E12) = E12\n"));
    EXPECT_TRUE(contains(x.out, "p(E21) = 0\n"));
    EXPECT_TRUE(contains(x.out, "vanishes identically: no\n"));
    EXPECT_TRUE(contains(x.out, "E11 left zero divisor: yes"));
    const Result s = run({"demo", "shift"});
    EXPECT_TRUE(contains(s.out, "fg = 1: yes\nfp = 0: yes\npg = 0: yes\ngf = 1: no\n"));
    EXPECT_TRUE(contains(s.out, "N = 64: fg=1 true, fp=0 true, pg=0 true, gf=1 false\n"));
}

TEST(Cli, Deterministic) {
    for (const char* name : {"e12e23", "exe", "shift"}) {
        EXPECT_EQ(run({"demo", name}).out, run({"demo", name}).out) << name;
    }
    EXPECT_EQ(run({"--seed", "9", "demo", "exe"}).out, run({"--seed", "9", "demo", "exe"}).out);
    EXPECT_NE(run({"--seed", "9", "demo", "exe"}).out, run({"--seed", "10", "demo", "exe"}).out);
}

TEST(Cli, MaxArity) {
    EXPECT_EQ(run({"--algebra", "builtin:dual", "mul", "x^3", "x^3"}).code, 1);
    EXPECT_EQ(run({"--algebra", "builtin:dual", "--max-arity", "8", "mul", "x^3", "x^3"}).code, 0);
    // The cap is restored afterwards.
    EXPECT_EQ(run({"--algebra", "builtin:dual", "mul", "x^3", "x^3"}).code, 1);
}

TEST(Cli, BinaryRuns) {
    const std::string cmd = std::string(POLYALG_CLI_PATH) + " demo e12e23";
    FILE* pipe = popen(cmd.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    std::string text;
    char buf[256];
    while (std::fgets(buf, sizeof buf, pipe)) text += buf;
    EXPECT_EQ(pclose(pipe), 0);
    EXPECT_EQ(text, run({"demo", "e12e23"}).out);
}
