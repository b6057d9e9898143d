#include <gtest/gtest.h>

#include <sstream>

#include "multifact/cli.hpp"

using namespace multifact;
using namespace multifact::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome compute(Query q, std::optional<Method> m = {}, bool all = false, Format format = Format::text)
{
    std::ostringstream out, err;
    const int code = cmd_compute(ComputeOptions{q, m, all, format}, out, err);
    return {code, out.str(), err.str()};
}

Outcome bfile(FunctionName fn, std::uint64_t max, std::optional<int> k = {}, std::optional<int> l = {},
          std::optional<int> j = {})
{
    std::ostringstream out, err;
    const int code = cmd_bfile(BfileOptions{fn, max, k, l, j, {}}, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);)
        v.push_back(line);
    return v;
}

} // namespace

TEST(ParseN, Forms)
{
    EXPECT_EQ(parse_n("36"), 36u);
    EXPECT_EQ(parse_n("2^20*3^10"), 1048576ULL * 59049ULL);
    EXPECT_EQ(parse_n("2*2*3"), 12u);
    EXPECT_EQ(parse_n("18446744073709551615"), UINT64_MAX);
    EXPECT_THROW(parse_n(""), std::invalid_argument);
    EXPECT_THROW(parse_n("2^"), std::invalid_argument);
    EXPECT_THROW(parse_n("3x"), std::invalid_argument);
    EXPECT_THROW(parse_n("2^64"), std::invalid_argument);
    EXPECT_THROW(parse_n("18446744073709551616"), std::invalid_argument);
}

TEST(Compute, Values)
{
    EXPECT_EQ(compute({FunctionName::f, 36}).out, "9\n");
    EXPECT_EQ(compute({FunctionName::g, 36}).out, "5\n");
    EXPECT_EQ(compute({FunctionName::h_l, 36, {}, 2}).out, "6\n");
    EXPECT_EQ(compute({FunctionName::f_kl, 36, 3, 2}).out, "2\n");
    EXPECT_EQ(compute({FunctionName::F_k, 1, 5}).out, "1\n");
    EXPECT_EQ(compute({FunctionName::p_kl, 7, 3, 2}).out, "3\n");
    EXPECT_EQ(compute({FunctionName::r_lj, 7, {}, 2, 2}).out, "3\n");
    EXPECT_EQ(compute({FunctionName::stirling2, 4, 2}).out, "7\n");
    EXPECT_EQ(compute({FunctionName::bell, 4}).out, "15\n");
    EXPECT_EQ(compute({FunctionName::F_k, 36, 2}, Method::fedorov).out, "5\n");
}

TEST(Compute, AllMethodsAgree)
{
    const auto r = compute({FunctionName::f, 36}, {}, true);
    EXPECT_EQ(r.code, ok);
    const auto ls = lines(r.out);
    ASSERT_GE(ls.size(), 3u);
    EXPECT_EQ(ls.back(), "verdict consistent");
    for (std::size_t i = 0; i + 1 < ls.size(); ++i)
        EXPECT_EQ(ls[i].substr(ls[i].find(' ') + 1), "9");
}

TEST(Compute, JsonSchema)
{
    const auto r = compute({FunctionName::f_kl, 36, 3, 2}, Method::kappa_recursion, false, Format::json);
    ASSERT_EQ(r.code, ok);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["function"], "f_kl");
    EXPECT_EQ(j["n"], "36");
    EXPECT_EQ(j["k"], 3);
    EXPECT_EQ(j["l"], 2);
    EXPECT_TRUE(j["j"].is_null());
    EXPECT_EQ(j["value"], "2");
    EXPECT_EQ(j["method"], "kappa-recursion");
    EXPECT_EQ(r.out.rfind("{\"function\"", 0), 0u);

    const auto all = compute({FunctionName::G_k, 36, 2}, {}, true, Format::json);
    for (const auto& line : lines(all.out))
        EXPECT_EQ(nlohmann::json::parse(line)["value"], "4");
    EXPECT_NE(all.err.find("verdict consistent"), std::string::npos);
}

TEST(Compute, UsageErrors)
{
    EXPECT_EQ(compute({FunctionName::f_k, 36}).code, usage);
    EXPECT_EQ(compute({FunctionName::f, 36, 2}).code, usage);
    EXPECT_EQ(compute({FunctionName::f, 1}).code, usage);
    EXPECT_EQ(compute({FunctionName::F_k, 0, 1}).code, usage);
    EXPECT_EQ(compute({FunctionName::r_lj, 5, {}, 1, 0}).code, usage);
    EXPECT_EQ(compute({FunctionName::F_k, 36, 100}).code, usage);
    EXPECT_EQ(compute({FunctionName::F_k, 36, 2}, Method::oracle).code, ok);
    EXPECT_EQ(compute({FunctionName::h_l, 36, {}, 2}, Method::fedorov).code, usage);
    EXPECT_EQ(compute({FunctionName::p_kl, 61, 3, 2}, Method::oracle).code, usage);
    EXPECT_EQ(compute({FunctionName::F_k, 64, 30}, Method::fedorov).code, usage);
}

TEST(Guarded, ExitCodes)
{
    std::ostringstream err;
    EXPECT_EQ(guarded(err, [] { return 0; }), ok);
    EXPECT_EQ(guarded(err, []() -> int { throw integrality_error("x"); }), failure);
    EXPECT_EQ(guarded(err, []() -> int { throw std::invalid_argument("x"); }), usage);
    EXPECT_EQ(guarded(err, []() -> int { throw oracle::limit_error("x"); }), usage);
    EXPECT_EQ(guarded(err, []() -> int { throw std::runtime_error("x"); }), failure);
}

TEST(Bfile, Format)
{
    const auto f = bfile(FunctionName::f, 12);
    EXPECT_EQ(f.code, ok);
    const auto ls = lines(f.out);
    ASSERT_EQ(ls.size(), 11u);
    EXPECT_EQ(ls.front(), "2 1");
    EXPECT_EQ(ls.back(), "12 4");
    EXPECT_EQ(f.err, "offset 2\n");

    const auto r = bfile(FunctionName::r_l, 5, {}, 1);
    EXPECT_EQ(r.out, "1 1\n2 2\n3 2\n4 3\n5 2\n");
    EXPECT_EQ(r.err, "offset 1\n");

    EXPECT_EQ(bfile(FunctionName::f, 1).code, usage);
    EXPECT_EQ(bfile(FunctionName::f_k, 10).code, usage);
    EXPECT_EQ(bfile(FunctionName::f, 2).out, "2 1\n");
}

TEST(Bfile, MatchesCompute)
{
    const auto b = lines(bfile(FunctionName::f_kl, 200, 3, 2).out);
    for (const auto& line : b) {
        const auto space = line.find(' ');
        const std::uint64_t n = std::stoull(line.substr(0, space));
        EXPECT_EQ(compute({FunctionName::f_kl, n, 3, 2}, Method::oracle).out, line.substr(space + 1) + "\n");
    }
}

TEST(Verify, SuitesPassAndAreDeterministic)
{
    auto run = [](Suite s, std::uint64_t max, unsigned threads) {
        std::ostringstream out, err;
        VerifyCommandOptions opt{{max, {}, threads}, s};
        const int code = cmd_verify(opt, out, err);
        return Outcome{code, out.str(), err.str()};
    };
    const auto one = run(Suite::routes, 300, 1);
    EXPECT_EQ(one.code, ok);
    EXPECT_NE(one.out.find("verify PASS"), std::string::npos);
    EXPECT_EQ(run(Suite::routes, 300, 3).out, one.out);
    EXPECT_EQ(run(Suite::identities, 10, 2).code, ok);
    EXPECT_EQ(run(Suite::oracle, 30, 2).code, ok);
}

TEST(Bench, RoutesAgree)
{
    std::ostringstream out, err;
    BenchOptions opt;
    opt.query = {FunctionName::F_k, 1048576ULL * 59049ULL, 10};
    opt.methods = {Method::partition_sum, Method::fedorov};
    opt.repeat = 1;
    opt.format = Format::json;
    ASSERT_EQ(cmd_bench(opt, out, err), ok) << err.str();
    const auto ls = lines(out.str());
    ASSERT_EQ(ls.size(), 2u);
    for (const auto& line : ls) {
        const auto j = nlohmann::json::parse(line);
        EXPECT_EQ(j["value"], "1985164");
        EXPECT_GE(j["best_ms"].get<double>(), 0.0);
    }
    opt.methods = {Method::oracle};
    opt.query = {FunctionName::h_l, 36, {}, 1};
    std::ostringstream out2;
    EXPECT_EQ(cmd_bench(opt, out2, err), ok);
    opt.methods = {Method::fedorov};
    EXPECT_EQ(cmd_bench(opt, out2, err), usage);
}
