// multifact: counting unordered factorizations and colored partitions.
//
//   multifact compute <function> <n> [--k K] [--l L] [--j J] [--method M] [--all-methods] [--format text|json]
//   multifact bfile <function> --max N [--k K] [--l L] [--j J] [--method M]
//   multifact verify [--max N] [--k-max K] [--suite routes|identities|oracle|all] [--threads T]
//   multifact bench <function> <n> [--k K] [--l L] [--j J] [--methods m1,m2] [--repeat R] [--format text|json]

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "multifact/cli.hpp"

namespace {

using namespace multifact;

const char* function_help =
    "f, g, f_k, g_k, F_k, G_k, h_l, f_kl (factorizations of n); p_kl, r_l, r_lj, stirling2, bell (partition side)";
const char* method_help = "partition-sum, recursion, kappa-recursion, fedorov, oracle";

struct Indices {
    std::optional<int> k;
    std::optional<int> l;
    std::optional<int> j;

    void attach(CLI::App* app)
    {
        app->add_option("--k", k, "number of parts k");
        app->add_option("--l", l, "number of different parts l");
        app->add_option("--j", j, "smallest allowed part j (r_lj)");
    }
};

FunctionName to_function(const std::string& name)
{
    if (auto fn = parse_function(name))
        return *fn;
    throw std::invalid_argument("unknown function '" + name + "' (" + function_help + ")");
}

Method to_method(const std::string& name)
{
    if (auto m = parse_method(name))
        return *m;
    throw std::invalid_argument("unknown method '" + name + "' (" + method_help + ")");
}

cli::Format to_format(const std::string& name)
{
    return name == "json" ? cli::Format::json : cli::Format::text;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact counts of unordered factorizations, partitions with colored parts, Stirling and Bell "
                 "numbers, cross-checked by independent routes."};
    app.require_subcommand(1);

    std::string function_name, n_text, method_name_opt, format_name = "text", suite_name = "all", methods_list;
    Indices idx;
    bool all_methods = false;
    std::uint64_t max = 0;
    std::optional<int> k_max;
    unsigned threads = 1;
    int repeat = 3;

    auto* compute = app.add_subcommand("compute", "evaluate one function value");
    compute->add_option("function", function_name, function_help)->required();
    compute->add_option("n", n_text, "argument n (decimal or a product like 2^20*3^10)")->required();
    idx.attach(compute);
    compute->add_option("--method", method_name_opt, method_help);
    compute->add_flag("--all-methods", all_methods, "evaluate every route and report consistency");
    compute->add_option("--format", format_name, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* bfile = app.add_subcommand("bfile", "write '<n> <value>' lines up to --max");
    bfile->add_option("function", function_name, function_help)->required();
    bfile->add_option("--max", max, "last index")->required();
    bfile->add_option("--method", method_name_opt, method_help);
    Indices bfile_idx;
    bfile_idx.attach(bfile);

    auto* verify = app.add_subcommand("verify", "run cross-route verification suites");
    std::uint64_t verify_max = 200;
    verify->add_option("--max", verify_max, "largest n in the sweep");
    verify->add_option("--k-max", k_max, "largest k per n (default Omega(n)+2)");
    verify->add_option("--suite", suite_name, "routes, identities, oracle or all")
        ->check(CLI::IsMember({"routes", "identities", "oracle", "all"}));
    verify->add_option("--threads", threads, "worker threads (MULTIFACT_THREADS overrides)");

    auto* bench = app.add_subcommand("bench", "time each route on one value");
    std::string bench_function, bench_n;
    bench->add_option("function", bench_function, function_help)->required();
    bench->add_option("n", bench_n, "argument n (decimal or a product like 2^20*3^10)")->required();
    Indices bench_idx;
    bench_idx.attach(bench);
    bench->add_option("--methods", methods_list, "comma separated routes (default: all)");
    bench->add_option("--repeat", repeat, "repetitions per route");
    bench->add_option("--format", format_name, "text or json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::usage;
    }

    try {
        if (*compute) {
            cli::ComputeOptions opt;
            opt.query = Query{to_function(function_name), cli::parse_n(n_text), idx.k, idx.l, idx.j};
            if (!method_name_opt.empty())
                opt.method = to_method(method_name_opt);
            opt.all_methods = all_methods;
            opt.format = to_format(format_name);
            return cli::cmd_compute(opt, std::cout, std::cerr);
        }
        if (*bfile) {
            cli::BfileOptions opt{to_function(function_name), max, bfile_idx.k, bfile_idx.l, bfile_idx.j, {}};
            if (!method_name_opt.empty())
                opt.method = to_method(method_name_opt);
            return cli::cmd_bfile(opt, std::cout, std::cerr);
        }
        if (*verify) {
            static const std::map<std::string, cli::Suite> suites{{"routes", cli::Suite::routes},
                                                                  {"identities", cli::Suite::identities},
                                                                  {"oracle", cli::Suite::oracle},
                                                                  {"all", cli::Suite::all}};
            cli::VerifyCommandOptions opt{{verify_max, k_max, threads}, suites.at(suite_name)};
            return cli::cmd_verify(opt, std::cout, std::cerr);
        }
        if (*bench) {
            cli::BenchOptions opt;
            opt.query = Query{to_function(bench_function), cli::parse_n(bench_n), bench_idx.k, bench_idx.l,
                              bench_idx.j};
            std::stringstream list(methods_list);
            for (std::string item; std::getline(list, item, ',');)
                if (!item.empty())
                    opt.methods.push_back(to_method(item));
            opt.repeat = repeat;
            opt.format = to_format(format_name);
            return cli::cmd_bench(opt, std::cout, std::cerr);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::usage;
    }
    return cli::usage;
}
