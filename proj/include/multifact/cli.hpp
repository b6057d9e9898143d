#ifndef MULTIFACT_CLI_HPP
#define MULTIFACT_CLI_HPP

// Command implementations for the multifact tool. Argument parsing lives in
// tools/multifact.cpp; everything here writes to caller-supplied streams and
// returns the process exit code.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "evaluate.hpp"
#include "verify.hpp"

namespace multifact::cli {

enum ExitCode : int { ok = 0, failure = 1, usage = 2 };

enum class Format { text, json };

struct OutputRecord {
    std::string function;
    std::uint64_t n = 0;
    std::optional<int> k;
    std::optional<int> l;
    std::optional<int> j;
    std::string value;
    std::string method;

    nlohmann::ordered_json to_json() const
    {
        auto opt = [](const std::optional<int>& v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr); };
        return {{"function", function}, {"n", std::to_string(n)}, {"k", opt(k)},        {"l", opt(l)},
                {"j", opt(j)},          {"value", value},          {"method", method}};
    }
};

inline OutputRecord make_record(const Query& q, Method m, const BigCount& value)
{
    return {std::string(function_info(q.function).name), q.n, q.k, q.l, q.j, value.str(), std::string(method_name(m))};
}

// Parses a positive integer written either in decimal or as a product of
// prime powers such as 2^20*3^10.
inline std::uint64_t parse_n(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("empty n");
    std::uint64_t product = 1;
    std::size_t pos = 0;
    auto number = [&]() -> std::uint64_t {
        const std::size_t start = pos;
        std::uint64_t v = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            const auto digit = static_cast<std::uint64_t>(text[pos] - '0');
            if (v > (UINT64_MAX - digit) / 10)
                throw std::invalid_argument("n does not fit in 64 bits");
            v = v * 10 + digit;
            ++pos;
        }
        if (pos == start)
            throw std::invalid_argument("malformed n: " + std::string(text));
        return v;
    };
    auto mul = [](std::uint64_t a, std::uint64_t b) {
        if (b != 0 && a > UINT64_MAX / b)
            throw std::invalid_argument("n does not fit in 64 bits");
        return a * b;
    };
    while (true) {
        std::uint64_t base = number();
        std::uint64_t term = base;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            const std::uint64_t exp = number();
            term = 1;
            for (std::uint64_t i = 0; i < exp; ++i)
                term = mul(term, base);
        }
        product = mul(product, term);
        if (pos == text.size())
            return product;
        if (text[pos] != '*')
            throw std::invalid_argument("malformed n: " + std::string(text));
        ++pos;
    }
}

inline void print_record(std::ostream& out, Format format, const OutputRecord& r, bool with_method)
{
    if (format == Format::json)
        out << r.to_json().dump() << '\n';
    else if (with_method)
        out << r.method << ' ' << r.value << '\n';
    else
        out << r.value << '\n';
}

// Maps exceptions to the exit-code contract: bad input -> 2, internal
// integrality failure -> 1.
template <class Body>
int guarded(std::ostream& err, Body&& body)
{
    try {
        return body();
    } catch (const integrality_error& e) {
        err << "internal error: " << e.what() << '\n';
        return failure;
    } catch (const oracle::limit_error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return failure;
    }
}

struct ComputeOptions {
    Query query;
    std::optional<Method> method;
    bool all_methods = false;
    Format format = Format::text;
};

inline int cmd_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        opt.query.validate();
        Workspace ws;
        const auto& info = function_info(opt.query.function);
        if (!opt.all_methods) {
            const Method m = opt.method.value_or(info.default_method);
            print_record(out, opt.format, make_record(opt.query, m, ws.evaluate(opt.query, m)), false);
            return static_cast<int>(ok);
        }
        std::vector<OutputRecord> records;
        for (Method m : info.methods) {
            try {
                records.push_back(make_record(opt.query, m, ws.evaluate(opt.query, m)));
            } catch (const integrality_error&) {
                throw;
            } catch (const std::exception& e) {
                // A route that cannot handle these arguments is skipped.
                err << "skipped " << method_name(m) << ": " << e.what() << '\n';
            }
        }
        if (records.empty())
            throw std::invalid_argument("no route can evaluate this query");
        bool consistent = true;
        for (const auto& r : records) {
            consistent = consistent && r.value == records.front().value;
            print_record(out, opt.format, r, true);
        }
        if (opt.format == Format::text)
            out << "verdict " << (consistent ? "consistent" : "INCONSISTENT") << '\n';
        else
            err << "verdict " << (consistent ? "consistent" : "INCONSISTENT") << '\n';
        return static_cast<int>(consistent ? ok : failure);
    });
}

struct BfileOptions {
    FunctionName function = FunctionName::f;
    std::uint64_t max = 0;
    std::optional<int> k;
    std::optional<int> l;
    std::optional<int> j;
    std::optional<Method> method;
};

// "<n> <value>" lines; factorization functions start at n = 2, partition-side
// functions at n = 1. The offset goes to err.
inline int cmd_bfile(const BfileOptions& opt, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const auto& info = function_info(opt.function);
        const std::uint64_t first = info.partition_side ? 1 : 2;
        if (opt.max < 2)
            throw std::invalid_argument("--max must be >= 2");
        const Method m = opt.method.value_or(info.default_method);
        Workspace ws;
        err << "offset " << first << '\n';
        std::ostringstream buffer;
        for (std::uint64_t n = first; n <= opt.max; ++n) {
            const Query q{opt.function, n, opt.k, opt.l, opt.j};
            buffer << n << ' ' << ws.evaluate(q, m) << '\n';
        }
        out << buffer.str();
        return static_cast<int>(ok);
    });
}

enum class Suite { routes, identities, oracle, all };

struct VerifyCommandOptions {
    VerifyOptions sweep;
    Suite suite = Suite::all;
};

inline unsigned thread_override(unsigned requested)
{
    if (const char* env = std::getenv("MULTIFACT_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    return requested;
}

inline int cmd_verify(const VerifyCommandOptions& opt, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        VerifyOptions sweep = opt.sweep;
        sweep.threads = thread_override(sweep.threads);
        std::vector<SuiteReport> reports;
        if (opt.suite == Suite::routes || opt.suite == Suite::all)
            reports.push_back(verify_routes(sweep));
        if (opt.suite == Suite::identities || opt.suite == Suite::all)
            reports.push_back(verify_identities(sweep, &err));
        if (opt.suite == Suite::oracle || opt.suite == Suite::all)
            reports.push_back(verify_oracle(sweep));
        bool all_passed = true;
        for (const auto& r : reports) {
            out << r.name << ": " << r.checks << " checks, " << r.failures << " failures"
                << (r.passed() ? " PASS" : " FAIL") << '\n';
            if (r.first_failure)
                out << "  first counterexample: " << *r.first_failure << '\n';
            all_passed = all_passed && r.passed();
        }
        out << "verify " << (all_passed ? "PASS" : "FAIL") << '\n';
        return static_cast<int>(all_passed ? ok : failure);
    });
}

struct BenchOptions {
    Query query;
    std::vector<Method> methods;  // empty: every route of the function
    int repeat = 3;
    Format format = Format::text;
};

struct BenchRow {
    Method method;
    BigCount value;
    double best_ms = 0;
    double mean_ms = 0;
};

// Times each route with a fresh Workspace per repetition. Values must agree
// before anything is reported.
inline int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        opt.query.validate();
        if (opt.repeat < 1)
            throw std::invalid_argument("--repeat must be >= 1");
        const auto& info = function_info(opt.query.function);
        const std::vector<Method> methods = opt.methods.empty() ? info.methods : opt.methods;
        std::vector<BenchRow> rows;
        for (Method m : methods) {
            if (!supports(opt.query.function, m))
                throw std::invalid_argument(std::string(info.name) + " has no " + std::string(method_name(m)) +
                                            " route");
            BenchRow row{m, 0, 0, 0};
            double total = 0;
            for (int rep = 0; rep < opt.repeat; ++rep) {
                Workspace ws;
                const auto start = std::chrono::steady_clock::now();
                BigCount value = ws.evaluate(opt.query, m);
                const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
                if (rep == 0) {
                    row.value = value;
                    row.best_ms = elapsed.count();
                } else if (value != row.value) {
                    throw integrality_error("bench: route " + std::string(method_name(m)) +
                                            " is not deterministic");
                }
                row.best_ms = std::min(row.best_ms, elapsed.count());
                total += elapsed.count();
            }
            row.mean_ms = total / opt.repeat;
            rows.push_back(std::move(row));
        }
        for (const auto& r : rows)
            if (r.value != rows.front().value) {
                err << "routes disagree: " << method_name(rows.front().method) << '=' << rows.front().value << ' '
                    << method_name(r.method) << '=' << r.value << '\n';
                return static_cast<int>(failure);
            }
        if (opt.format == Format::json) {
            for (const auto& r : rows) {
                auto j = make_record(opt.query, r.method, r.value).to_json();
                j["best_ms"] = r.best_ms;
                j["mean_ms"] = r.mean_ms;
                j["repeat"] = opt.repeat;
                out << j.dump() << '\n';
            }
        } else {
            out << std::left << std::setw(18) << "method" << std::setw(24) << "value" << std::right << std::setw(8)
                << "repeat" << std::setw(14) << "best_ms" << std::setw(14) << "mean_ms" << '\n';
            for (const auto& r : rows)
                out << std::left << std::setw(18) << method_name(r.method) << std::setw(24) << r.value.str()
                    << std::right << std::setw(8) << opt.repeat << std::setw(14) << std::fixed
                    << std::setprecision(3) << r.best_ms << std::setw(14) << r.mean_ms << '\n';
        }
        return static_cast<int>(ok);
    });
}

} // namespace multifact::cli

#endif // MULTIFACT_CLI_HPP
