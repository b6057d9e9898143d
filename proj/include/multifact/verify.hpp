#ifndef MULTIFACT_VERIFY_HPP
#define MULTIFACT_VERIFY_HPP

// Cross-route verification sweeps. Work items are independent values of n;
// they may run on several threads, each with its own Workspace, and results
// are merged in n order.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "evaluate.hpp"

namespace multifact {

struct Counterexample {
    std::string function;
    std::uint64_t n = 0;
    std::optional<int> k;
    std::optional<int> l;
    std::optional<int> j;
    std::vector<std::pair<std::string, BigCount>> values;
};

inline std::ostream& operator<<(std::ostream& os, const Counterexample& c)
{
    os << "function=" << c.function << " n=" << c.n;
    if (c.k)
        os << " k=" << *c.k;
    if (c.l)
        os << " l=" << *c.l;
    if (c.j)
        os << " j=" << *c.j;
    os << " values:";
    for (const auto& [label, value] : c.values)
        os << ' ' << label << '=' << value;
    return os;
}

struct SuiteReport {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::optional<Counterexample> first_failure;

    bool passed() const { return failures == 0; }

    // Records one agreement check over labelled values.
    void expect_equal(Counterexample candidate)
    {
        ++checks;
        bool same = true;
        for (const auto& entry : candidate.values)
            same = same && entry.second == candidate.values.front().second;
        if (same)
            return;
        ++failures;
        if (!first_failure)
            first_failure = std::move(candidate);
    }

    void merge(SuiteReport&& other)
    {
        checks += other.checks;
        failures += other.failures;
        if (!first_failure && other.first_failure)
            first_failure = std::move(other.first_failure);
    }
};

struct VerifyOptions {
    std::uint64_t max = 200;
    std::optional<int> k_max;
    unsigned threads = 1;
};

namespace detail {

// Runs item(index, workspace, report) for index in [first, last] across
// threads and merges the per-item reports in index order.
inline SuiteReport run_items(const std::string& name, std::uint64_t first, std::uint64_t last, unsigned threads,
                             const std::function<void(std::uint64_t, Workspace&, SuiteReport&)>& item)
{
    SuiteReport total{name};
    if (last < first)
        return total;
    const std::uint64_t count = last - first + 1;
    std::vector<SuiteReport> per_item(count);
    std::atomic<std::uint64_t> next{0};
    std::vector<std::string> errors(std::max(1u, threads));

    auto worker = [&](unsigned id) {
        Workspace ws;
        try {
            for (std::uint64_t i = next++; i < count; i = next++)
                item(first + i, ws, per_item[i]);
        } catch (const std::exception& e) {
            errors[id] = e.what();
            next = count;
        }
    };
    const unsigned used = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, threads), count));
    if (used <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < used; ++t)
            pool.emplace_back(worker, t);
        for (auto& t : pool)
            t.join();
    }
    for (const auto& e : errors)
        if (!e.empty())
            throw std::runtime_error(name + ": " + e);
    for (auto& r : per_item)
        total.merge(std::move(r));
    return total;
}

inline Counterexample sample(FunctionName fn, std::uint64_t n, std::optional<int> k = {}, std::optional<int> l = {},
                             std::optional<int> j = {})
{
    return {std::string(function_info(fn).name), n, k, l, j, {}};
}

// One check comparing every listed method of a function at one point.
inline void compare_methods(Workspace& ws, SuiteReport& report, const Query& q, std::span<const Method> methods)
{
    Counterexample c = sample(q.function, q.n, q.k, q.l, q.j);
    for (Method m : methods) {
        if (m == Method::fedorov && q.k && *q.k > fedorov_max_k)
            continue;
        c.values.emplace_back(std::string(method_name(m)), ws.evaluate(q, m));
    }
    if (c.values.size() >= 2)
        report.expect_equal(std::move(c));
}

inline std::vector<Method> methods_without_oracle(FunctionName fn)
{
    std::vector<Method> out;
    for (Method m : function_info(fn).methods)
        if (m != Method::oracle)
            out.push_back(m);
    return out;
}

// Oracle first so that a counterexample lists the ground truth first.
inline std::vector<Method> methods_oracle_first(FunctionName fn)
{
    std::vector<Method> out{Method::oracle};
    for (Method m : methods_without_oracle(fn))
        out.push_back(m);
    return out;
}

inline int k_bound(const VerifyOptions& opt, int omega) { return opt.k_max ? *opt.k_max : omega + 2; }

} // namespace detail

// Pairwise agreement of the non-oracle routes, plus the structural relations
// between functions.
inline SuiteReport verify_routes(const VerifyOptions& opt)
{
    return detail::run_items("routes", 2, opt.max, opt.threads, [&](std::uint64_t n, Workspace& ws, SuiteReport& r) {
        const FactoredInt fi = factorize(n);
        const int omega = fi.big_omega();
        const int k_top = std::min(detail::k_bound(opt, omega), omega + ws.counter().options().k_excess_cap);
        for (FunctionName fn : {FunctionName::F_k, FunctionName::f_k, FunctionName::G_k, FunctionName::g_k}) {
            const auto methods = detail::methods_without_oracle(fn);
            for (int k = 0; k <= k_top; ++k)
                detail::compare_methods(ws, r, Query{fn, n, k}, methods);
        }
        for (FunctionName fn : {FunctionName::f, FunctionName::g})
            detail::compare_methods(ws, r, Query{fn, n}, detail::methods_without_oracle(fn));

        auto& c = ws.counter();
        const BigCount f = c.f_total(fi);
        for (int k = 0; k <= k_top; ++k) {
            if (k >= 1) {
                auto mono = detail::sample(FunctionName::F_k, n, k);
                // F_k nondecreasing: compare min(F_{k-1}, F_k) with F_{k-1}.
                const BigCount prev = c.big_F(fi, k - 1), cur = c.big_F(fi, k);
                mono.values = {{"F_{k-1}", prev}, {"min(F_{k-1},F_k)", std::min(prev, cur)}};
                r.expect_equal(std::move(mono));
            }
            if (k >= omega) {
                auto stable = detail::sample(FunctionName::F_k, n, k);
                stable.values = {{"F_k", c.big_F(fi, k)}, {"f", f}};
                r.expect_equal(std::move(stable));
            }
            auto distinct = detail::sample(FunctionName::f_kl, n, k, k);
            distinct.values = {{"f_kl(k,k)", c.f_kl(fi, k, k)}, {"g_k", c.g_k_rec(fi, k)}};
            r.expect_equal(std::move(distinct));
        }
        for (int l = 0; l <= omega; ++l) {
            BigCount sum = 0;
            for (int k = 0; k <= omega; ++k)
                sum += c.f_kl(fi, k, l);
            auto rows = detail::sample(FunctionName::h_l, n, std::nullopt, l);
            rows.values = {{"h_l", c.h_l(fi, l)}, {"sum_k f_kl", sum}};
            r.expect_equal(std::move(rows));
        }
    });
}

// Every route of every factorization function against brute-force
// enumeration, the oracle's own identities, and the partition-side and
// colored-partition oracles.
inline SuiteReport verify_oracle(const VerifyOptions& opt)
{
    SuiteReport report =
        detail::run_items("oracle", 2, opt.max, opt.threads, [&](std::uint64_t n, Workspace& ws, SuiteReport& r) {
            const auto profile = oracle::profile(n);
            const int omega = profile.max_k();
            auto internal = detail::sample(FunctionName::f, n);
            const std::string problem = profile.check_identities();
            internal.values = {{"profile-identities", problem.empty() ? 1 : 0}, {"expected", 1}};
            r.expect_equal(std::move(internal));

            const int k_top = detail::k_bound(opt, omega);
            for (FunctionName fn : {FunctionName::f, FunctionName::g})
                detail::compare_methods(ws, r, Query{fn, n}, detail::methods_oracle_first(fn));
            for (FunctionName fn : {FunctionName::F_k, FunctionName::f_k, FunctionName::G_k, FunctionName::g_k})
                for (int k = 0; k <= k_top; ++k)
                    detail::compare_methods(ws, r, Query{fn, n, k}, detail::methods_oracle_first(fn));
            for (int l = 0; l <= omega + 1; ++l) {
                detail::compare_methods(ws, r, Query{FunctionName::h_l, n, std::nullopt, l},
                                        detail::methods_oracle_first(FunctionName::h_l));
                for (int k = 0; k <= omega + 1; ++k)
                    detail::compare_methods(ws, r, Query{FunctionName::f_kl, n, k, l},
                                            detail::methods_oracle_first(FunctionName::f_kl));
            }
        });

    const auto m_top = static_cast<std::uint64_t>(std::min<std::uint64_t>(opt.max, 40));
    report.merge(detail::run_items("oracle", 1, m_top, opt.threads, [](std::uint64_t m, Workspace& ws, SuiteReport& r) {
        const int n = static_cast<int>(m);
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= k; ++l)
                detail::compare_methods(ws, r, Query{FunctionName::p_kl, m, k, l},
                                        detail::methods_oracle_first(FunctionName::p_kl));
        for (int l = 0; l <= n; ++l) {
            detail::compare_methods(ws, r, Query{FunctionName::r_l, m, std::nullopt, l},
                                    detail::methods_oracle_first(FunctionName::r_l));
            for (int j = 1; j <= n; ++j)
                detail::compare_methods(ws, r, Query{FunctionName::r_lj, m, std::nullopt, l, j},
                                        detail::methods_oracle_first(FunctionName::r_lj));
        }
    }));

    // Euler transform against colored partition enumeration.
    SuiteReport colored{"oracle"};
    for (int k = 1; k <= 8; ++k)
        for (const auto& alpha : partitions_of(k)) {
            const auto beta = multiplicity_vector(alpha);
            const auto nu = euler_transform(beta, 25);
            for (int m = 1; m <= 25; ++m) {
                Counterexample c{"euler_transform", static_cast<std::uint64_t>(m), k, std::nullopt, std::nullopt, {}};
                c.values = {{"oracle", oracle::colored_partition_count(beta, m)},
                            {"euler-transform", nu[static_cast<std::size_t>(m)]}};
                colored.expect_equal(std::move(c));
            }
        }
    report.merge(std::move(colored));
    return report;
}

// Identities between partition sums, Stirling and Bell numbers, the
// composition-weight lemma, primorial evaluations and the partition-side
// specializations.
inline SuiteReport verify_identities(const VerifyOptions& opt, std::ostream* notes = nullptr)
{
    constexpr int partition_sum_cap = 16;
    constexpr int hmc_cap = 12;
    constexpr int primorial_cap = 12;
    constexpr int specialization_cap = 40;
    const int top = static_cast<int>(std::min<std::uint64_t>(opt.max, 1000));
    if (notes)
        *notes << "identities: partition sums n <= " << std::min(top, partition_sum_cap) << ", lemma n <= "
               << std::min(top, hmc_cap) << ", primorials n <= " << std::min(top, primorial_cap)
               << ", specializations n <= " << std::min(top, specialization_cap) << '\n';

    auto add = [](SuiteReport& r, const IdentityReport& id) {
        Counterexample c{std::string(identity_name(id.id)), static_cast<std::uint64_t>(id.n),
                         identity_takes_k(id.id) ? std::optional<int>(id.k) : std::nullopt, std::nullopt,
                         std::nullopt, {{"lhs", id.lhs}, {"rhs", id.rhs}}};
        r.expect_equal(std::move(c));
    };

    const auto hi = static_cast<std::uint64_t>(std::max(1, std::min(top, specialization_cap)));
    return detail::run_items("identities", 1, hi, opt.threads, [&](std::uint64_t m, Workspace& ws, SuiteReport& r) {
        const int n = static_cast<int>(m);
        if (n <= std::min(top, partition_sum_cap)) {
            for (int k = 1; k <= n; ++k) {
                add(r, check_identity(IdentityId::Eq18, n, k, ws.counter()));
                add(r, check_identity(IdentityId::Eq20, n, k, ws.counter()));
            }
            add(r, check_identity(IdentityId::Eq19, n, 0, ws.counter()));
            add(r, check_identity(IdentityId::Eq21, n, 0, ws.counter()));
        }
        if (n <= std::min(top, hmc_cap))
            add(r, check_identity(IdentityId::HmcLemma, n, 0, ws.counter()));
        if (n <= std::min(top, primorial_cap)) {
            const FactoredInt pn = primorial(n);
            for (int k = 1; k <= n; ++k) {
                add(r, check_identity(IdentityId::PrimorialStirling, n, k, ws.counter()));
                auto g = detail::sample(FunctionName::g_k, pn.value(), k);
                g.values = {{"g_k(P_n)", ws.counter().g_k_rec(pn, k)}, {"S(n,k)", stirling2(n, k)}};
                r.expect_equal(std::move(g));
            }
            add(r, check_identity(IdentityId::PrimorialBell, n, 0, ws.counter()));
            auto g = detail::sample(FunctionName::g, pn.value());
            g.values = {{"g(P_n)", ws.counter().g_total(pn)}, {"B_n", bell(n)}};
            r.expect_equal(std::move(g));
        }
        if (n <= std::min(top, specialization_cap)) {
            const auto p2 = FactoredInt::from_factors({{2, n}});
            const auto p3 = FactoredInt::from_factors({{3, n}});
            auto& pc = ws.partitions();
            auto& c = ws.counter();
            for (int l = 0; l <= n; ++l) {
                auto rl = detail::sample(FunctionName::r_l, m, std::nullopt, l);
                rl.values = {{"r_l", pc.r_l(n, l)}, {"r_lj(j=1)", pc.r_lj(n, l, 1)},
                             {"h_l(2^n)", c.h_l(p2, l)}, {"h_l(3^n)", c.h_l(p3, l)}};
                r.expect_equal(std::move(rl));
                for (int k = l; k <= n; ++k) {
                    auto pk = detail::sample(FunctionName::p_kl, m, k, l);
                    pk.values = {{"p_kl", pc.p_kl(n, k, l)}, {"f_kl(2^n)", c.f_kl(p2, k, l)},
                                 {"f_kl(3^n)", c.f_kl(p3, k, l)}};
                    r.expect_equal(std::move(pk));
                }
            }
        }
    });
}

} // namespace multifact

#endif // MULTIFACT_VERIFY_HPP
