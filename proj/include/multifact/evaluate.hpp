#ifndef MULTIFACT_EVALUATE_HPP
#define MULTIFACT_EVALUATE_HPP

// Uniform (function, method) dispatch over the library, used by the command
// line front end and the verification sweeps.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arith.hpp"
#include "counting.hpp"
#include "oracle.hpp"
#include "partition_counts.hpp"

namespace multifact {

enum class FunctionName { f, g, f_k, g_k, F_k, G_k, h_l, f_kl, p_kl, r_l, r_lj, stirling2, bell };

struct FunctionInfo {
    FunctionName id;
    std::string_view name;
    bool needs_k;
    bool needs_l;
    bool needs_j;
    // Partition-side functions take a plain integer n >= 0 (b-files start at 1);
    // the others take n >= 1 and start at 2.
    bool partition_side;
    Method default_method;
    std::vector<Method> methods;
};

inline const std::vector<FunctionInfo>& function_table()
{
    using M = Method;
    static const std::vector<FunctionInfo> table{
        {FunctionName::f, "f", false, false, false, false, M::partition_sum,
         {M::partition_sum, M::recursion, M::kappa_recursion, M::fedorov, M::oracle}},
        {FunctionName::g, "g", false, false, false, false, M::partition_sum,
         {M::partition_sum, M::recursion, M::kappa_recursion, M::oracle}},
        {FunctionName::f_k, "f_k", true, false, false, false, M::recursion,
         {M::partition_sum, M::recursion, M::kappa_recursion, M::fedorov, M::oracle}},
        {FunctionName::g_k, "g_k", true, false, false, false, M::recursion,
         {M::partition_sum, M::recursion, M::kappa_recursion, M::oracle}},
        {FunctionName::F_k, "F_k", true, false, false, false, M::partition_sum,
         {M::partition_sum, M::recursion, M::kappa_recursion, M::fedorov, M::oracle}},
        {FunctionName::G_k, "G_k", true, false, false, false, M::partition_sum,
         {M::partition_sum, M::recursion, M::kappa_recursion, M::oracle}},
        {FunctionName::h_l, "h_l", false, true, false, false, M::kappa_recursion, {M::kappa_recursion, M::oracle}},
        {FunctionName::f_kl, "f_kl", true, true, false, false, M::kappa_recursion, {M::kappa_recursion, M::oracle}},
        {FunctionName::p_kl, "p_kl", true, true, false, true, M::recursion,
         {M::recursion, M::kappa_recursion, M::oracle}},
        {FunctionName::r_l, "r_l", false, true, false, true, M::recursion,
         {M::recursion, M::kappa_recursion, M::oracle}},
        {FunctionName::r_lj, "r_lj", false, true, true, true, M::recursion, {M::recursion, M::oracle}},
        {FunctionName::stirling2, "stirling2", true, false, false, true, M::recursion,
         {M::recursion, M::partition_sum, M::kappa_recursion, M::oracle}},
        {FunctionName::bell, "bell", false, false, false, true, M::recursion,
         {M::recursion, M::partition_sum, M::kappa_recursion, M::oracle}},
    };
    return table;
}

inline const FunctionInfo& function_info(FunctionName id)
{
    for (const auto& info : function_table())
        if (info.id == id)
            return info;
    throw std::logic_error("unknown function id");
}

inline std::optional<FunctionName> parse_function(std::string_view name)
{
    for (const auto& info : function_table())
        if (info.name == name)
            return info.id;
    return std::nullopt;
}

inline bool supports(FunctionName fn, Method m)
{
    for (Method candidate : function_info(fn).methods)
        if (candidate == m)
            return true;
    return false;
}

struct Query {
    FunctionName function = FunctionName::f;
    std::uint64_t n = 0;
    std::optional<int> k;
    std::optional<int> l;
    std::optional<int> j;

    // Throws std::invalid_argument on arity or range violations.
    void validate() const
    {
        const auto& info = function_info(function);
        auto arity = [&](bool needed, const std::optional<int>& v, const char* name) {
            if (needed && !v)
                throw std::invalid_argument(std::string(info.name) + " needs --" + name);
            if (!needed && v)
                throw std::invalid_argument(std::string(info.name) + " takes no --" + name);
            if (v && *v < 0)
                throw std::invalid_argument(std::string("--") + name + " must be non-negative");
        };
        arity(info.needs_k, k, "k");
        arity(info.needs_l, l, "l");
        arity(info.needs_j, j, "j");
        if (!info.partition_side && n < 1)
            throw std::invalid_argument(std::string(info.name) + " needs n >= 1");
        if ((function == FunctionName::f || function == FunctionName::g) && n < 2)
            throw std::invalid_argument(std::string(info.name) + " needs n >= 2");
        if (function == FunctionName::r_lj && *j < 1)
            throw std::invalid_argument("r_lj needs --j >= 1");
        if (info.partition_side && n > 100000)
            throw std::invalid_argument(std::string(info.name) + " needs n <= 100000");
    }
};

// Largest n the partition oracle will enumerate.
inline constexpr int partition_oracle_max = 60;
// Largest k the composition route will walk (2^(k-1) terms).
inline constexpr int fedorov_max_k = 24;

// Owns one counter of each kind; evaluation is memoized across calls.
class Workspace {
public:
    Workspace() = default;
    explicit Workspace(Counter::Options options) : counter_(options) {}

    Counter& counter() { return counter_; }
    PartitionCounter& partitions() { return partitions_; }

    BigCount evaluate(const Query& q, Method method)
    {
        q.validate();
        if (!supports(q.function, method))
            throw std::invalid_argument(std::string(function_info(q.function).name) + " has no " +
                                        std::string(method_name(method)) + " route");
        switch (q.function) {
        case FunctionName::f:
        case FunctionName::g:
        case FunctionName::f_k:
        case FunctionName::g_k:
        case FunctionName::F_k:
        case FunctionName::G_k:
        case FunctionName::h_l:
        case FunctionName::f_kl:
            return factorization_side(q, method);
        default:
            return partition_side(q, method);
        }
    }

private:
    static const oracle::OracleProfile& cached_profile(std::optional<oracle::OracleProfile>& slot, std::uint64_t n)
    {
        if (!slot || slot->n != n)
            slot = oracle::profile(n);
        return *slot;
    }

    void check_fedorov(int k) const
    {
        if (k > fedorov_max_k)
            throw std::out_of_range("fedorov route is limited to k <= " + std::to_string(fedorov_max_k));
    }

    BigCount fedorov_F(const FactoredInt& n, int k)
    {
        if (k == 0)
            return n.value() == 1 ? 1 : 0;
        check_fedorov(k);
        return counter_.fedorov_F(n, k);
    }

    BigCount factorization_side(const Query& q, Method method)
    {
        const FactoredInt n = factorize(q.n);
        const int omega = n.big_omega();
        const int k = q.k.value_or(0);
        const int l = q.l.value_or(0);
        auto& c = counter_;

        switch (q.function) {
        case FunctionName::f: {
            BigCount sum = 0;
            switch (method) {
            case Method::partition_sum: return c.f_total(n);
            case Method::fedorov: return fedorov_F(n, omega);
            case Method::recursion:
                for (int i = 1; i <= omega; ++i)
                    sum += c.f_k_rec(n, i);
                return sum;
            case Method::kappa_recursion:
                for (int i = 1; i <= omega; ++i)
                    sum += c.f_k_kappa(n, i);
                return sum;
            case Method::oracle: return cached_profile(profile_, q.n).f;
            }
            break;
        }
        case FunctionName::g: {
            BigCount sum = 0;
            switch (method) {
            case Method::partition_sum: return c.g_total(n);
            case Method::recursion:
                for (int i = 1; i <= omega; ++i)
                    sum += c.g_k_rec(n, i);
                return sum;
            case Method::kappa_recursion:
                for (int i = 1; i <= omega; ++i)
                    sum += c.g_k_kappa(n, i);
                return sum;
            case Method::oracle: return cached_profile(profile_, q.n).g;
            default: break;
            }
            break;
        }
        case FunctionName::f_k:
            switch (method) {
            case Method::partition_sum:
                if (n.value() == 1)
                    return c.big_F(n, k) - (k > 0 ? c.big_F(n, k - 1) : BigCount(0));
                return c.f_from_F(n, k);
            case Method::fedorov: return fedorov_F(n, k) - (k > 0 ? fedorov_F(n, k - 1) : BigCount(0));
            case Method::recursion: return c.f_k_rec(n, k);
            case Method::kappa_recursion: return c.f_k_kappa(n, k);
            case Method::oracle: return cached_profile(profile_, q.n).fk(k);
            }
            break;
        case FunctionName::g_k:
            switch (method) {
            case Method::partition_sum:
                if (n.value() == 1)
                    return k == 0 ? 1 : 0;
                return c.g_from_G(n, k);
            case Method::recursion: return c.g_k_rec(n, k);
            case Method::kappa_recursion: return c.g_k_kappa(n, k);
            case Method::oracle: return cached_profile(profile_, q.n).gk(k);
            default: break;
            }
            break;
        case FunctionName::F_k: {
            BigCount sum = 0;
            switch (method) {
            case Method::partition_sum: return c.big_F(n, k);
            case Method::fedorov: return fedorov_F(n, k);
            case Method::recursion:
                for (int i = 0; i <= k; ++i)
                    sum += c.f_k_rec(n, i);
                return sum;
            case Method::kappa_recursion:
                for (int i = 0; i <= k; ++i)
                    sum += c.f_k_kappa(n, i);
                return sum;
            case Method::oracle: return cached_profile(profile_, q.n).F(k);
            }
            break;
        }
        case FunctionName::G_k:
            switch (method) {
            case Method::partition_sum: return c.big_G(n, k);
            case Method::recursion: return c.g_k_rec(n, k) + (k > 0 ? c.g_k_rec(n, k - 1) : BigCount(0));
            case Method::kappa_recursion:
                return c.g_k_kappa(n, k) + (k > 0 ? c.g_k_kappa(n, k - 1) : BigCount(0));
            case Method::oracle: return cached_profile(profile_, q.n).G(k);
            default: break;
            }
            break;
        case FunctionName::h_l:
            if (method == Method::oracle)
                return cached_profile(profile_, q.n).hl(l);
            return c.h_l(n, l);
        case FunctionName::f_kl:
            if (method == Method::oracle)
                return cached_profile(profile_, q.n).fkl(k, l);
            return c.f_kl(n, k, l);
        default: break;
        }
        throw std::logic_error("unhandled factorization query");
    }

    static FactoredInt power_of_two(std::uint64_t n)
    {
        if (n > 63)
            throw std::out_of_range("kappa-recursion route evaluates at 2^n and needs n <= 63");
        return n == 0 ? FactoredInt{} : FactoredInt::from_factors({{2, static_cast<int>(n)}});
    }

    static FactoredInt primorial_for(std::uint64_t n)
    {
        if (n > 15)
            throw std::out_of_range("primorial routes need n <= 15");
        return primorial(static_cast<int>(n));
    }

    const oracle::PartitionProfile& partition_profile(std::uint64_t n)
    {
        if (n > static_cast<std::uint64_t>(partition_oracle_max))
            throw oracle::limit_error("partition oracle is limited to n <= " + std::to_string(partition_oracle_max));
        if (!partition_profile_ || partition_profile_->n != static_cast<int>(n))
            partition_profile_ = oracle::partition_profile(static_cast<int>(n));
        return *partition_profile_;
    }

    BigCount partition_side(const Query& q, Method method)
    {
        const int n = static_cast<int>(q.n);
        const int k = q.k.value_or(0);
        const int l = q.l.value_or(0);
        auto& c = counter_;
        switch (q.function) {
        case FunctionName::p_kl:
            if (method == Method::recursion)
                return partitions_.p_kl(n, k, l);
            if (method == Method::kappa_recursion)
                return k > n + c.options().k_excess_cap ? BigCount(0) : c.f_kl(power_of_two(q.n), k, l);
            return partition_profile(q.n).p_kl(k, l);
        case FunctionName::r_l:
            if (method == Method::recursion)
                return partitions_.r_l(n, l);
            if (method == Method::kappa_recursion)
                return c.h_l(power_of_two(q.n), l);
            return partition_profile(q.n).r_l(l);
        case FunctionName::r_lj:
            if (method == Method::recursion)
                return partitions_.r_lj(n, l, *q.j);
            return partition_profile(q.n).r_lj(l, *q.j);
        case FunctionName::stirling2:
            switch (method) {
            case Method::recursion: return stirling2(n, k);
            case Method::partition_sum:
                if (n == 0)
                    return k == 0 ? 1 : 0;
                return k > n ? BigCount(0) : c.g_from_G(primorial_for(q.n), k);
            case Method::kappa_recursion: return k > n ? BigCount(0) : c.f_k_kappa(primorial_for(q.n), k);
            case Method::oracle: return oracle::profile(primorial_for(q.n).value()).fk(k);
            default: break;
            }
            break;
        case FunctionName::bell:
            switch (method) {
            case Method::recursion: return bell(n);
            case Method::partition_sum: return n == 0 ? BigCount(1) : detail::primorial_partition_sum(n, n, false);
            case Method::kappa_recursion: {
                const auto primorial_n = primorial_for(q.n);
                BigCount sum = 0;
                for (int i = 0; i <= n; ++i)
                    sum += c.f_k_kappa(primorial_n, i);
                return sum;
            }
            case Method::oracle: return oracle::profile(primorial_for(q.n).value()).f;
            default: break;
            }
            break;
        default: break;
        }
        throw std::logic_error("unhandled partition query");
    }

    Counter counter_;
    PartitionCounter partitions_;
    std::optional<oracle::OracleProfile> profile_;
    std::optional<oracle::PartitionProfile> partition_profile_;
};

} // namespace multifact

#endif // MULTIFACT_EVALUATE_HPP
