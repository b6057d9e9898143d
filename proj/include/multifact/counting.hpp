#ifndef MULTIFACT_COUNTING_HPP
#define MULTIFACT_COUNTING_HPP

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "partitions.hpp"

namespace multifact {

// Route used to obtain a value.
enum class Method { partition_sum, recursion, kappa_recursion, fedorov, oracle };

inline constexpr Method all_methods[] = {Method::partition_sum, Method::recursion, Method::kappa_recursion,
                                         Method::fedorov, Method::oracle};

inline std::string_view method_name(Method m)
{
    switch (m) {
    case Method::partition_sum: return "partition-sum";
    case Method::recursion: return "recursion";
    case Method::kappa_recursion: return "kappa-recursion";
    case Method::fedorov: return "fedorov";
    case Method::oracle: return "oracle";
    }
    return "?";
}

inline std::optional<Method> parse_method(std::string_view name)
{
    for (Method m : all_methods)
        if (method_name(m) == name)
            return m;
    return std::nullopt;
}

// Factorization counting functions of n.
enum class CountFunction { f, g, f_k, g_k, F_k, G_k, h_l, f_kl };

inline bool takes_k(CountFunction fn)
{
    return fn == CountFunction::f_k || fn == CountFunction::g_k || fn == CountFunction::F_k ||
           fn == CountFunction::G_k || fn == CountFunction::f_kl;
}

inline bool takes_l(CountFunction fn) { return fn == CountFunction::h_l || fn == CountFunction::f_kl; }

struct CountQuery {
    FactoredInt n;
    CountFunction function = CountFunction::f;
    std::optional<int> k;
    std::optional<int> l;

    // Throws std::invalid_argument when the index arity does not match.
    void validate() const
    {
        if (takes_k(function) != k.has_value())
            throw std::invalid_argument(takes_k(function) ? "query needs k" : "query takes no k");
        if (takes_l(function) != l.has_value())
            throw std::invalid_argument(takes_l(function) ? "query needs l" : "query takes no l");
        if ((k && *k < 0) || (l && *l < 0))
            throw std::invalid_argument("indices must be non-negative");
    }
};

// Memoized evaluation of every factorization counting function by each of
// its routes. Caches are keyed by (prime signature, indices) and kept apart
// per route, so routes never read each other's results.
//
// Not thread-safe: give each worker its own Counter (default_counter() is
// thread_local).
class Counter {
public:
    struct Options {
        // Queries with k > Omega(n) + k_excess_cap are rejected.
        int k_excess_cap = 64;
    };

    Counter() = default;
    explicit Counter(Options options) : options_(options) {}

    const Options& options() const { return options_; }

    // F_k(n) = sum over partitions of k of h(beta) mu_beta(n).
    BigCount big_F(const FactoredInt& n, int k)
    {
        check_k(n, k);
        return F_sum(prime_signature(n), k);
    }

    // G_k(n): as big_F with the sign (-1)^theta(beta).
    BigCount big_G(const FactoredInt& n, int k)
    {
        check_k(n, k);
        return G_sum(prime_signature(n), k);
    }

    // f_k(n) = (1/k) sum_{d^i | n, d >= 2} f_{k-i}(n / d^i).
    BigCount f_k_rec(const FactoredInt& n, int k)
    {
        check_k(n, k);
        return divisor_rec(prime_signature(n), k, false);
    }

    // g_k(n) = (1/k) sum_{d^i | n, d >= 2} (-1)^(i+1) g_{k-i}(n / d^i).
    BigCount g_k_rec(const FactoredInt& n, int k)
    {
        check_k(n, k);
        return divisor_rec(prime_signature(n), k, true);
    }

    // f_k(n) kappa(n) = sum_{d^i | n} f_{k-i}(n / d^i) kappa(d), with kappa the
    // multiplicity of the smallest prime of n.
    BigCount f_k_kappa(const FactoredInt& n, int k)
    {
        check_k(n, k);
        const auto e = n.exponents();
        return kappa_rec(e, 0, k, false);
    }

    BigCount g_k_kappa(const FactoredInt& n, int k)
    {
        check_k(n, k);
        const auto e = n.exponents();
        return kappa_rec(e, 0, k, true);
    }

    // f_k = F_k - F_{k-1}, for n >= 2.
    BigCount f_from_F(const FactoredInt& n, int k)
    {
        require_at_least_two(n, "f_from_F");
        check_k(n, k);
        if (k == 0)
            return 0;
        const auto sig = prime_signature(n);
        return F_sum(sig, k) - F_sum(sig, k - 1);
    }

    // g_k = sum_{i=1}^{k} (-1)^(k-i) G_i, for n >= 2.
    BigCount g_from_G(const FactoredInt& n, int k)
    {
        require_at_least_two(n, "g_from_G");
        check_k(n, k);
        const auto sig = prime_signature(n);
        BigInt sum = 0;
        for (int i = 1; i <= k; ++i) {
            if ((k - i) % 2 == 0)
                sum += G_sum(sig, i);
            else
                sum -= G_sum(sig, i);
        }
        return sum;
    }

    // f(n) = F_Omega(n).
    BigCount f_total(const FactoredInt& n)
    {
        require_at_least_two(n, "f_total");
        return F_sum(prime_signature(n), n.big_omega());
    }

    // f(n) as the partition sum over partitions of any m >= Omega(n).
    BigCount f_total_via(const FactoredInt& n, int m)
    {
        require_at_least_two(n, "f_total_via");
        if (m < n.big_omega())
            throw std::invalid_argument("f_total_via: m must be >= Omega(n)");
        check_k(n, m);
        return F_sum(prime_signature(n), m);
    }

    // g(n) = sum_{i=0}^{floor((Omega-1)/2)} G_{Omega-2i}(n).
    BigCount g_total(const FactoredInt& n)
    {
        require_at_least_two(n, "g_total");
        const auto sig = prime_signature(n);
        const int omega = n.big_omega();
        BigInt sum = 0;
        for (int i = 0; i <= (omega - 1) / 2; ++i)
            sum += G_sum(sig, omega - 2 * i);
        return sum;
    }

    // f_{k,l}(n) kappa(n) = sum_{d^i | n} sum_{j=1}^{min(l,i)} (-1)^(j+1) C(i,j)
    //                        f_{k-i,l-j}(n / d^i) kappa(d).
    BigCount f_kl(const FactoredInt& n, int k, int l)
    {
        check_k(n, k);
        check_index(l, "l");
        const auto e = n.exponents();
        return fkl_rec(e, 0, k, l);
    }

    // h_l(n): as f_kl without the k index.
    BigCount h_l(const FactoredInt& n, int l)
    {
        check_index(l, "l");
        const auto e = n.exponents();
        return hl_rec(e, 0, l);
    }

    // F_k(n) = sum over compositions alpha of k of H(alpha) mu_beta(alpha)(n).
    BigCount fedorov_F(const FactoredInt& n, int k)
    {
        if (k < 1)
            throw std::invalid_argument("fedorov_F: k must be positive");
        check_k(n, k);
        return fedorov_sum(prime_signature(n), k);
    }

    EulerTransformCache& euler_cache() { return nu_cache_; }

    void clear()
    {
        F_cache_.clear();
        G_cache_.clear();
        rec_cache_[0].clear();
        rec_cache_[1].clear();
        kappa_cache_[0].clear();
        kappa_cache_[1].clear();
        fkl_cache_.clear();
        hl_cache_.clear();
        fedorov_cache_.clear();
        nu_cache_ = EulerTransformCache{};
    }

private:
    using Key = std::pair<Signature, int>;
    using Key2 = std::tuple<Signature, int, int>;

    static void check_index(int v, const char* name)
    {
        if (v < 0)
            throw std::invalid_argument(std::string(name) + " must be non-negative");
    }

    void check_k(const FactoredInt& n, int k) const
    {
        check_index(k, "k");
        if (k > n.big_omega() + options_.k_excess_cap)
            throw std::out_of_range("k = " + std::to_string(k) + " exceeds Omega(n) + " +
                                    std::to_string(options_.k_excess_cap));
    }

    static void require_at_least_two(const FactoredInt& n, const char* where)
    {
        if (n.value() < 2)
            throw std::invalid_argument(std::string(where) + ": n must be >= 2");
    }

    static std::size_t first_nonzero(std::span<const int> e)
    {
        std::size_t i = 0;
        while (i < e.size() && e[i] == 0)
            ++i;
        return i;
    }

    BigInt partition_sum(const Signature& sig, int k, bool with_sign)
    {
        ExactRational acc = 0;
        for (const auto& alpha : partitions_of(k)) {
            const auto beta = multiplicity_vector(alpha);
            const BigInt mu = nu_cache_.mu(beta, sig);
            if (mu == 0)
                continue;
            ExactRational term = h_weight(beta) * mu;
            if (with_sign && theta_sign(beta) < 0)
                acc -= term;
            else
                acc += term;
        }
        return require_integral(acc, with_sign ? "G_k partition sum" : "F_k partition sum");
    }

    BigInt F_sum(const Signature& sig, int k)
    {
        if (auto it = F_cache_.find({sig, k}); it != F_cache_.end())
            return it->second;
        BigInt value = partition_sum(sig, k, false);
        F_cache_.emplace(Key{sig, k}, value);
        return value;
    }

    BigInt G_sum(const Signature& sig, int k)
    {
        if (auto it = G_cache_.find({sig, k}); it != G_cache_.end())
            return it->second;
        BigInt value = partition_sum(sig, k, true);
        G_cache_.emplace(Key{sig, k}, value);
        return value;
    }

    BigInt divisor_rec(const Signature& sig, int k, bool distinct)
    {
        if (k < 0)
            return 0;
        if (sig.empty())
            return k == 0 ? 1 : 0;
        if (k == 0)
            return 0;
        auto& cache = rec_cache_[distinct ? 1 : 0];
        if (auto it = cache.find({sig, k}); it != cache.end())
            return it->second;
        BigInt sum = 0;
        for_each_divisor_power(sig, [&](std::span<const int>, int i, std::span<const int> quotient) {
            if (k - i < 0)
                return;
            BigInt term = divisor_rec(canonical_signature(quotient), k - i, distinct);
            if (distinct && i % 2 == 0)
                sum -= term;
            else
                sum += term;
        });
        BigInt value = divide_exact(sum, k, distinct ? "g_k recursion" : "f_k recursion");
        cache.emplace(Key{sig, k}, value);
        return value;
    }

    // e is positional; pi indexes the prime whose multiplicity weights the
    // terms. It is only replaced when the argument becomes coprime to it.
    BigInt kappa_rec(std::span<const int> e, std::size_t pi, int k, bool distinct)
    {
        if (k < 0)
            return 0;
        Signature sig = canonical_signature(e);
        if (sig.empty())
            return k == 0 ? 1 : 0;
        if (k == 0)
            return 0;
        auto& cache = kappa_cache_[distinct ? 1 : 0];
        if (auto it = cache.find({sig, k}); it != cache.end())
            return it->second;
        if (e[pi] == 0)
            pi = first_nonzero(e);
        BigInt sum = 0;
        for_each_divisor_power(e, [&](std::span<const int> d, int i, std::span<const int> quotient) {
            if (d[pi] == 0 || k - i < 0)
                return;
            BigInt term = kappa_rec(quotient, pi, k - i, distinct) * d[pi];
            if (distinct && i % 2 == 0)
                sum -= term;
            else
                sum += term;
        });
        BigInt value = divide_exact(sum, e[pi], distinct ? "g_k kappa recursion" : "f_k kappa recursion");
        cache.emplace(Key{std::move(sig), k}, value);
        return value;
    }

    BigInt fkl_rec(std::span<const int> e, std::size_t pi, int k, int l)
    {
        if (k < 0 || l < 0)
            return 0;
        Signature sig = canonical_signature(e);
        if (sig.empty())
            return (k == 0 && l == 0) ? 1 : 0;
        if (auto it = fkl_cache_.find({sig, k, l}); it != fkl_cache_.end())
            return it->second;
        if (e[pi] == 0)
            pi = first_nonzero(e);
        BigInt sum = 0;
        for_each_divisor_power(e, [&](std::span<const int> d, int i, std::span<const int> quotient) {
            if (d[pi] == 0 || k - i < 0)
                return;
            const int j_max = std::min(l, i);
            for (int j = 1; j <= j_max; ++j) {
                BigInt inner = fkl_rec(quotient, pi, k - i, l - j);
                if (inner == 0)
                    continue;
                BigInt term = binomial(i, j) * inner * d[pi];
                if (j % 2 == 1)
                    sum += term;
                else
                    sum -= term;
            }
        });
        BigInt value = divide_exact(sum, e[pi], "f_kl kappa recursion");
        fkl_cache_.emplace(Key2{std::move(sig), k, l}, value);
        return value;
    }

    BigInt hl_rec(std::span<const int> e, std::size_t pi, int l)
    {
        if (l < 0)
            return 0;
        Signature sig = canonical_signature(e);
        if (sig.empty())
            return l == 0 ? 1 : 0;
        if (auto it = hl_cache_.find({sig, l}); it != hl_cache_.end())
            return it->second;
        if (e[pi] == 0)
            pi = first_nonzero(e);
        BigInt sum = 0;
        for_each_divisor_power(e, [&](std::span<const int> d, int i, std::span<const int> quotient) {
            if (d[pi] == 0)
                return;
            const int j_max = std::min(l, i);
            for (int j = 1; j <= j_max; ++j) {
                BigInt inner = hl_rec(quotient, pi, l - j);
                if (inner == 0)
                    continue;
                BigInt term = binomial(i, j) * inner * d[pi];
                if (j % 2 == 1)
                    sum += term;
                else
                    sum -= term;
            }
        });
        BigInt value = divide_exact(sum, e[pi], "h_l kappa recursion");
        hl_cache_.emplace(Key{std::move(sig), l}, value);
        return value;
    }

    // Walks every composition of k with its running prefix-sum product. Each
    // composition contributes k!/prod(prefix sums), an integer because the
    // prefix sums are distinct values in 1..k; terms are grouped by beta and
    // weighted by mu_beta before the final exact division by k!.
    BigInt fedorov_sum(const Signature& sig, int k)
    {
        if (auto it = fedorov_cache_.find({sig, k}); it != fedorov_cache_.end())
            return it->second;
        const BigInt k_factorial = factorial(k);
        std::map<std::vector<int>, BigInt> weight_by_beta;
        std::vector<int> counts(static_cast<std::size_t>(k), 0);

        auto walk = [&](auto&& self, int prefix, const BigInt& product) -> void {
            if (prefix == k) {
                std::vector<int> beta = counts;
                while (!beta.empty() && beta.back() == 0)
                    beta.pop_back();
                weight_by_beta[beta] += divide_exact(k_factorial, product, "fedorov weight");
                return;
            }
            for (int part = 1; prefix + part <= k; ++part) {
                ++counts[static_cast<std::size_t>(part - 1)];
                self(self, prefix + part, product * (prefix + part));
                --counts[static_cast<std::size_t>(part - 1)];
            }
        };
        walk(walk, 0, BigInt(1));

        BigInt sum = 0;
        for (const auto& [beta, weight] : weight_by_beta)
            sum += weight * nu_cache_.mu(MultiplicityVector{beta}, sig);
        BigInt value = divide_exact(sum, k_factorial, "fedorov composition sum");
        fedorov_cache_.emplace(Key{sig, k}, value);
        return value;
    }

    Options options_;
    EulerTransformCache nu_cache_;
    std::map<Key, BigInt> F_cache_;
    std::map<Key, BigInt> G_cache_;
    std::map<Key, BigInt> rec_cache_[2];
    std::map<Key, BigInt> kappa_cache_[2];
    std::map<Key2, BigInt> fkl_cache_;
    std::map<Key, BigInt> hl_cache_;
    std::map<Key, BigInt> fedorov_cache_;
};

inline Counter& default_counter()
{
    thread_local Counter counter;
    return counter;
}

inline BigCount big_F(const FactoredInt& n, int k) { return default_counter().big_F(n, k); }
inline BigCount big_G(const FactoredInt& n, int k) { return default_counter().big_G(n, k); }
inline BigCount f_k_rec(const FactoredInt& n, int k) { return default_counter().f_k_rec(n, k); }
inline BigCount g_k_rec(const FactoredInt& n, int k) { return default_counter().g_k_rec(n, k); }
inline BigCount f_k_kappa(const FactoredInt& n, int k) { return default_counter().f_k_kappa(n, k); }
inline BigCount g_k_kappa(const FactoredInt& n, int k) { return default_counter().g_k_kappa(n, k); }
inline BigCount f_from_F(const FactoredInt& n, int k) { return default_counter().f_from_F(n, k); }
inline BigCount g_from_G(const FactoredInt& n, int k) { return default_counter().g_from_G(n, k); }
inline BigCount f_total(const FactoredInt& n) { return default_counter().f_total(n); }
inline BigCount g_total(const FactoredInt& n) { return default_counter().g_total(n); }
inline BigCount f_kl(const FactoredInt& n, int k, int l) { return default_counter().f_kl(n, k, l); }
inline BigCount h_l(const FactoredInt& n, int l) { return default_counter().h_l(n, l); }
inline BigCount fedorov_F(const FactoredInt& n, int k) { return default_counter().fedorov_F(n, k); }

} // namespace multifact

#endif // MULTIFACT_COUNTING_HPP
