#ifndef MULTIFACT_ARITH_HPP
#define MULTIFACT_ARITH_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace multifact {

// Arbitrary precision carriers. BigCount values are non-negative by contract;
// signed intermediates (alternating sums) use the same type.
using BigInt = boost::multiprecision::cpp_int;
using BigCount = BigInt;
using ExactRational = boost::multiprecision::cpp_rational;

// Raised when an exact division or an integral partition sum turns out not to
// be exact. Always an implementation bug, never a user error.
class integrality_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Divides sum by divisor and throws integrality_error unless the remainder is 0.
inline BigInt divide_exact(const BigInt& sum, const BigInt& divisor, const char* where)
{
    BigInt q, r;
    boost::multiprecision::divide_qr(sum, divisor, q, r);
    if (r != 0)
        throw integrality_error(std::string(where) + ": inexact division of " + sum.str() +
                                " by " + divisor.str());
    return q;
}

inline BigInt require_integral(const ExactRational& value, const char* where)
{
    if (boost::multiprecision::denominator(value) != 1)
        throw integrality_error(std::string(where) + ": non-integral sum " + value.str());
    return boost::multiprecision::numerator(value);
}

// Exponent vectors. A positional vector follows the prime order of some
// FactoredInt and may contain zeros; a Signature is sorted nonincreasing
// with zeros removed.
using ExponentVector = std::vector<int>;
using Signature = std::vector<int>;

inline Signature canonical_signature(std::span<const int> exponents)
{
    Signature sig;
    sig.reserve(exponents.size());
    for (int e : exponents)
        if (e > 0)
            sig.push_back(e);
    std::sort(sig.begin(), sig.end(), std::greater<>());
    return sig;
}

// Prime sieve shared by all threads. Readers take an immutable snapshot;
// growth replaces the snapshot under the mutex, so every extension is atomic.
class PrimeSieve {
public:
    using Snapshot = std::shared_ptr<const std::vector<std::uint32_t>>;

    static PrimeSieve& instance()
    {
        static PrimeSieve sieve;
        return sieve;
    }

    // Snapshot containing every prime <= limit (and possibly more).
    Snapshot primes_up_to(std::uint32_t limit)
    {
        std::lock_guard lock(mutex_);
        if (limit > limit_)
            grow(std::max<std::uint64_t>(limit, 2ull * limit_));
        return primes_;
    }

    // Snapshot containing at least count primes.
    Snapshot first_primes(std::size_t count)
    {
        std::lock_guard lock(mutex_);
        while (primes_->size() < count)
            grow(2ull * limit_);
        return primes_;
    }

private:
    PrimeSieve() { grow(1u << 16); }

    void grow(std::uint64_t new_limit)
    {
        const auto limit = static_cast<std::uint32_t>(std::min<std::uint64_t>(new_limit, 0xFFFFFFFEull));
        std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
        auto primes = std::make_shared<std::vector<std::uint32_t>>();
        for (std::uint64_t i = 2; i <= limit; ++i) {
            if (composite[i])
                continue;
            primes->push_back(static_cast<std::uint32_t>(i));
            for (std::uint64_t j = i * i; j <= limit; j += i)
                composite[j] = true;
        }
        limit_ = limit;
        primes_ = std::move(primes);
    }

    std::mutex mutex_;
    std::uint32_t limit_ = 0;
    Snapshot primes_ = std::make_shared<std::vector<std::uint32_t>>();
};

struct PrimePower {
    std::uint64_t prime = 0;
    int exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// A positive integer with its canonical factorization (primes ascending).
class FactoredInt {
public:
    FactoredInt() = default;

    // Validates that the primes are strictly increasing primes with positive
    // exponents and that the product fits in 64 bits.
    static FactoredInt from_factors(std::vector<PrimePower> factors);

    std::uint64_t value() const noexcept { return value_; }
    const std::vector<PrimePower>& factors() const noexcept { return factors_; }

    // omega: number of distinct primes; big_omega: primes with multiplicity.
    int omega() const noexcept { return static_cast<int>(factors_.size()); }
    int big_omega() const noexcept
    {
        int total = 0;
        for (const auto& f : factors_)
            total += f.exponent;
        return total;
    }

    ExponentVector exponents() const
    {
        ExponentVector e;
        e.reserve(factors_.size());
        for (const auto& f : factors_)
            e.push_back(f.exponent);
        return e;
    }

    friend bool operator==(const FactoredInt&, const FactoredInt&) = default;

private:
    std::uint64_t value_ = 1;
    std::vector<PrimePower> factors_;

    friend FactoredInt factorize(std::uint64_t n);
};

inline std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r > n / r)
        --r;
    while ((r + 1) <= n / (r + 1))
        ++r;
    return r;
}

inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    const std::uint64_t root = isqrt(n);
    const std::uint64_t sieved = std::min<std::uint64_t>(root, 1u << 24);
    auto primes = PrimeSieve::instance().primes_up_to(static_cast<std::uint32_t>(sieved));
    for (std::uint32_t p : *primes) {
        if (p > root)
            return true;
        if (n % p == 0)
            return n == p;
    }
    for (std::uint64_t d = primes->back() + 2; d <= root; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

// Trial division over the cached sieve, continuing with odd candidates past
// the sieve bound.
inline FactoredInt factorize(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("factorize: n must be positive");
    FactoredInt result;
    result.value_ = n;
    std::uint64_t rest = n;
    auto take = [&](std::uint64_t p) {
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 0)
            result.factors_.push_back({p, e});
    };
    const std::uint64_t sieved = std::min<std::uint64_t>(isqrt(n), 1u << 24);
    auto primes = PrimeSieve::instance().primes_up_to(static_cast<std::uint32_t>(sieved));
    for (std::uint32_t p : *primes) {
        if (static_cast<std::uint64_t>(p) * p > rest)
            break;
        take(p);
    }
    for (std::uint64_t d = primes->back() + 2; d <= rest / d; d += 2)
        take(d);
    if (rest > 1)
        result.factors_.push_back({rest, 1});
    return result;
}

inline FactoredInt FactoredInt::from_factors(std::vector<PrimePower> factors)
{
    std::uint64_t value = 1;
    for (std::size_t j = 0; j < factors.size(); ++j) {
        const auto& f = factors[j];
        if (f.exponent < 1 || !is_prime(f.prime))
            throw std::invalid_argument("FactoredInt: factor " + std::to_string(f.prime) + "^" +
                                        std::to_string(f.exponent) + " is not a prime power");
        if (j > 0 && factors[j - 1].prime >= f.prime)
            throw std::invalid_argument("FactoredInt: primes must be strictly increasing");
        for (int e = 0; e < f.exponent; ++e) {
            if (value > UINT64_MAX / f.prime)
                throw std::overflow_error("FactoredInt: value exceeds 64 bits");
            value *= f.prime;
        }
    }
    FactoredInt result = factorize(value);
    return result;
}

inline Signature prime_signature(const FactoredInt& n)
{
    return canonical_signature(n.exponents());
}

// Product of the first count primes.
inline FactoredInt primorial(int count)
{
    if (count < 0)
        throw std::invalid_argument("primorial: count must be non-negative");
    auto primes = PrimeSieve::instance().first_primes(static_cast<std::size_t>(count));
    std::vector<PrimePower> factors;
    for (int i = 0; i < count; ++i)
        factors.push_back({(*primes)[static_cast<std::size_t>(i)], 1});
    return FactoredInt::from_factors(std::move(factors));
}

inline std::uint64_t smallest_prime_factor(std::uint64_t n)
{
    if (n < 2)
        throw std::invalid_argument("smallest_prime_factor: n must be >= 2");
    return factorize(n).factors().front().prime;
}

// Largest m with prime^m | n.
inline int kappa(std::uint64_t prime, std::uint64_t n)
{
    if (prime < 2)
        throw std::invalid_argument("kappa: prime must be >= 2");
    if (n == 0)
        throw std::invalid_argument("kappa: n must be positive");
    int m = 0;
    while (n % prime == 0) {
        n /= prime;
        ++m;
    }
    return m;
}

inline BigCount binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigCount result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline BigCount factorial(int n)
{
    BigCount result = 1;
    for (int i = 2; i <= n; ++i)
        result *= i;
    return result;
}

// Visits every pair (d, i) with d >= 2 and d^i | n, where n and d are given as
// exponent vectors over the same primes. The callback receives the exponents
// of d, the power i and the exponents of n / d^i. Order: odometer over the
// exponents of d (first coordinate fastest), then i ascending.
template <class Visitor>
void for_each_divisor_power(std::span<const int> exponents, Visitor&& visit)
{
    const std::size_t width = exponents.size();
    ExponentVector d(width, 0);
    ExponentVector quotient(width, 0);
    while (true) {
        std::size_t pos = 0;
        while (pos < width && d[pos] == exponents[pos]) {
            d[pos] = 0;
            ++pos;
        }
        if (pos == width)
            return;
        ++d[pos];

        int max_power = INT32_MAX;
        for (std::size_t j = 0; j < width; ++j)
            if (d[j] > 0)
                max_power = std::min(max_power, exponents[j] / d[j]);
        for (int i = 1; i <= max_power; ++i) {
            for (std::size_t j = 0; j < width; ++j)
                quotient[j] = exponents[j] - i * d[j];
            visit(std::span<const int>(d), i, std::span<const int>(quotient));
        }
    }
}

struct DivisorPower {
    std::uint64_t divisor = 0;
    int power = 0;

    friend bool operator==(const DivisorPower&, const DivisorPower&) = default;
    friend auto operator<=>(const DivisorPower&, const DivisorPower&) = default;
};

// All (d, i) with d >= 2 and d^i | n, sorted by d then i. Built from the
// exponent lattice of n.
inline std::vector<DivisorPower> divisor_power_pairs(const FactoredInt& n)
{
    if (n.value() < 2)
        throw std::invalid_argument("divisor_power_pairs: n must be >= 2");
    const auto exps = n.exponents();
    std::vector<DivisorPower> pairs;
    for_each_divisor_power(exps, [&](std::span<const int> d, int i, std::span<const int>) {
        std::uint64_t value = 1;
        for (std::size_t j = 0; j < d.size(); ++j)
            for (int e = 0; e < d[j]; ++e)
                value *= n.factors()[j].prime;
        pairs.push_back({value, i});
    });
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

// Every divisor of n, ascending.
inline std::vector<std::uint64_t> divisors(const FactoredInt& n)
{
    std::vector<std::uint64_t> result{1};
    for (const auto& [p, e] : n.factors()) {
        const std::size_t base = result.size();
        std::uint64_t power = 1;
        for (int i = 1; i <= e; ++i) {
            power *= p;
            for (std::size_t j = 0; j < base; ++j)
                result.push_back(result[j] * power);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace multifact

#endif // MULTIFACT_ARITH_HPP
