#ifndef MULTIFACT_PARTITIONS_HPP
#define MULTIFACT_PARTITIONS_HPP

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"
#include "partition_types.hpp"

namespace multifact {

namespace detail {

// Adapts a generator (current() / advance()) to a single-pass range.
template <class Generator>
class GeneratorRange {
public:
    using value_type = typename Generator::value_type;

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = typename Generator::value_type;
        using difference_type = std::ptrdiff_t;
        using pointer = const value_type*;
        using reference = const value_type&;

        iterator() = default;
        explicit iterator(Generator* gen) : gen_(gen) {}

        reference operator*() const { return gen_->current(); }
        pointer operator->() const { return &gen_->current(); }
        iterator& operator++()
        {
            if (!gen_->advance())
                gen_ = nullptr;
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.gen_ == b.gen_; }

    private:
        Generator* gen_ = nullptr;
    };

    explicit GeneratorRange(Generator gen) : gen_(std::move(gen)) {}

    iterator begin() { return iterator(&gen_); }
    iterator end() { return iterator(); }

private:
    Generator gen_;
};

class PartitionGenerator {
public:
    using value_type = Partition;

    explicit PartitionGenerator(int k)
    {
        if (k > 0)
            current_.parts.push_back(k);
    }

    const Partition& current() const { return current_; }

    // Next partition in descending lexicographic order.
    bool advance()
    {
        auto& a = current_.parts;
        std::size_t q = a.size();
        while (q > 0 && a[q - 1] == 1)
            --q;
        if (q == 0)
            return false;
        --q;
        int remaining = static_cast<int>(a.size() - q - 1) + 1;
        const int v = a[q] - 1;
        a.resize(q);
        a.push_back(v);
        while (remaining > v) {
            a.push_back(v);
            remaining -= v;
        }
        if (remaining > 0)
            a.push_back(remaining);
        return true;
    }

private:
    Partition current_;
};

class CompositionGenerator {
public:
    using value_type = Composition;

    explicit CompositionGenerator(int k) : current_{std::vector<int>(static_cast<std::size_t>(k), 1)} {}

    const Composition& current() const { return current_; }

    // Next composition in ascending lexicographic order.
    bool advance()
    {
        auto& c = current_.parts;
        if (c.size() <= 1)
            return false;
        const int last = c.back();
        c.pop_back();
        ++c.back();
        c.insert(c.end(), static_cast<std::size_t>(last - 1), 1);
        return true;
    }

private:
    Composition current_;
};

} // namespace detail

// Every partition of k once, descending lexicographic; k = 0 yields the empty
// partition.
inline detail::GeneratorRange<detail::PartitionGenerator> partitions_of(int k)
{
    if (k < 0)
        throw std::invalid_argument("partitions_of: k must be non-negative");
    return detail::GeneratorRange(detail::PartitionGenerator(k));
}

// All 2^(k-1) compositions of k, ascending lexicographic.
inline detail::GeneratorRange<detail::CompositionGenerator> compositions_of(int k)
{
    if (k < 1)
        throw std::invalid_argument("compositions_of: k must be positive");
    return detail::GeneratorRange(detail::CompositionGenerator(k));
}

inline MultiplicityVector multiplicity_vector(std::span<const int> parts)
{
    MultiplicityVector mv;
    for (int part : parts) {
        if (part < 1)
            throw std::invalid_argument("multiplicity_vector: parts must be positive");
        if (static_cast<std::size_t>(part) > mv.beta.size())
            mv.beta.resize(static_cast<std::size_t>(part), 0);
        ++mv.beta[static_cast<std::size_t>(part - 1)];
    }
    return mv;
}

inline MultiplicityVector multiplicity_vector(const Partition& p)
{
    return multiplicity_vector(p.parts);
}

// h(beta) = 1 / prod_i (i^beta_i * beta_i!).
inline ExactRational h_weight(const MultiplicityVector& b)
{
    BigInt denominator = 1;
    for (int i = 1; i <= b.largest_part(); ++i) {
        denominator *= boost::multiprecision::pow(BigInt(i), static_cast<unsigned>(b.at(i)));
        denominator *= factorial(b.at(i));
    }
    return ExactRational(BigInt(1), denominator);
}

// (-1)^theta(beta) with theta(beta) = sum_i (1 + i) beta_i.
inline int theta_sign(const MultiplicityVector& b)
{
    int parity = 0;
    for (int i = 1; i <= b.largest_part(); ++i)
        parity ^= ((1 + i) * b.at(i)) & 1;
    return parity ? -1 : 1;
}

// gamma(m) = sum over divisors d of m of d * beta_d.
inline BigCount gamma(const MultiplicityVector& b, int m)
{
    if (m < 1)
        throw std::invalid_argument("gamma: m must be positive");
    BigCount sum = 0;
    const int bound = std::min(m, b.largest_part());
    for (int d = 1; d <= bound; ++d)
        if (m % d == 0)
            sum += BigCount(d) * b.at(d);
    return sum;
}

namespace detail {

// Appends nu(m) for m = nu.size() .. m_max; nu must start as {1}.
inline void extend_euler_transform(const MultiplicityVector& b, std::vector<BigCount>& nu, int m_max)
{
    for (int m = static_cast<int>(nu.size()); m <= m_max; ++m) {
        BigCount sum = 0;
        for (int k = 1; k <= m; ++k) {
            const BigCount g = gamma(b, k);
            if (g != 0)
                sum += g * nu[static_cast<std::size_t>(m - k)];
        }
        nu.push_back(divide_exact(sum, m, "euler_transform"));
    }
}

} // namespace detail

// Euler transform of beta: element m is nu_beta(m), the number of partitions
// of m where part i comes in beta_i colors. Element 0 is 1 (the ogf constant).
inline std::vector<BigCount> euler_transform(const MultiplicityVector& b, int m_max)
{
    if (m_max < 0)
        throw std::invalid_argument("euler_transform: m_max must be non-negative");
    std::vector<BigCount> nu{1};
    detail::extend_euler_transform(b, nu, m_max);
    return nu;
}

// Memoized Euler transform prefixes keyed by beta. Not thread-safe; keep one
// per worker.
class EulerTransformCache {
public:
    const std::vector<BigCount>& prefix(const MultiplicityVector& b, int m_max)
    {
        auto [it, inserted] = table_.try_emplace(b.beta, std::vector<BigCount>{1});
        if (static_cast<int>(it->second.size()) <= m_max)
            detail::extend_euler_transform(b, it->second, m_max);
        return it->second;
    }

    BigCount nu(const MultiplicityVector& b, int m) { return prefix(b, m)[static_cast<std::size_t>(m)]; }

    // mu_beta over an exponent vector: product of nu_beta(e_j).
    BigCount mu(const MultiplicityVector& b, std::span<const int> exponents)
    {
        int top = 0;
        for (int e : exponents)
            top = std::max(top, e);
        const auto& nu = prefix(b, top);
        BigCount product = 1;
        for (int e : exponents) {
            product *= nu[static_cast<std::size_t>(e)];
            if (product == 0)
                break;
        }
        return product;
    }

    std::size_t size() const { return table_.size(); }

private:
    std::map<std::vector<int>, std::vector<BigCount>> table_;
};

// mu_beta(n) = prod_j nu_beta(e_j); mu_beta(1) = 1.
inline BigCount mu_beta(const MultiplicityVector& b, const FactoredInt& n)
{
    EulerTransformCache cache;
    return cache.mu(b, n.exponents());
}

// H(alpha) = 1 / prod_j (alpha_1 + ... + alpha_j).
inline ExactRational fedorov_weight(const Composition& c)
{
    BigInt product = 1;
    int prefix = 0;
    for (int part : c.parts) {
        prefix += part;
        product *= prefix;
    }
    return ExactRational(BigInt(1), product);
}

// Number of compositions whose part multiplicities equal beta:
// (sum beta_i)! / prod beta_i!.
inline BigCount composition_count(const MultiplicityVector& b)
{
    BigCount count = factorial(b.part_count());
    for (int i = 1; i <= b.largest_part(); ++i)
        count /= factorial(b.at(i));
    return count;
}

// Sum of H(alpha) over the compositions of k with part multiplicities beta.
inline ExactRational aggregate_fedorov(int k, const MultiplicityVector& b)
{
    if (k < 1 || b.weight() != k)
        throw std::invalid_argument("aggregate_fedorov: beta has weight " + std::to_string(b.weight()) +
                                    ", expected " + std::to_string(k));
    Composition c;
    for (int i = 1; i <= b.largest_part(); ++i)
        c.parts.insert(c.parts.end(), static_cast<std::size_t>(b.at(i)), i);
    ExactRational sum = 0;
    do {
        sum += fedorov_weight(c);
    } while (std::next_permutation(c.parts.begin(), c.parts.end()));
    return sum;
}

} // namespace multifact

#endif // MULTIFACT_PARTITIONS_HPP
