#ifndef MULTIFACT_ORACLE_HPP
#define MULTIFACT_ORACLE_HPP

// Brute-force ground truth. Depends on arith and the plain partition types
// only; nothing here touches the counting or partitions algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"
#include "partition_types.hpp"

namespace multifact::oracle {

inline constexpr std::uint64_t default_limit = 1'000'000;

// Thrown when an enumeration would exceed its item limit.
class limit_error : public std::length_error {
public:
    using std::length_error::length_error;
};

// One unordered factorization: parts >= 2, nondecreasing, product n.
struct FactorizationMultiset {
    std::vector<std::uint64_t> parts;

    friend bool operator==(const FactorizationMultiset&, const FactorizationMultiset&) = default;
};

// Depth-first descent over divisors d >= min_part of the remaining cofactor,
// appending d and recursing on cofactor / d with the same lower bound.
// Every multiset is checked to multiply back to n before it is visited.
inline void for_each_factorization(std::uint64_t n, std::uint64_t min_part,
                                   const std::function<void(const FactorizationMultiset&)>& visit,
                                   std::uint64_t limit = default_limit)
{
    if (n < 2)
        throw std::invalid_argument("oracle: n must be >= 2");
    if (min_part < 2)
        throw std::invalid_argument("oracle: min_part must be >= 2");
    const auto divs = divisors(factorize(n));
    FactorizationMultiset current;
    std::uint64_t produced = 0;

    auto emit = [&] {
        std::uint64_t product = 1;
        for (auto p : current.parts)
            product *= p;
        if (product != n)
            throw std::logic_error("oracle: factorization does not multiply to n");
        if (++produced > limit)
            throw limit_error("oracle: more than " + std::to_string(limit) + " factorizations of " +
                              std::to_string(n));
        visit(current);
    };

    auto descend = [&](auto&& self, std::uint64_t rest, std::size_t from) -> void {
        for (std::size_t idx = from; idx < divs.size(); ++idx) {
            const std::uint64_t d = divs[idx];
            if (d > rest / d)
                break;
            if (rest % d != 0)
                continue;
            current.parts.push_back(d);
            self(self, rest / d, idx);
            current.parts.pop_back();
        }
        current.parts.push_back(rest);
        emit();
        current.parts.pop_back();
    };

    std::size_t start = static_cast<std::size_t>(std::lower_bound(divs.begin(), divs.end(), min_part) - divs.begin());
    if (start < divs.size() && divs[start] <= n)
        descend(descend, n, start);
}

inline std::vector<FactorizationMultiset> enumerate_factorizations(std::uint64_t n, std::uint64_t min_part = 2,
                                                                   std::uint64_t limit = default_limit)
{
    std::vector<FactorizationMultiset> all;
    for_each_factorization(n, min_part, [&](const FactorizationMultiset& m) { all.push_back(m); }, limit);
    return all;
}

// Classification of every factorization of n by part count k and number of
// different part values l.
struct OracleProfile {
    std::uint64_t n = 0;
    std::uint64_t f = 0;
    std::uint64_t g = 0;
    std::vector<std::uint64_t> f_k;                // index k
    std::vector<std::uint64_t> g_k;                // index k
    std::vector<std::uint64_t> h_l;                // index l
    std::vector<std::vector<std::uint64_t>> f_kl;  // [k][l]

    static std::uint64_t at(const std::vector<std::uint64_t>& v, int i)
    {
        return (i >= 0 && static_cast<std::size_t>(i) < v.size()) ? v[static_cast<std::size_t>(i)] : 0;
    }

    std::uint64_t fk(int k) const { return at(f_k, k); }
    std::uint64_t gk(int k) const { return at(g_k, k); }
    std::uint64_t hl(int l) const { return at(h_l, l); }
    std::uint64_t fkl(int k, int l) const
    {
        return (k >= 0 && static_cast<std::size_t>(k) < f_kl.size()) ? at(f_kl[static_cast<std::size_t>(k)], l) : 0;
    }

    // Factorizations into exactly k parts >= 1: pad an i-factorization with
    // k - i ones, so F_k = sum_{i<=k} f_i.
    std::uint64_t F(int k) const
    {
        std::uint64_t sum = 0;
        for (int i = 0; i <= k; ++i)
            sum += fk(i);
        return sum;
    }

    // Distinct parts >= 1 admit at most one part equal to 1.
    std::uint64_t G(int k) const
    {
        if (k < 0)
            return 0;
        return k == 0 ? gk(0) : gk(k) + gk(k - 1);
    }

    int max_k() const { return static_cast<int>(f_k.size()) - 1; }

    // Empty string when every internal identity holds, otherwise a description
    // of the first one that fails.
    std::string check_identities() const
    {
        std::uint64_t sum_f = 0, sum_g = 0;
        for (int k = 0; k <= max_k(); ++k) {
            sum_f += fk(k);
            sum_g += gk(k);
            std::uint64_t row = 0;
            for (int l = 0; l <= k; ++l)
                row += fkl(k, l);
            if (row != fk(k))
                return "sum_l f_kl != f_k at k=" + std::to_string(k);
            if (fkl(k, k) != gk(k))
                return "f_kk != g_k at k=" + std::to_string(k);
        }
        if (sum_f != f)
            return "sum f_k != f";
        if (sum_g != g)
            return "sum g_k != g";
        for (int l = 0; l < static_cast<int>(h_l.size()); ++l) {
            std::uint64_t col = 0;
            for (int k = 0; k <= max_k(); ++k)
                col += fkl(k, l);
            if (col != hl(l))
                return "sum_k f_kl != h_l at l=" + std::to_string(l);
        }
        if (F(max_k()) != f)
            return "F_Omega != f";
        return {};
    }
};

// n = 1 is accepted and classified as the single empty factorization.
inline OracleProfile profile(std::uint64_t n, std::uint64_t limit = default_limit)
{
    OracleProfile p;
    p.n = n;
    if (n == 1) {
        p.f = p.g = 1;
        p.f_k = p.g_k = p.h_l = {1};
        p.f_kl = {{1}};
        return p;
    }
    const int omega = factorize(n).big_omega();
    const auto width = static_cast<std::size_t>(omega) + 1;
    p.f_k.assign(width, 0);
    p.g_k.assign(width, 0);
    p.h_l.assign(width, 0);
    p.f_kl.assign(width, std::vector<std::uint64_t>(width, 0));
    for_each_factorization(n, 2, [&](const FactorizationMultiset& m) {
        const auto k = m.parts.size();
        std::size_t l = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (i == 0 || m.parts[i] != m.parts[i - 1])
                ++l;
        ++p.f;
        ++p.f_k[k];
        ++p.h_l[l];
        ++p.f_kl[k][l];
        if (l == k) {
            ++p.g;
            ++p.g_k[k];
        }
    }, limit);
    return p;
}

// Every partition of n, parts nonincreasing; recursion on the largest
// allowed part.
inline void for_each_partition(int n, const std::function<void(const Partition&)>& visit)
{
    if (n < 0)
        throw std::invalid_argument("oracle: n must be non-negative");
    Partition current;
    auto descend = [&](auto&& self, int rest, int max_part) -> void {
        if (rest == 0) {
            visit(current);
            return;
        }
        for (int part = std::min(rest, max_part); part >= 1; --part) {
            current.parts.push_back(part);
            self(self, rest - part, part);
            current.parts.pop_back();
        }
    };
    descend(descend, n, n);
}

inline std::vector<Partition> enumerate_partitions(int n)
{
    std::vector<Partition> all;
    for_each_partition(n, [&](const Partition& p) { all.push_back(p); });
    return all;
}

// Partitions of n classified by part count k, number of different values l,
// and smallest part.
struct PartitionProfile {
    int n = 0;
    std::uint64_t total = 0;
    std::vector<std::vector<std::uint64_t>> by_k_l;         // [k][l]
    std::vector<std::vector<std::uint64_t>> by_l_min_part;  // [l][smallest part]

    std::uint64_t p_kl(int k, int l) const
    {
        if (k < 0 || l < 0 || k > n || l > n)
            return 0;
        return by_k_l[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
    }

    std::uint64_t r_l(int l) const { return r_lj(l, 1); }

    // Partitions with l different values, all parts >= j.
    std::uint64_t r_lj(int l, int j) const
    {
        if (l < 0 || l > n)
            return 0;
        if (l == 0)
            return n == 0 ? 1 : 0;
        std::uint64_t sum = 0;
        for (int m = std::max(j, 1); m <= n; ++m)
            sum += by_l_min_part[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)];
        return sum;
    }

    std::uint64_t with_k_parts(int k) const
    {
        std::uint64_t sum = 0;
        for (int l = 0; l <= n; ++l)
            sum += p_kl(k, l);
        return sum;
    }
};

inline PartitionProfile partition_profile(int n)
{
    PartitionProfile p;
    p.n = n;
    const auto width = static_cast<std::size_t>(n) + 1;
    p.by_k_l.assign(width, std::vector<std::uint64_t>(width, 0));
    p.by_l_min_part.assign(width, std::vector<std::uint64_t>(width, 0));
    for_each_partition(n, [&](const Partition& part) {
        const auto& a = part.parts;
        std::size_t l = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (i == 0 || a[i] != a[i - 1])
                ++l;
        ++p.total;
        ++p.by_k_l[a.size()][l];
        const int smallest = a.empty() ? 0 : a.back();
        ++p.by_l_min_part[l][static_cast<std::size_t>(smallest)];
    });
    return p;
}

// nu_beta(m) by direct enumeration: partitions of m into parts i with
// beta_i >= 1, each weighted by the number of ways to color its c copies of
// part i from beta_i colors, C(c + beta_i - 1, c).
inline BigCount colored_partition_count(const MultiplicityVector& b, int m)
{
    if (m < 0)
        throw std::invalid_argument("oracle: m must be non-negative");
    std::vector<int> allowed;
    for (int i = b.largest_part(); i >= 1; --i)
        if (b.at(i) >= 1)
            allowed.push_back(i);

    BigCount total = 0;
    auto descend = [&](auto&& self, int rest, std::size_t idx, const BigCount& ways) -> void {
        if (rest == 0) {
            total += ways;
            return;
        }
        if (idx == allowed.size())
            return;
        const int part = allowed[idx];
        const int colors = b.at(part);
        for (int copies = rest / part; copies >= 0; --copies)
            self(self, rest - copies * part, idx + 1, ways * binomial(copies + colors - 1, copies));
    };
    descend(descend, m, 0, BigCount(1));
    return total;
}

} // namespace multifact::oracle

#endif // MULTIFACT_ORACLE_HPP
