#ifndef MULTIFACT_PARTITION_COUNTS_HPP
#define MULTIFACT_PARTITION_COUNTS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "arith.hpp"
#include "counting.hpp"
#include "partitions.hpp"

namespace multifact {

// Partition-side counts:
//   p_{k,l}(n)   partitions of n into k parts with exactly l different values
//   r_l(n)       partitions of n with exactly l different values
//   r_{l,j}(n)   as r_l with every part >= j
// Not thread-safe; one instance per worker.
class PartitionCounter {
public:
    // n p_{k,l}(n) = sum_{d=1}^{n} d sum_{j=1}^{l} (-1)^(j+1)
    //                sum_{i=1}^{floor(n/d)} C(i,j) p_{k-i,l-j}(n - i d)
    BigCount p_kl(int n, int k, int l)
    {
        if (n < 0 || k < 0 || l < 0)
            return 0;
        if (k > p_kcap_ || l > p_lcap_) {
            p_kcap_ = std::max(k, p_kcap_);
            p_lcap_ = std::max(l, p_lcap_);
            p_rows_.clear();
        }
        while (static_cast<int>(p_rows_.size()) <= n)
            append_p_row();
        return p_rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
    }

    // n r_l(n) = sum_{d=1}^{n} d sum_{j=1}^{l} (-1)^(j+1)
    //            sum_{i=1}^{floor(n/d)} C(i,j) r_{l-j}(n - i d)
    BigCount r_l(int n, int l)
    {
        if (n < 0 || l < 0)
            return 0;
        if (l > r_lcap_) {
            r_lcap_ = l;
            r_rows_.clear();
        }
        while (static_cast<int>(r_rows_.size()) <= n)
            append_r_row();
        return r_rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(l)];
    }

    // r_{l,j}(n) = r_{l,j+1}(n) + sum_{i=1}^{floor(n/j)} r_{l-1,j+1}(n - i j)
    BigCount r_lj(int n, int l, int j)
    {
        if (j < 1)
            throw std::invalid_argument("r_lj: j must be >= 1");
        return rlj(n, l, j);
    }

private:
    const BigInt& choose(int i, int j)
    {
        while (static_cast<int>(pascal_.size()) <= i) {
            const auto m = pascal_.size();
            std::vector<BigInt> row(m + 1, 1);
            for (std::size_t c = 1; c < m; ++c)
                row[c] = pascal_[m - 1][c - 1] + pascal_[m - 1][c];
            pascal_.push_back(std::move(row));
        }
        return pascal_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    void append_p_row()
    {
        const int m = static_cast<int>(p_rows_.size());
        const auto kw = static_cast<std::size_t>(p_kcap_) + 1;
        const auto lw = static_cast<std::size_t>(p_lcap_) + 1;
        std::vector<std::vector<BigInt>> row(kw, std::vector<BigInt>(lw, 0));
        if (m == 0) {
            row[0][0] = 1;
            p_rows_.push_back(std::move(row));
            return;
        }
        for (int d = 1; d <= m; ++d) {
            for (int i = 1; i <= m / d; ++i) {
                const auto& prev = p_rows_[static_cast<std::size_t>(m - i * d)];
                const int j_max = std::min(i, p_lcap_);
                for (int j = 1; j <= j_max; ++j) {
                    BigInt coeff = choose(i, j) * d;
                    if (j % 2 == 0)
                        coeff = -coeff;
                    for (int k0 = 0; k0 + i <= p_kcap_; ++k0)
                        for (int l0 = 0; l0 + j <= p_lcap_; ++l0) {
                            const auto& v = prev[static_cast<std::size_t>(k0)][static_cast<std::size_t>(l0)];
                            if (v != 0)
                                row[static_cast<std::size_t>(k0 + i)][static_cast<std::size_t>(l0 + j)] += coeff * v;
                        }
                }
            }
        }
        for (auto& r : row)
            for (auto& v : r)
                v = divide_exact(v, m, "p_kl recursion");
        p_rows_.push_back(std::move(row));
    }

    void append_r_row()
    {
        const int m = static_cast<int>(r_rows_.size());
        const auto lw = static_cast<std::size_t>(r_lcap_) + 1;
        std::vector<BigInt> row(lw, 0);
        if (m == 0) {
            row[0] = 1;
            r_rows_.push_back(std::move(row));
            return;
        }
        for (int d = 1; d <= m; ++d) {
            for (int i = 1; i <= m / d; ++i) {
                const auto& prev = r_rows_[static_cast<std::size_t>(m - i * d)];
                const int j_max = std::min(i, r_lcap_);
                for (int j = 1; j <= j_max; ++j) {
                    BigInt coeff = choose(i, j) * d;
                    if (j % 2 == 0)
                        coeff = -coeff;
                    for (int l0 = 0; l0 + j <= r_lcap_; ++l0) {
                        const auto& v = prev[static_cast<std::size_t>(l0)];
                        if (v != 0)
                            row[static_cast<std::size_t>(l0 + j)] += coeff * v;
                    }
                }
            }
        }
        for (auto& v : row)
            v = divide_exact(v, m, "r_l recursion");
        r_rows_.push_back(std::move(row));
    }

    BigInt rlj(int n, int l, int j)
    {
        if (n < 0 || l < 0)
            return 0;
        if (l == 0)
            return n == 0 ? 1 : 0;
        if (n == 0 || static_cast<long long>(j) * l > n)
            return 0;
        if (auto it = rlj_memo_.find({n, l, j}); it != rlj_memo_.end())
            return it->second;
        BigInt value = rlj(n, l, j + 1);
        for (int i = 1; i <= n / j; ++i)
            value += rlj(n - i * j, l - 1, j + 1);
        rlj_memo_.emplace(std::tuple{n, l, j}, value);
        return value;
    }

    int p_kcap_ = -1;
    int p_lcap_ = -1;
    std::vector<std::vector<std::vector<BigInt>>> p_rows_;
    int r_lcap_ = -1;
    std::vector<std::vector<BigInt>> r_rows_;
    std::map<std::tuple<int, int, int>, BigInt> rlj_memo_;
    std::vector<std::vector<BigInt>> pascal_;
};

inline PartitionCounter& default_partition_counter()
{
    thread_local PartitionCounter counter;
    return counter;
}

inline BigCount p_kl(int n, int k, int l) { return default_partition_counter().p_kl(n, k, l); }
inline BigCount r_l(int n, int l) { return default_partition_counter().r_l(n, l); }
inline BigCount r_lj(int n, int l, int j) { return default_partition_counter().r_lj(n, l, j); }

// Stirling numbers of the second kind from the triangle
// S(n,k) = k S(n-1,k) + S(n-1,k-1).
inline BigCount stirling2(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        return (n == 0 && k == 0) ? 1 : 0;
    thread_local std::vector<std::vector<BigInt>> rows{{1}};
    while (static_cast<int>(rows.size()) <= n) {
        const auto m = rows.size();
        std::vector<BigInt> row(m + 1, 0);
        for (std::size_t j = 1; j <= m; ++j)
            row[j] = BigInt(j) * (j < m ? rows[m - 1][j] : BigInt(0)) + rows[m - 1][j - 1];
        rows.push_back(std::move(row));
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

inline BigCount bell(int n)
{
    if (n < 0)
        throw std::invalid_argument("bell: n must be non-negative");
    BigCount sum = 0;
    for (int i = 0; i <= n; ++i)
        sum += stirling2(n, i);
    return sum;
}

enum class IdentityId { Eq18, Eq19, Eq20, Eq21, HmcLemma, PrimorialStirling, PrimorialBell };

inline constexpr IdentityId all_identities[] = {IdentityId::Eq18,     IdentityId::Eq19,
                                                IdentityId::Eq20,     IdentityId::Eq21,
                                                IdentityId::HmcLemma, IdentityId::PrimorialStirling,
                                                IdentityId::PrimorialBell};

inline std::string_view identity_name(IdentityId id)
{
    switch (id) {
    case IdentityId::Eq18: return "Eq18";
    case IdentityId::Eq19: return "Eq19";
    case IdentityId::Eq20: return "Eq20";
    case IdentityId::Eq21: return "Eq21";
    case IdentityId::HmcLemma: return "HmcLemma";
    case IdentityId::PrimorialStirling: return "PrimorialStirling";
    case IdentityId::PrimorialBell: return "PrimorialBell";
    }
    return "?";
}

inline bool identity_takes_k(IdentityId id)
{
    return id == IdentityId::Eq18 || id == IdentityId::Eq20 || id == IdentityId::PrimorialStirling;
}

struct IdentityReport {
    IdentityId id = IdentityId::Eq18;
    int n = 0;
    int k = 0;
    BigCount lhs;
    BigCount rhs;
    bool pass = false;
};

namespace detail {

// sum over partitions alpha of k of [sign] h(beta) beta_1^n; must be integral.
inline BigInt primorial_partition_sum(int k, int n, bool with_sign)
{
    ExactRational acc = 0;
    for (const auto& alpha : partitions_of(k)) {
        const auto beta = multiplicity_vector(alpha);
        const BigInt ones_power = boost::multiprecision::pow(BigInt(beta.at(1)), static_cast<unsigned>(n));
        if (ones_power == 0)
            continue;
        ExactRational term = h_weight(beta) * ones_power;
        if (with_sign && theta_sign(beta) < 0)
            acc -= term;
        else
            acc += term;
    }
    return require_integral(acc, "primorial partition sum");
}

} // namespace detail

// Evaluates both sides of one identity. k is ignored for identities that
// take only n.
//   Eq18  sum_{i=1}^{k} S(n,i)     = sum_{P_k} h(beta) beta_1^n
//   Eq19  B_n                      = sum_{P_n} h(beta) beta_1^n
//   Eq20  S(n,k) + S(n,k-1)        = sum_{P_k} (-1)^theta h(beta) beta_1^n
//   Eq21  C(n,2) + 1               = sum_{P_n} (-1)^theta h(beta) beta_1^n
//   HmcLemma           #{beta in P_n : aggregate_fedorov = h(beta)} = p(n)
//   PrimorialStirling  f_k(P_n)    = S(n,k)
//   PrimorialBell      f(P_n)      = B_n
inline IdentityReport check_identity(IdentityId id, int n, int k = 0, Counter& counter = default_counter())
{
    if (n < 1)
        throw std::invalid_argument("check_identity: n must be >= 1");
    if (identity_takes_k(id) && (k < 1 || k > n))
        throw std::invalid_argument("check_identity: need 1 <= k <= n");
    IdentityReport report{id, n, identity_takes_k(id) ? k : 0, 0, 0, false};
    switch (id) {
    case IdentityId::Eq18:
        for (int i = 1; i <= k; ++i)
            report.lhs += stirling2(n, i);
        report.rhs = detail::primorial_partition_sum(k, n, false);
        break;
    case IdentityId::Eq19:
        report.lhs = bell(n);
        report.rhs = detail::primorial_partition_sum(n, n, false);
        break;
    case IdentityId::Eq20:
        report.lhs = stirling2(n, k) + stirling2(n, k - 1);
        report.rhs = detail::primorial_partition_sum(k, n, true);
        break;
    case IdentityId::Eq21:
        report.lhs = binomial(n, 2) + 1;
        report.rhs = detail::primorial_partition_sum(n, n, true);
        break;
    case IdentityId::HmcLemma:
        for (const auto& alpha : partitions_of(n)) {
            const auto beta = multiplicity_vector(alpha);
            if (aggregate_fedorov(n, beta) == h_weight(beta))
                report.lhs += 1;
            report.rhs += 1;
        }
        break;
    case IdentityId::PrimorialStirling:
        report.lhs = counter.f_k_rec(primorial(n), k);
        report.rhs = stirling2(n, k);
        break;
    case IdentityId::PrimorialBell:
        report.lhs = counter.f_total(primorial(n));
        report.rhs = bell(n);
        break;
    }
    report.pass = report.lhs == report.rhs;
    return report;
}

} // namespace multifact

#endif // MULTIFACT_PARTITION_COUNTS_HPP
