#include <gtest/gtest.h>

#include "multifact/oracle.hpp"
#include "multifact/partition_counts.hpp"

using namespace multifact;

TEST(PartitionCounts, Examples)
{
    EXPECT_EQ(p_kl(7, 3, 2), 3);
    EXPECT_EQ(p_kl(0, 0, 0), 1);
    EXPECT_EQ(p_kl(5, 5, 1), 1);
    EXPECT_EQ(r_l(5, 2), 5);
    EXPECT_EQ(r_l(5, 1), 2);
    EXPECT_EQ(r_l(0, 0), 1);
    EXPECT_EQ(r_lj(7, 2, 2), 3);
    EXPECT_EQ(r_lj(5, 3, 2), 0);
    EXPECT_EQ(r_lj(5, 2, 1), 5);
}

TEST(PartitionCounts, NegativeIndicesAreZero)
{
    EXPECT_EQ(p_kl(-1, 0, 0), 0);
    EXPECT_EQ(p_kl(3, -1, 0), 0);
    EXPECT_EQ(p_kl(3, 2, -2), 0);
    EXPECT_EQ(r_l(-3, 1), 0);
    EXPECT_EQ(r_l(3, -1), 0);
    EXPECT_EQ(r_lj(-1, 1, 1), 0);
    EXPECT_THROW(r_lj(5, 1, 0), std::invalid_argument);
}

TEST(PartitionCounts, MatchOracle)
{
    PartitionCounter pc;
    for (int n = 0; n <= 40; ++n) {
        const auto prof = oracle::partition_profile(n);
        BigCount total = 0;
        for (int k = 0; k <= n; ++k) {
            BigCount with_k = 0;
            for (int l = 0; l <= k; ++l) {
                ASSERT_EQ(pc.p_kl(n, k, l), prof.p_kl(k, l)) << n << ' ' << k << ' ' << l;
                with_k += pc.p_kl(n, k, l);
            }
            ASSERT_EQ(with_k, prof.with_k_parts(k));
        }
        for (int l = 0; l <= n; ++l) {
            ASSERT_EQ(pc.r_l(n, l), prof.r_l(l));
            for (int j = 1; j <= n + 1; ++j)
                ASSERT_EQ(pc.r_lj(n, l, j), prof.r_lj(l, j)) << n << ' ' << l << ' ' << j;
            total += pc.r_l(n, l);
        }
        ASSERT_EQ(total, prof.total);
    }
}

TEST(PartitionCounts, DistinctValueSumIsPartitionCount)
{
    PartitionCounter pc;
    for (int n = 41; n <= 60; ++n) {
        BigCount total = 0;
        for (int l = 0; l <= n; ++l) {
            ASSERT_EQ(pc.r_lj(n, l, 1), pc.r_l(n, l));
            total += pc.r_l(n, l);
        }
        ASSERT_EQ(total, oracle::partition_profile(n).total) << n;
    }
}

TEST(PartitionCounts, PowersOfPrimes)
{
    Counter c;
    PartitionCounter pc;
    for (std::uint64_t prime : {2u, 3u})
        for (int n = 1; n <= 25; ++n) {
            auto fn = FactoredInt::from_factors({{prime, n}});
            for (int l = 0; l <= n; ++l) {
                ASSERT_EQ(pc.r_l(n, l), c.h_l(fn, l));
                for (int k = 0; k <= n; ++k)
                    ASSERT_EQ(pc.p_kl(n, k, l), c.f_kl(fn, k, l));
            }
        }
}

TEST(Stirling, Examples)
{
    EXPECT_EQ(stirling2(3, 2), 3);
    EXPECT_EQ(stirling2(4, 2), 7);
    EXPECT_EQ(stirling2(0, 0), 1);
    EXPECT_EQ(stirling2(5, 0), 0);
    EXPECT_EQ(stirling2(3, 4), 0);
    EXPECT_EQ(bell(3), 5);
    EXPECT_EQ(bell(0), 1);
    EXPECT_EQ(bell(4), 15);
    EXPECT_EQ(bell(25), BigCount("4638590332229999353"));
    EXPECT_THROW(bell(-1), std::invalid_argument);
}

TEST(Stirling, SurjectionCount)
{
    // k! S(n,k) = sum_i (-1)^i C(k,i) (k-i)^n
    for (int n = 0; n <= 20; ++n)
        for (int k = 0; k <= n; ++k) {
            BigInt sum = 0;
            for (int i = 0; i <= k; ++i) {
                BigInt term = binomial(k, i) * boost::multiprecision::pow(BigInt(k - i), static_cast<unsigned>(n));
                sum += (i % 2 == 0) ? term : BigInt(-term);
            }
            ASSERT_EQ(factorial(k) * stirling2(n, k), sum);
        }
}

TEST(Identities, AllHold)
{
    for (int n = 1; n <= 12; ++n)
        for (IdentityId id : all_identities) {
            if (identity_takes_k(id)) {
                for (int k = 1; k <= n; ++k) {
                    const auto r = check_identity(id, n, k);
                    EXPECT_TRUE(r.pass) << identity_name(id) << " n=" << n << " k=" << k << ' ' << r.lhs << " vs "
                                        << r.rhs;
                }
            } else {
                const auto r = check_identity(id, n);
                EXPECT_TRUE(r.pass) << identity_name(id) << " n=" << n << ' ' << r.lhs << " vs " << r.rhs;
            }
        }
    EXPECT_THROW(check_identity(IdentityId::Eq18, 3, 4), std::invalid_argument);
    EXPECT_THROW(check_identity(IdentityId::Eq19, 0), std::invalid_argument);
}

TEST(Identities, ClosedForms)
{
    EXPECT_EQ(check_identity(IdentityId::Eq21, 6).lhs, 16);
    EXPECT_EQ(check_identity(IdentityId::Eq19, 5).lhs, 52);
    EXPECT_EQ(check_identity(IdentityId::Eq20, 4, 2).rhs, 8);
}
