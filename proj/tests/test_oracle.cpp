#include <gtest/gtest.h>

#include <algorithm>

#include "multifact/oracle.hpp"

using namespace multifact;

namespace {

std::vector<std::vector<std::uint64_t>> sorted_lists(std::uint64_t n)
{
    std::vector<std::vector<std::uint64_t>> v;
    for (const auto& f : oracle::enumerate_factorizations(n))
        v.push_back(f.parts);
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST(Oracle, ThirtySix)
{
    using L = std::vector<std::vector<std::uint64_t>>;
    L expected{{36}, {2, 18}, {3, 12}, {4, 9}, {6, 6}, {2, 2, 9}, {2, 3, 6}, {3, 3, 4}, {2, 2, 3, 3}};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(sorted_lists(36), expected);

    const auto p = oracle::profile(36);
    EXPECT_EQ(p.f, 9u);
    EXPECT_EQ(p.g, 5u);
    EXPECT_EQ(p.fk(2), 4u);
    EXPECT_EQ(p.gk(2), 3u);
    EXPECT_EQ(p.hl(1), 2u);
    EXPECT_EQ(p.hl(2), 6u);
    EXPECT_EQ(p.hl(3), 1u);
    EXPECT_EQ(p.fkl(3, 2), 2u);
    EXPECT_EQ(p.F(2), 5u);
    EXPECT_EQ(p.G(2), 4u);
    EXPECT_EQ(p.check_identities(), "");
}

TEST(Oracle, SmallCases)
{
    using L = std::vector<std::vector<std::uint64_t>>;
    EXPECT_EQ(sorted_lists(13), (L{{13}}));
    EXPECT_EQ(sorted_lists(25), (L{{5, 5}, {25}}));
    EXPECT_EQ(sorted_lists(12).size(), 4u);
    const auto sq = oracle::profile(49);
    EXPECT_EQ(sq.f, 2u);
    EXPECT_EQ(sq.g, 1u);
    EXPECT_EQ(sq.gk(2), 0u);
    const auto one = oracle::profile(1);
    EXPECT_EQ(one.f, 1u);
    EXPECT_EQ(one.F(5), 1u);
    EXPECT_THROW(oracle::enumerate_factorizations(1), std::invalid_argument);
}

TEST(Oracle, MinPart)
{
    const auto v = oracle::enumerate_factorizations(36, 3);
    for (const auto& f : v)
        for (auto part : f.parts)
            EXPECT_GE(part, 3u);
    EXPECT_EQ(v.size(), 5u);  // 36, 3*12, 4*9, 6*6, 3*3*4
}

TEST(Oracle, Limit)
{
    EXPECT_THROW(oracle::enumerate_factorizations(720720, 2, 10), oracle::limit_error);
}

TEST(Oracle, ProfilesConsistent)
{
    for (std::uint64_t n = 2; n <= 5000; ++n) {
        const auto p = oracle::profile(n);
        ASSERT_EQ(p.check_identities(), "") << n;
        std::uint64_t count = 0;
        oracle::for_each_factorization(n, 2, [&](const oracle::FactorizationMultiset& f) {
            ASSERT_TRUE(std::is_sorted(f.parts.begin(), f.parts.end()));
            ++count;
        });
        ASSERT_EQ(count, p.f);
    }
}

TEST(Oracle, Partitions)
{
    EXPECT_EQ(oracle::enumerate_partitions(5).size(), 7u);
    EXPECT_EQ(oracle::enumerate_partitions(0).size(), 1u);
    const auto p7 = oracle::partition_profile(7);
    EXPECT_EQ(p7.total, 15u);
    EXPECT_EQ(p7.p_kl(3, 2), 3u);
    EXPECT_EQ(p7.r_lj(2, 2), 3u);
}

TEST(Oracle, ColoredPartitions)
{
    EXPECT_EQ(oracle::colored_partition_count(MultiplicityVector{{0, 2, 1}}, 7), 3);
    EXPECT_EQ(oracle::colored_partition_count(MultiplicityVector{{1}}, 9), 1);
    EXPECT_EQ(oracle::colored_partition_count(MultiplicityVector{{2}}, 2), 3);
    EXPECT_EQ(oracle::colored_partition_count(MultiplicityVector{{0, 2, 1}}, 0), 1);
}

TEST(Oracle, SignatureInvariance)
{
    const auto a = oracle::profile(12), b = oracle::profile(75);
    EXPECT_EQ(a.f_k, b.f_k);
    EXPECT_EQ(a.g_k, b.g_k);
    EXPECT_EQ(a.h_l, b.h_l);
    EXPECT_EQ(a.f_kl, b.f_kl);
}
