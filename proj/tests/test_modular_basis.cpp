#include "oracle.hpp"
#include "thinbasis/errors.hpp"
#include "thinbasis/modular_basis.hpp"

#include <gtest/gtest.h>

#include <thread>

using namespace thinbasis;

namespace {

std::vector<std::uint64_t> valid_primes_upto(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= limit; ++p)
        if (oracle::trial_division_prime(p) && (p % 8 == 3 || p % 8 == 5)) out.push_back(p);
    return out;
}

}  // namespace

TEST(ModularPrime, Validation) {
    EXPECT_TRUE(is_valid_modular_prime(3));
    EXPECT_TRUE(is_valid_modular_prime(5));
    EXPECT_TRUE(is_valid_modular_prime(11));
    EXPECT_FALSE(is_valid_modular_prime(7));    // 7 mod 8
    EXPECT_FALSE(is_valid_modular_prime(17));   // 1 mod 8
    EXPECT_FALSE(is_valid_modular_prime(27));   // 3 mod 8, composite
    EXPECT_FALSE(is_valid_modular_prime(2));
    EXPECT_THROW(ModularBasisSet(7), ParameterError);
    EXPECT_THROW(b_membership(9, 0), ParameterError);
    EXPECT_THROW(ap_membership(15, 0), ParameterError);
    EXPECT_NO_THROW(ModularBasisSet(2147483629));  // largest valid prime below 2^31
    EXPECT_THROW(ModularBasisSet(2147483659), ParameterError);
}

TEST(BMembership, Examples) {
    EXPECT_TRUE(b_membership(3, 0));
    EXPECT_TRUE(b_membership(3, 7));   // x = 1, c = 4
    EXPECT_FALSE(b_membership(3, 3));
    EXPECT_FALSE(b_membership(3, -1));
    EXPECT_FALSE(b_membership(3, 100));
}

TEST(BEnumerate, Examples) {
    EXPECT_EQ(b_enumerate(3), (std::vector<std::int64_t>{0, 1, 2, 7, 8}));
    for (std::uint64_t p : valid_primes_upto(100)) {
        const auto b = b_enumerate(p);
        EXPECT_LE(b.size(), 3 * p);
        EXPECT_EQ(b.front(), 0);
    }
}

TEST(BMembership, AgreesWithEnumerationAndOracle) {
    for (std::uint64_t p : valid_primes_upto(60)) {
        const ModularBasisSet set(p);
        const auto expected = oracle::b_set(static_cast<std::int64_t>(p));
        const auto listed = set.b_elements();
        EXPECT_EQ(std::set<std::int64_t>(listed.begin(), listed.end()), expected);
        for (std::int64_t y = -5; y <= static_cast<std::int64_t>(2 * p * p + p); ++y)
            ASSERT_EQ(set.b_contains(y), expected.count(y) == 1) << "p=" << p << " y=" << y;
    }
}

TEST(ApMembership, Examples) {
    for (std::uint64_t r = 0; r < 9; ++r) EXPECT_TRUE(ap_membership(3, r));
    bool some_missing = false;
    for (std::uint64_t r = 0; r < 121; ++r) some_missing = some_missing || !ap_membership(11, r);
    EXPECT_TRUE(some_missing);
    EXPECT_THROW(ap_membership(3, 9), ParameterError);
}

TEST(ApEnumerate, Examples) {
    EXPECT_EQ(ap_enumerate(3), (std::vector<std::uint64_t>{0, 1, 2, 3, 4, 5, 6, 7, 8}));
    EXPECT_EQ(ap_enumerate(11).size(), 75u);  // brute-force count, <= 99
    EXPECT_EQ(ap_enumerate(19).size(), 147u);
}

TEST(ApMembership, PointwiseAgreementWithEnumeration) {
    for (std::uint64_t p : valid_primes_upto(200)) {
        const ModularBasisSet set(p);
        const auto& res = set.residues();
        EXPECT_LE(res.size(), 9 * p);
        EXPECT_TRUE(std::is_sorted(res.begin(), res.end()));
        EXPECT_EQ(res.front(), 0u);
        const std::set<std::uint64_t> listed(res.begin(), res.end());
        if (p < 60) EXPECT_EQ(listed, oracle::a_set(static_cast<std::int64_t>(p)));
        for (std::uint64_t r = 0; r < p * p; ++r) ASSERT_EQ(set.contains(r), listed.count(r) == 1) << p << ' ' << r;
    }
}

TEST(ApSigma, Examples) {
    EXPECT_EQ(ap_sigma(3, 0), 9u);
    for (std::uint64_t p : {5u, 11u, 13u}) {
        for (std::uint64_t r = 0; r < p * p; ++r) {
            const auto s = ap_sigma(p, r);
            EXPECT_GE(s, 1u);
            EXPECT_LE(s, kModularSigmaBound);
        }
    }
}

TEST(ApSigma, MatchesPairCountOracle) {
    const std::int64_t p = 19;
    const auto a = oracle::a_set(p);
    for (std::uint64_t r = 0; r < 361; r += 7) {
        std::uint64_t count = 0;
        for (std::uint64_t x : a)
            for (std::uint64_t y : a) count += (x + y) % 361 == r;
        EXPECT_EQ(ap_sigma(19, r), count) << r;
    }
}

TEST(BVerify, Examples) {
    EXPECT_TRUE(b_verify(3).six_cover_ok);
    EXPECT_LE(b_verify(11).sup_sigma, kBSigmaBound);
    EXPECT_TRUE(b_verify(19).six_cover_ok);
    EXPECT_THROW(b_verify(211), CapacityError);
    EXPECT_NO_THROW(b_verify(211, 300));
}

TEST(ApVerify, Examples) {
    const auto r3 = ap_verify(3);
    EXPECT_EQ(r3.min_sigma, 9u);
    EXPECT_EQ(r3.max_sigma, 9u);
    EXPECT_EQ(r3.size, 9u);
    EXPECT_TRUE(r3.covers_all);
    EXPECT_TRUE(ap_verify(11).covers_all);
    EXPECT_LE(ap_verify(19).max_sigma, kModularSigmaBound);
    EXPECT_THROW(ap_verify(211), CapacityError);
}

TEST(ApVerify, FrozenValuesFromBruteForce) {
    // (min, max) from an independent enumeration of all ordered pairs
    const std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> expected = {
        {5, 21, 23}, {11, 37, 60}, {13, 41, 64}, {19, 39, 79}};
    for (auto [p, lo, hi] : expected) {
        const auto r = ap_verify(p);
        EXPECT_EQ(r.min_sigma, lo) << p;
        EXPECT_EQ(r.max_sigma, hi) << p;
    }
}

TEST(ApVerify, DeterministicAndConsistentWithApSigma) {
    const auto a = ap_verify(43);
    const auto b = ap_verify(43);
    EXPECT_EQ(a.min_sigma, b.min_sigma);
    EXPECT_EQ(a.max_sigma, b.max_sigma);
    std::uint64_t lo = ~0ULL, hi = 0;
    for (std::uint64_t r = 0; r < 43 * 43; ++r) {
        const auto s = ap_sigma(43, r);
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    EXPECT_EQ(a.min_sigma, lo);
    EXPECT_EQ(a.max_sigma, hi);
}

TEST(ModularBasisSet, ConcurrentResidueAccess) {
    const ModularBasisSet set(131);
    std::vector<const std::vector<std::uint64_t>*> seen(8, nullptr);
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < seen.size(); ++i)
        threads.emplace_back([&, i] { seen[i] = &set.residues(); });
    for (auto& t : threads) t.join();
    for (auto* ptr : seen) EXPECT_EQ(ptr, seen.front());
    const ModularBasisSet copy = set;
    EXPECT_EQ(&copy.residues(), seen.front());
}

TEST(ModularBasisSet, LargePrimeMembershipIsDirect) {
    const ModularBasisSet set(2147483629);
    EXPECT_TRUE(set.contains(0));
    EXPECT_TRUE(set.b_contains(1 + 2 * 2147483629LL * 4));  // x = 1, c = 4
    EXPECT_THROW(set.contains(set.modulus()), ParameterError);
    EXPECT_THROW(set.residues(), CapacityError);
}

TEST(BVerify, SixCoverCounterexampleAtP29) {
    // For p = 29 and n = 2 none of n-p, n, n+p, n+p^2-p, n+p^2, n+p^2+p is a
    // sum of two elements of B_29 (checked against the oracle set).
    const std::int64_t p = 29, q = p * p, n = 2;
    const auto b = oracle::b_set(p);
    std::set<std::int64_t> sums;
    for (auto x : b)
        for (auto y : b) sums.insert(x + y);
    for (std::int64_t m : {n - p, n, n + p, n + q - p, n + q, n + q + p}) EXPECT_EQ(sums.count(m), 0u) << m;
    EXPECT_FALSE(b_verify(29).six_cover_ok);
    EXPECT_LE(b_verify(29).sup_sigma, kBSigmaBound);
    EXPECT_TRUE(ap_verify(29).covers_all);
}

TEST(BVerify, SupSigmaBoundHoldsUpTo200) {
    for (std::uint64_t p : valid_primes_upto(200)) EXPECT_LE(b_verify(p).sup_sigma, kBSigmaBound) << p;
}
