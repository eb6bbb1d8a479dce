#include "oracle.hpp"
#include "thinbasis/errors.hpp"
#include "thinbasis/primes.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace thinbasis;

TEST(IsPrime, SmallValues) {
    EXPECT_FALSE(is_prime(std::uint64_t{0}));
    EXPECT_FALSE(is_prime(std::uint64_t{1}));
    EXPECT_TRUE(is_prime(std::uint64_t{19}));
    EXPECT_FALSE(is_prime(std::uint64_t{1089}));  // 33^2
}

TEST(IsPrime, AgreesWithTrialDivisionBelow100k) {
    for (std::uint64_t n = 0; n < 100'000; ++n) ASSERT_EQ(is_prime(n), oracle::trial_division_prime(n)) << n;
}

TEST(IsPrime, StrongPseudoprimesAndLargeValues) {
    // strong pseudoprimes to several small bases
    EXPECT_FALSE(is_prime(std::uint64_t{3215031751}));
    EXPECT_FALSE(is_prime(std::uint64_t{3825123056546413051ULL}));
    EXPECT_FALSE(is_prime(std::uint64_t{341550071728321ULL}));
    EXPECT_TRUE(is_prime(std::uint64_t{18446744073709551557ULL}));  // largest 64-bit prime
    EXPECT_FALSE(is_prime(std::uint64_t{18446744073709551615ULL}));
    EXPECT_TRUE(is_prime(std::uint64_t{1000000007}));
}

TEST(IsPrime, BigIntBeyondRangeIsCapacityError) {
    BigInt big = BigInt(1) << 64;
    EXPECT_THROW(is_prime(big), CapacityError);
    EXPECT_TRUE(is_prime(BigInt(19)));
}

TEST(LeastInDoubling, Examples) {
    EXPECT_EQ(least_p3mod8_in_doubling(2), std::optional<std::uint64_t>(3));
    EXPECT_EQ(least_p3mod8_in_doubling(9), std::optional<std::uint64_t>(11));
    EXPECT_EQ(least_p3mod8_in_doubling(20), std::nullopt);  // 23, 29, 31, 37 all miss the class
    EXPECT_THROW(least_p3mod8_in_doubling(1), ParameterError);
}

TEST(LeastInDoubling, MatchesScanWheneverScanStaysInInterval) {
    for (std::uint64_t n = 2; n < 3000; ++n) {
        const auto sieve = least_p3mod8_in_doubling(n);
        const std::uint64_t scan = oracle::next_3mod8_prime_above(n - 1);
        if (scan <= 2 * n)
            ASSERT_EQ(sieve, std::optional<std::uint64_t>(scan)) << n;
        else
            ASSERT_EQ(sieve, std::nullopt) << n;
    }
}

TEST(LeastInDoubling, CrossesSegmentBoundaries) {
    const std::uint64_t n = 1'000'000'000;
    const auto hit = least_p3mod8_in_doubling(n);
    ASSERT_TRUE(hit.has_value());
    EXPECT_EQ(*hit, next_p3mod8_above(n - 1));
}

TEST(NextAbove, Examples) {
    EXPECT_EQ(next_p3mod8_above(0), 3u);
    EXPECT_EQ(next_p3mod8_above(2), 3u);
    EXPECT_EQ(next_p3mod8_above(3), 11u);
    EXPECT_EQ(next_p3mod8_above(19), 43u);
}

TEST(Rational, Parsing) {
    EXPECT_EQ(Rational::parse("1/2"), (Rational{1, 2}));
    EXPECT_EQ(Rational::parse("0.5"), (Rational{1, 2}));
    EXPECT_EQ(Rational::parse("3"), (Rational{3, 1}));
    EXPECT_EQ(Rational::parse("4/6"), (Rational{2, 3}));
    EXPECT_THROW(Rational::parse("0"), ParameterError);
    EXPECT_THROW(Rational::parse("1/0"), ParameterError);
    EXPECT_THROW(Rational::parse("x"), ParameterError);
    EXPECT_THROW(Rational::parse("-1"), ParameterError);
}

TEST(Growth, LinearAndExponential) {
    const auto lin = GrowthSpec::linear();
    EXPECT_EQ(lin.at(1), 1u);
    EXPECT_EQ(lin.at(17), 17u);
    const auto ex = GrowthSpec::exponential({1, 2});
    for (std::uint64_t k = 1; k <= 40; ++k) {
        const double approx = std::exp(0.5 * static_cast<double>(k));
        EXPECT_NEAR(static_cast<double>(ex.at(k)), std::ceil(approx), 1.0) << k;
        if (k > 1) EXPECT_GE(ex.at(k), ex.at(k - 1));
    }
    EXPECT_EQ(ex.at(1), 2u);  // e^0.5 = 1.648...
    EXPECT_EQ(ex.at(2), 3u);  // e = 2.718...
    EXPECT_THROW(GrowthSpec::exponential({1, 1}).at(50), CapacityError);
}

TEST(Sequence, LinearExamples) {
    EXPECT_EQ(sequence_extend(PrimeSequence{}, 4).primes(), (std::vector<std::uint64_t>{3, 11, 19, 43}));
    EXPECT_EQ(sequence_extend(PrimeSequence{}, 7).primes(), (std::vector<std::uint64_t>{3, 11, 19, 43, 59, 67, 83}));
}

TEST(Sequence, MatchesOracleAndInvariants) {
    const auto seq = sequence_extend(PrimeSequence{}, 60);
    EXPECT_EQ(seq.primes(), oracle::linear_sequence(60));
    for (std::size_t i = 0; i < seq.size(); ++i) {
        EXPECT_TRUE(oracle::trial_division_prime(seq.at(i)));
        EXPECT_EQ(seq.at(i) % 8, 3u);
        EXPECT_GE(seq.at(i), i + 1);
        if (i > 0) EXPECT_LT(seq.at(i - 1), seq.at(i));
    }
}

TEST(Sequence, PrefixStableAndDeterministic) {
    PrimeSequence a(GrowthSpec::exponential({1, 2}));
    a.extend_to(5);
    const auto prefix = a.primes();
    a.extend_to(20);
    a.extend_to(10);  // no-op
    EXPECT_EQ(a.size(), 20u);
    EXPECT_TRUE(std::equal(prefix.begin(), prefix.end(), a.primes().begin()));
    const auto b = sequence_extend(PrimeSequence(GrowthSpec::exponential({1, 2})), 20);
    EXPECT_EQ(a.primes(), b.primes());
    for (std::size_t i = 0; i < b.size(); ++i) EXPECT_GE(b.at(i), b.growth().at(i + 1));
}
