// primes.hpp
// Deterministic prime utilities and the canonical prime sequence
// p_1 < p_2 < ... with every p_k = 3 (mod 8), driven by a growth function f.
//
// Sequence rule: p_k is the least prime q = 3 (mod 8) with q >= f(k) and
// q > p_{k-1}, where p_0 = 2. With f(k) = k this gives 3, 11, 19, 43, 59, ...

#pragma once
#include "thinbasis/bigint.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace thinbasis {

// Exact for every 64-bit input (Miller-Rabin with the first twelve prime bases).
bool is_prime(std::uint64_t n);

// Throws CapacityError for n >= 2^64.
bool is_prime(const BigInt& n);

// Least prime p in [n, 2n] with p = 3 (mod 8), found with a segmented sieve.
// Requires n >= 2; n must stay below 2^62.
std::optional<std::uint64_t> least_p3mod8_in_doubling(std::uint64_t n);

// Least prime q > x with q = 3 (mod 8).
std::uint64_t next_p3mod8_above(std::uint64_t x);

// Positive rational number num/den, used for the exponential growth constant.
struct Rational {
    std::uint64_t num = 1;
    std::uint64_t den = 2;

    // Accepts "p/q", "d" or "d.ddd". Throws ParameterError on malformed or
    // non-positive input.
    static Rational parse(std::string_view text);
    std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;
};

enum class GrowthRegime { Linear, Exponential };

struct GrowthSpec {
    GrowthRegime regime = GrowthRegime::Linear;
    Rational c{};  // only read in the exponential regime

    static GrowthSpec linear() { return {}; }
    static GrowthSpec exponential(Rational c = {1, 2}) { return {GrowthRegime::Exponential, c}; }

    // f(k) for k >= 1: k, or ceil(exp(c*k)) evaluated with correctly rounded
    // MPFR arithmetic so the value is identical on every platform.
    std::uint64_t at(std::uint64_t k) const;

    std::string describe() const;

    friend bool operator==(const GrowthSpec&, const GrowthSpec&) = default;
};

class PrimeSequence {
public:
    explicit PrimeSequence(GrowthSpec growth = {}) : growth_(growth) {}

    // Appends primes until size() >= count. Never changes existing entries.
    void extend_to(std::size_t count);

    const GrowthSpec& growth() const { return growth_; }
    const std::vector<std::uint64_t>& primes() const { return primes_; }
    std::size_t size() const { return primes_.size(); }

    // 0-based: at(0) is p_1.
    std::uint64_t at(std::size_t index) const { return primes_.at(index); }

private:
    GrowthSpec growth_;
    std::vector<std::uint64_t> primes_;
};

// Value-returning form of PrimeSequence::extend_to.
PrimeSequence sequence_extend(PrimeSequence seq, std::size_t count);

}  // namespace thinbasis
