// basis.hpp
// The explicit additive basis A of order 2.
//
// With primes p_1 < p_2 < ... from PrimeSequence and bases b_k = p_k^2, a
// natural number n with canonical digits (a_1, ..., a_k) belongs to A iff
// a_j lies in A_{p_j} for every j < k; the top digit a_k is unconstrained and
// 0 is a member. Every n is a sum a + a' of two members, and the number of
// ordered representations sigma_A(n) is bounded by
//
//   2 * sum_{l=1..k} b_l * M_1 * ... * M_{l-1},
//
// where M_j is the largest representation count inside A_{p_j}.
//
// A BasisContext fixes the number of digit positions it can handle. Queries
// on larger inputs throw CapacityError; callers grow the context explicitly
// with with_capacity / with_capacity_for, which return a new context.

#pragma once
#include "thinbasis/bigint.hpp"
#include "thinbasis/mixed_radix.hpp"
#include "thinbasis/modular_basis.hpp"
#include "thinbasis/primes.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace thinbasis {

inline constexpr std::uint64_t kDefaultBruteCap = 1'000'000;
inline constexpr std::uint64_t kDefaultEnumerateCap = 10'000'000;

// Levels whose b_j exceeds this cannot be used by sigma_exact (its per-level
// tables are O(b_j) in size).
inline constexpr std::uint64_t kMaxTableBase = std::uint64_t{1} << 24;

struct BasisOptions {
    // Levels with p_j at or below this get M_j from exhaustive verification;
    // above it M_j = 594.
    std::uint64_t exhaustive_prime_cap = kDefaultVerifyPrimeCap;
};

class BasisContext {
public:
    // Throws ParameterError for capacity_digits == 0 and propagates
    // CapacityError from prime generation.
    static BasisContext create(GrowthSpec growth, std::size_t capacity_digits, BasisOptions options = {});

    // Smallest context (same growth) whose radix represents n.
    static BasisContext for_value(GrowthSpec growth, const BigInt& n, BasisOptions options = {});

    // Extended copies; the existing levels are shared, never rebuilt.
    BasisContext with_capacity(std::size_t capacity_digits) const;
    BasisContext with_capacity_for(const BigInt& n) const;

    std::size_t capacity() const { return levels_.size(); }
    const GrowthSpec& growth() const { return seq_.growth(); }
    const PrimeSequence& sequence() const { return seq_; }
    const RadixSystem& radix() const { return radix_; }
    const std::vector<ModularBasisSet>& levels() const { return levels_; }
    const std::vector<std::uint64_t>& level_max() const { return level_max_; }
    const BasisOptions& options() const { return options_; }

    // Per-level lookup tables used by sigma_exact, built on first use.
    struct LevelTables {
        std::vector<std::uint32_t> member_prefix;  // #{d < i : d in A_j}, size b + 1
        std::vector<std::uint32_t> pair_sums;      // #{(d, d') in A_j^2 : d + d' = s}, size 2b - 1
    };
    const LevelTables& tables(std::size_t level) const;

private:
    struct TableSlot;

    BasisContext(PrimeSequence seq, BasisOptions options) : seq_(std::move(seq)), options_(options) {}
    void grow_levels();

    PrimeSequence seq_;
    BasisOptions options_;
    RadixSystem radix_;
    std::vector<ModularBasisSet> levels_;
    std::vector<std::uint64_t> level_max_;
    std::vector<std::shared_ptr<TableSlot>> tables_;
};

struct Representation {
    BigInt a;
    BigInt a_prime;
};

struct SigmaReport {
    BigInt n;
    BigInt exact;
    std::optional<std::uint64_t> brute;
    BigInt bound;
    bool basis_ok = false;          // exact >= 1
    bool bound_ok = false;          // exact <= bound
    std::optional<bool> agree;      // exact == brute
};

bool contains(const BasisContext& ctx, const BigInt& n);
bool contains(const BasisContext& ctx, std::uint64_t n);

// Digit-by-digit construction with 0/1 carries; at each level picks the pair
// with the smallest a_j, then the smallest a'_j. Throws ConsistencyError if a
// level fails to cover a residue.
Representation represent(const BasisContext& ctx, const BigInt& n);

// Counts ordered pairs by scanning a in [0, n]; n must be <= cap.
std::uint64_t sigma_bruteforce(const BasisContext& ctx, std::uint64_t n, std::uint64_t cap = kDefaultBruteCap);

// Exact ordered-pair count from a digit automaton with carries.
BigInt sigma_exact(const BasisContext& ctx, const BigInt& n);
BigInt sigma_exact(const BasisContext& ctx, std::uint64_t n);

BigInt sigma_bound(const BasisContext& ctx, const BigInt& n);

// Members of A in [0, limit], ascending; limit must be <= cap.
std::vector<std::uint64_t> enumerate_upto(const BasisContext& ctx, std::uint64_t limit,
                                          std::uint64_t cap = kDefaultEnumerateCap);

// Membership bitmap of [0, limit] built from pointwise contains; answers
// brute-force pair counts for many n without recomputing membership.
class MembershipTable {
public:
    MembershipTable(const BasisContext& ctx, std::uint64_t limit);

    std::uint64_t limit() const { return member_.size() - 1; }
    bool operator[](std::uint64_t n) const { return member_[n] != 0; }

    // #{(a, n - a) : both members}; n <= limit.
    std::uint64_t count_pairs(std::uint64_t n) const;

private:
    std::vector<std::uint8_t> member_;
};

SigmaReport make_sigma_report(const BasisContext& ctx, const BigInt& n, bool with_brute,
                              std::uint64_t brute_cap = kDefaultBruteCap);

}  // namespace thinbasis
