// modular_basis.hpp
// Ruzsa's economical additive basis of Z/p^2 Z for primes p = 3, 5 (mod 8).
//
//   B_p = { x + 2p*(c*x^2 mod p) : 0 <= x < p, c in {3, 4, 6} }  (a subset of Z)
//   A_p = { y mod p^2 : y in B_p + {-p, 0, p} }
//
// Both sets support membership in O(1) word operations: an integer y can only
// be generated from x = y mod p, so three formula evaluations decide y in B_p,
// and r in A_p reduces to at most twelve B_p lookups.
//
// Known guarantees: sup sigma_{B_p} <= 18, A_p + A_p = Z/p^2 Z, and every
// residue has at most 6 * 9 * 18 = 594 ordered representations. The verify
// functions check these exhaustively for small p.

#pragma once
#include <array>
#include <cstdint>
#include <memory>
#include <vector>

namespace thinbasis {

inline constexpr std::array<std::uint64_t, 3> kRuzsaCoefficients = {3, 4, 6};

// Largest prime accepted; keeps p^2 and every candidate sum inside 64-bit words.
inline constexpr std::uint64_t kMaxModularPrime = (std::uint64_t{1} << 31) - 1;

// residues() materializes up to 9p values; larger primes support membership only.
inline constexpr std::uint64_t kMaxEnumerablePrime = std::uint64_t{1} << 20;

inline constexpr std::uint64_t kBSigmaBound = 18;
inline constexpr std::uint64_t kModularSigmaBound = 594;
inline constexpr std::uint64_t kDefaultVerifyPrimeCap = 200;

// p is prime, p mod 8 in {3, 5} and p <= kMaxModularPrime.
bool is_valid_modular_prime(std::uint64_t p);

// Immutable view of B_p and A_p for one prime. Copies share the lazily
// enumerated residue list, which is built at most once and is safe to request
// from several threads.
class ModularBasisSet {
public:
    // Throws ParameterError unless is_valid_modular_prime(p).
    explicit ModularBasisSet(std::uint64_t p);

    std::uint64_t prime() const { return p_; }
    std::uint64_t modulus() const { return modulus_; }

    // Largest element of B_p that the generating formula can reach.
    std::int64_t b_max() const { return static_cast<std::int64_t>((p_ - 1) + 2 * p_ * (p_ - 1)); }

    bool b_contains(std::int64_t y) const;

    // r must lie in [0, p^2); throws ParameterError otherwise.
    bool contains(std::uint64_t r) const;

    std::vector<std::int64_t> b_elements() const;

    // Sorted residues of A_p. Throws CapacityError for p > kMaxEnumerablePrime.
    const std::vector<std::uint64_t>& residues() const;

    // Ordered pairs (a, a') in A_p^2 with a + a' = r (mod p^2).
    std::uint64_t sigma(std::uint64_t r) const;

private:
    bool b_contains_wide(__int128 y) const;
    bool contains_unchecked(std::uint64_t r) const;

    struct Cache;
    std::uint64_t p_;
    std::uint64_t modulus_;
    std::shared_ptr<Cache> cache_;
};

// Free-function forms; each validates p.
bool b_membership(std::uint64_t p, std::int64_t y);
std::vector<std::int64_t> b_enumerate(std::uint64_t p);
bool ap_membership(std::uint64_t p, std::uint64_t r);
std::vector<std::uint64_t> ap_enumerate(std::uint64_t p);
std::uint64_t ap_sigma(std::uint64_t p, std::uint64_t r);

struct BVerifyResult {
    std::uint64_t sup_sigma = 0;
    bool six_cover_ok = false;
};

struct ModularVerifyReport {
    std::uint64_t p = 0;
    std::uint64_t size = 0;  // |A_p|
    std::uint64_t min_sigma = 0;
    std::uint64_t max_sigma = 0;
    bool covers_all = false;
    std::uint64_t b_sup_sigma = 0;
    bool six_cover_ok = false;

    // min >= 1, max <= 594, sup sigma_B <= 18 and the six-number cover.
    bool passes() const {
        return covers_all && max_sigma <= kModularSigmaBound && b_sup_sigma <= kBSigmaBound && six_cover_ok;
    }
};

// Exhaustive checks; throw CapacityError when p > cap.
BVerifyResult b_verify(std::uint64_t p, std::uint64_t cap = kDefaultVerifyPrimeCap);
ModularVerifyReport ap_verify(std::uint64_t p, std::uint64_t cap = kDefaultVerifyPrimeCap);

}  // namespace thinbasis
