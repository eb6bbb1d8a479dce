// bigint.hpp
// Unbounded nonnegative integers, backed by GMP's mpz_class.

#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace thinbasis {

using BigInt = mpz_class;

// Parses a plain decimal string of ASCII digits (no sign, no whitespace).
// Returns nullopt on anything else.
std::optional<BigInt> parse_decimal(std::string_view text);

std::string to_decimal(const BigInt& value);

inline bool fits_u64(const BigInt& value) {
    return sgn(value) >= 0 && mpz_sizeinbase(value.get_mpz_t(), 2) <= 64;
}

// Caller guarantees fits_u64(value).
inline std::uint64_t to_u64(const BigInt& value) {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return mpz_get_ui(value.get_mpz_t());
}

inline BigInt from_u64(std::uint64_t value) {
    BigInt out;
    mpz_set_ui(out.get_mpz_t(), static_cast<unsigned long>(value));
    return out;
}

}  // namespace thinbasis
