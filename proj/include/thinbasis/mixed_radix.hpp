// mixed_radix.hpp
// Positional numbers over a generalized base b = (b_1, b_2, ...):
//
//   x = a_1 + a_2*b_1 + a_3*b_1*b_2 + ...,   0 <= a_i < b_i
//
// Digits are stored little-endian (digits[0] is a_1). The canonical string
// has no leading zeros, so 0 is the empty string. Conversions never grow the
// radix; a value that needs more positions than available is a CapacityError.

#pragma once
#include "thinbasis/bigint.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thinbasis {

class RadixSystem {
public:
    RadixSystem() = default;

    // Every base must be >= 2; throws ParameterError otherwise.
    explicit RadixSystem(std::vector<std::uint64_t> bases);

    // b_k = p_k^2.
    static RadixSystem from_primes(std::span<const std::uint64_t> primes);

    std::size_t size() const { return bases_.size(); }
    std::uint64_t base(std::size_t index) const { return bases_[index]; }
    const std::vector<std::uint64_t>& bases() const { return bases_; }

    // b_1 * ... * b_m; every representable value is below this.
    BigInt span_limit() const;

    // Consecutive runs of bases whose product fits one machine word; lets
    // conversion peel several digits per big-integer division.
    struct Chunk {
        std::size_t first = 0;
        std::size_t count = 0;
        std::uint64_t product = 1;
    };
    const std::vector<Chunk>& chunks() const { return chunks_; }

private:
    std::vector<std::uint64_t> bases_;
    std::vector<Chunk> chunks_;
};

struct DigitString {
    std::vector<std::uint64_t> digits;  // little-endian

    std::size_t length() const { return digits.size(); }
    friend bool operator==(const DigitString&, const DigitString&) = default;
};

DigitString to_digits(const BigInt& n, const RadixSystem& radix);
DigitString to_digits(std::uint64_t n, const RadixSystem& radix);

// Throws ValidationError for an out-of-range digit or a zero top digit, and
// CapacityError when the string is longer than the radix.
BigInt from_digits(const DigitString& d, const RadixSystem& radix);

std::size_t digit_length(const BigInt& n, const RadixSystem& radix);

// Most-significant digit first, comma separated: 10 over (9, 121) is "1,1";
// zero is "".
std::string format_digits(const DigitString& d);

// Inverse of format_digits (no range validation; see from_digits).
DigitString parse_digits(std::string_view text);

}  // namespace thinbasis
