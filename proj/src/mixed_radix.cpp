#include "thinbasis/mixed_radix.hpp"

#include "thinbasis/errors.hpp"

#include <algorithm>
#include <charconv>

namespace thinbasis {

namespace {

void trim_leading_zeros(DigitString& d) {
    while (!d.digits.empty() && d.digits.back() == 0) d.digits.pop_back();
}

CapacityError out_of_positions(std::size_t m) {
    return CapacityError("value needs more than " + std::to_string(m) + " mixed-radix digits");
}

}  // namespace

RadixSystem::RadixSystem(std::vector<std::uint64_t> bases) : bases_(std::move(bases)) {
    Chunk current;
    for (std::size_t i = 0; i < bases_.size(); ++i) {
        const std::uint64_t b = bases_[i];
        if (b < 2) throw ParameterError("radix base must be >= 2");
        unsigned __int128 widened = static_cast<unsigned __int128>(current.product) * b;
        if (current.count > 0 && (widened >> 64) != 0) {
            chunks_.push_back(current);
            current = Chunk{i, 0, 1};
            widened = b;
        }
        current.product = static_cast<std::uint64_t>(widened);
        ++current.count;
    }
    if (current.count > 0) chunks_.push_back(current);
}

RadixSystem RadixSystem::from_primes(std::span<const std::uint64_t> primes) {
    std::vector<std::uint64_t> bases;
    bases.reserve(primes.size());
    for (std::uint64_t p : primes) {
        if (p >= (std::uint64_t{1} << 32)) throw CapacityError("prime too large for a 64-bit radix base");
        bases.push_back(p * p);
    }
    return RadixSystem(std::move(bases));
}

BigInt RadixSystem::span_limit() const {
    BigInt out = 1;
    for (const Chunk& c : chunks_) out *= from_u64(c.product);
    return out;
}

DigitString to_digits(const BigInt& n, const RadixSystem& radix) {
    if (sgn(n) < 0) throw ParameterError("mixed-radix conversion needs a nonnegative integer");
    if (fits_u64(n)) return to_digits(to_u64(n), radix);

    DigitString out;
    BigInt rest = n;
    for (const auto& chunk : radix.chunks()) {
        if (sgn(rest) == 0) break;
        std::uint64_t low = mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), chunk.product);
        for (std::size_t i = 0; i < chunk.count; ++i) {
            const std::uint64_t b = radix.base(chunk.first + i);
            out.digits.push_back(low % b);
            low /= b;
        }
    }
    if (sgn(rest) != 0) throw out_of_positions(radix.size());
    trim_leading_zeros(out);
    return out;
}

DigitString to_digits(std::uint64_t n, const RadixSystem& radix) {
    DigitString out;
    for (std::size_t i = 0; n != 0; ++i) {
        if (i >= radix.size()) throw out_of_positions(radix.size());
        const std::uint64_t b = radix.base(i);
        out.digits.push_back(n % b);
        n /= b;
    }
    return out;
}

BigInt from_digits(const DigitString& d, const RadixSystem& radix) {
    if (d.length() > radix.size()) throw out_of_positions(radix.size());
    if (!d.digits.empty() && d.digits.back() == 0) throw ValidationError("digit string has a leading zero");
    for (std::size_t i = 0; i < d.length(); ++i) {
        if (d.digits[i] >= radix.base(i))
            throw ValidationError("digit " + std::to_string(d.digits[i]) + " at position " + std::to_string(i + 1) +
                                  " exceeds base " + std::to_string(radix.base(i)));
    }
    // Horner from the top.
    BigInt out = 0;
    for (std::size_t i = d.length(); i-- > 0;) {
        mpz_mul_ui(out.get_mpz_t(), out.get_mpz_t(), radix.base(i));
        mpz_add_ui(out.get_mpz_t(), out.get_mpz_t(), d.digits[i]);
    }
    return out;
}

std::size_t digit_length(const BigInt& n, const RadixSystem& radix) { return to_digits(n, radix).length(); }

std::string format_digits(const DigitString& d) {
    std::string out;
    for (std::size_t i = d.length(); i-- > 0;) {
        out += std::to_string(d.digits[i]);
        if (i != 0) out += ',';
    }
    return out;
}

DigitString parse_digits(std::string_view text) {
    DigitString out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw ValidationError("malformed digit string");
        out.digits.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    std::reverse(out.digits.begin(), out.digits.end());
    return out;
}

}  // namespace thinbasis
