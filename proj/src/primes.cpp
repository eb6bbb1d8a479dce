#include "thinbasis/primes.hpp"

#include "thinbasis/errors.hpp"

#include <mpfr.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>

namespace thinbasis {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Bases 2..37 make the strong-pseudoprime test exact below 3.3 * 10^24.
constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

std::vector<std::uint64_t> small_primes_upto(std::uint64_t limit) {
    std::vector<char> composite(limit + 1, 0);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    return out;
}

std::uint64_t isqrt(std::uint64_t n) {
    std::uint64_t r = 0;
    for (std::uint64_t bit = std::uint64_t{1} << 31; bit != 0; bit >>= 1) {
        std::uint64_t cand = r | bit;
        if (static_cast<u128>(cand) * cand <= n) r = cand;
    }
    return r;
}

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw ParameterError("malformed rational " + std::string(what));
    return value;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : kWitnesses) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : kWitnesses) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(const BigInt& n) {
    if (sgn(n) < 0) return false;
    if (!fits_u64(n)) throw CapacityError("primality is only decided below 2^64");
    return is_prime(to_u64(n));
}

std::optional<std::uint64_t> least_p3mod8_in_doubling(std::uint64_t n) {
    if (n < 2) throw ParameterError("least_p3mod8_in_doubling requires N >= 2");
    if (n >= (std::uint64_t{1} << 62)) throw CapacityError("N must be below 2^62");
    const std::uint64_t hi = 2 * n;
    const auto base = small_primes_upto(isqrt(hi));

    constexpr std::uint64_t kSegment = 1 << 16;
    std::vector<char> composite;
    for (std::uint64_t lo = n; lo <= hi; lo += kSegment) {
        const std::uint64_t top = std::min(hi, lo + kSegment - 1);
        composite.assign(top - lo + 1, 0);
        for (std::uint64_t p : base) {
            std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
            for (std::uint64_t m = start; m <= top; m += p) composite[m - lo] = 1;
        }
        for (std::uint64_t v = lo; v <= top; ++v) {
            if (v >= 2 && !composite[v - lo] && v % 8 == 3) return v;
        }
        if (top == hi) break;
    }
    return std::nullopt;
}

std::uint64_t next_p3mod8_above(std::uint64_t x) {
    // first candidate > x congruent to 3 mod 8
    std::uint64_t q = x + 1;
    q += (11 - q % 8) % 8;
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    for (;;) {
        if (q < x) throw CapacityError("prime scan left the 64-bit range");
        if (is_prime(q)) return q;
        if (q > kMax - 8) throw CapacityError("prime scan left the 64-bit range");
        q += 8;
    }
}

Rational Rational::parse(std::string_view text) {
    Rational r;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        r.num = parse_u64(text.substr(0, slash), text);
        r.den = parse_u64(text.substr(slash + 1), text);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 18) throw ParameterError("malformed rational " + std::string(text));
        r.den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) r.den *= 10;
        std::uint64_t w = whole.empty() ? 0 : parse_u64(whole, text);
        std::uint64_t f = parse_u64(frac, text);
        if (w > (std::numeric_limits<std::uint64_t>::max() - f) / r.den)
            throw ParameterError("rational out of range " + std::string(text));
        r.num = w * r.den + f;
    } else {
        r.num = parse_u64(text, text);
        r.den = 1;
    }
    if (r.num == 0 || r.den == 0) throw ParameterError("rational must be positive: " + std::string(text));
    std::uint64_t g = gcd_u64(r.num, r.den);
    r.num /= g;
    r.den /= g;
    return r;
}

std::string Rational::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::uint64_t GrowthSpec::at(std::uint64_t k) const {
    if (k == 0) throw ParameterError("growth function is indexed from k = 1");
    if (regime == GrowthRegime::Linear) return k;

    mpfr_t x;
    mpfr_init2(x, 256);
    mpfr_set_ui(x, c.num, MPFR_RNDN);
    mpfr_mul_ui(x, x, k, MPFR_RNDN);
    mpfr_div_ui(x, x, c.den, MPFR_RNDN);
    mpfr_exp(x, x, MPFR_RNDN);
    mpfr_ceil(x, x);
    const bool fits = mpfr_fits_ulong_p(x, MPFR_RNDN) != 0;
    const std::uint64_t value = fits ? mpfr_get_ui(x, MPFR_RNDN) : 0;
    mpfr_clear(x);
    if (!fits) throw CapacityError("growth value exp(c*k) exceeds 64 bits at k = " + std::to_string(k));
    return value;
}

std::string GrowthSpec::describe() const {
    return regime == GrowthRegime::Linear ? "linear" : "exp(c=" + c.str() + ")";
}

void PrimeSequence::extend_to(std::size_t count) {
    while (primes_.size() < count) {
        const std::uint64_t k = primes_.size() + 1;
        const std::uint64_t prev = primes_.empty() ? 2 : primes_.back();
        const std::uint64_t floor = std::max(growth_.at(k), prev + 1);
        primes_.push_back(next_p3mod8_above(floor - 1));
    }
}

PrimeSequence sequence_extend(PrimeSequence seq, std::size_t count) {
    seq.extend_to(count);
    return seq;
}

}  // namespace thinbasis
