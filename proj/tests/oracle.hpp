// oracle.hpp
// Slow, obviously-correct reference computations used only by tests. Nothing
// here calls into the library's modular, radix or basis code.

#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

inline bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t next_3mod8_prime_above(std::uint64_t x) {
    std::uint64_t q = x + 1;
    while (!(q % 8 == 3 && trial_division_prime(q))) ++q;
    return q;
}

// p_k = least prime = 3 mod 8 with p_k >= k and p_k > p_{k-1}.
inline std::vector<std::uint64_t> linear_sequence(std::size_t count) {
    std::vector<std::uint64_t> out;
    std::uint64_t prev = 2;
    for (std::uint64_t k = 1; out.size() < count; ++k) {
        prev = next_3mod8_prime_above(std::max(k, prev + 1) - 1);
        out.push_back(prev);
    }
    return out;
}

inline std::set<std::int64_t> b_set(std::int64_t p) {
    std::set<std::int64_t> out;
    for (std::int64_t c : {3, 4, 6})
        for (std::int64_t x = 0; x < p; ++x) out.insert(x + 2 * p * ((c * x * x) % p));
    return out;
}

inline std::set<std::uint64_t> a_set(std::int64_t p) {
    std::set<std::uint64_t> out;
    const std::int64_t m = p * p;
    for (std::int64_t y : b_set(p))
        for (std::int64_t t : {-p, std::int64_t{0}, p}) out.insert(static_cast<std::uint64_t>(((y + t) % m + m) % m));
    return out;
}

inline std::vector<std::uint64_t> digits(mpz_class n, const std::vector<std::uint64_t>& bases) {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; n != 0; ++i) {
        mpz_class b = static_cast<unsigned long>(bases.at(i));
        mpz_class r = n % b;
        out.push_back(r.get_ui());
        n /= b;
    }
    return out;
}

// Membership in A from the definition, with per-level sets built by a_set.
struct NaiveBasis {
    std::vector<std::uint64_t> bases;
    std::vector<std::set<std::uint64_t>> levels;

    explicit NaiveBasis(std::size_t count) {
        for (std::uint64_t p : linear_sequence(count)) {
            bases.push_back(p * p);
            levels.push_back(a_set(static_cast<std::int64_t>(p)));
        }
    }

    bool contains(std::uint64_t n) const {
        const auto d = digits(mpz_class(static_cast<unsigned long>(n)), bases);
        for (std::size_t j = 0; j + 1 < d.size(); ++j)
            if (!levels[j].count(d[j])) return false;
        return true;
    }

    std::vector<bool> bitmap(std::uint64_t limit) const {
        std::vector<bool> out(limit + 1);
        for (std::uint64_t n = 0; n <= limit; ++n) out[n] = contains(n);
        return out;
    }
};

inline std::uint64_t count_pairs(const std::vector<bool>& member, std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t a = 0; a <= n; ++a) count += member[a] && member[n - a];
    return count;
}

}  // namespace oracle
