#include "thinbasis/modular_basis.hpp"

#include "thinbasis/errors.hpp"
#include "thinbasis/primes.hpp"

#include <algorithm>
#include <mutex>
#include <string>

namespace thinbasis {

struct ModularBasisSet::Cache {
    std::once_flag once;
    std::vector<std::uint64_t> residues;
};

bool is_valid_modular_prime(std::uint64_t p) {
    return p <= kMaxModularPrime && (p % 8 == 3 || p % 8 == 5) && is_prime(p);
}

ModularBasisSet::ModularBasisSet(std::uint64_t p)
    : p_(p), modulus_(p * p), cache_(std::make_shared<Cache>()) {
    if (!is_valid_modular_prime(p))
        throw ParameterError("p = " + std::to_string(p) + " is not a prime = 3, 5 (mod 8) below 2^31");
}

bool ModularBasisSet::b_contains_wide(__int128 y) const {
    if (y < 0 || y > b_max()) return false;
    const auto v = static_cast<std::uint64_t>(y);
    const std::uint64_t z = v % p_;
    const std::uint64_t rest = v - z;  // must equal 2p * (c z^2 mod p)
    if (rest % (2 * p_) != 0) return false;
    const std::uint64_t level = rest / (2 * p_);
    const std::uint64_t sq = z * z % p_;
    for (std::uint64_t c : kRuzsaCoefficients) {
        if (c * sq % p_ == level) return true;
    }
    return false;
}

bool ModularBasisSet::b_contains(std::int64_t y) const { return b_contains_wide(y); }

bool ModularBasisSet::contains_unchecked(std::uint64_t r) const {
    // The twelve candidates y = r + s*p^2 + t*p all share y mod p = z, so the
    // generating value x = z and the three admissible levels are fixed; for
    // each candidate only (y - z) / p = q + s*p + t varies.
    const std::uint64_t z = r % p_;
    const std::uint64_t q = r / p_;
    const std::uint64_t sq = z * z % p_;
    const std::uint64_t l3 = 3 * sq % p_;
    const std::uint64_t l4 = 4 * sq % p_;
    const std::uint64_t l6 = 6 * sq % p_;
    const std::int64_t p = static_cast<std::int64_t>(p_);
    const std::int64_t top = b_max();
    for (std::int64_t s = -1; s <= 2; ++s) {
        for (std::int64_t t = -1; t <= 1; ++t) {
            const __int128 y = static_cast<__int128>(r) + s * p * p + t * p;
            if (y < 0 || y > top) continue;
            const auto w = static_cast<std::uint64_t>(static_cast<std::int64_t>(q) + s * p + t);
            if (w % 2 != 0) continue;
            const std::uint64_t level = w / 2;
            if (level == l3 || level == l4 || level == l6) return true;
        }
    }
    return false;
}

bool ModularBasisSet::contains(std::uint64_t r) const {
    if (r >= modulus_) throw ParameterError("residue " + std::to_string(r) + " outside [0, p^2)");
    return contains_unchecked(r);
}

std::vector<std::int64_t> ModularBasisSet::b_elements() const {
    std::vector<std::int64_t> out;
    out.reserve(3 * p_);
    for (std::uint64_t x = 0; x < p_; ++x) {
        const std::uint64_t sq = x * x % p_;
        for (std::uint64_t c : kRuzsaCoefficients)
            out.push_back(static_cast<std::int64_t>(x + 2 * p_ * (c * sq % p_)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

const std::vector<std::uint64_t>& ModularBasisSet::residues() const {
    if (p_ > kMaxEnumerablePrime)
        throw CapacityError("A_p enumeration capped at p <= " + std::to_string(kMaxEnumerablePrime));
    std::call_once(cache_->once, [this] {
        const auto m = static_cast<std::int64_t>(modulus_);
        const auto p = static_cast<std::int64_t>(p_);
        std::vector<std::uint64_t> out;
        for (std::int64_t y : b_elements()) {
            for (std::int64_t shift : {-p, std::int64_t{0}, p})
                out.push_back(static_cast<std::uint64_t>(((y + shift) % m + m) % m));
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        cache_->residues = std::move(out);
    });
    return cache_->residues;
}

std::uint64_t ModularBasisSet::sigma(std::uint64_t r) const {
    if (r >= modulus_) throw ParameterError("residue " + std::to_string(r) + " outside [0, p^2)");
    std::uint64_t count = 0;
    for (std::uint64_t a : residues()) {
        const std::uint64_t partner = (r + modulus_ - a) % modulus_;
        if (contains_unchecked(partner)) ++count;
    }
    return count;
}

bool b_membership(std::uint64_t p, std::int64_t y) { return ModularBasisSet(p).b_contains(y); }
std::vector<std::int64_t> b_enumerate(std::uint64_t p) { return ModularBasisSet(p).b_elements(); }
bool ap_membership(std::uint64_t p, std::uint64_t r) { return ModularBasisSet(p).contains(r); }
std::vector<std::uint64_t> ap_enumerate(std::uint64_t p) { return ModularBasisSet(p).residues(); }
std::uint64_t ap_sigma(std::uint64_t p, std::uint64_t r) { return ModularBasisSet(p).sigma(r); }

namespace {

void check_cap(std::uint64_t p, std::uint64_t cap) {
    if (p > cap)
        throw CapacityError("exhaustive verification capped at p <= " + std::to_string(cap) + ", got " +
                            std::to_string(p));
}

BVerifyResult b_verify_set(const ModularBasisSet& set) {
    const auto elems = set.b_elements();
    const std::uint64_t p = set.prime();
    const std::uint64_t m = set.modulus();
    std::vector<std::uint32_t> sums(2 * static_cast<std::size_t>(set.b_max()) + 1, 0);
    for (std::int64_t u : elems)
        for (std::int64_t v : elems) ++sums[static_cast<std::size_t>(u + v)];

    BVerifyResult out;
    out.sup_sigma = *std::max_element(sums.begin(), sums.end());
    auto in_sumset = [&](std::int64_t n) {
        return n >= 0 && n < static_cast<std::int64_t>(sums.size()) && sums[static_cast<std::size_t>(n)] > 0;
    };
    out.six_cover_ok = true;
    const auto pi = static_cast<std::int64_t>(p);
    const auto mi = static_cast<std::int64_t>(m);
    for (std::int64_t n = 0; n < mi && out.six_cover_ok; ++n) {
        out.six_cover_ok = in_sumset(n - pi) || in_sumset(n) || in_sumset(n + pi) || in_sumset(n + mi - pi) ||
                           in_sumset(n + mi) || in_sumset(n + mi + pi);
    }
    return out;
}

}  // namespace

BVerifyResult b_verify(std::uint64_t p, std::uint64_t cap) {
    ModularBasisSet set(p);
    check_cap(p, cap);
    return b_verify_set(set);
}

ModularVerifyReport ap_verify(std::uint64_t p, std::uint64_t cap) {
    ModularBasisSet set(p);
    check_cap(p, cap);
    const auto& res = set.residues();
    const std::uint64_t m = set.modulus();
    std::vector<std::uint32_t> counts(m, 0);
    for (std::uint64_t a : res) {
        for (std::uint64_t b : res) {
            std::uint64_t s = a + b;
            if (s >= m) s -= m;
            ++counts[s];
        }
    }
    ModularVerifyReport report;
    report.p = p;
    report.size = res.size();
    report.min_sigma = *std::min_element(counts.begin(), counts.end());
    report.max_sigma = *std::max_element(counts.begin(), counts.end());
    report.covers_all = report.min_sigma >= 1;
    const auto b = b_verify_set(set);
    report.b_sup_sigma = b.sup_sigma;
    report.six_cover_ok = b.six_cover_ok;
    return report;
}

}  // namespace thinbasis
