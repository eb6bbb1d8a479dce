#include "thinbasis/basis.hpp"

#include "thinbasis/errors.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <string>

namespace thinbasis {

struct BasisContext::TableSlot {
    std::once_flag once;
    LevelTables tables;
};

BasisContext BasisContext::create(GrowthSpec growth, std::size_t capacity_digits, BasisOptions options) {
    if (capacity_digits == 0) throw ParameterError("basis context needs at least one digit position");
    PrimeSequence seq(growth);
    seq.extend_to(capacity_digits);
    BasisContext ctx(std::move(seq), options);
    ctx.grow_levels();
    return ctx;
}

BasisContext BasisContext::for_value(GrowthSpec growth, const BigInt& n, BasisOptions options) {
    return create(growth, 1, options).with_capacity_for(n);
}

BasisContext BasisContext::with_capacity(std::size_t capacity_digits) const {
    BasisContext out = *this;
    if (capacity_digits > capacity()) {
        out.seq_.extend_to(capacity_digits);
        out.grow_levels();
    }
    return out;
}

BasisContext BasisContext::with_capacity_for(const BigInt& n) const {
    if (sgn(n) < 0) throw ParameterError("basis values are nonnegative");
    BigInt span = radix_.span_limit();
    if (n < span) return *this;
    PrimeSequence seq = seq_;
    while (n >= span) {
        seq.extend_to(seq.size() + 1);
        const BigInt p = from_u64(seq.primes().back());
        span *= p * p;
    }
    return with_capacity(seq.size());
}

void BasisContext::grow_levels() {
    for (std::size_t i = levels_.size(); i < seq_.size(); ++i) {
        const std::uint64_t p = seq_.at(i);
        ModularBasisSet level(p);
        std::uint64_t max_sigma = kModularSigmaBound;
        if (p <= options_.exhaustive_prime_cap) {
            const auto report = ap_verify(p, options_.exhaustive_prime_cap);
            if (!report.covers_all)
                throw ConsistencyError("A_p fails to cover every residue for p = " + std::to_string(p));
            max_sigma = report.max_sigma;
        }
        levels_.push_back(std::move(level));
        level_max_.push_back(max_sigma);
        tables_.push_back(std::make_shared<TableSlot>());
    }
    radix_ = RadixSystem::from_primes(seq_.primes());
}

const BasisContext::LevelTables& BasisContext::tables(std::size_t level) const {
    const std::uint64_t b = radix_.base(level);
    if (b > kMaxTableBase)
        throw CapacityError("exact counting tables unavailable for base " + std::to_string(b));
    TableSlot& slot = *tables_.at(level);
    std::call_once(slot.once, [&] {
        const auto& res = levels_[level].residues();
        LevelTables t;
        t.member_prefix.assign(b + 1, 0);
        for (std::uint64_t r : res) t.member_prefix[r + 1] = 1;
        for (std::uint64_t i = 1; i <= b; ++i) t.member_prefix[i] += t.member_prefix[i - 1];
        t.pair_sums.assign(2 * b - 1, 0);
        for (std::uint64_t x : res)
            for (std::uint64_t y : res) ++t.pair_sums[x + y];
        slot.tables = std::move(t);
    });
    return slot.tables;
}

namespace {

bool digits_in_basis(const BasisContext& ctx, const DigitString& d) {
    const auto& levels = ctx.levels();
    for (std::size_t j = 0; j + 1 < d.length(); ++j) {
        if (!levels[j].contains(d.digits[j])) return false;
    }
    return true;
}

// Digit automaton for sigma_exact. Each of a, a' is OPEN while every digit so
// far lies in its A_j, and FROZEN once a digit outside A_j appeared; a frozen
// number must have only zero digits above that position.
constexpr int kOpen = 0;
constexpr int kFrozen = 1;

constexpr int state_index(int carry, int sa, int sb) { return carry * 4 + sa * 2 + sb; }

using u128 = unsigned __int128;

// dst += w * mult; false on overflow.
bool accumulate(u128& dst, const u128& w, std::uint64_t mult) {
    u128 prod;
    if (__builtin_mul_overflow(w, static_cast<u128>(mult), &prod)) return false;
    return !__builtin_add_overflow(dst, prod, &dst);
}

bool accumulate(BigInt& dst, const BigInt& w, std::uint64_t mult) {
    if (mult != 0) mpz_addmul_ui(dst.get_mpz_t(), w.get_mpz_t(), mult);
    return true;
}

template <class Count>
std::optional<Count> count_representations(const BasisContext& ctx, const DigitString& n) {
    std::array<Count, 8> states{};
    states[state_index(0, kOpen, kOpen)] = 1;

    for (std::size_t j = 0; j < n.length(); ++j) {
        const auto& tab = ctx.tables(j);
        const auto b = static_cast<std::int64_t>(ctx.radix().base(j));
        const auto target = static_cast<std::int64_t>(n.digits[j]);
        auto in_a = [&](std::int64_t d) { return tab.member_prefix[d + 1] != tab.member_prefix[d]; };

        std::array<Count, 8> next{};
        bool ok = true;
        for (int cin = 0; cin <= 1; ++cin) {
            for (int sa = 0; sa <= 1; ++sa) {
                for (int sb = 0; sb <= 1; ++sb) {
                    const Count& w = states[state_index(cin, sa, sb)];
                    if (w == 0) continue;
                    for (int cout = 0; cout <= 1; ++cout) {
                        // digit pair sum d + d' must equal s
                        const std::int64_t s = target + cout * b - cin;
                        if (s < 0 || s > 2 * b - 2) continue;
                        auto add = [&](int na, int nb, std::uint64_t mult) {
                            ok = accumulate(next[state_index(cout, na, nb)], w, mult) && ok;
                        };
                        if (sa == kOpen && sb == kOpen) {
                            const std::int64_t lo = std::max<std::int64_t>(0, s - b + 1);
                            const std::int64_t hi = std::min<std::int64_t>(s, b - 1);
                            const std::uint64_t all = static_cast<std::uint64_t>(hi - lo + 1);
                            const std::uint64_t a_any = tab.member_prefix[hi + 1] - tab.member_prefix[lo];
                            const std::uint64_t a_a = tab.pair_sums[s];
                            const std::uint64_t a_out = a_any - a_a;
                            add(kOpen, kOpen, a_a);
                            add(kOpen, kFrozen, a_out);
                            add(kFrozen, kOpen, a_out);
                            add(kFrozen, kFrozen, all - 2 * a_any + a_a);
                        } else if (sa == kOpen) {
                            // d' = 0, so d = s
                            if (s < b) add(in_a(s) ? kOpen : kFrozen, kFrozen, 1);
                        } else if (sb == kOpen) {
                            if (s < b) add(kFrozen, in_a(s) ? kOpen : kFrozen, 1);
                        } else if (s == 0) {
                            add(kFrozen, kFrozen, 1);
                        }
                    }
                }
            }
        }
        if (!ok) return std::nullopt;
        states = next;
    }

    Count total = 0;
    for (int sa = 0; sa <= 1; ++sa) {
        for (int sb = 0; sb <= 1; ++sb) {
            if (!accumulate(total, states[state_index(0, sa, sb)], 1)) return std::nullopt;
        }
    }
    return total;
}

BigInt sigma_from_digits(const BasisContext& ctx, const DigitString& d) {
    if (auto fast = count_representations<u128>(ctx, d)) {
        const auto hi = static_cast<std::uint64_t>(*fast >> 64);
        const auto lo = static_cast<std::uint64_t>(*fast);
        BigInt out = from_u64(hi);
        out <<= 64;
        out += from_u64(lo);
        return out;
    }
    return *count_representations<BigInt>(ctx, d);
}

DigitString checked_digits(const BigInt& n, const BasisContext& ctx) {
    if (sgn(n) < 0) throw ParameterError("basis values are nonnegative");
    return to_digits(n, ctx.radix());
}

}  // namespace

bool contains(const BasisContext& ctx, const BigInt& n) {
    if (fits_u64(n)) return contains(ctx, to_u64(n));
    return digits_in_basis(ctx, checked_digits(n, ctx));
}

bool contains(const BasisContext& ctx, std::uint64_t n) {
    const auto& radix = ctx.radix();
    for (std::size_t j = 0; n != 0; ++j) {
        if (j >= radix.size()) throw CapacityError("value needs more than " + std::to_string(j) + " digit positions");
        const std::uint64_t digit = n % radix.base(j);
        n /= radix.base(j);
        if (n != 0 && !ctx.levels()[j].contains(digit)) return false;
    }
    return true;
}

Representation represent(const BasisContext& ctx, const BigInt& n) {
    const DigitString digits = checked_digits(n, ctx);
    const std::size_t k = digits.length();
    if (k == 0) return {BigInt(0), BigInt(0)};

    DigitString a;
    DigitString a_prime;
    a.digits.resize(k);
    a_prime.digits.resize(k - 1);
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j + 1 < k; ++j) {
        const auto& level = ctx.levels()[j];
        const std::uint64_t b = ctx.radix().base(j);
        const std::uint64_t target = (digits.digits[j] + b - carry) % b;
        bool found = false;
        for (std::uint64_t x : level.residues()) {
            const std::uint64_t y = (target + b - x) % b;
            if (!level.contains(y)) continue;
            a.digits[j] = x;
            a_prime.digits[j] = y;
            found = true;
            break;
        }
        if (!found)
            throw ConsistencyError("A_p + A_p misses residue " + std::to_string(target) + " for p = " +
                                   std::to_string(level.prime()));
        const std::uint64_t sum = a.digits[j] + a_prime.digits[j] + carry;
        carry = sum / b;
        if (carry > 1 || sum - carry * b != digits.digits[j])
            throw ConsistencyError("carry out of range at position " + std::to_string(j + 1));
    }
    // n_k >= 1 because the canonical expansion has no leading zero.
    a.digits[k - 1] = digits.digits[k - 1] - carry;

    auto trim = [](DigitString& d) {
        while (!d.digits.empty() && d.digits.back() == 0) d.digits.pop_back();
    };
    trim(a);
    trim(a_prime);
    return {from_digits(a, ctx.radix()), from_digits(a_prime, ctx.radix())};
}

std::uint64_t sigma_bruteforce(const BasisContext& ctx, std::uint64_t n, std::uint64_t cap) {
    if (n > cap) throw CapacityError("brute-force counting capped at n <= " + std::to_string(cap));
    std::uint64_t count = 0;
    for (std::uint64_t a = 0; a <= n; ++a) {
        if (contains(ctx, a) && contains(ctx, n - a)) ++count;
    }
    return count;
}

BigInt sigma_exact(const BasisContext& ctx, const BigInt& n) { return sigma_from_digits(ctx, checked_digits(n, ctx)); }

BigInt sigma_exact(const BasisContext& ctx, std::uint64_t n) {
    return sigma_from_digits(ctx, to_digits(n, ctx.radix()));
}

BigInt sigma_bound(const BasisContext& ctx, const BigInt& n) {
    const std::size_t k = std::max<std::size_t>(checked_digits(n, ctx).length(), 1);
    BigInt sum = 0;
    BigInt level_product = 1;
    for (std::size_t l = 0; l < k; ++l) {
        sum += level_product * from_u64(ctx.radix().base(l));
        level_product *= from_u64(ctx.level_max()[l]);
    }
    return 2 * sum;
}

std::vector<std::uint64_t> enumerate_upto(const BasisContext& ctx, std::uint64_t limit, std::uint64_t cap) {
    if (limit > cap) throw CapacityError("enumeration capped at N <= " + std::to_string(cap));
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 0; n <= limit; ++n) {
        if (contains(ctx, n)) out.push_back(n);
    }
    return out;
}

MembershipTable::MembershipTable(const BasisContext& ctx, std::uint64_t limit) : member_(limit + 1, 0) {
    for (std::uint64_t n = 0; n <= limit; ++n) member_[n] = contains(ctx, n) ? 1 : 0;
}

std::uint64_t MembershipTable::count_pairs(std::uint64_t n) const {
    if (n > limit()) throw CapacityError("membership table too small for n = " + std::to_string(n));
    std::uint64_t count = 0;
    for (std::uint64_t a = 0; a <= n; ++a) count += member_[a] & member_[n - a];
    return count;
}

SigmaReport make_sigma_report(const BasisContext& ctx, const BigInt& n, bool with_brute, std::uint64_t brute_cap) {
    SigmaReport r;
    r.n = n;
    r.exact = sigma_exact(ctx, n);
    r.bound = sigma_bound(ctx, n);
    r.basis_ok = r.exact >= 1;
    r.bound_ok = r.exact <= r.bound;
    if (with_brute) {
        if (!fits_u64(n) || to_u64(n) > brute_cap)
            throw CapacityError("brute-force counting capped at n <= " + std::to_string(brute_cap));
        r.brute = sigma_bruteforce(ctx, to_u64(n), brute_cap);
        r.agree = (r.exact == from_u64(*r.brute));
    }
    return r;
}

}  // namespace thinbasis
