#include "thinbasis/cli.hpp"

#include "thinbasis/basis.hpp"
#include "thinbasis/errors.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <string>

namespace thinbasis::cli {

namespace {

struct CliConfig {
    std::string regime = "linear";
    std::string c = "1/2";
    std::size_t cap_hint = 0;
    std::string out_path;
};

// Raised for malformed arguments that CLI11 itself accepted.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

GrowthSpec growth_from(const CliConfig& cfg) {
    if (cfg.regime == "linear") return GrowthSpec::linear();
    return GrowthSpec::exponential(Rational::parse(cfg.c));
}

BigInt parse_number(const std::string& text) {
    auto v = parse_decimal(text);
    if (!v) throw UsageError("expected a nonnegative decimal integer, got '" + text + "'");
    return *v;
}

std::uint64_t parse_small(const std::string& text) {
    BigInt v = parse_number(text);
    if (!fits_u64(v)) throw CapacityError("argument '" + text + "' exceeds 64 bits");
    return to_u64(v);
}

BasisContext context_for(const CliConfig& cfg, const BigInt& n) {
    auto ctx = BasisContext::for_value(growth_from(cfg), n);
    return cfg.cap_hint > ctx.capacity() ? ctx.with_capacity(cfg.cap_hint) : ctx;
}

int cmd_member(const CliConfig& cfg, const std::string& arg, std::ostream& out) {
    const BigInt n = parse_number(arg);
    out << (contains(context_for(cfg, n), n) ? "true" : "false") << '\n';
    return kExitOk;
}

int cmd_represent(const CliConfig& cfg, const std::string& arg, std::ostream& out) {
    const BigInt n = parse_number(arg);
    const auto rep = represent(context_for(cfg, n), n);
    out << to_decimal(rep.a) << ' ' << to_decimal(rep.a_prime) << '\n';
    return kExitOk;
}

int cmd_sigma(const CliConfig& cfg, const std::string& arg, const std::string& method, std::ostream& out) {
    const BigInt n = parse_number(arg);
    const auto ctx = context_for(cfg, n);
    out << "n=" << to_decimal(n);
    bool ok = true;
    if (method == "brute") {
        if (!fits_u64(n) || to_u64(n) > kDefaultBruteCap)
            throw CapacityError("brute-force counting capped at n <= " + std::to_string(kDefaultBruteCap));
        const auto brute = sigma_bruteforce(ctx, to_u64(n));
        const BigInt bound = sigma_bound(ctx, n);
        ok = brute >= 1 && from_u64(brute) <= bound;
        out << " brute=" << brute << " bound=" << to_decimal(bound) << '\n';
    } else {
        const auto report = make_sigma_report(ctx, n, method == "both");
        out << " exact=" << to_decimal(report.exact);
        if (report.brute) out << " brute=" << *report.brute;
        out << " bound=" << to_decimal(report.bound);
        if (report.agree) out << " agree=" << (*report.agree ? "true" : "false");
        out << '\n';
        ok = report.basis_ok && report.bound_ok && report.agree.value_or(true);
    }
    return ok ? kExitOk : kExitFailed;
}

int cmd_digits(const CliConfig& cfg, const std::string& arg, std::ostream& out) {
    const BigInt n = parse_number(arg);
    out << format_digits(to_digits(n, context_for(cfg, n).radix())) << '\n';
    return kExitOk;
}

int cmd_enumerate(const CliConfig& cfg, const std::string& arg, std::ostream& out) {
    const std::uint64_t limit = parse_small(arg);
    if (limit > kDefaultEnumerateCap)
        throw CapacityError("enumeration capped at N <= " + std::to_string(kDefaultEnumerateCap));
    for (std::uint64_t n : enumerate_upto(context_for(cfg, from_u64(limit)), limit)) out << n << '\n';
    return kExitOk;
}

int cmd_verify_modular(const std::string& arg, std::uint64_t prime_cap, std::ostream& out) {
    const std::uint64_t pmax = parse_small(arg);
    if (pmax > prime_cap)
        throw CapacityError("exhaustive verification capped at p <= " + std::to_string(prime_cap));
    out << "p,size,min_sigma,max_sigma,b_sup_sigma,six_cover,status\n";
    bool all_ok = true;
    for (std::uint64_t p = 3; p <= pmax; ++p) {
        if (!is_valid_modular_prime(p)) continue;
        const auto r = ap_verify(p, prime_cap);
        all_ok = all_ok && r.passes();
        out << r.p << ',' << r.size << ',' << r.min_sigma << ',' << r.max_sigma << ',' << r.b_sup_sigma << ','
            << (r.six_cover_ok ? "true" : "false") << ',' << (r.passes() ? "ok" : "FAIL") << '\n';
    }
    return all_ok ? kExitOk : kExitFailed;
}

inline constexpr std::uint64_t kOracleSlice = 10'000;

int cmd_verify_basis(const CliConfig& cfg, const std::string& arg, std::ostream& out, std::ostream& err) {
    const std::uint64_t nmax = parse_small(arg);
    if (nmax > kDefaultBruteCap)
        throw CapacityError("basis verification capped at n <= " + std::to_string(kDefaultBruteCap));
    const auto ctx = context_for(cfg, from_u64(nmax));
    const std::uint64_t oracle_max = std::min(nmax, kOracleSlice);
    const MembershipTable table(ctx, oracle_max);

    auto fail = [&](std::uint64_t n, const std::string& why) {
        out << "FAIL n=" << n << ": " << why << '\n';
        err << "verification failed at n=" << n << ": " << why << '\n';
        return kExitFailed;
    };

    BigInt max_sigma = 0;
    for (std::uint64_t n = 0; n <= nmax; ++n) {
        const BigInt big = from_u64(n);
        const BigInt exact = sigma_exact(ctx, n);
        if (exact < 1) return fail(n, "no representation");
        const BigInt bound = sigma_bound(ctx, big);
        if (exact > bound) return fail(n, "sigma " + to_decimal(exact) + " exceeds bound " + to_decimal(bound));
        const auto rep = represent(ctx, big);
        if (rep.a + rep.a_prime != big || !contains(ctx, rep.a) || !contains(ctx, rep.a_prime))
            return fail(n, "invalid representation " + to_decimal(rep.a) + " + " + to_decimal(rep.a_prime));
        if (n <= oracle_max && exact != from_u64(table.count_pairs(n)))
            return fail(n, "exact " + to_decimal(exact) + " != brute " + std::to_string(table.count_pairs(n)));
        max_sigma = std::max(max_sigma, exact);
    }
    out << "verified n<=" << nmax << " oracle_n<=" << oracle_max << " max_sigma=" << to_decimal(max_sigma)
        << " status=ok\n";
    return kExitOk;
}

int cmd_growth(const CliConfig& cfg, const std::string& nmax_arg, const std::string& step_arg, std::ostream& out) {
    const std::uint64_t nmax = parse_small(nmax_arg);
    const std::uint64_t step = parse_small(step_arg);
    if (step == 0) throw UsageError("growth step must be positive");
    if (nmax > kDefaultEnumerateCap)
        throw CapacityError("growth report capped at N <= " + std::to_string(kDefaultEnumerateCap));
    const auto ctx = context_for(cfg, from_u64(nmax));
    out << "N,max_sigma,bound\n";
    bool ok = true;
    for (std::uint64_t top = step; top <= nmax; top += step) {
        BigInt window_max = 0;
        for (std::uint64_t n = top - step + 1; n <= top; ++n) window_max = std::max(window_max, sigma_exact(ctx, n));
        const BigInt bound = sigma_bound(ctx, from_u64(top));
        ok = ok && window_max <= bound;
        out << top << ',' << to_decimal(window_max) << ',' << to_decimal(bound) << '\n';
    }
    return ok ? kExitOk : kExitFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Explicit economical additive basis of order 2", "thinbasis"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--regime", cfg.regime, "Prime growth regime")
        ->check(CLI::IsMember({"linear", "exp"}))
        ->capture_default_str();
    app.add_option("--c", cfg.c, "Rational constant c for f(k) = ceil(exp(c k))")->capture_default_str();
    app.add_option("--cap", cfg.cap_hint, "Minimum digit capacity of the basis context");
    app.add_option("--out", cfg.out_path, "Write output to this file ('-' for stdout)");

    std::string number;
    std::string second;
    std::string method = "exact";
    std::uint64_t prime_cap = kDefaultVerifyPrimeCap;
    std::function<int(std::ostream&)> action;

    auto* member = app.add_subcommand("member", "Decide n in A");
    member->add_option("n", number)->required();
    member->callback([&] { action = [&](std::ostream& o) { return cmd_member(cfg, number, o); }; });

    auto* rep = app.add_subcommand("represent", "Print a, a' in A with a + a' = n");
    rep->add_option("n", number)->required();
    rep->callback([&] { action = [&](std::ostream& o) { return cmd_represent(cfg, number, o); }; });

    auto* sigma = app.add_subcommand("sigma", "Count ordered representations of n");
    sigma->add_option("n", number)->required();
    sigma->add_option("--method", method)->check(CLI::IsMember({"exact", "brute", "both"}))->capture_default_str();
    sigma->callback([&] { action = [&](std::ostream& o) { return cmd_sigma(cfg, number, method, o); }; });

    auto* digits = app.add_subcommand("digits", "Mixed-radix digits of n, most significant first");
    digits->add_option("n", number)->required();
    digits->callback([&] { action = [&](std::ostream& o) { return cmd_digits(cfg, number, o); }; });

    auto* enumerate = app.add_subcommand("enumerate", "List members of A up to N");
    enumerate->add_option("N", number)->required();
    enumerate->callback([&] { action = [&](std::ostream& o) { return cmd_enumerate(cfg, number, o); }; });

    auto* vmod = app.add_subcommand("verify-modular", "Exhaustively check A_p and B_p for primes p <= pmax");
    vmod->add_option("pmax", number)->required();
    vmod->add_option("--prime-cap", prime_cap, "Largest p allowed for exhaustive checks")->capture_default_str();
    vmod->callback([&] { action = [&](std::ostream& o) { return cmd_verify_modular(number, prime_cap, o); }; });

    auto* vbasis = app.add_subcommand("verify-basis", "Check sigma >= 1, representations and bounds for n <= nmax");
    vbasis->add_option("nmax", number)->required();
    vbasis->callback([&] { action = [&](std::ostream& o) { return cmd_verify_basis(cfg, number, o, err); }; });

    auto* growth = app.add_subcommand("growth", "CSV of windowed max sigma against the bound");
    growth->add_option("nmax", number)->required();
    growth->add_option("step", second)->required();
    growth->callback([&] { action = [&](std::ostream& o) { return cmd_growth(cfg, number, second, o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cfg.out_path.empty() || cfg.out_path == "-") return action(out);
        std::ostringstream buffer;
        const int code = action(buffer);
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!file || !(file << buffer.str()) || !file.flush()) {
            err << "error: cannot write " << cfg.out_path << '\n';
            return kExitUsage;
        }
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConsistencyError& e) {
        err << "consistency failure: " << e.what() << '\n';
        return kExitFailed;
    }
}

}  // namespace thinbasis::cli
