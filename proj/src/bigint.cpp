#include "thinbasis/bigint.hpp"

#include <algorithm>

namespace thinbasis {

std::optional<BigInt> parse_decimal(std::string_view text) {
    if (text.empty()) return std::nullopt;
    if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return std::nullopt;
    if (text.size() <= 19) {
        std::uint64_t v = 0;
        for (char c : text) v = v * 10 + static_cast<std::uint64_t>(c - '0');
        return from_u64(v);
    }
    BigInt out;
    if (out.set_str(std::string(text), 10) != 0) return std::nullopt;
    return out;
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

}  // namespace thinbasis
