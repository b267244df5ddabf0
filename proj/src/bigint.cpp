#include "iqaoa/bigint.hpp"

#include "iqaoa/error.hpp"

#include <cctype>
#include <deque>
#include <limits>
#include <mutex>

namespace iqaoa {

const BigInt& factorial(unsigned n) {
    // deque keeps references stable across growth
    static std::mutex mutex;
    static std::deque<BigInt> table{BigInt{1}};
    std::lock_guard lock(mutex);
    while (table.size() <= n) {
        table.push_back(table.back() * static_cast<unsigned>(table.size()));
    }
    return table[n];
}

std::string to_string(const BigInt& value) { return value.str(); }

BigInt parse_bigint(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty integer literal");
    }
    BigInt value = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError("invalid integer literal '" + std::string(text) + "'");
        }
        value = value * 10 + (c - '0');
    }
    return value;
}

std::optional<std::uint64_t> to_u64(const BigInt& value) {
    if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) {
        return std::nullopt;
    }
    return value.convert_to<std::uint64_t>();
}

}  // namespace iqaoa
