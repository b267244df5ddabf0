#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace iqaoa {

using BigInt = boost::multiprecision::cpp_int;

// Exact n!, cached after first use.
const BigInt& factorial(unsigned n);

std::string to_string(const BigInt& value);

// Parses a non-negative decimal literal; throws ParseError otherwise.
BigInt parse_bigint(std::string_view text);

// Returns the value if it fits in 64 bits.
std::optional<std::uint64_t> to_u64(const BigInt& value);

}  // namespace iqaoa
