#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace infhom {

/// Exact rational number over the ground field Q. mpq_class keeps every
/// value in lowest terms with a positive denominator.
using Scalar = mpq_class;

/// Parses "p/q", "p" or "-p/q". Returns nullopt on anything else, including
/// a zero denominator.
std::optional<Scalar> parse_scalar(std::string_view text);

std::string to_string(const Scalar& value);

inline int sign_of_parity(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace infhom
