#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace malcev {

/// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
/// denominator) provided every entry point canonicalizes, so construct
/// fractions through rat() / rat_from_string() rather than mpq_class(n, d).
using Rational = mpq_class;

/// num/den reduced to lowest terms; throws std::invalid_argument on den == 0.
Rational rat(long num, long den = 1);

/// Parses "p", "-p" or "p/q" (optional sign on p only).
Rational rat_from_string(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

std::size_t hash_rational(const Rational& r);

}  // namespace malcev
