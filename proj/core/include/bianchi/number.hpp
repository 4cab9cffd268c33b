#pragma once

// Exact integer and rational helpers shared by every layer of the library.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bianchi {

using Integer = mpz_class;
using Rational = mpq_class;

// Lowest terms, positive denominator: "p/q", or "p" for integers.
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

// Accepts "p" or "p/q" with an optional leading '-'; q must be nonzero.
// The result is canonicalized, so "2/4" parses to 1/2.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);

// Exact square root of a nonnegative rational, if it is a rational square.
std::optional<Rational> rational_sqrt(const Rational& r);

// Distinct prime divisors of |n|, ascending. n must be nonzero.
std::vector<std::int64_t> prime_divisors(std::int64_t n);

// Smallest prime p with p^2 | n, if any. n must be positive.
std::optional<std::int64_t> repeated_prime(std::int64_t n);

bool is_squarefree(std::int64_t n);
bool is_squarefree(const Integer& n);

/// Squarefree part s of a positive integer n, i.e. n = s * k^2 with s
/// squarefree. Trial division runs to 10^6; the cofactor left over is
/// resolved exactly as long as it is below 10^18, otherwise
/// std::domain_error is thrown.
Integer squarefree_part(const Integer& n);

// Squarefree part of a positive rational p/q, taken as squarefree_part(p*q).
Integer squarefree_part(const Rational& r);

}  // namespace bianchi
