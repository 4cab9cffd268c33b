#include "bianchi/number.hpp"

#include <cctype>
#include <stdexcept>

namespace bianchi {

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

std::string to_string(const Integer& n) { return n.get_str(); }

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  }
  Rational r(negative ? Integer(-n) : n, d);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) ||
      !mpz_perfect_square_p(r.get_den_mpz_t())) {
    return std::nullopt;
  }
  Rational root(sqrt(r.get_num()), sqrt(r.get_den()));
  root.canonicalize();
  return root;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  if (n == 0) throw std::invalid_argument("prime_divisors of zero");
  std::uint64_t rest = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1
                             : static_cast<std::uint64_t>(n);
  std::vector<std::int64_t> primes;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p == 0) {
      primes.push_back(static_cast<std::int64_t>(p));
      while (rest % p == 0) rest /= p;
    }
  }
  if (rest > 1) primes.push_back(static_cast<std::int64_t>(rest));
  return primes;
}

std::optional<std::int64_t> repeated_prime(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("repeated_prime needs a positive argument");
  for (std::int64_t p : prime_divisors(n)) {
    if ((n / p) % p == 0) return p;
  }
  return std::nullopt;
}

bool is_squarefree(std::int64_t n) { return n > 0 && !repeated_prime(n).has_value(); }

bool is_squarefree(const Integer& n) {
  return sgn(n) > 0 && squarefree_part(n) == n;
}

Integer squarefree_part(const Integer& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("squarefree_part needs a positive argument");
  constexpr unsigned long kTrialBound = 1'000'000;
  Integer rest = n;
  Integer part = 1;
  for (unsigned long p = 2; p <= kTrialBound; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > rest) break;
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++exponent;
    }
    if (exponent % 2 == 1) part *= p;
  }
  if (rest == 1) return part;
  // rest has no prime factor <= bound. Below bound^3 it is p, p*q or p^2.
  if (mpz_perfect_square_p(rest.get_mpz_t())) return part;
  Integer limit = Integer(kTrialBound) * kTrialBound * kTrialBound;
  if (rest < limit) return part * rest;
  throw std::domain_error("squarefree_part: cofactor " + rest.get_str() +
                          " is too large to resolve");
}

Integer squarefree_part(const Rational& r) {
  if (sgn(r) <= 0) throw std::invalid_argument("squarefree_part needs a positive argument");
  return squarefree_part(Integer(r.get_num() * r.get_den()));
}

}  // namespace bianchi
