#include "bianchi/field.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace bianchi {

KElement::KElement(std::int64_t m, Rational x, Rational y)
    : m_(m), x_(std::move(x)), y_(std::move(y)) {
  x_.canonicalize();
  y_.canonicalize();
}

void KElement::require_same_field(const KElement& other) const {
  if (m_ != other.m_) {
    throw std::invalid_argument("mixing elements of Q(sqrt(-" + std::to_string(m_) +
                                ")) and Q(sqrt(-" + std::to_string(other.m_) + "))");
  }
}

Rational KElement::norm() const { return x_ * x_ + m_ * (y_ * y_); }

KElement KElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in K");
  Rational n = norm();
  return KElement(m_, x_ / n, -y_ / n);
}

KElement& KElement::operator+=(const KElement& other) {
  require_same_field(other);
  x_ += other.x_;
  y_ += other.y_;
  return *this;
}

KElement& KElement::operator-=(const KElement& other) {
  require_same_field(other);
  x_ -= other.x_;
  y_ -= other.y_;
  return *this;
}

KElement& KElement::operator*=(const KElement& other) {
  require_same_field(other);
  Rational x = x_ * other.x_ - m_ * (y_ * other.y_);
  Rational y = x_ * other.y_ + y_ * other.x_;
  x_ = std::move(x);
  y_ = std::move(y);
  return *this;
}

KElement& KElement::operator*=(const Rational& r) {
  x_ *= r;
  y_ *= r;
  return *this;
}

KElement& KElement::operator/=(const KElement& other) {
  return *this *= other.inverse();
}

KElement& KElement::operator/=(const Rational& r) {
  if (sgn(r) == 0) throw std::domain_error("division by zero in K");
  x_ /= r;
  y_ /= r;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const KElement& z) {
  return os << '(' << z.x() << ", " << z.y() << ')';
}

FieldParams field_params(std::int64_t m) {
  if (m <= 0) {
    throw std::invalid_argument("m must be a positive squarefree integer, got " +
                                std::to_string(m));
  }
  if (auto p = repeated_prime(m)) {
    throw std::invalid_argument("m not squarefree: " + std::to_string(*p) + "^2 divides " +
                                std::to_string(m));
  }
  const bool half = m % 4 == 3;
  KElement theta = half ? KElement(m, Rational(1, 2), Rational(1, 2)) : KElement::root(m);
  return FieldParams{m, half ? -m : -4 * m, std::move(theta), KElement(m, m, 1)};
}

std::array<Rational, 2> theta_coords(const KElement& z) {
  if (z.m() % 4 == 3) {
    // a + b(1 + sqrt(-m))/2 = (a + b/2) + (b/2) sqrt(-m)
    Rational b = 2 * z.y();
    return {z.x() - z.y(), b};
  }
  return {z.x(), z.y()};
}

KElement from_theta_coords(std::int64_t m, const Rational& a, const Rational& b) {
  if (m % 4 == 3) return KElement(m, a + b / 2, b / 2);
  return KElement(m, a, b);
}

bool is_integral(const KElement& z) {
  auto [a, b] = theta_coords(z);
  return is_integer(a) && is_integer(b);
}

Integer integral_denominator(const KElement& z) {
  auto [a, b] = theta_coords(z);
  return lcm(a.get_den(), b.get_den());
}

std::vector<std::int64_t> squarefree_divisors(std::int64_t d_K) {
  const auto primes = prime_divisors(d_K);
  std::vector<std::int64_t> divisors{1};
  for (std::int64_t p : primes) {
    const std::size_t n = divisors.size();
    for (std::size_t i = 0; i < n; ++i) divisors.push_back(divisors[i] * p);
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

}  // namespace bianchi
