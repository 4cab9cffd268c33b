#pragma once

// Arithmetic in the imaginary quadratic field K = Q(sqrt(-m)).

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bianchi/number.hpp"

namespace bianchi {

/// An element x + y*sqrt(-m) of K with exact rational coordinates.
///
/// Every element carries its m; combining elements of different fields
/// throws std::invalid_argument. m is not re-validated here, that is the
/// job of field_params().
class KElement {
 public:
  KElement(std::int64_t m, Rational x, Rational y = 0);

  static KElement zero(std::int64_t m) { return KElement(m, 0, 0); }
  static KElement one(std::int64_t m) { return KElement(m, 1, 0); }
  // sqrt(-m) itself.
  static KElement root(std::int64_t m) { return KElement(m, 0, 1); }

  std::int64_t m() const { return m_; }
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }

  bool is_zero() const { return sgn(x_) == 0 && sgn(y_) == 0; }
  bool is_rational() const { return sgn(y_) == 0; }

  KElement conj() const { return KElement(m_, x_, -y_); }
  // z * conj(z) = x^2 + m y^2.
  Rational norm() const;
  Rational trace() const { return 2 * x_; }
  // Throws std::domain_error for zero.
  KElement inverse() const;

  KElement operator-() const { return KElement(m_, -x_, -y_); }
  KElement& operator+=(const KElement& other);
  KElement& operator-=(const KElement& other);
  KElement& operator*=(const KElement& other);
  KElement& operator*=(const Rational& r);
  KElement& operator/=(const KElement& other);
  KElement& operator/=(const Rational& r);

  friend KElement operator+(KElement a, const KElement& b) { return a += b; }
  friend KElement operator-(KElement a, const KElement& b) { return a -= b; }
  friend KElement operator*(KElement a, const KElement& b) { return a *= b; }
  friend KElement operator*(KElement a, const Rational& r) { return a *= r; }
  friend KElement operator*(const Rational& r, KElement a) { return a *= r; }
  friend KElement operator/(KElement a, const KElement& b) { return a /= b; }
  friend KElement operator/(KElement a, const Rational& r) { return a /= r; }

  friend bool operator==(const KElement& a, const KElement& b) {
    return a.m_ == b.m_ && a.x_ == b.x_ && a.y_ == b.y_;
  }

 private:
  void require_same_field(const KElement& other) const;

  std::int64_t m_;
  Rational x_;
  Rational y_;
};

std::ostream& operator<<(std::ostream& os, const KElement& z);

/// Invariants of K: discriminant, the O_K generator theta and omega = m + sqrt(-m).
struct FieldParams {
  std::int64_t m;
  std::int64_t d_K;
  KElement theta;
  KElement omega;

  // True when O_K = Z + Z(1 + sqrt(-m))/2.
  bool half_integral() const { return m % 4 == 3; }
};

// Throws std::invalid_argument for m <= 0 or m not squarefree; the message
// names the repeated prime.
FieldParams field_params(std::int64_t m);

// Coordinates (a, b) with z = a + b*theta.
std::array<Rational, 2> theta_coords(const KElement& z);
KElement from_theta_coords(std::int64_t m, const Rational& a, const Rational& b);

// z lies in O_K = Z + Z*theta.
bool is_integral(const KElement& z);

// Least positive integer g with g*z in O_K.
Integer integral_denominator(const KElement& z);

// Positive squarefree divisors of |d_K| in ascending order; 2^nu of them.
std::vector<std::int64_t> squarefree_divisors(std::int64_t d_K);

}  // namespace bianchi
