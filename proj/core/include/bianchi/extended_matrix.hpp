#pragma once

// The group of matrices (1/sqrt(d)) M with M integral over O_K and
// determinant one, in a canonical (f, A) form.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bianchi/field.hpp"

namespace bianchi {

/// A 2x2 matrix over K, row-major.
class KMatrix2 {
 public:
  KMatrix2(KElement a, KElement b, KElement c, KElement d)
      : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static KMatrix2 identity(std::int64_t m);
  // Integer entries, embedded into K.
  static KMatrix2 from_integers(std::int64_t m, long a, long b, long c, long d);

  std::int64_t m() const { return e_[0].m(); }
  const KElement& operator()(int row, int col) const { return e_[2 * row + col]; }
  const std::array<KElement, 4>& entries() const { return e_; }

  KElement det() const;
  KMatrix2 adjugate() const;
  // Entrywise conjugate of the transpose.
  KMatrix2 conj_transpose() const;
  bool is_integral() const;

  KMatrix2 operator-() const;
  friend KMatrix2 operator*(const KMatrix2& p, const KMatrix2& q);
  friend KMatrix2 operator*(const KMatrix2& p, const KElement& s);
  friend KMatrix2 operator/(const KMatrix2& p, const Rational& s);
  friend bool operator==(const KMatrix2& p, const KMatrix2& q) = default;

 private:
  std::array<KElement, 4> e_;
};

std::ostream& operator<<(std::ostream& os, const KMatrix2& a);

/// The complex matrix (1/sqrt(f)) A with f positive squarefree and det A = f.
///
/// sqrt is the positive real root. Since K contains no square roots of
/// positive non-squares, two values represent the same complex matrix iff
/// (f, A) agree, so operator== is equality in SL_2(C). The integral form
/// (1/sqrt(d)) M of the same matrix is M = g A, d = g^2 f with g the common
/// denominator of A.
class ExtendedMatrix {
 public:
  /// Canonicalizes (1/sqrt(d)) A for d > 0 and any A over K with det A = d.
  /// Throws std::invalid_argument otherwise.
  static ExtendedMatrix from_scaled(const Integer& d, const KMatrix2& a);
  static ExtendedMatrix identity(std::int64_t m);

  std::int64_t m() const { return a_.m(); }
  const Integer& f() const { return f_; }
  const KMatrix2& A() const { return a_; }

  ExtendedMatrix operator-() const { return ExtendedMatrix(f_, -a_); }
  friend bool operator==(const ExtendedMatrix& p, const ExtendedMatrix& q) = default;

 private:
  friend ExtendedMatrix ext_mul(const ExtendedMatrix&, const ExtendedMatrix&);
  friend ExtendedMatrix ext_inv(const ExtendedMatrix&);
  ExtendedMatrix(Integer f, KMatrix2 a) : f_(std::move(f)), a_(std::move(a)) {}

  Integer f_;
  KMatrix2 a_;
};

std::ostream& operator<<(std::ostream& os, const ExtendedMatrix& p);

// (1/sqrt(d)) M for integral M with det M = d > 0.
ExtendedMatrix ext_new(const Integer& d, const KMatrix2& M);
ExtendedMatrix ext_mul(const ExtendedMatrix& p, const ExtendedMatrix& q);
ExtendedMatrix ext_inv(const ExtendedMatrix& p);

// Least positive g making g*A integral.
Integer common_denominator(const KMatrix2& a);

// Integral representative B = g A of p, with det B = g^2 f.
KMatrix2 integral_representative(const ExtendedMatrix& p);

// p lies in SL_2(O_K).
bool is_gamma_member(const ExtendedMatrix& p);

/// Monic minimal polynomial over Q of x / sqrt(f), coefficients listed from
/// the constant term upwards (the final coefficient is 1). Degree 1, 2 or 4.
std::vector<Rational> min_poly_over_Q(const KElement& x, const Integer& f);

bool is_algebraic_integer(const KElement& x, const Integer& f);

}  // namespace bianchi
