#include "bianchi/extended_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace bianchi {

KMatrix2 KMatrix2::identity(std::int64_t m) {
  return KMatrix2(KElement::one(m), KElement::zero(m), KElement::zero(m), KElement::one(m));
}

KMatrix2 KMatrix2::from_integers(std::int64_t m, long a, long b, long c, long d) {
  return KMatrix2(KElement(m, a), KElement(m, b), KElement(m, c), KElement(m, d));
}

KElement KMatrix2::det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

KMatrix2 KMatrix2::adjugate() const { return KMatrix2(e_[3], -e_[1], -e_[2], e_[0]); }

KMatrix2 KMatrix2::conj_transpose() const {
  return KMatrix2(e_[0].conj(), e_[2].conj(), e_[1].conj(), e_[3].conj());
}

bool KMatrix2::is_integral() const {
  return std::all_of(e_.begin(), e_.end(), [](const KElement& z) { return bianchi::is_integral(z); });
}

KMatrix2 KMatrix2::operator-() const { return KMatrix2(-e_[0], -e_[1], -e_[2], -e_[3]); }

KMatrix2 operator*(const KMatrix2& p, const KMatrix2& q) {
  return KMatrix2(p.e_[0] * q.e_[0] + p.e_[1] * q.e_[2], p.e_[0] * q.e_[1] + p.e_[1] * q.e_[3],
                  p.e_[2] * q.e_[0] + p.e_[3] * q.e_[2], p.e_[2] * q.e_[1] + p.e_[3] * q.e_[3]);
}

KMatrix2 operator*(const KMatrix2& p, const KElement& s) {
  return KMatrix2(p.e_[0] * s, p.e_[1] * s, p.e_[2] * s, p.e_[3] * s);
}

KMatrix2 operator/(const KMatrix2& p, const Rational& s) {
  return KMatrix2(p.e_[0] / s, p.e_[1] / s, p.e_[2] / s, p.e_[3] / s);
}

std::ostream& operator<<(std::ostream& os, const KMatrix2& a) {
  return os << '[' << a(0, 0) << ' ' << a(0, 1) << "; " << a(1, 0) << ' ' << a(1, 1) << ']';
}

ExtendedMatrix ExtendedMatrix::from_scaled(const Integer& d, const KMatrix2& a) {
  if (sgn(d) <= 0) {
    throw std::invalid_argument("scale d must be positive, got " + d.get_str());
  }
  const KElement det = a.det();
  if (!det.is_rational() || det.x() != d) {
    throw std::invalid_argument("det M must equal d = " + d.get_str());
  }
  Integer f = squarefree_part(d);
  Integer g = sqrt(Integer(d / f));
  return ExtendedMatrix(std::move(f), a / Rational(g));
}

ExtendedMatrix ExtendedMatrix::identity(std::int64_t m) {
  return ExtendedMatrix(1, KMatrix2::identity(m));
}

std::ostream& operator<<(std::ostream& os, const ExtendedMatrix& p) {
  return os << "(1/sqrt(" << p.f() << ")) " << p.A();
}

ExtendedMatrix ext_new(const Integer& d, const KMatrix2& M) {
  if (!M.is_integral()) throw std::invalid_argument("ext_new needs an integral matrix");
  return ExtendedMatrix::from_scaled(d, M);
}

ExtendedMatrix ext_mul(const ExtendedMatrix& p, const ExtendedMatrix& q) {
  // sqrt(f1 f2) = g sqrt(f) with g = gcd(f1, f2), f = f1 f2 / g^2 squarefree.
  Integer g = gcd(p.f_, q.f_);
  Integer f = (p.f_ / g) * (q.f_ / g);
  return ExtendedMatrix(std::move(f), (p.a_ * q.a_) / Rational(g));
}

ExtendedMatrix ext_inv(const ExtendedMatrix& p) {
  // ((1/sqrt(f)) A)^-1 = sqrt(f) adj(A) / f = (1/sqrt(f)) adj(A).
  return ExtendedMatrix(p.f_, p.a_.adjugate());
}

Integer common_denominator(const KMatrix2& a) {
  Integer g = 1;
  for (const KElement& z : a.entries()) g = lcm(g, integral_denominator(z));
  return g;
}

KMatrix2 integral_representative(const ExtendedMatrix& p) {
  const Integer g = common_denominator(p.A());
  return p.A() * KElement(p.m(), Rational(g));
}

bool is_gamma_member(const ExtendedMatrix& p) { return p.f() == 1 && p.A().is_integral(); }

std::vector<Rational> min_poly_over_Q(const KElement& x, const Integer& f) {
  if (sgn(f) <= 0) throw std::invalid_argument("min_poly_over_Q needs f > 0");
  if (f == 1 || x.is_zero()) {
    if (x.is_rational()) return {-x.x(), 1};
    return {x.norm(), -x.trace(), 1};
  }
  // alpha = x / sqrt(f) is not in K for f > 1, so its degree is 2 * [Q(alpha^2) : Q].
  const KElement z = x * x / Rational(f);
  if (z.is_rational()) return {-z.x(), 0, 1};
  return {z.norm(), 0, -z.trace(), 0, 1};
}

bool is_algebraic_integer(const KElement& x, const Integer& f) {
  const auto coeffs = min_poly_over_Q(x, f);
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return is_integer(c); });
}

}  // namespace bianchi
