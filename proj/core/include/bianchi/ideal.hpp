#pragma once

// O_K-ideals as Z-modules in Hermite normal form with respect to {1, theta}.

#include <array>
#include <cstdint>
#include <span>

#include "bianchi/field.hpp"

namespace bianchi {

/// An ideal of O_K stored as the lower-triangular basis
///
///     [ a  0 ]
///     [ b  c ]
///
/// whose columns are the Z-generators a + b*theta and c*theta. Nonzero ideals
/// have a > 0, c > 0 and 0 <= b < c, which makes the form unique; the zero
/// ideal is a = b = c = 0.
class IdealHNF {
 public:
  static IdealHNF zero(std::int64_t m) { return IdealHNF(m, 0, 0, 0); }

  std::int64_t m() const { return m_; }
  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(c_) == 0; }
  // |det basis|, i.e. [O_K : I]; zero for the zero ideal.
  Integer norm() const { return abs(a_ * c_); }
  std::array<KElement, 2> generators() const;

  // Throws std::invalid_argument when the ideals live in different fields.
  friend bool operator==(const IdealHNF& x, const IdealHNF& y);

 private:
  friend IdealHNF ideal_from_generators(std::span<const KElement>, const FieldParams&);
  IdealHNF(std::int64_t m, Integer a, Integer b, Integer c)
      : m_(m), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  std::int64_t m_;
  Integer a_;
  Integer b_;
  Integer c_;
};

// The O_K-module generated by gens. Every generator must be integral
// (std::invalid_argument otherwise); empty or all-zero input gives the zero ideal.
IdealHNF ideal_from_generators(std::span<const KElement> gens, const FieldParams& params);
IdealHNF ideal_from_generators(std::initializer_list<KElement> gens, const FieldParams& params);

bool ideal_equal(const IdealHNF& x, const IdealHNF& y);
IdealHNF ideal_mul(const IdealHNF& x, const IdealHNF& y);
Integer ideal_norm(const IdealHNF& x);

}  // namespace bianchi
