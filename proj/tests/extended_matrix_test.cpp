#include "bianchi/extended_matrix.hpp"

#include <gtest/gtest.h>

#include "bianchi/gamma_star.hpp"
#include "bianchi/sampling.hpp"
#include "support/oracles.hpp"

namespace bianchi {
namespace {

KMatrix2 v2_matrix() {
  return KMatrix2(KElement(1, 2), KElement(1, 1, 1), KElement(1, 1, -1), KElement(1, 2));
}

TEST(ExtendedMatrixTest, Construction) {
  EXPECT_EQ(ext_new(1, KMatrix2::identity(1)), ExtendedMatrix::identity(1));

  const ExtendedMatrix v2 = ext_new(2, v2_matrix());
  EXPECT_EQ(v2.f(), 2);
  EXPECT_EQ(v2.A(), v2_matrix());

  const ExtendedMatrix scalar = ext_new(4, KMatrix2::from_integers(1, 2, 0, 0, 2));
  EXPECT_EQ(scalar, ExtendedMatrix::identity(1));
}

TEST(ExtendedMatrixTest, ConstructionErrors) {
  EXPECT_THROW(ext_new(3, v2_matrix()), std::invalid_argument);
  EXPECT_THROW(ext_new(0, KMatrix2::from_integers(1, 0, 1, 0, 0)), std::invalid_argument);
  EXPECT_THROW(ext_new(-1, KMatrix2::from_integers(1, -1, 0, 0, 1)), std::invalid_argument);
  const KMatrix2 fractional(KElement(1, Rational(1, 2)), KElement::zero(1), KElement::zero(1), KElement(1, 2));
  EXPECT_THROW(ext_new(1, fractional), std::invalid_argument);
}

TEST(ExtendedMatrixTest, ProductsAndInverses) {
  const ExtendedMatrix v2 = ext_new(2, v2_matrix());
  EXPECT_EQ(ext_mul(v2, ExtendedMatrix::identity(1)), v2);
  const ExtendedMatrix sq = ext_mul(v2, v2);
  EXPECT_EQ(sq.f(), 1);
  EXPECT_EQ(sq.A(), KMatrix2(KElement(1, 3), KElement(1, 2, 2), KElement(1, 2, -2), KElement(1, 3)));

  const ExtendedMatrix inv = ext_inv(v2);
  EXPECT_EQ(inv.f(), 2);
  EXPECT_EQ(inv.A(), KMatrix2(KElement(1, 2), KElement(1, -1, -1), KElement(1, -1, 1), KElement(1, 2)));
  EXPECT_EQ(ext_mul(v2, inv), ExtendedMatrix::identity(1));
}

TEST(ExtendedMatrixTest, GammaMembership) {
  EXPECT_TRUE(is_gamma_member(ExtendedMatrix::identity(1)));
  const ExtendedMatrix v2 = ext_new(2, v2_matrix());
  EXPECT_TRUE(is_gamma_member(ext_mul(v2, v2)));
  EXPECT_FALSE(is_gamma_member(v2));
  // f = 1 but a half-integral entry: (1/sqrt(4)) (2, 1; 0, 2).
  EXPECT_FALSE(is_gamma_member(ext_new(4, KMatrix2::from_integers(1, 2, 1, 0, 2))));
}

TEST(ExtendedMatrixTest, IntegralRepresentative) {
  const ExtendedMatrix p = ext_new(4, KMatrix2::from_integers(1, 2, 1, 0, 2));
  EXPECT_EQ(common_denominator(p.A()), 2);
  EXPECT_EQ(integral_representative(p), KMatrix2::from_integers(1, 2, 1, 0, 2));
}

TEST(ExtendedMatrixTest, CanonicalFormIsScaleInvariant) {
  Sampler s(1);
  for (std::int64_t m : {1, 2, 3, 5, 10}) {
    const FieldParams k = field_params(m);
    for (int i = 0; i < 50; ++i) {
      const ExtendedMatrix p = s.extended_element(k, 2);
      const KMatrix2 b = integral_representative(p);
      const Integer g = common_denominator(p.A());
      for (long extra : {1L, 2L, 3L}) {
        const Integer d = Integer(g * g * p.f() * extra * extra);
        ASSERT_EQ(ext_new(d, b * KElement(m, extra)), p);
      }
    }
  }
}

TEST(ExtendedMatrixTest, GroupLawsMatchComplexArithmetic) {
  Sampler s(2);
  for (std::int64_t m : {1, 2, 3, 5, 10, 11}) {
    const FieldParams k = field_params(m);
    for (int i = 0; i < 80; ++i) {
      const ExtendedMatrix p = s.extended_element(k, 2);
      const ExtendedMatrix q = s.extended_element(k, 2);
      const ExtendedMatrix r = s.coset_element(k, squarefree_divisors(k.d_K).back(), 1);
      const ExtendedMatrix pq = ext_mul(p, q);
      EXPECT_EQ(ext_mul(pq, r), ext_mul(p, ext_mul(q, r)));
      EXPECT_EQ(ext_mul(p, ext_inv(p)), ExtendedMatrix::identity(m));
      EXPECT_EQ(pq.A().det(), KElement(m, Rational(pq.f())));
      EXPECT_TRUE(is_squarefree(pq.f()));
      const testing::CMatrix expected = testing::mul(testing::numeric(p), testing::numeric(q));
      const testing::CMatrix actual = testing::numeric(pq);
      const long double scale = std::abs(expected[0]) + std::abs(expected[1]) + std::abs(expected[2]) +
                                std::abs(expected[3]) + 1;
      EXPECT_LT(testing::distance(expected, actual), 1e-12L * scale);
    }
  }
}

TEST(MinPolyTest, Examples) {
  EXPECT_EQ(min_poly_over_Q(KElement(1, 1), 2), (std::vector<Rational>{Rational(-1, 2), 0, 1}));
  EXPECT_EQ(min_poly_over_Q(KElement(1, 2), 2), (std::vector<Rational>{-2, 0, 1}));
  EXPECT_EQ(min_poly_over_Q(KElement(1, 1, 1), 2), (std::vector<Rational>{1, 0, 0, 0, 1}));
  EXPECT_EQ(min_poly_over_Q(KElement(5, 3), 1), (std::vector<Rational>{-3, 1}));
  EXPECT_EQ(min_poly_over_Q(KElement(5, 1, 1), 1), (std::vector<Rational>{6, -2, 1}));
  // sqrt(-5)/sqrt(2): square is -5/2.
  EXPECT_EQ(min_poly_over_Q(KElement::root(5), 2), (std::vector<Rational>{Rational(5, 2), 0, 1}));
  EXPECT_EQ(min_poly_over_Q(KElement::zero(5), 3), (std::vector<Rational>{0, 1}));
}

TEST(MinPolyTest, AlgebraicIntegers) {
  EXPECT_TRUE(is_algebraic_integer(KElement(1, 1, 1), 2));
  EXPECT_FALSE(is_algebraic_integer(KElement(1, 1), 2));
  EXPECT_TRUE(is_algebraic_integer(KElement(3, Rational(1, 2), Rational(1, 2)), 1));
  EXPECT_FALSE(is_algebraic_integer(KElement(1, Rational(1, 2), Rational(1, 2)), 1));
}

TEST(MinPolyTest, VanishesAtTheNumericValue) {
  Sampler s(9);
  for (std::int64_t m : {1, 2, 3, 5, 6}) {
    const FieldParams k = field_params(m);
    for (long f : {1L, 2L, 3L, 5L, 6L, 10L}) {
      for (int i = 0; i < 30; ++i) {
        const KElement x = s.integral_element(k, 4) / Rational(s.uniform(1, 3));
        const auto coeffs = min_poly_over_Q(x, f);
        const testing::Complex value = testing::numeric(x) / std::sqrt(static_cast<long double>(f));
        testing::Complex acc = 0, power = 1;
        long double size = 0;
        for (const Rational& c : coeffs) {
          acc += power * static_cast<long double>(c.get_d());
          size += std::abs(power) * std::abs(static_cast<long double>(c.get_d()));
          power *= value;
        }
        EXPECT_LT(std::abs(acc), 1e-12L * (size + 1));
        EXPECT_EQ(coeffs.back(), 1);
        const std::size_t degree = coeffs.size() - 1;
        EXPECT_TRUE(degree == 1 || degree == 2 || degree == 4);
      }
    }
  }
}

TEST(MinPolyTest, CosetEntriesAreAlgebraicIntegers) {
  Sampler s(4);
  for (std::int64_t m : {1, 2, 3, 5, 10, 30}) {
    const FieldParams k = field_params(m);
    for (std::int64_t d : squarefree_divisors(k.d_K)) {
      for (int i = 0; i < 20; ++i) {
        const ExtendedMatrix p = s.coset_element(k, d, 2);
        for (const KElement& x : p.A().entries()) ASSERT_TRUE(is_algebraic_integer(x, p.f())) << p;
      }
    }
  }
}

}  // namespace
}  // namespace bianchi
