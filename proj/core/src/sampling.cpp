#include "bianchi/sampling.hpp"

#include <array>
#include <stdexcept>
#include <vector>

#include "bianchi/gamma_star.hpp"

namespace bianchi {

long Sampler::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

KElement Sampler::integral_element(const FieldParams& params, long height) {
  const long a = uniform(-height, height);
  const long b = uniform(-height, height);
  return from_theta_coords(params.m, a, b);
}

ExtendedMatrix Sampler::gamma_element(const FieldParams& params, long height) {
  for (;;) {
    KElement alpha = integral_element(params, height);
    if (alpha.is_zero()) continue;
    KElement beta = integral_element(params, height);
    KElement gamma = integral_element(params, height);
    KElement delta = (KElement::one(params.m) + beta * gamma) / alpha;
    if (!is_integral(delta)) continue;
    if (uniform(0, 1) == 1) {
      // Also cover matrices whose large entry sits elsewhere.
      return ext_new(1, KMatrix2(-beta, alpha, -delta, gamma));
    }
    return ext_new(1, KMatrix2(std::move(alpha), std::move(beta), std::move(gamma), std::move(delta)));
  }
}

ExtendedMatrix Sampler::gamma_word(const FieldParams& params, int length, long height) {
  const std::int64_t m = params.m;
  ExtendedMatrix word = ExtendedMatrix::identity(m);
  for (int i = 0; i < length; ++i) {
    const KElement x = integral_element(params, height);
    KMatrix2 step = KMatrix2::from_integers(m, 0, -1, 1, 0);
    switch (uniform(0, 2)) {
      case 0:
        step = KMatrix2(KElement::one(m), x, KElement::zero(m), KElement::one(m));
        break;
      case 1:
        step = KMatrix2(KElement::one(m), KElement::zero(m), x, KElement::one(m));
        break;
      default:
        break;
    }
    word = ext_mul(word, ext_new(1, step));
  }
  return word;
}

ExtendedMatrix Sampler::coset_element(const FieldParams& params, std::int64_t d, long height) {
  return ext_mul(gamma_element(params, height), atkin_lehner(params, d));
}

namespace {

ExtendedMatrix upper_triangular(Sampler& s, const FieldParams& params, long height) {
  KElement a = s.integral_element(params, height);
  while (a.is_zero()) a = s.integral_element(params, height);
  const long k = s.uniform(1, 3);
  const KElement b = s.integral_element(params, height);
  const KElement c = a.conj() * Rational(k);
  const Integer d = Integer((a * c).x().get_num());
  return ext_new(d, KMatrix2(std::move(a), b, KElement::zero(params.m), c));
}

}  // namespace

ExtendedMatrix Sampler::extended_element(const FieldParams& params, long height) {
  return ext_mul(gamma_element(params, height), upper_triangular(*this, params, height));
}

ExtendedMatrix Sampler::vanishing_corner_element(const FieldParams& params, long height) {
  const std::int64_t m = params.m;
  const ExtendedMatrix j = ext_new(1, KMatrix2::from_integers(m, 0, -1, 1, 0));
  const KElement t = integral_element(params, height);
  const KElement u = integral_element(params, height);
  const ExtendedMatrix lower = ext_new(1, KMatrix2(KElement::one(m), KElement::zero(m), t, KElement::one(m)));
  const ExtendedMatrix upper = ext_new(1, KMatrix2(KElement::one(m), u, KElement::zero(m), KElement::one(m)));
  return ext_mul(ext_mul(lower, ext_mul(j, upper_triangular(*this, params, height))), upper);
}

void enumerate_integral_matrices(const FieldParams& params, long height,
                                 const std::function<bool(std::int64_t)>& keep,
                                 const std::function<void(const KMatrix2&, std::int64_t)>& visit) {
  if (height < 0 || height > 20) throw std::invalid_argument("enumeration height out of range");
  // theta^2 = tr * theta - nm
  const std::int64_t tr = params.half_integral() ? 1 : 0;
  const std::int64_t nm = params.half_integral() ? (1 + params.m) / 4 : params.m;
  struct Coord {
    std::int64_t a, b;
  };
  std::vector<Coord> values;
  for (long a = -height; a <= height; ++a) {
    for (long b = -height; b <= height; ++b) values.push_back({a, b});
  }
  auto mul = [&](const Coord& x, const Coord& y) {
    return Coord{x.a * y.a - x.b * y.b * nm, x.a * y.b + x.b * y.a + x.b * y.b * tr};
  };
  auto as_k = [&](const Coord& x) { return from_theta_coords(params.m, x.a, x.b); };
  for (const Coord& alpha : values) {
    for (const Coord& delta : values) {
      const Coord ad = mul(alpha, delta);
      for (const Coord& beta : values) {
        for (const Coord& gamma : values) {
          const Coord bg = mul(beta, gamma);
          if (ad.b != bg.b) continue;
          const std::int64_t det = ad.a - bg.a;
          if (!keep(det)) continue;
          visit(KMatrix2(as_k(alpha), as_k(beta), as_k(gamma), as_k(delta)), det);
        }
      }
    }
  }
}

}  // namespace bianchi
