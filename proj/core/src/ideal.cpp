#include "bianchi/ideal.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace bianchi {

namespace {

void require_same_field(const IdealHNF& x, const IdealHNF& y) {
  if (x.m() != y.m()) {
    throw std::invalid_argument("ideals of different fields (m=" + std::to_string(x.m()) +
                                " and m=" + std::to_string(y.m()) + ")");
  }
}

// Incremental HNF of a Z-submodule of Z^2; vectors are (1-coord, theta-coord).
struct HnfBuilder {
  Integer a = 0, b = 0, c = 0;

  void insert(Integer x, Integer y) {
    if (sgn(x) == 0) {
      c = gcd(c, y);
      return;
    }
    if (sgn(a) == 0) {
      if (sgn(x) < 0) {
        x = -x;
        y = -y;
      }
      a = x;
      b = y;
      return;
    }
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), x.get_mpz_t());
    // (x/g)(a, b) - (a/g)(x, y) has vanishing first coordinate.
    Integer rest = (x / g) * b - (a / g) * y;
    b = s * b + t * y;
    a = g;
    c = gcd(c, rest);
  }

  void reduce() {
    if (sgn(c) != 0) {
      mpz_fdiv_r(b.get_mpz_t(), b.get_mpz_t(), c.get_mpz_t());
    }
  }
};

}  // namespace

std::array<KElement, 2> IdealHNF::generators() const {
  return {from_theta_coords(m_, a_, b_), from_theta_coords(m_, 0, c_)};
}

bool operator==(const IdealHNF& x, const IdealHNF& y) {
  require_same_field(x, y);
  return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
}

IdealHNF ideal_from_generators(std::span<const KElement> gens, const FieldParams& params) {
  HnfBuilder builder;
  for (const KElement& g : gens) {
    if (g.m() != params.m) {
      throw std::invalid_argument("generator belongs to m=" + std::to_string(g.m()) +
                                  ", expected m=" + std::to_string(params.m));
    }
    if (!is_integral(g)) {
      throw std::invalid_argument("ideal generator is not in O_K");
    }
    // O_K g = Z g + Z theta g.
    for (const KElement& z : {g, g * params.theta}) {
      auto [x, y] = theta_coords(z);
      builder.insert(x.get_num(), y.get_num());
    }
  }
  builder.reduce();
  return IdealHNF(params.m, std::move(builder.a), std::move(builder.b), std::move(builder.c));
}

IdealHNF ideal_from_generators(std::initializer_list<KElement> gens, const FieldParams& params) {
  return ideal_from_generators(std::span<const KElement>(gens.begin(), gens.size()), params);
}

bool ideal_equal(const IdealHNF& x, const IdealHNF& y) { return x == y; }

IdealHNF ideal_mul(const IdealHNF& x, const IdealHNF& y) {
  require_same_field(x, y);
  const FieldParams params = field_params(x.m());
  std::vector<KElement> products;
  products.reserve(4);
  for (const KElement& g : x.generators()) {
    for (const KElement& h : y.generators()) products.push_back(g * h);
  }
  return ideal_from_generators(products, params);
}

Integer ideal_norm(const IdealHNF& x) { return x.norm(); }

}  // namespace bianchi
