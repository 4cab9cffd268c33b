#include "bianchi/gamma_star.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bianchi {

namespace {

Integer omega_norm(const FieldParams& params) { return params.omega.norm().get_num(); }

}  // namespace

void require_label(const FieldParams& params, std::int64_t d) {
  if (d <= 0) throw std::invalid_argument("d must be positive, got " + std::to_string(d));
  if (!is_squarefree(d)) {
    throw std::invalid_argument("d not squarefree: " + std::to_string(d));
  }
  if ((-params.d_K) % d != 0) {
    throw std::invalid_argument("d = " + std::to_string(d) + " does not divide |d_K| = " +
                                std::to_string(-params.d_K));
  }
}

BezoutPair canonical_bezout(const FieldParams& params, std::int64_t d) {
  require_label(params, d);
  if (d == 1) return {1, 0};
  const Integer cofactor = omega_norm(params) / d;
  Integer g, s, t;
  const Integer dd = d;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), dd.get_mpz_t(), cofactor.get_mpz_t());
  if (g != 1) {
    throw std::logic_error("gcd(d, N(omega)/d) != 1 for d = " + std::to_string(d));
  }
  // s d + t cofactor = 1; shift s into (0, cofactor].
  Integer u;
  mpz_fdiv_r(u.get_mpz_t(), s.get_mpz_t(), cofactor.get_mpz_t());
  if (sgn(u) == 0) u = cofactor;
  Integer v = (u * d - 1) / cofactor;
  return {u, v};
}

BezoutPair shifted_bezout(const FieldParams& params, std::int64_t d, long k) {
  BezoutPair uv = canonical_bezout(params, d);
  uv.u += Integer(omega_norm(params) / d) * k;
  uv.v += Integer(d) * k;
  return uv;
}

ExtendedMatrix atkin_lehner(const FieldParams& params, std::int64_t d) {
  return atkin_lehner(params, d, canonical_bezout(params, d));
}

ExtendedMatrix atkin_lehner(const FieldParams& params, std::int64_t d, const BezoutPair& uv) {
  require_label(params, d);
  if (uv.u * d - uv.v * (omega_norm(params) / d) != 1) {
    throw std::invalid_argument("(u, v) does not solve u d - v N(omega)/d = 1");
  }
  const std::int64_t m = params.m;
  KMatrix2 a(KElement(m, Rational(uv.u * d)), params.omega * Rational(uv.v), params.omega.conj(),
             KElement(m, d));
  return ext_new(d, a);
}

IdealHNF content_ideal(const KMatrix2& b, const FieldParams& params) {
  return ideal_from_generators(std::span<const KElement>(b.entries()), params);
}

bool is_member_gamma_star(const ExtendedMatrix& p) {
  const FieldParams params = field_params(p.m());
  const KMatrix2 b = integral_representative(p);
  const IdealHNF det_ideal = ideal_from_generators({b.det()}, params);
  const IdealHNF content = content_ideal(b, params);
  return ideal_equal(det_ideal, ideal_mul(content, content));
}

CosetLabel classify_coset(const ExtendedMatrix& p) {
  if (!is_member_gamma_star(p)) {
    throw std::invalid_argument("matrix is not in the maximal discrete extension");
  }
  const FieldParams params = field_params(p.m());
  if (!p.f().fits_slong_p() || (-params.d_K) % p.f().get_si() != 0) {
    throw std::logic_error("canonical denominator " + p.f().get_str() + " does not divide d_K");
  }
  const std::int64_t d = p.f().get_si();
  if (!is_gamma_member(ext_mul(p, ext_inv(atkin_lehner(params, d))))) {
    throw std::logic_error("P V_f^-1 is not in SL_2(O_K)");
  }
  return {d};
}

CosetLabel coset_law(CosetLabel d, CosetLabel e) {
  const std::int64_t g = std::gcd(d.d, e.d);
  return {(d.d / g) * (e.d / g)};
}

std::uint64_t index_gamma_star(const FieldParams& params) {
  return std::uint64_t{1} << prime_divisors(params.d_K).size();
}

FactorGroupTable factor_group_table(const FieldParams& params) {
  FactorGroupTable table;
  for (std::int64_t d : squarefree_divisors(params.d_K)) table.labels.push_back({d});
  const std::size_t n = table.labels.size();
  table.product.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const CosetLabel f = coset_law(table.labels[i], table.labels[j]);
      auto it = std::lower_bound(table.labels.begin(), table.labels.end(), f);
      if (it == table.labels.end() || *it != f) {
        throw std::logic_error("coset law left the label set");
      }
      table.product[i][j] = static_cast<std::size_t>(it - table.labels.begin());
    }
  }
  return table;
}

std::uint64_t prime_support_mask(CosetLabel label, const FieldParams& params) {
  const auto primes = prime_divisors(params.d_K);
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (label.d % primes[i] == 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

}  // namespace bianchi
