#include "bianchi/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "bianchi/gamma_star.hpp"
#include "bianchi/ideal.hpp"
#include "bianchi/sampling.hpp"
#include "bianchi/spin.hpp"

namespace bianchi {

namespace {

class Tally {
 public:
  explicit Tally(SuiteResult& result, std::int64_t m) : result_(result), m_(m) {}

  void check(bool ok, const std::function<Json()>& witness) {
    if (ok) {
      ++result_.passed;
      return;
    }
    ++result_.failed;
    if (!result_.counterexample) result_.counterexample = Json{{"m", m_}, {"input", witness()}};
  }

 private:
  SuiteResult& result_;
  std::int64_t m_;
};

std::vector<KElement> units(const FieldParams& params) {
  const std::int64_t m = params.m;
  std::vector<KElement> u{KElement::one(m), -KElement::one(m)};
  if (m == 1) {
    u.push_back(KElement::root(m));
    u.push_back(-KElement::root(m));
  } else if (m == 3) {
    const KElement zeta(m, Rational(1, 2), Rational(1, 2));
    for (const KElement& z : {zeta, zeta * zeta}) {
      u.push_back(z);
      u.push_back(-z);
    }
  }
  return u;
}

Json elements_json(const std::vector<KElement>& gens) {
  Json j = Json::array();
  for (const KElement& g : gens) j.push_back(to_json(g));
  return j;
}

using Suite = std::function<void(const FieldParams&, const VerifyOptions&, Sampler&, Tally&)>;

void omega_gcd(const FieldParams& params, const VerifyOptions&, Sampler&, Tally& t) {
  const Integer n = params.omega.norm().get_num();
  for (std::int64_t d : squarefree_divisors(params.d_K)) {
    const Integer cofactor = n / d;
    t.check(n % d == 0 && gcd(Integer(d), cofactor) == 1, [&] { return Json{{"d", d}}; });
  }
}

void hnf_canonicity(const FieldParams& params, const VerifyOptions& o, Sampler& s, Tally& t) {
  const auto us = units(params);
  for (int i = 0; i < o.samples; ++i) {
    std::vector<KElement> gens;
    const long count = s.uniform(1, 3);
    for (long k = 0; k < count; ++k) gens.push_back(s.integral_element(params, 3));
    const IdealHNF base = ideal_from_generators(gens, params);
    std::vector<KElement> twisted = gens;
    std::reverse(twisted.begin(), twisted.end());
    for (KElement& g : twisted) g *= us[s.uniform(0, static_cast<long>(us.size()) - 1)];
    t.check(ideal_from_generators(twisted, params) == base, [&] { return elements_json(gens); });
  }
}

void norm_multiplicative(const FieldParams& params, const VerifyOptions& o, Sampler& s, Tally& t) {
  for (int i = 0; i < o.samples; ++i) {
    const std::vector<KElement> ga{s.integral_element(params, 3), s.integral_element(params, 3)};
    const std::vector<KElement> gb{s.integral_element(params, 3), s.integral_element(params, 3)};
    const IdealHNF a = ideal_from_generators(ga, params);
    const IdealHNF b = ideal_from_generators(gb, params);
    t.check(ideal_norm(ideal_mul(a, b)) == ideal_norm(a) * ideal_norm(b), [&] {
      return Json{{"a", elements_json(ga)}, {"b", elements_json(gb)}};
    });
    const KElement& z = ga[0];
    if (!z.is_zero()) {
      t.check(Rational(ideal_norm(ideal_from_generators({z}, params))) == z.norm(),
              [&] { return to_json(z); });
    }
  }
}

void group_laws(const FieldParams& params, const VerifyOptions& o, Sampler& s, Tally& t) {
  const ExtendedMatrix id = ExtendedMatrix::identity(params.m);
  for (int i = 0; i < o.samples; ++i) {
    const ExtendedMatrix p = s.extended_element(params, 2);
    const ExtendedMatrix q = s.extended_element(params, 2);
    const ExtendedMatrix r = s.coset_element(params, 1, 2);
    const ExtendedMatrix pq = ext_mul(p, q);
    t.check(ext_mul(pq, r) == ext_mul(p, ext_mul(q, r)), [&] { return to_json(p); });
    t.check(ext_mul(p, ext_inv(p)) == id && ext_mul(ext_inv(p), p) == id, [&] { return to_json(p); });
    t.check(pq.A().det() == KElement(params.m, Rational(pq.f())) && is_squarefree(pq.f()),
            [&] { return to_json(pq); });
  }
}

void algebraic_integer_entries(const FieldParams& params, const VerifyOptions& o, Sampler& s,
                               Tally& t) {
  for (std::int64_t d : squarefree_divisors(params.d_K)) {
    for (int i = 0; i < o.samples; ++i) {
      const ExtendedMatrix p = s.coset_element(params, d, 2);
      bool ok = true;
      for (const KElement& x : p.A().entries()) ok = ok && is_algebraic_integer(x, p.f());
      t.check(ok, [&] { return to_json(p); });
    }
  }
}

void atkin_lehner_square(const FieldParams& params, const VerifyOptions&, Sampler&, Tally& t) {
  for (std::int64_t d : squarefree_divisors(params.d_K)) {
    const ExtendedMatrix v = atkin_lehner(params, d);
    t.check(is_gamma_member(ext_mul(v, v)), [&] { return to_json(v); });
  }
}

void coset_law_suite(const FieldParams& params, const VerifyOptions&, Sampler&, Tally& t) {
  const auto labels = squarefree_divisors(params.d_K);
  for (std::int64_t d : labels) {
    for (std::int64_t e : labels) {
      const ExtendedMatrix prod = ext_mul(atkin_lehner(params, d), atkin_lehner(params, e));
      t.check(classify_coset(prod) == coset_law({d}, {e}), [&] { return Json{{"d", d}, {"e", e}}; });
    }
  }
}

void bezout_independence(const FieldParams& params, const VerifyOptions&, Sampler&, Tally& t) {
  for (std::int64_t d : squarefree_divisors(params.d_K)) {
    std::vector<ExtendedMatrix> vs;
    for (long k : {0L, 1L, -1L}) vs.push_back(atkin_lehner(params, d, shifted_bezout(params, d, k)));
    for (const ExtendedMatrix& v : vs) {
      for (const ExtendedMatrix& w : vs) {
        t.check(is_gamma_member(ext_mul(v, ext_inv(w))) && is_gamma_member(ext_mul(ext_inv(w), v)),
                [&] { return Json{{"d", d}, {"V", to_json(v)}, {"W", to_json(w)}}; });
      }
    }
  }
}

void normality(const FieldParams& params, const VerifyOptions& o, Sampler& s, Tally& t) {
  for (std::int64_t d : squarefree_divisors(params.d_K)) {
    const ExtendedMatrix v = atkin_lehner(params, d);
    for (int i = 0; i < o.samples; ++i) {
      const ExtendedMatrix g = s.gamma_element(params, 2);
      t.check(is_gamma_member(ext_mul(ext_mul(v, g), ext_inv(v))),
              [&] { return Json{{"d", d}, {"M", to_json(g)}}; });
    }
  }
}

void coset_distinctness(const FieldParams& params, const VerifyOptions&, Sampler&, Tally& t) {
  const auto labels = squarefree_divisors(params.d_K);
  for (std::int64_t d : labels) {
    for (std::int64_t e : labels) {
      const bool same = is_gamma_member(ext_mul(atkin_lehner(params, d), ext_inv(atkin_lehner(params, e))));
      t.check(same == (d == e), [&] { return Json{{"d", d}, {"e", e}}; });
    }
  }
}

void criterion_equivalence(const FieldParams& params, const VerifyOptions& o, Sampler&, Tally& t) {
  const std::int64_t abs_dk = -params.d_K;
  auto keep = [&](std::int64_t det) {
    return det > 0 && (abs_dk % det == 0 || det <= 10) && is_squarefree(det);
  };
  enumerate_integral_matrices(params, o.height, keep, [&](const KMatrix2& b, std::int64_t det) {
    const ExtendedMatrix p = ext_new(det, b);
    const bool member = is_member_gamma_star(p);
    if (abs_dk % det == 0) {
      const bool in_coset = is_gamma_member(ext_mul(p, ext_inv(atkin_lehner(params, det))));
      t.check(member == in_coset, [&] { return to_json(p); });
    } else if (det <= 10) {
      t.check(!member, [&] { return to_json(p); });
    }
  });
}

void factor_group(const FieldParams& params, const VerifyOptions&, Sampler&, Tally& t) {
  const FactorGroupTable table = factor_group_table(params);
  const std::size_t n = table.labels.size();
  bool ok = n == index_gamma_star(params);
  for (std::size_t i = 0; i < n && ok; ++i) {
    std::vector<std::size_t> row = table.product[i];
    std::sort(row.begin(), row.end());
    for (std::size_t j = 0; j < n; ++j) ok = ok && row[j] == j;
    ok = ok && table.labels[table.product[i][i]].d == 1;
    for (std::size_t j = 0; j < n; ++j) {
      const auto mi = prime_support_mask(table.labels[i], params);
      const auto mj = prime_support_mask(table.labels[j], params);
      ok = ok && prime_support_mask(table.labels[table.product[i][j]], params) == (mi ^ mj);
    }
  }
  t.check(ok, [&] { return Json{{"d_K", params.d_K}}; });
}

void homomorphism(const FieldParams& params, const VerifyOptions& o, Sampler& s, Tally& t) {
  for (int i = 0; i < o.samples; ++i) {
    const ExtendedMatrix p = s.extended_element(params, 2);
    const ExtendedMatrix q = s.extended_element(params, 2);
    t.check(phi(ext_mul(p, q)) == compose(phi(p), phi(q)),
            [&] { return Json{{"P", to_json(p)}, {"Q", to_json(q)}}; });
    t.check(phi(-p) == phi(p), [&] { return to_json(p); });
  }
}

void kernel(const FieldParams& params, const VerifyOptions& o, Sampler&, Tally& t) {
  const ExtendedMatrix id = ExtendedMatrix::identity(params.m);
  const OrthoMap one = OrthoMap::identity(params.m);
  enumerate_integral_matrices(
      params, o.height, [](std::int64_t det) { return det == 1; },
      [&](const KMatrix2& b, std::int64_t) {
        const ExtendedMatrix p = ext_new(1, b);
        t.check((phi(p) == one) == (p == id || p == -id), [&] { return to_json(p); });
      });
}

void orthogonality(const FieldParams& params, const VerifyOptions& o, Sampler& s, Tally& t) {
  for (int i = 0; i < o.samples; ++i) {
    const ExtendedMatrix p = s.extended_element(params, 2);
    t.check(in_so0(phi(p)), [&] { return to_json(p); });
  }
}

void lattice_preservation(const FieldParams& params, const VerifyOptions& o, Sampler& s, Tally& t) {
  for (std::int64_t d : squarefree_divisors(params.d_K)) {
    for (int i = 0; i < o.samples; ++i) {
      const ExtendedMatrix p = s.coset_element(params, d, 2);
      const OrthoMap image = phi(p);
      t.check(preserves_lattice(image) && preserves_dual_lattice(image), [&] { return to_json(p); });
    }
  }
  t.check(dual_index(params) == -params.d_K, [&] { return Json{{"d_K", params.d_K}}; });
}

void discriminant_kernel(const FieldParams& params, const VerifyOptions& o, Sampler& s, Tally& t) {
  for (std::int64_t d : squarefree_divisors(params.d_K)) {
    for (int i = 0; i < o.samples; ++i) {
      const ExtendedMatrix p = s.coset_element(params, d, 2);
      t.check(in_discriminant_kernel(phi(p)) == (classify_coset(p).d == 1), [&] { return to_json(p); });
    }
  }
}

void lift_roundtrip(const FieldParams& params, const VerifyOptions& o, Sampler& s, Tally& t) {
  for (int i = 0; i < o.samples; ++i) {
    const ExtendedMatrix p = i % 5 == 0 ? s.vanishing_corner_element(params, 2)
                                        : s.extended_element(params, 2);
    bool ok = false;
    try {
      const ExtendedMatrix q = spin_lift(phi(p));
      ok = q == sign_normalized(p);
    } catch (const LiftError&) {
      ok = false;
    }
    t.check(ok, [&] { return to_json(p); });
  }
}

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> all{
      {"extended.algebraic_integer_entries", algebraic_integer_entries},
      {"extended.group_laws", group_laws},
      {"field.hnf_canonicity", hnf_canonicity},
      {"field.norm_multiplicative", norm_multiplicative},
      {"field.omega_gcd", omega_gcd},
      {"gamma_star.atkin_lehner_square", atkin_lehner_square},
      {"gamma_star.bezout_independence", bezout_independence},
      {"gamma_star.coset_distinctness", coset_distinctness},
      {"gamma_star.coset_law", coset_law_suite},
      {"gamma_star.criterion_equivalence", criterion_equivalence},
      {"gamma_star.factor_group", factor_group},
      {"gamma_star.normality", normality},
      {"spin.discriminant_kernel", discriminant_kernel},
      {"spin.homomorphism", homomorphism},
      {"spin.kernel", kernel},
      {"spin.lattice_preservation", lattice_preservation},
      {"spin.lift_roundtrip", lift_roundtrip},
      {"spin.orthogonality", orthogonality},
  };
  return all;
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
  std::vector<FieldParams> fields;
  for (std::int64_t m : options.ms) fields.push_back(field_params(m));
  std::vector<SuiteResult> results;
  std::uint64_t suite_index = 0;
  for (const auto& [name, suite] : suites()) {
    SuiteResult result;
    result.name = name;
    for (const FieldParams& params : fields) {
      // Each (suite, m) pair gets its own stream so suites stay independent.
      Sampler sampler(options.seed * 1'000'003 + suite_index * 1'009 + static_cast<std::uint64_t>(params.m));
      Tally tally(result, params.m);
      suite(params, options, sampler, tally);
    }
    results.push_back(std::move(result));
    ++suite_index;
  }
  return results;
}

}  // namespace bianchi
