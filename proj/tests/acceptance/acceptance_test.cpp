// Acceptance suite. One line per criterion on stdout, nonzero exit if any
// criterion fails or exceeds its time budget. Every comparison is exact.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bianchi/gamma_star.hpp"
#include "bianchi/sampling.hpp"
#include "bianchi/spin.hpp"
#include "support/oracles.hpp"

using namespace bianchi;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Tally {
  std::size_t checks = 0;
  void require(bool condition, const std::function<std::string()>& what) {
    ++checks;
    if (!condition) throw Failure(what());
  }
};

template <class T>
std::string show(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

std::vector<std::int64_t> squarefree_up_to(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t m = 1; m <= n; ++m) {
    bool ok = true;
    for (std::int64_t p = 2; p * p <= m; ++p) ok = ok && m % (p * p) != 0;
    if (ok) out.push_back(m);
  }
  return out;
}

// Primes of |d_K| by trial division, independent of the library.
std::vector<std::int64_t> primes_of(std::int64_t n) {
  std::vector<std::int64_t> out;
  n = n < 0 ? -n : n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t discriminant(std::int64_t m) { return m % 4 == 3 ? -m : -4 * m; }

// All products of subsets of the primes of |d_K|.
std::vector<std::int64_t> labels_of(std::int64_t m) {
  const auto primes = primes_of(discriminant(m));
  std::vector<std::int64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << primes.size()); ++mask) {
    std::int64_t d = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask >> i & 1) d *= primes[i];
    }
    out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<std::int64_t> kSampleFields{1, 2, 3, 5, 10};

void index_reproduction(Tally& t) {
  for (std::int64_t m : squarefree_up_to(100)) {
    const FieldParams k = field_params(m);
    const auto expected = labels_of(m);
    std::set<std::int64_t> labels;
    for (std::int64_t d : expected) labels.insert(classify_coset(atkin_lehner(k, d)).d);
    t.require(labels.size() == expected.size(), [&] { return "labels not distinct for m=" + std::to_string(m); });
    t.require(labels.size() == (std::size_t{1} << primes_of(k.d_K).size()),
              [&] { return "label count is not 2^nu for m=" + std::to_string(m); });
    t.require(index_gamma_star(k) == labels.size(), [&] { return "index_gamma_star for m=" + std::to_string(m); });
    for (std::int64_t d : labels) {
      for (std::int64_t e : labels) {
        t.require(labels.count(coset_law({d}, {e}).d) == 1, [&] { return "coset_law leaves labels"; });
        const bool same = is_gamma_member(ext_mul(atkin_lehner(k, d), ext_inv(atkin_lehner(k, e))));
        t.require(same == (d == e), [&] {
          return "V_d V_e^-1 membership wrong for m=" + std::to_string(m) + " d=" + std::to_string(d) +
                 " e=" + std::to_string(e);
        });
      }
    }
  }
}

void atkin_lehner_identities(Tally& t) {
  for (std::int64_t m : squarefree_up_to(100)) {
    const FieldParams k = field_params(m);
    for (std::int64_t d : labels_of(m)) {
      const ExtendedMatrix vd = atkin_lehner(k, d);
      t.require(is_gamma_member(ext_mul(vd, vd)), [&] { return "V_d^2 not in Gamma_K: " + show(vd); });
      for (std::int64_t e : labels_of(m)) {
        const std::int64_t g = std::gcd(d, e);
        const CosetLabel got = classify_coset(ext_mul(vd, atkin_lehner(k, e)));
        t.require(got.d == d * e / (g * g), [&] {
          return "classify(V_d V_e) for m=" + std::to_string(m) + " d=" + std::to_string(d) +
                 " e=" + std::to_string(e) + " gave " + std::to_string(got.d);
        });
      }
    }
  }
}

void well_definedness(Tally& t) {
  for (std::int64_t m : {1, 2, 3, 5, 6, 7, 10, 11, 15, 21, 30}) {
    const FieldParams k = field_params(m);
    const Integer n(m * m + m);
    for (std::int64_t d : labels_of(m)) {
      const BezoutPair base = canonical_bezout(k, d);
      std::vector<ExtendedMatrix> vs;
      for (long shift : {0L, 1L, -1L}) {
        const BezoutPair uv{base.u + shift * (n / d), base.v + shift * d};
        t.require(uv.u * d - uv.v * (n / d) == 1, [&] { return "shifted pair is not Bezout"; });
        vs.push_back(atkin_lehner(k, d, uv));
      }
      t.require(vs[0] != vs[1] && vs[1] != vs[2] && vs[0] != vs[2], [&] { return "pairs not distinct"; });
      for (const auto& v : vs) {
        for (const auto& w : vs) {
          t.require(is_gamma_member(ext_mul(v, ext_inv(w))) && is_gamma_member(ext_mul(ext_inv(w), v)),
                    [&] { return "V V'^-1 not in Gamma_K: " + show(v) + " vs " + show(w); });
        }
      }
    }
  }
}

void criterion_equivalence(Tally& t) {
  for (std::int64_t m : {1, 2, 3}) {
    const FieldParams k = field_params(m);
    const auto labels = labels_of(m);
    std::map<std::int64_t, ExtendedMatrix> inverse_v;
    for (std::int64_t d : labels) inverse_v.emplace(d, ext_inv(atkin_lehner(k, d)));
    std::size_t members = 0;
    testing::for_each_bounded_matrix(k, 2, [&](const KMatrix2& b, const KElement& det) {
      if (!det.is_rational() || !is_integer(det.x()) || sgn(det.x()) <= 0) return;
      const Integer dd = det.x().get_num();
      if (dd > 10 && dd > -k.d_K) return;
      const std::int64_t d = dd.get_si();
      const bool divides = -k.d_K % d == 0;
      if (!is_squarefree(d) || (!divides && d > 10)) return;
      const ExtendedMatrix p = ext_new(dd, b);
      const bool member = is_member_gamma_star(p);
      if (divides) {
        const bool in_coset = is_gamma_member(ext_mul(p, inverse_v.at(d)));
        t.require(member == in_coset, [&] { return "criteria disagree on " + show(b); });
        members += member;
      } else {
        t.require(!member, [&] { return "det " + std::to_string(d) + " accepted: " + show(b); });
      }
    });
    t.require(members > 0, [&] { return "no members enumerated"; });
  }
}

// P^t G P - G, zero for an isometry.
QMatrix gram_defect(const OrthoMap& map, const FieldParams& k) {
  const QMatrix gram = gram_matrix(k);
  return map.P.transpose() * gram * map.P - gram;
}

void spin_homomorphism(Tally& t) {
  Sampler s(5);
  for (std::int64_t m : kSampleFields) {
    const FieldParams k = field_params(m);
    const HermitianK e{1, 1, KElement::zero(m)};
    for (int i = 0; i < 500; ++i) {
      const ExtendedMatrix p = i % 2 ? s.extended_element(k, 2) : s.coset_element(k, labels_of(m).back(), 2);
      const ExtendedMatrix q = s.extended_element(k, 2);
      const OrthoMap pq = phi(ext_mul(p, q));
      t.require(pq == compose(phi(p), phi(q)), [&] { return "phi(PQ) != phi(P)phi(Q) for " + show(p); });
      for (const OrthoMap& image : {pq, phi(p), phi(q)}) {
        t.require(gram_defect(image, k) == QMatrix(4, 4), [&] { return "P^t G P != G"; });
        t.require(image.P.det() == 1, [&] { return "det != 1"; });
        t.require(sgn(image.apply(e).trace()) > 0, [&] { return "trace of image of E not positive"; });
      }
    }
  }
  const FieldParams k1 = field_params(1);
  std::size_t trivial = 0;
  testing::for_each_bounded_matrix(k1, 2, [&](const KMatrix2& b, const KElement& det) {
    if (det != KElement::one(1)) return;
    const ExtendedMatrix p = ext_new(1, b);
    const bool scalar = p == ExtendedMatrix::identity(1) || p == -ExtendedMatrix::identity(1);
    t.require((phi(p) == OrthoMap::identity(1)) == scalar, [&] { return "kernel mismatch at " + show(b); });
    trivial += scalar;
  });
  t.require(trivial == 2, [&] { return "expected exactly +-E in the enumeration"; });
}

// S is in the trace dual iff trace(S H) is an integer for the basis of Lambda_K.
bool in_trace_dual(const HermitianK& s, const LatticeBasis& basis) {
  for (const HermitianK& h : basis.vectors) {
    const KMatrix2 product = s.matrix() * h.matrix();
    if (!is_integer((product(0, 0) + product(1, 1)).x())) return false;
  }
  return true;
}

void lattice_preservation(Tally& t) {
  Sampler s(6);
  for (std::int64_t m : kSampleFields) {
    const FieldParams k = field_params(m);
    const LatticeBasis basis = lattice_basis(k);
    // |det| of the trace-pairing matrix on Lambda_K is the index of Lambda_K in its dual.
    QMatrix pairing(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        const KMatrix2 product = basis.vectors[i].matrix() * basis.vectors[j].matrix();
        pairing(i, j) = (product(0, 0) + product(1, 1)).x();
      }
    }
    t.require(abs(pairing.det()) == -k.d_K, [&] { return "trace pairing index != |d_K|"; });
    t.require(dual_index(k) == -k.d_K, [&] { return "dual_index != |d_K| for m=" + std::to_string(m); });
    const auto dual = dual_basis(k);
    for (const HermitianK& g : dual) t.require(in_trace_dual(g, basis), [&] { return "dual basis not dual"; });

    for (std::int64_t d : labels_of(m)) {
      for (int i = 0; i < 50; ++i) {
        const ExtendedMatrix p = s.coset_element(k, d, 2);
        const OrthoMap map = phi(p);
        t.require(preserves_lattice(map), [&] { return "lattice not preserved by " + show(p); });
        t.require(in_discriminant_kernel(map) == (d == 1),
                  [&] { return "discriminant kernel wrong for d=" + std::to_string(d) + ": " + show(p); });
        for (const HermitianK& g : dual) {
          t.require(in_trace_dual(map.apply(g), basis), [&] { return "dual image left Lambda#: " + show(p); });
        }
      }
    }
  }
}

bool normalized_sign(const ExtendedMatrix& p) {
  for (const KElement& z : p.A().entries()) {
    if (!z.is_zero()) return sgn(z.x()) > 0 || (sgn(z.x()) == 0 && sgn(z.y()) > 0);
  }
  return false;
}

void lift_round_trip(Tally& t) {
  Sampler s(7);
  for (std::int64_t m : kSampleFields) {
    const FieldParams k = field_params(m);
    std::size_t vanishing = 0;
    for (int i = 0; i < 100; ++i) {
      const ExtendedMatrix p = i < 12 ? s.vanishing_corner_element(k, 2) : s.extended_element(k, 2);
      if (p.A().entries()[0].is_zero()) ++vanishing;
      const OrthoMap map = phi(p);
      const ExtendedMatrix q = spin_lift(map);
      t.require(q == p || q == -p, [&] { return "lift of phi(P) is not +-P for " + show(p); });
      t.require(normalized_sign(q), [&] { return "lift sign not normalized: " + show(q); });
      t.require(spin_lift(map) == q && spin_lift(phi(-p)) == q, [&] { return "lift not deterministic"; });
    }
    t.require(vanishing >= 10, [&] { return "too few vanishing-corner samples"; });
  }
}

void algebraic_integers(Tally& t) {
  Sampler s(8);
  for (std::int64_t m : kSampleFields) {
    const FieldParams k = field_params(m);
    for (std::int64_t d : labels_of(m)) {
      for (int i = 0; i < 50; ++i) {
        const ExtendedMatrix p = s.coset_element(k, d, 2);
        t.require(p.f() == d, [&] { return "sample left the coset"; });
        for (const KElement& x : p.A().entries()) {
          t.require(is_algebraic_integer(x, p.f()), [&] { return "entry not integral: " + show(p); });
          // w is integral iff w^2 is, and w^2 = x^2 / d lies in K.
          t.require(is_integral(x * x / Rational(p.f())), [&] { return "square of entry not in O_K"; });
        }
      }
    }
  }
}

void factor_group(Tally& t) {
  for (std::int64_t m : squarefree_up_to(100)) {
    const FieldParams k = field_params(m);
    const auto primes = primes_of(k.d_K);
    const FactorGroupTable table = factor_group_table(k);
    const std::size_t n = table.labels.size();
    t.require(n == (std::size_t{1} << primes.size()), [&] { return "order != 2^nu"; });
    auto mask = [&](std::int64_t d) {
      std::uint64_t bits = 0;
      for (std::size_t i = 0; i < primes.size(); ++i) {
        if (d % primes[i] == 0) bits |= std::uint64_t{1} << i;
      }
      return bits;
    };
    std::set<std::uint64_t> masks;
    for (const CosetLabel& l : table.labels) masks.insert(mask(l.d));
    t.require(masks.size() == n, [&] { return "prime-support map not bijective"; });
    for (std::size_t i = 0; i < n; ++i) {
      t.require(table.labels[table.product[i][i]].d == 1, [&] { return "element not self-inverse"; });
      std::set<std::size_t> row(table.product[i].begin(), table.product[i].end());
      t.require(row.size() == n, [&] { return "row is not a permutation"; });
      for (std::size_t j = 0; j < n; ++j) {
        const std::int64_t prod = table.labels[table.product[i][j]].d;
        t.require(prod == table.labels[table.product[j][i]].d, [&] { return "table not commutative"; });
        t.require(mask(prod) == (mask(table.labels[i].d) ^ mask(table.labels[j].d)),
                  [&] { return "not isomorphic to prime-support bit vectors for m=" + std::to_string(m); });
        t.require(prime_support_mask({prod}, k) == mask(prod), [&] { return "prime_support_mask disagrees"; });
      }
    }
  }
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  void (*body)(Tally&);
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "index reproduction", 10, index_reproduction},
      {2, "Atkin-Lehner identities", 10, atkin_lehner_identities},
      {3, "Bezout well-definedness", 5, well_definedness},
      {4, "criterion equivalence", 120, criterion_equivalence},
      {5, "spin homomorphism", 60, spin_homomorphism},
      {6, "lattice and discriminant kernel", 60, lattice_preservation},
      {7, "spin lift round-trip", 30, lift_round_trip},
      {8, "algebraic integer entries", 30, algebraic_integers},
      {9, "factor group", 5, factor_group},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Tally tally;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(tally);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && seconds > c.limit_seconds) error = "time budget exceeded";
    const bool ok = error.empty();
    failures += !ok;
    std::printf("%s criterion %d (%s): %zu checks in %.2f s, limit %.0f s%s%s\n", ok ? "PASS" : "FAIL", c.id,
                c.name, tally.checks, seconds, c.limit_seconds, ok ? "" : ": ", error.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
