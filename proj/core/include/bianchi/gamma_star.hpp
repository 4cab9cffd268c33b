#pragma once

// Atkin-Lehner involutions V_d, membership and coset structure of the
// maximal discrete extension of SL_2(O_K).

#include <compare>
#include <cstdint>
#include <vector>

#include "bianchi/extended_matrix.hpp"
#include "bianchi/ideal.hpp"

namespace bianchi {

/// Index d of the coset Gamma_K V_d; a positive squarefree divisor of |d_K|.
struct CosetLabel {
  std::int64_t d;
  friend auto operator<=>(const CosetLabel&, const CosetLabel&) = default;
};

/// u d - v N(omega)/d = 1.
struct BezoutPair {
  Integer u;
  Integer v;
  friend bool operator==(const BezoutPair&, const BezoutPair&) = default;
};

// Throws std::invalid_argument unless d is a squarefree divisor of |d_K|.
void require_label(const FieldParams& params, std::int64_t d);

// The reduced solution with 0 < u <= N(omega)/d; (1, 0) for d = 1.
BezoutPair canonical_bezout(const FieldParams& params, std::int64_t d);

// Every solution is canonical + k (N(omega)/d, d).
BezoutPair shifted_bezout(const FieldParams& params, std::int64_t d, long k);

/// V_d = (1/sqrt(d)) (ud, v omega; conj(omega), d) for the canonical pair.
ExtendedMatrix atkin_lehner(const FieldParams& params, std::int64_t d);
// Same for a caller-supplied pair, which must solve the Bezout identity.
ExtendedMatrix atkin_lehner(const FieldParams& params, std::int64_t d, const BezoutPair& uv);

// O_K-ideal generated by the entries of an integral matrix.
IdealHNF content_ideal(const KMatrix2& b, const FieldParams& params);

/// Membership in the maximal discrete extension: with B the integral
/// representative, <det B> = <entries of B>^2. The condition is invariant
/// under rescaling B by elements of K^*.
bool is_member_gamma_star(const ExtendedMatrix& p);

/// Label d with p in Gamma_K V_d. Throws std::invalid_argument if p is not
/// a member; throws std::logic_error if the internal consistency check fails.
CosetLabel classify_coset(const ExtendedMatrix& p);

// d e / gcd(d, e)^2.
CosetLabel coset_law(CosetLabel d, CosetLabel e);

// 2^nu, nu = number of primes dividing d_K.
std::uint64_t index_gamma_star(const FieldParams& params);

struct FactorGroupTable {
  std::vector<CosetLabel> labels;
  // product[i][j] is the index in labels of labels[i] * labels[j].
  std::vector<std::vector<std::size_t>> product;
};

FactorGroupTable factor_group_table(const FieldParams& params);

// Bit i set iff the i-th prime of d_K divides the label.
std::uint64_t prime_support_mask(CosetLabel label, const FieldParams& params);

}  // namespace bianchi
