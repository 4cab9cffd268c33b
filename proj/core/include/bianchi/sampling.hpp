#pragma once

// Deterministic random samples and bounded enumerations used by the
// verification suites, the CLI and the benchmarks.

#include <cstdint>
#include <functional>
#include <random>

#include "bianchi/extended_matrix.hpp"

namespace bianchi {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi);

  // theta-coordinates drawn from [-height, height].
  KElement integral_element(const FieldParams& params, long height);

  // SL_2(O_K) element with alpha, beta, gamma of coordinate height <= height
  // (rejection sampling on the solvability of alpha delta - beta gamma = 1).
  ExtendedMatrix gamma_element(const FieldParams& params, long height);

  // Product of `length` elementary matrices (1, x; 0, 1), (1, 0; x, 1) and J.
  ExtendedMatrix gamma_word(const FieldParams& params, int length, long height);

  // M V_d for a sampled M in SL_2(O_K).
  ExtendedMatrix coset_element(const FieldParams& params, std::int64_t d, long height);

  // M (1/sqrt(k N(a))) (a, b; 0, k conj(a)) for sampled M, a, b and k in [1, 3].
  ExtendedMatrix extended_element(const FieldParams& params, long height);

  // An extended element whose upper-left entry vanishes.
  ExtendedMatrix vanishing_corner_element(const FieldParams& params, long height);

 private:
  std::mt19937_64 rng_;
};

/// Visits every integral 2x2 matrix whose entries have theta-coordinates in
/// [-height, height] and whose determinant is a rational integer d accepted
/// by keep(d). Arithmetic is done on machine integers, so height must stay small.
void enumerate_integral_matrices(const FieldParams& params, long height,
                                 const std::function<bool(std::int64_t)>& keep,
                                 const std::function<void(const KMatrix2&, std::int64_t)>& visit);

}  // namespace bianchi
