#pragma once

// The spin homomorphism M -> (H -> M H M^*) from the extended group into
// SO_0 of the Hermitian quadratic space (V, det), as exact 4x4 matrices
// over Q, together with the lattice Lambda_K of integral Hermitian matrices,
// its trace dual and the exact inverse (lift).

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "bianchi/extended_matrix.hpp"
#include "bianchi/rational_matrix.hpp"

namespace bianchi {

using Coords4 = std::array<Rational, 4>;

/// The Hermitian matrix (s1, s; conj(s), s2).
struct HermitianK {
  Rational s1;
  Rational s2;
  KElement s;

  // det, i.e. s1 s2 - N(s).
  Rational q() const { return s1 * s2 - s.norm(); }
  Rational trace() const { return s1 + s2; }
  // In Lambda_K: s1, s2 in Z and s in O_K.
  bool is_integral() const;
  KMatrix2 matrix() const;

  friend bool operator==(const HermitianK&, const HermitianK&) = default;
};

// From a matrix over K that must be Hermitian (std::invalid_argument otherwise).
HermitianK hermitian_from_matrix(const KMatrix2& h);

/// Coordinates with respect to the fixed basis
///   H1 = diag(1, 0), H2 = diag(0, 1), H3 = (0, 1; 1, 0),
///   H4 = (0, theta; conj(theta), 0).
/// Lambda_K is the Z-span of this basis.
Coords4 lattice_coords(const HermitianK& h);
HermitianK from_lattice_coords(std::int64_t m, const Coords4& coords);

struct LatticeBasis {
  std::array<HermitianK, 4> vectors;
  // Polar form B(X, Y) = (q(X + Y) - q(X) - q(Y)) / 2, so q(X) = x^t G x.
  QMatrix gram;
};

LatticeBasis lattice_basis(const FieldParams& params);
Rational q_value(const HermitianK& h);
QMatrix gram_matrix(const FieldParams& params);

/// Matrix of an R-linear map of V in lattice coordinates (columns are the
/// images of H1..H4).
struct OrthoMap {
  std::int64_t m;
  QMatrix P;

  static OrthoMap identity(std::int64_t m) { return {m, QMatrix::identity(4)}; }
  HermitianK apply(const HermitianK& h) const;
  friend bool operator==(const OrthoMap&, const OrthoMap&) = default;
};

OrthoMap compose(const OrthoMap& a, const OrthoMap& b);

/// phi_P : H -> (1/f) A H A^*, exactly rational.
OrthoMap phi(const ExtendedMatrix& p);

// P^t G P = G.
bool is_orthogonal(const OrthoMap& p);
// Orthogonal, det 1 and trace P(E) > 0 for E = H1 + H2.
bool in_so0(const OrthoMap& p);

// P and P^-1 are both integral.
bool preserves_lattice(const OrthoMap& p);

/// A Z-basis of the trace dual Lambda#_K = { S : trace(S H) in Z for H in Lambda_K }:
/// H1, H2 and the off-diagonal matrices with s = 1/sqrt(d_K), theta/sqrt(d_K).
std::array<HermitianK, 4> dual_basis(const FieldParams& params);
// Columns are the lattice coordinates of dual_basis().
QMatrix dual_basis_coords(const FieldParams& params);
// [Lambda#_K : Lambda_K] = 1 / |det dual_basis_coords|.
Integer dual_index(const FieldParams& params);

// P maps Lambda#_K into itself.
bool preserves_dual_lattice(const OrthoMap& p);

/// P acts trivially on Lambda#_K / Lambda_K. Throws std::invalid_argument
/// when P does not preserve Lambda_K.
bool in_discriminant_kernel(const OrthoMap& p);

struct SquareRoot {
  Integer f;
  KElement x;
};

/// Finds (f, x) with (x / sqrt(f))^2 = z, f squarefree (f is unique when it
/// exists). With allow_denominator_f false only f = 1 is accepted.
std::optional<SquareRoot> k_square_root(const KElement& z, bool allow_denominator_f = true);

class LiftError : public std::runtime_error {
 public:
  enum class Stage { orthogonality, rationality, root };
  LiftError(Stage stage, const std::string& what) : std::runtime_error(what), stage_(stage) {}
  Stage stage() const { return stage_; }

 private:
  Stage stage_;
};

const char* stage_name(LiftError::Stage stage);

// Picks Q or -Q: the first nonzero entry of A (row-major) has x > 0, or x = 0 and y > 0.
ExtendedMatrix sign_normalized(const ExtendedMatrix& p);

/// Q with phi(Q) = P, sign-normalized. Throws LiftError.
ExtendedMatrix spin_lift(const OrthoMap& p);

}  // namespace bianchi
