#include "bianchi/spin.hpp"

#include <algorithm>

namespace bianchi {

namespace {

KElement sqrt_discriminant(const FieldParams& params) {
  // sqrt(d_K) = sqrt(-m) or 2 sqrt(-m).
  return params.half_integral() ? KElement::root(params.m) : KElement(params.m, 0, 2);
}

ExtendedMatrix j_matrix(std::int64_t m) {
  return ext_new(1, KMatrix2::from_integers(m, 0, -1, 1, 0));
}

}  // namespace

bool HermitianK::is_integral() const {
  return bianchi::is_integer(s1) && bianchi::is_integer(s2) && bianchi::is_integral(s);
}

KMatrix2 HermitianK::matrix() const {
  const std::int64_t m = s.m();
  return KMatrix2(KElement(m, s1), s, s.conj(), KElement(m, s2));
}

HermitianK hermitian_from_matrix(const KMatrix2& h) {
  if (!h(0, 0).is_rational() || !h(1, 1).is_rational() || h(1, 0) != h(0, 1).conj()) {
    throw std::invalid_argument("matrix is not Hermitian");
  }
  return {h(0, 0).x(), h(1, 1).x(), h(0, 1)};
}

Coords4 lattice_coords(const HermitianK& h) {
  auto [a, b] = theta_coords(h.s);
  return {h.s1, h.s2, a, b};
}

HermitianK from_lattice_coords(std::int64_t m, const Coords4& coords) {
  return {coords[0], coords[1], from_theta_coords(m, coords[2], coords[3])};
}

Rational q_value(const HermitianK& h) { return h.q(); }

LatticeBasis lattice_basis(const FieldParams& params) {
  const std::int64_t m = params.m;
  std::array<HermitianK, 4> vectors{
      HermitianK{1, 0, KElement::zero(m)}, HermitianK{0, 1, KElement::zero(m)},
      HermitianK{0, 0, KElement::one(m)}, HermitianK{0, 0, params.theta}};
  QMatrix gram(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const HermitianK& x = vectors[i];
      const HermitianK& y = vectors[j];
      HermitianK sum{x.s1 + y.s1, x.s2 + y.s2, x.s + y.s};
      gram(i, j) = (sum.q() - x.q() - y.q()) / 2;
    }
  }
  return {std::move(vectors), std::move(gram)};
}

QMatrix gram_matrix(const FieldParams& params) { return lattice_basis(params).gram; }

HermitianK OrthoMap::apply(const HermitianK& h) const {
  const Coords4 x = lattice_coords(h);
  Coords4 y;
  for (std::size_t r = 0; r < 4; ++r) {
    y[r] = 0;
    for (std::size_t c = 0; c < 4; ++c) y[r] += P(r, c) * x[c];
  }
  return from_lattice_coords(m, y);
}

OrthoMap compose(const OrthoMap& a, const OrthoMap& b) {
  if (a.m != b.m) throw std::invalid_argument("composing maps of different fields");
  return {a.m, a.P * b.P};
}

OrthoMap phi(const ExtendedMatrix& p) {
  const FieldParams params = field_params(p.m());
  const LatticeBasis basis = lattice_basis(params);
  const KMatrix2& a = p.A();
  const KMatrix2 a_star = a.conj_transpose();
  const Rational scale(p.f());
  OrthoMap result{params.m, QMatrix(4, 4)};
  for (std::size_t j = 0; j < 4; ++j) {
    const HermitianK image = hermitian_from_matrix((a * basis.vectors[j].matrix() * a_star) / scale);
    const Coords4 coords = lattice_coords(image);
    for (std::size_t r = 0; r < 4; ++r) result.P(r, j) = coords[r];
  }
  return result;
}

bool is_orthogonal(const OrthoMap& p) {
  const QMatrix gram = gram_matrix(field_params(p.m));
  return p.P.transpose() * gram * p.P == gram;
}

bool in_so0(const OrthoMap& p) {
  if (!is_orthogonal(p) || p.P.det() != 1) return false;
  const HermitianK e{1, 1, KElement::zero(p.m)};
  return sgn(p.apply(e).trace()) > 0;
}

bool preserves_lattice(const OrthoMap& p) {
  if (!p.P.is_integral()) return false;
  const auto inv = p.P.inverse();
  return inv && inv->is_integral();
}

std::array<HermitianK, 4> dual_basis(const FieldParams& params) {
  const std::int64_t m = params.m;
  const KElement inv_root = sqrt_discriminant(params).inverse();
  return {HermitianK{1, 0, KElement::zero(m)}, HermitianK{0, 1, KElement::zero(m)},
          HermitianK{0, 0, inv_root}, HermitianK{0, 0, params.theta * inv_root}};
}

QMatrix dual_basis_coords(const FieldParams& params) {
  const auto basis = dual_basis(params);
  QMatrix c(4, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    const Coords4 coords = lattice_coords(basis[j]);
    for (std::size_t r = 0; r < 4; ++r) c(r, j) = coords[r];
  }
  return c;
}

Integer dual_index(const FieldParams& params) {
  const Rational index = 1 / abs(dual_basis_coords(params).det());
  if (!is_integer(index)) throw std::logic_error("dual lattice does not contain Lambda_K");
  return index.get_num();
}

bool preserves_dual_lattice(const OrthoMap& p) {
  const QMatrix c = dual_basis_coords(field_params(p.m));
  const auto c_inv = c.inverse();
  return (*c_inv * p.P * c).is_integral();
}

bool in_discriminant_kernel(const OrthoMap& p) {
  if (!preserves_lattice(p)) {
    throw std::invalid_argument("discriminant kernel test needs a lattice automorphism");
  }
  const QMatrix c = dual_basis_coords(field_params(p.m));
  return (p.P * c - c).is_integral();
}

std::optional<SquareRoot> k_square_root(const KElement& z, bool allow_denominator_f) {
  const std::int64_t m = z.m();
  if (z.is_zero()) return SquareRoot{1, KElement::zero(m)};
  // |x|^2 / f = |z| forces N(z) to be a rational square.
  const auto n = rational_sqrt(z.norm());
  if (!n) return std::nullopt;
  const Rational r = z.trace() + 2 * *n;
  SquareRoot root{1, KElement::zero(m)};
  if (sgn(r) > 0) {
    // (z + n)^2 = z (Tr z + 2n) = z r, and r = f t^2.
    root.f = squarefree_part(r);
    const auto t = rational_sqrt(r / Rational(root.f));
    root.x = (z + KElement(m, *n)) / *t;
  } else {
    // z = -c, c > 0 rational: -c = (t sqrt(-m))^2 / f with t^2 = c f / m.
    const Rational c = -z.x();
    root.f = squarefree_part(Rational(c / m));
    const auto t = rational_sqrt(c * Rational(root.f) / m);
    root.x = KElement(m, 0, *t);
  }
  if (root.x * root.x / Rational(root.f) != z) {
    throw std::logic_error("k_square_root produced a wrong root");
  }
  if (!allow_denominator_f && root.f != 1) return std::nullopt;
  return root;
}

const char* stage_name(LiftError::Stage stage) {
  switch (stage) {
    case LiftError::Stage::orthogonality:
      return "orthogonality";
    case LiftError::Stage::rationality:
      return "rationality";
    case LiftError::Stage::root:
      return "root";
  }
  return "unknown";
}

ExtendedMatrix sign_normalized(const ExtendedMatrix& p) {
  for (const KElement& z : p.A().entries()) {
    if (z.is_zero()) continue;
    const bool positive = sgn(z.x()) > 0 || (sgn(z.x()) == 0 && sgn(z.y()) > 0);
    return positive ? p : -p;
  }
  return p;
}

namespace {

// Lift for maps whose image of H1 has nonzero (1,1) entry, i.e. alpha != 0.
ExtendedMatrix lift_nonvanishing(const OrthoMap& p, const FieldParams& params) {
  const std::int64_t m = params.m;
  const LatticeBasis basis = lattice_basis(params);
  const HermitianK h1 = p.apply(basis.vectors[0]);
  const HermitianK h3 = p.apply(basis.vectors[2]);
  const HermitianK h4 = p.apply(basis.vectors[3]);

  const KElement& theta = params.theta;
  const KElement theta_bar = theta.conj();
  const KElement denom = theta_bar - theta;

  const KElement alpha_alpha(m, h1.s1);  // alpha conj(alpha)
  const KElement& alpha_gamma = h1.s;    // alpha conj(gamma)
  // Tr(w) = h3.s1, Tr(theta w) = h4.s1 for w = alpha conj(beta).
  const KElement alpha_beta = (theta_bar * h3.s1 - KElement(m, h4.s1)) / denom;
  // X + Y = h3.s, theta X + conj(theta) Y = h4.s for X = alpha conj(delta), Y = beta conj(gamma).
  const KElement alpha_delta = (theta_bar * h3.s - h4.s) / denom;

  // alpha^2 conj(alpha delta - beta gamma) with the conjugated determinant equal to 1.
  const KElement alpha_sq = alpha_alpha * alpha_delta - alpha_beta * alpha_gamma;
  const auto root = k_square_root(alpha_sq);
  if (!root) {
    throw LiftError(LiftError::Stage::root, "alpha^2 has no square root x/sqrt(f) with x in K");
  }
  const Rational f(root->f);
  const KElement x_bar = root->x.conj();
  KMatrix2 a(root->x, alpha_beta.conj() * f / x_bar, alpha_gamma.conj() * f / x_bar,
             alpha_delta.conj() * f / x_bar);
  if (a.det() != KElement(m, f)) {
    throw LiftError(LiftError::Stage::rationality, "recovered matrix does not have determinant 1");
  }
  return ExtendedMatrix::from_scaled(root->f, a);
}

}  // namespace

ExtendedMatrix spin_lift(const OrthoMap& p) {
  if (!in_so0(p)) {
    throw LiftError(LiftError::Stage::orthogonality, "map is not in SO_0(V, q)");
  }
  const FieldParams params = field_params(p.m);
  const HermitianK h1 = p.apply(HermitianK{1, 0, KElement::zero(params.m)});
  ExtendedMatrix lifted = ExtendedMatrix::identity(params.m);
  if (sgn(h1.s1) != 0) {
    lifted = lift_nonvanishing(p, params);
  } else {
    // alpha = 0: lift P phi(J), whose upper-left entry is beta != 0, then undo J.
    const ExtendedMatrix j = j_matrix(params.m);
    lifted = ext_mul(lift_nonvanishing(compose(p, phi(j)), params), ext_inv(j));
  }
  if (phi(lifted) != p) {
    throw LiftError(LiftError::Stage::rationality, "lifted matrix does not reproduce the map");
  }
  return sign_normalized(lifted);
}

}  // namespace bianchi
