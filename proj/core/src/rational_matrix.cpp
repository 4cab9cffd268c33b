#include "bianchi/rational_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bianchi {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Rational QMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Rational QMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of a non-square matrix");
  QMatrix a = *this;
  const std::size_t n = rows_;
  Rational result = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && sgn(a(pivot, k)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(pivot, c));
      result = -result;
    }
    result *= a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(a(r, k)) == 0) continue;
      const Rational factor = a(r, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(r, c) -= factor * a(k, c);
    }
  }
  return result;
}

std::optional<QMatrix> QMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = rows_;
  QMatrix a = *this;
  QMatrix inv = identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && sgn(a(pivot, k)) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(k, c), a(pivot, c));
        std::swap(inv(k, c), inv(pivot, c));
      }
    }
    const Rational scale = a(k, k);
    for (std::size_t c = 0; c < n; ++c) {
      a(k, c) /= scale;
      inv(k, c) /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || sgn(a(r, k)) == 0) continue;
      const Rational factor = a(r, k);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= factor * a(k, c);
        inv(r, c) -= factor * inv(k, c);
      }
    }
  }
  return inv;
}

bool QMatrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return is_integer(q); });
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
  QMatrix p(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& lhs = a(r, k);
      if (sgn(lhs) == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) p(r, c) += lhs * b(k, c);
    }
  }
  return p;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("matrix dimension mismatch");
  }
  QMatrix d = a;
  for (std::size_t i = 0; i < d.data_.size(); ++i) d.data_[i] -= b.data_[i];
  return d;
}

Signature signature(const QMatrix& symmetric) {
  if (symmetric.rows() != symmetric.cols()) {
    throw std::invalid_argument("signature of a non-square matrix");
  }
  QMatrix a = symmetric;
  const std::size_t n = a.rows();
  Signature sig{0, 0};
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      // Bring a nonzero diagonal entry to k, or create one with the
      // congruence e_k <- e_k + e_j when only an off-diagonal entry survives.
      std::size_t j = k + 1;
      while (j < n && sgn(a(j, j)) == 0) ++j;
      if (j < n) {
        for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(j, c));
        for (std::size_t r = 0; r < n; ++r) std::swap(a(r, k), a(r, j));
      } else {
        j = k + 1;
        while (j < n && sgn(a(k, j)) == 0) ++j;
        if (j == n) continue;
        for (std::size_t c = 0; c < n; ++c) a(k, c) += a(j, c);
        for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, j);
      }
    }
    const Rational pivot = a(k, k);
    if (sgn(pivot) > 0) ++sig.positive;
    else ++sig.negative;
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= a(r, k) * a(k, c) / pivot;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      a(r, k) = 0;
      a(k, r) = 0;
    }
  }
  return sig;
}

}  // namespace bianchi
