#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bianchi/number.hpp"

namespace bianchi {

/// Dense row-major matrix of rationals.
class QMatrix {
 public:
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Rational>& data() const { return data_; }

  QMatrix transpose() const;
  Rational trace() const;
  Rational det() const;
  // None when singular.
  std::optional<QMatrix> inverse() const;
  bool is_integral() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

// Numbers of positive and negative eigenvalues of a symmetric matrix
// (Sylvester), via symmetric Gaussian elimination over Q.
struct Signature {
  std::size_t positive;
  std::size_t negative;
  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature(const QMatrix& symmetric);

}  // namespace bianchi
