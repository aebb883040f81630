#pragma once

#include "sdist/rational.hpp"

#include <cstddef>
#include <vector>

namespace sdist {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  /// Throws std::invalid_argument on ragged rows.
  explicit RationalMatrix(const std::vector<std::vector<Rational>>& rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  bool is_symmetric() const;
  bool is_diagonal() const;

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// A square matrix equal to its transpose; the matrix of a quadratic form.
class SymmetricRationalMatrix {
 public:
  /// Throws std::invalid_argument unless `m` is square and symmetric.
  explicit SymmetricRationalMatrix(RationalMatrix m);

  std::size_t dimension() const noexcept { return m_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const RationalMatrix& matrix() const noexcept { return m_; }

 private:
  RationalMatrix m_;
};

/// (M + M^T) / 2
SymmetricRationalMatrix symmetric_part(const RationalMatrix& m);

/// S^T M S
SymmetricRationalMatrix congruent(const SymmetricRationalMatrix& m, const RationalMatrix& s);

struct InertiaSignature {
  std::size_t r_plus = 0;
  std::size_t r_minus = 0;
  std::size_t r_zero = 0;

  std::size_t rank() const noexcept { return r_plus + r_minus; }
  std::size_t dimension() const noexcept { return r_plus + r_minus + r_zero; }
  bool operator==(const InertiaSignature&) const = default;
};

/// Rank by fraction-free (Bareiss) elimination after clearing denominators
/// row by row.
std::size_t rank(const RationalMatrix& m);

/// Sylvester signature by symmetric congruence reduction over Q.
InertiaSignature inertia(const SymmetricRationalMatrix& m);

}  // namespace sdist
