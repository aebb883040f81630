#include "sdist/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace sdist {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix::RationalMatrix(const std::vector<std::vector<Rational>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (is_zero(a)) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  }
  return out;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

bool RationalMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && !is_zero((*this)(i, j))) return false;
    }
  }
  return true;
}

SymmetricRationalMatrix::SymmetricRationalMatrix(RationalMatrix m) : m_(std::move(m)) {
  if (!m_.is_symmetric()) throw std::invalid_argument("matrix is not symmetric");
}

SymmetricRationalMatrix symmetric_part(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = (m(i, j) + m(j, i)) / 2;
  }
  return SymmetricRationalMatrix(std::move(out));
}

SymmetricRationalMatrix congruent(const SymmetricRationalMatrix& m, const RationalMatrix& s) {
  return SymmetricRationalMatrix(s.transpose() * m.matrix() * s);
}

std::size_t rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer scale = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (scale / m(i, j).get_den());
  }

  Integer previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && sgn(a[pivot][c]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer value = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
      }
      a[i][c] = 0;
    }
    previous = a[r][c];
    ++r;
  }
  return r;
}

InertiaSignature inertia(const SymmetricRationalMatrix& sym) {
  RationalMatrix a = sym.matrix();
  const std::size_t n = a.rows();
  InertiaSignature sig;

  auto swap_index = [&](std::size_t p, std::size_t q) {
    if (p == q) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(q, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(a(k, p), a(k, q));
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && is_zero(a(pivot, pivot))) ++pivot;
    if (pivot == n) {
      // Zero diagonal on the trailing block: find a_ij != 0 and add row and
      // column j to i, making the (i, i) entry 2 a_ij.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!is_zero(a(i, j))) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) {
        sig.r_zero += n - k;
        return sig;
      }
      for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
      pivot = pi;
    }
    swap_index(k, pivot);

    const Rational d = a(k, k);
    (sgn(d) > 0 ? sig.r_plus : sig.r_minus) += 1;
    // Schur complement; row and column k are read-only until it is done.
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      const Rational factor = a(i, k) / d;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      a(i, k) = 0;
      a(k, i) = 0;
    }
  }
  return sig;
}

}  // namespace sdist
