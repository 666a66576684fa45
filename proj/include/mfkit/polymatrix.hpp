#pragma once

#include <string>
#include <vector>

#include "mfkit/polynomial.hpp"

namespace mfkit {

/// Dense matrix of polynomials over a common ring. Zero rows or columns are
/// allowed (the unit factorization has a 1x0 block).
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, const Ring& ring);

  static PolyMatrix identity(std::size_t n, const Ring& ring);
  static PolyMatrix scalar(std::size_t n, const Polynomial& value);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Ring& ring() const { return ring_; }

  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  PolyMatrix operator*(const PolyMatrix& other) const;
  PolyMatrix operator+(const PolyMatrix& other) const;
  PolyMatrix operator-(const PolyMatrix& other) const;
  PolyMatrix operator-() const;
  PolyMatrix scaled(const Cyclo& c) const;
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

  PolyMatrix transposed() const;
  PolyMatrix derivative(std::size_t var) const;
  PolyMatrix to_ring(const Ring& target) const;
  PolyMatrix substituted(const Substitution& images, const Ring& target) const;
  PolyMatrix specialized_to_zero(const std::vector<std::string>& vars) const;

  bool is_zero() const;
  Polynomial trace() const;
  /// Cofactor expansion; intended for small matrices.
  Polynomial determinant() const;
  /// Kronecker product, row-major over (this index, other index).
  PolyMatrix kronecker(const PolyMatrix& other) const;
  /// Rows/columns picked by index lists.
  PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Ring ring_;
  std::vector<Polynomial> entries_;
};

/// [[A, B], [C, D]] assembled from blocks with matching shapes.
PolyMatrix block_matrix(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c, const PolyMatrix& d);

}  // namespace mfkit
