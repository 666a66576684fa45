#include "mfkit/polymatrix.hpp"

#include "mfkit/error.hpp"

namespace mfkit {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, const Ring& ring)
    : rows_(rows), cols_(cols), ring_(ring), entries_(rows * cols, Polynomial(ring)) {}

PolyMatrix PolyMatrix::identity(std::size_t n, const Ring& ring) {
  return scalar(n, Polynomial(ring, Cyclo(1)));
}

PolyMatrix PolyMatrix::scalar(std::size_t n, const Polynomial& value) {
  PolyMatrix m(n, n, value.ring());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("matrix product shape mismatch");
  PolyMatrix out(rows_, other.cols_, ring_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Polynomial& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Polynomial& b = other(k, j);
        if (b.is_zero()) continue;
        out(i, j) += a * b;
      }
    }
  }
  return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  PolyMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += other.entries_[i];
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& other) const { return *this + (-other); }

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

PolyMatrix PolyMatrix::scaled(const Cyclo& c) const {
  PolyMatrix out = *this;
  for (auto& e : out.entries_) e *= c;
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix out(cols_, rows_, ring_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

PolyMatrix PolyMatrix::derivative(std::size_t var) const {
  PolyMatrix out = *this;
  for (auto& e : out.entries_) e = e.derivative(var);
  return out;
}

PolyMatrix PolyMatrix::to_ring(const Ring& target) const {
  PolyMatrix out(rows_, cols_, target);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].to_ring(target);
  return out;
}

PolyMatrix PolyMatrix::substituted(const Substitution& images, const Ring& target) const {
  PolyMatrix out(rows_, cols_, target);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = substitute(entries_[i], images, target);
  return out;
}

PolyMatrix PolyMatrix::specialized_to_zero(const std::vector<std::string>& vars) const {
  PolyMatrix out = *this;
  for (auto& e : out.entries_) e = e.specialized_to_zero(vars);
  return out;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Polynomial PolyMatrix::trace() const {
  if (rows_ != cols_) throw DimensionMismatch("trace of a non-square matrix");
  Polynomial t(ring_);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Polynomial PolyMatrix::determinant() const {
  if (rows_ != cols_) throw DimensionMismatch("determinant of a non-square matrix");
  if (rows_ == 0) return Polynomial(ring_, Cyclo(1));
  if (rows_ == 1) return (*this)(0, 0);
  if (rows_ == 2) return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
  Polynomial det(ring_);
  std::vector<std::size_t> rest;
  for (std::size_t i = 1; i < rows_; ++i) rest.push_back(i);
  for (std::size_t j = 0; j < cols_; ++j) {
    if ((*this)(0, j).is_zero()) continue;
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c != j) cols.push_back(c);
    }
    Polynomial minor = submatrix(rest, cols).determinant();
    Polynomial term = (*this)(0, j) * minor;
    if (j % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

PolyMatrix PolyMatrix::kronecker(const PolyMatrix& other) const {
  PolyMatrix out(rows_ * other.rows_, cols_ * other.cols_, ring_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Polynomial& a = (*this)(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < other.rows_; ++k) {
        for (std::size_t l = 0; l < other.cols_; ++l) {
          if (other(k, l).is_zero()) continue;
          out(i * other.rows_ + k, j * other.cols_ + l) = a * other(k, l);
        }
      }
    }
  }
  return out;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  PolyMatrix out(rows.size(), cols.size(), ring_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  }
  return out;
}

PolyMatrix block_matrix(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c, const PolyMatrix& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols()) {
    throw DimensionMismatch("block shapes do not fit");
  }
  PolyMatrix out(a.rows() + c.rows(), a.cols() + b.cols(), a.ring());
  auto put = [&out](const PolyMatrix& m, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) out(r0 + i, c0 + j) = m(i, j);
    }
  };
  put(a, 0, 0);
  put(b, 0, a.cols());
  put(c, a.rows(), 0);
  put(d, a.rows(), a.cols());
  return out;
}

}  // namespace mfkit
