#pragma once

#include "looijenga/numeric.hpp"

#include <cstddef>
#include <vector>

namespace looijenga {

// Dense matrix over cpp_int, row major. Ranks in this library stay small
// (Picard ranks <= ~16), so no attempt at sparse or blocked storage.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
  IntMat(std::size_t rows, std::size_t cols, std::vector<Int> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("IntMat: bad data size");
  }

  static IntMat identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const IntMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  IntMat transposed() const {
    IntMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMat operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMat: shape mismatch in product");
    IntMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  std::vector<Int> apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("IntMat: shape mismatch in apply");
    std::vector<Int> r(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  std::vector<Rat> apply_rat(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("IntMat: shape mismatch in apply");
    std::vector<Rat> r(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += Rat((*this)(i, j)) * v[j];
    return r;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

// Fraction-free Gaussian elimination (Bareiss).
Int det(const IntMat& a);

// Exact inverse of a matrix with determinant ±1; throws otherwise.
IntMat unimodular_inverse(const IntMat& a);

struct SmithDecomposition {
  IntMat u;               // rows x rows, det ±1
  IntMat v;               // cols x cols, det ±1
  std::vector<Int> diag;  // min(rows, cols) invariant factors, nonnegative, divisibility chain
};

// u * a * v is diagonal with diag; deterministic pivoting (smallest |entry|,
// ties broken by position).
SmithDecomposition smith(const IntMat& a);

struct HermiteResult {
  IntMat h;  // row-style HNF of a
  IntMat u;  // unimodular with u * a = h
  std::size_t rank = 0;
};

// Row Hermite normal form: echelon, positive pivots, entries above a pivot
// reduced into [0, pivot).
HermiteResult hermite(const IntMat& a);

// Saturated integer kernel {x : a x = 0}; columns of the result form the basis.
IntMat kernel_saturated(const IntMat& a);

// Rank over Q.
std::size_t rank_rat(const IntMat& a);

// Signature of a symmetric matrix: (#positive, #negative, #zero) pivots of an
// exact symmetric reduction.
struct Signature {
  std::size_t positive = 0, negative = 0, zero = 0;
};
Signature signature(const IntMat& gram);

}  // namespace looijenga
