#pragma once

/// @file stp.hpp
/// Semi-tensor product calculus over logical matrices.
///
/// Logical matrices (every column a column of an identity matrix) are kept
/// as 1-based column-index sequences, so δ_n[i_1 ... i_m] is stored as
/// rows = n and indices = {i_1, ..., i_m}. Products of logical operands are
/// computed by index arithmetic and never expanded. DenseMatrix is an exact
/// integer carrier used when an arbitrary operand is involved.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace bcnid {

using Index = std::size_t;

/// Upper bound on any row/column count produced by a product.
struct DimensionCap {
  std::size_t max_dim = std::size_t{1} << 20;
};

/// δ_dim^index, the index-th column of I_dim.
class DeltaVector {
 public:
  DeltaVector(std::size_t dim, Index index);

  std::size_t dim() const noexcept { return dim_; }
  Index index() const noexcept { return index_; }

  friend bool operator==(const DeltaVector&, const DeltaVector&) = default;

 private:
  std::size_t dim_;
  Index index_;
};

class DenseMatrix;

/// A matrix in L_{rows x cols}.
class LogicalMatrix {
 public:
  LogicalMatrix(std::size_t rows, std::vector<Index> indices);
  LogicalMatrix(const DeltaVector& v);  // NOLINT: a delta vector is a 1-column logical matrix

  static LogicalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return indices_.size(); }

  /// Index of column j, with j 0-based (i.e. the bracket entry i_{j+1}).
  Index operator[](std::size_t j) const { return indices_[j]; }
  std::span<const Index> indices() const noexcept { return indices_; }

  /// Column j (1-based) as a delta vector.
  DeltaVector column(Index j) const;

  DenseMatrix dense() const;

  /// Converts a single-column logical matrix back to a delta vector.
  DeltaVector as_delta() const;

  friend bool operator==(const LogicalMatrix&, const LogicalMatrix&) = default;

 private:
  std::size_t rows_;
  std::vector<Index> indices_;
};

/// Exact integer matrix, row-major.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries);
  DenseMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  /// Returns the logical form if every column holds exactly one 1 and zeros
  /// elsewhere; throws DimensionError otherwise.
  LogicalMatrix to_logical() const;
  bool is_logical() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> entries_;
};

std::ostream& operator<<(std::ostream& os, const DeltaVector& v);
std::ostream& operator<<(std::ostream& os, const LogicalMatrix& m);
std::ostream& operator<<(std::ostream& os, const DenseMatrix& m);

/// Ordinary matrix product; inner dimensions must agree.
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b, DimensionCap cap = {});

/// A ⋉ B = (A ⊗ I_{s/n})(B ⊗ I_{s/p}), s = lcm(n, p).
DenseMatrix stp(const DenseMatrix& a, const DenseMatrix& b, DimensionCap cap = {});
LogicalMatrix stp(const LogicalMatrix& a, const LogicalMatrix& b, DimensionCap cap = {});

/// Left fold of stp over two or more logical operands.
LogicalMatrix stp(std::initializer_list<LogicalMatrix> factors, DimensionCap cap = {});

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b, DimensionCap cap = {});
LogicalMatrix kron(const LogicalMatrix& a, const LogicalMatrix& b, DimensionCap cap = {});

/// Column-wise Kronecker product; a and b must have the same column count.
LogicalMatrix khatri_rao(const LogicalMatrix& a, const LogicalMatrix& b, DimensionCap cap = {});

/// The row vector [1 2 ... rows] times h, i.e. the column indices of h.
std::vector<Index> index_row(const LogicalMatrix& h);

}  // namespace bcnid
