#include "bcnid/stp.hpp"

#include <numeric>
#include <ostream>
#include <string>

#include "bcnid/error.hpp"

namespace bcnid {

namespace {

void check_cap(std::size_t rows, std::size_t cols, DimensionCap cap) {
  if (rows > cap.max_dim || cols > cap.max_dim) {
    throw LimitExceeded("product of size " + std::to_string(rows) + "x" +
                        std::to_string(cols) + " exceeds dimension cap " +
                        std::to_string(cap.max_dim));
  }
}

// Overflow-safe a*b compared against the cap.
std::size_t capped_product(std::size_t a, std::size_t b, DimensionCap cap) {
  if (a != 0 && b > cap.max_dim / a) {
    throw LimitExceeded("product dimension exceeds cap " + std::to_string(cap.max_dim));
  }
  return a * b;
}

}  // namespace

DeltaVector::DeltaVector(std::size_t dim, Index index) : dim_(dim), index_(index) {
  if (dim == 0 || index < 1 || index > dim) {
    throw DimensionError("delta vector index " + std::to_string(index) +
                         " outside [1, " + std::to_string(dim) + "]");
  }
}

LogicalMatrix::LogicalMatrix(std::size_t rows, std::vector<Index> indices)
    : rows_(rows), indices_(std::move(indices)) {
  if (rows_ == 0) throw DimensionError("logical matrix needs at least one row");
  if (indices_.empty()) throw DimensionError("logical matrix needs at least one column");
  for (Index i : indices_) {
    if (i < 1 || i > rows_) {
      throw DimensionError("logical matrix column index " + std::to_string(i) +
                           " outside [1, " + std::to_string(rows_) + "]");
    }
  }
}

LogicalMatrix::LogicalMatrix(const DeltaVector& v) : rows_(v.dim()), indices_{v.index()} {}

LogicalMatrix LogicalMatrix::identity(std::size_t n) {
  std::vector<Index> idx(n);
  std::iota(idx.begin(), idx.end(), Index{1});
  return LogicalMatrix(n, std::move(idx));
}

DeltaVector LogicalMatrix::column(Index j) const {
  if (j < 1 || j > cols()) {
    throw DimensionError("column " + std::to_string(j) + " outside [1, " +
                         std::to_string(cols()) + "]");
  }
  return DeltaVector(rows_, indices_[j - 1]);
}

DenseMatrix LogicalMatrix::dense() const {
  DenseMatrix d(rows_, cols());
  for (std::size_t j = 0; j < cols(); ++j) d(indices_[j] - 1, j) = 1;
  return d;
}

DeltaVector LogicalMatrix::as_delta() const {
  if (cols() != 1) throw DimensionError("matrix has more than one column");
  return DeltaVector(rows_, indices_[0]);
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw DimensionError("entry count does not match shape");
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = 1;
  return d;
}

bool DenseMatrix::is_logical() const {
  if (rows_ == 0 || cols_ == 0) return false;
  for (std::size_t c = 0; c < cols_; ++c) {
    int ones = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      const auto v = (*this)(r, c);
      if (v == 1) {
        ++ones;
      } else if (v != 0) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  return true;
}

LogicalMatrix DenseMatrix::to_logical() const {
  if (!is_logical()) throw DimensionError("matrix is not logical");
  std::vector<Index> idx(cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    for (std::size_t r = 0; r < rows_; ++r) {
      if ((*this)(r, c) == 1) idx[c] = r + 1;
    }
  }
  return LogicalMatrix(rows_, std::move(idx));
}

std::ostream& operator<<(std::ostream& os, const DeltaVector& v) {
  return os << "delta_" << v.dim() << "^" << v.index();
}

std::ostream& operator<<(std::ostream& os, const LogicalMatrix& m) {
  os << "delta_" << m.rows() << "[";
  for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m[j];
  return os << "]";
}

std::ostream& operator<<(std::ostream& os, const DenseMatrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
  }
  return os << "]";
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b, DimensionCap cap) {
  if (a.cols() != b.rows()) {
    throw DimensionError("inner dimensions differ: " + std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()));
  }
  check_cap(a.rows(), b.cols(), cap);
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b, DimensionCap cap) {
  const auto rows = capped_product(a.rows(), b.rows(), cap);
  const auto cols = capped_product(a.cols(), b.cols(), cap);
  DenseMatrix out(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

DenseMatrix stp(const DenseMatrix& a, const DenseMatrix& b, DimensionCap cap) {
  const std::size_t n = a.cols();
  const std::size_t p = b.rows();
  if (n == 0 || p == 0) throw DimensionError("empty operand");
  const std::size_t s = std::lcm(n, p);
  check_cap(s, s, cap);
  if (n == p) return multiply(a, b, cap);
  return multiply(kron(a, DenseMatrix::identity(s / n), cap),
                  kron(b, DenseMatrix::identity(s / p), cap), cap);
}

LogicalMatrix stp(const LogicalMatrix& a, const LogicalMatrix& b, DimensionCap cap) {
  const std::size_t n = a.cols();
  const std::size_t p = b.rows();
  const std::size_t s = std::lcm(n, p);
  const std::size_t ka = s / n;  // A ⊗ I_ka
  const std::size_t kb = s / p;  // B ⊗ I_kb
  const std::size_t rows = capped_product(a.rows(), ka, cap);
  const std::size_t cols = capped_product(b.cols(), kb, cap);
  check_cap(rows, cols, cap);

  std::vector<Index> out;
  out.reserve(cols);
  for (std::size_t bc = 0; bc < b.cols(); ++bc) {
    for (std::size_t r = 1; r <= kb; ++r) {
      // Row hit by column (bc, r) of B ⊗ I_kb; selects that column of A ⊗ I_ka.
      const std::size_t rho = (b[bc] - 1) * kb + r;
      const std::size_t acol = (rho - 1) / ka;
      const std::size_t ar = (rho - 1) % ka + 1;
      out.push_back((a[acol] - 1) * ka + ar);
    }
  }
  return LogicalMatrix(rows, std::move(out));
}

LogicalMatrix stp(std::initializer_list<LogicalMatrix> factors, DimensionCap cap) {
  if (factors.size() == 0) throw DimensionError("stp of no factors");
  auto it = factors.begin();
  LogicalMatrix acc = *it++;
  for (; it != factors.end(); ++it) acc = stp(acc, *it, cap);
  return acc;
}

LogicalMatrix kron(const LogicalMatrix& a, const LogicalMatrix& b, DimensionCap cap) {
  const auto rows = capped_product(a.rows(), b.rows(), cap);
  const auto cols = capped_product(a.cols(), b.cols(), cap);
  check_cap(rows, cols, cap);
  std::vector<Index> out;
  out.reserve(cols);
  for (std::size_t ja = 0; ja < a.cols(); ++ja)
    for (std::size_t jb = 0; jb < b.cols(); ++jb) out.push_back((a[ja] - 1) * b.rows() + b[jb]);
  return LogicalMatrix(rows, std::move(out));
}

LogicalMatrix khatri_rao(const LogicalMatrix& a, const LogicalMatrix& b, DimensionCap cap) {
  if (a.cols() != b.cols()) {
    throw DimensionError("Khatri-Rao operands have " + std::to_string(a.cols()) + " and " +
                         std::to_string(b.cols()) + " columns");
  }
  const auto rows = capped_product(a.rows(), b.rows(), cap);
  check_cap(rows, a.cols(), cap);
  std::vector<Index> out(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) out[j] = (a[j] - 1) * b.rows() + b[j];
  return LogicalMatrix(rows, std::move(out));
}

std::vector<Index> index_row(const LogicalMatrix& h) {
  return {h.indices().begin(), h.indices().end()};
}

}  // namespace bcnid
