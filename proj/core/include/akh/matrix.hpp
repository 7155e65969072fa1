#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "akh/gauss_scalar.hpp"

namespace akh {

using Vector = std::vector<GaussScalar>;

/// Dense row-major matrix over Q(i).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ExactMatrix(std::initializer_list<std::initializer_list<GaussScalar>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(std::span<const GaussScalar> entries);
  /// Matrix whose j-th column is columns[j]; every column must have `rows` entries.
  static ExactMatrix from_columns(std::size_t rows, std::span<const Vector> columns);
  /// Vertical concatenation; all inputs must share the column count.
  static ExactMatrix vstack(std::span<const ExactMatrix> blocks);
  static ExactMatrix hstack(std::span<const ExactMatrix> blocks);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;

  bool is_zero() const;
  bool is_real() const;
  bool is_hermitian() const;
  bool is_symmetric() const;

  ExactMatrix transpose() const;
  ExactMatrix conj() const;
  /// Conjugate transpose.
  ExactMatrix adjoint() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const GaussScalar& c);
  ExactMatrix operator-() const;

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const GaussScalar& c) { return a *= c; }
  friend ExactMatrix operator*(const GaussScalar& c, ExactMatrix a) { return a *= c; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend Vector operator*(const ExactMatrix& a, const Vector& v);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussScalar> data_;
};

struct RowEchelon {
  ExactMatrix reduced;                    ///< reduced row echelon form
  std::vector<std::size_t> pivot_cols;    ///< ascending
};

/// Gauss-Jordan elimination; the pivot in each column is the first nonzero
/// entry at or below the current row, so the result is input-deterministic.
RowEchelon row_reduce(ExactMatrix m);

std::size_t rank(const ExactMatrix& m);

/// Nullspace basis: one vector per free column (ascending), with a 1 in that
/// column. Empty for a trivial kernel.
std::vector<Vector> kernel(const ExactMatrix& m);

/// Kernel of the vertical stack. Throws std::invalid_argument on mismatched
/// column counts.
std::vector<Vector> kernel_intersection(std::span<const ExactMatrix> ms);

/// Exact solution of m x = b, or nullopt when b is outside the column span.
std::optional<Vector> solve(const ExactMatrix& m, const Vector& b);

ExactMatrix inverse(const ExactMatrix& m);
GaussScalar determinant(ExactMatrix m);

/// Maximal linearly independent subset of `vectors`, keeping the earliest.
std::vector<Vector> independent_subset(std::span<const Vector> vectors, std::size_t dim);
bool in_span(std::span<const Vector> basis, const Vector& v, std::size_t dim);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a Hermitian matrix by exact congruence diagonalization.
Signature hermitian_signature(const ExactMatrix& h);

/// Inertia of a real symmetric matrix. Throws std::invalid_argument when the
/// input is not symmetric or has a nonzero imaginary part.
Signature symmetric_signature(const ExactMatrix& s);

bool is_zero(const Vector& v);

}  // namespace akh
