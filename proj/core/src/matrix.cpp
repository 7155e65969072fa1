#include "akh/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace akh {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<GaussScalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ExactMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(std::span<const GaussScalar> entries) {
  ExactMatrix m(entries.size(), entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) m(k, k) = entries[k];
  return m;
}

ExactMatrix ExactMatrix::from_columns(std::size_t rows, std::span<const Vector> columns) {
  ExactMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("from_columns: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

ExactMatrix ExactMatrix::vstack(std::span<const ExactMatrix> blocks) {
  if (blocks.empty()) return {};
  const std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("vstack: column count mismatch");
    rows += b.rows();
  }
  ExactMatrix m(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < cols; ++c) m(offset + r, c) = b(r, c);
    offset += b.rows();
  }
  return m;
}

ExactMatrix ExactMatrix::hstack(std::span<const ExactMatrix> blocks) {
  if (blocks.empty()) return {};
  const std::size_t rows = blocks.front().rows();
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw std::invalid_argument("hstack: row count mismatch");
    cols += b.cols();
  }
  ExactMatrix m(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m(r, offset + c) = b(r, c);
    offset += b.cols();
  }
  return m;
}

Vector ExactMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector ExactMatrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_real() const {
  for (const auto& x : data_)
    if (!x.is_real()) return false;
  return true;
}

bool ExactMatrix::is_hermitian() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r).conj()) return false;
  return true;
}

bool ExactMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ExactMatrix ExactMatrix::conj() const {
  ExactMatrix t = *this;
  for (auto& x : t.data_) x = x.conj();
  return t;
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c).conj();
  return t;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("ExactMatrix +: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("ExactMatrix -: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const GaussScalar& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix t = *this;
  for (auto& x : t.data_) x = -x;
  return t;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("ExactMatrix *: shape mismatch");
  ExactMatrix p(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussScalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const GaussScalar& y = b(k, c);
        if (!y.is_zero()) p(r, c) += x * y;
      }
    }
  }
  return p;
}

Vector operator*(const ExactMatrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("ExactMatrix * vector: shape mismatch");
  Vector out(a.rows_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c)
      if (!a(r, c).is_zero() && !v[c].is_zero()) out[r] += a(r, c) * v[c];
  return out;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]\n";
  }
  return os.str();
}

RowEchelon row_reduce(ExactMatrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    const GaussScalar inv = GaussScalar(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const GaussScalar f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const ExactMatrix& m) { return row_reduce(m).pivot_cols.size(); }

std::vector<Vector> kernel(const ExactMatrix& m) {
  const RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> kernel_intersection(std::span<const ExactMatrix> ms) {
  if (ms.empty()) throw std::invalid_argument("kernel_intersection: no matrices");
  return kernel(ExactMatrix::vstack(ms));
}

std::optional<Vector> solve(const ExactMatrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  ExactMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const RowEchelon e = row_reduce(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) x[e.pivot_cols[r]] = e.reduced(r, m.cols());
  return x;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  const ExactMatrix id = ExactMatrix::identity(n);
  const ExactMatrix blocks[] = {m, id};
  const RowEchelon e = row_reduce(ExactMatrix::hstack(blocks));
  if (e.pivot_cols.size() < n || (n > 0 && e.pivot_cols[n - 1] != n - 1))
    throw std::domain_error("inverse: matrix is singular");
  ExactMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

GaussScalar determinant(ExactMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  GaussScalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    const GaussScalar inv = GaussScalar(1) / m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const GaussScalar f = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

std::vector<Vector> independent_subset(std::span<const Vector> vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  const RowEchelon e = row_reduce(ExactMatrix::from_columns(dim, vectors));
  std::vector<Vector> out;
  for (auto c : e.pivot_cols) out.push_back(vectors[c]);
  return out;
}

bool in_span(std::span<const Vector> basis, const Vector& v, std::size_t dim) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  return solve(ExactMatrix::from_columns(dim, basis), v).has_value();
}

Signature hermitian_signature(const ExactMatrix& h) {
  if (!h.is_hermitian()) throw std::invalid_argument("hermitian_signature: matrix not Hermitian");
  ExactMatrix a = h;
  const std::size_t n = a.rows();
  Signature sig;
  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, pivot).is_zero()) ++pivot;
    if (pivot == n) {
      // All remaining diagonal entries vanish: fold an off-diagonal entry
      // into the diagonal, giving a(i,i) = 2|a(i,j)|^2.
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i) {
        for (std::size_t j = i + 1; j < n && !found; ++j) {
          if (a(i, j).is_zero()) continue;
          const GaussScalar c = a(i, j);
          for (std::size_t col = 0; col < n; ++col) a(i, col) += c * a(j, col);
          for (std::size_t row = 0; row < n; ++row) a(row, i) += c.conj() * a(row, j);
          pivot = i;
          found = true;
        }
      }
      if (!found) {
        sig.zero += n - k;
        return sig;
      }
    }
    swap_index(k, pivot);
    const GaussScalar d = a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k).is_zero()) continue;
      const GaussScalar f = a(r, k) / d;
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
      for (std::size_t rr = k; rr < n; ++rr) a(rr, r) -= f.conj() * a(rr, k);
    }
    if (sgn(d.re()) > 0) ++sig.positive;
    else ++sig.negative;
  }
  return sig;
}

Signature symmetric_signature(const ExactMatrix& s) {
  if (!s.is_real()) throw std::invalid_argument("symmetric_signature: entries must be real");
  if (!s.is_symmetric()) throw std::invalid_argument("symmetric_signature: matrix not symmetric");
  return hermitian_signature(s);
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace akh
