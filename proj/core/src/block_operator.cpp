#include "akh/block_operator.hpp"

#include <stdexcept>

namespace akh {

BlockOperator BlockOperator::identity(const BigradedAlgebra& alg) {
  return diagonal(alg, [](Bidegree) { return GaussScalar(1); });
}

BlockOperator BlockOperator::diagonal(const BigradedAlgebra& alg,
                                      const std::function<GaussScalar(Bidegree)>& scale) {
  BlockOperator op;
  for (const Bidegree b : alg.bidegrees()) op.add_block(b, b, ExactMatrix::identity(alg.dim(b)) * scale(b));
  return op;
}

void BlockOperator::add_block(Bidegree src, Bidegree tgt, const ExactMatrix& m) {
  if (m.is_zero()) return;
  auto [it, inserted] = blocks_.try_emplace({src, tgt}, m);
  if (inserted) return;
  it->second += m;
  if (it->second.is_zero()) blocks_.erase(it);
}

const ExactMatrix* BlockOperator::block(Bidegree src, Bidegree tgt) const {
  const auto it = blocks_.find({src, tgt});
  return it == blocks_.end() ? nullptr : &it->second;
}

std::optional<int> BlockOperator::degree() const {
  std::optional<int> deg;
  for (const auto& [key, m] : blocks_) {
    const int k = key.second.degree() - key.first.degree();
    if (deg && *deg != k) return std::nullopt;
    deg = k;
  }
  return deg;
}

BlockOperator BlockOperator::component(int r, int s) const {
  BlockOperator out;
  for (const auto& [key, m] : blocks_)
    if (key.second.p - key.first.p == r && key.second.q - key.first.q == s) out.blocks_.emplace(key, m);
  return out;
}

Form BlockOperator::apply(const Form& f) const {
  Form out;
  for (const auto& [key, m] : blocks_) {
    const Vector* v = f.block(key.first);
    if (v != nullptr) out.add(key.second, m * *v);
  }
  return out;
}

BlockOperator BlockOperator::operator-() const {
  BlockOperator r = *this;
  for (auto& [key, m] : r.blocks_) m = -m;
  return r;
}

BlockOperator& BlockOperator::operator+=(const BlockOperator& o) {
  for (const auto& [key, m] : o.blocks_) add_block(key.first, key.second, m);
  return *this;
}

BlockOperator& BlockOperator::operator-=(const BlockOperator& o) { return *this += -o; }

BlockOperator& BlockOperator::operator*=(const GaussScalar& c) {
  if (c.is_zero()) {
    blocks_.clear();
    return *this;
  }
  for (auto& [key, m] : blocks_) m *= c;
  return *this;
}

BlockOperator operator*(const BlockOperator& a, const BlockOperator& b) {
  BlockOperator out;
  for (const auto& [kb, mb] : b.blocks_) {
    const auto first = a.blocks_.lower_bound({kb.second, Bidegree{0, 0}});
    for (auto it = first; it != a.blocks_.end() && it->first.first == kb.second; ++it)
      out.add_block(kb.first, it->first.second, it->second * mb);
  }
  return out;
}

BlockOperator graded_commutator(const BlockOperator& a, const BlockOperator& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto da = a.degree();
  const auto db = b.degree();
  if (!da || !db) throw std::invalid_argument("graded_commutator: operand of mixed degree");
  BlockOperator out = a * b;
  if ((*da * *db) % 2 == 0) {
    out -= b * a;
  } else {
    out += b * a;
  }
  return out;
}

std::optional<Bidegree> first_difference(const BlockOperator& a, const BlockOperator& b) {
  const BlockOperator diff = a - b;
  if (diff.is_zero()) return std::nullopt;
  return diff.blocks().begin()->first.first;
}

ExactMatrix source_matrix(const BigradedAlgebra& alg, const BlockOperator& op, Bidegree src) {
  std::vector<ExactMatrix> parts;
  for (const auto& [key, m] : op.blocks())
    if (key.first == src) parts.push_back(m);
  if (parts.empty()) return ExactMatrix(0, alg.dim(src));
  return ExactMatrix::vstack(parts);
}

ExactMatrix total_degree_matrix(const BigradedAlgebra& alg, const BlockOperator& op, int from, int to) {
  std::map<Bidegree, std::size_t> row_off, col_off;
  std::size_t rows = 0, cols = 0;
  for (const Bidegree b : alg.bidegrees()) {
    if (b.degree() == from) {
      col_off[b] = cols;
      cols += alg.dim(b);
    }
    if (b.degree() == to) {
      row_off[b] = rows;
      rows += alg.dim(b);
    }
  }
  ExactMatrix out(rows, cols);
  for (const auto& [key, m] : op.blocks()) {
    const auto c = col_off.find(key.first);
    const auto r = row_off.find(key.second);
    if (c == col_off.end() || r == row_off.end()) continue;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out(r->second + i, c->second + j) = m(i, j);
  }
  return out;
}

std::size_t total_degree_dim(const BigradedAlgebra& alg, int k) {
  std::size_t n = 0;
  for (const Bidegree b : alg.bidegrees())
    if (b.degree() == k) n += alg.dim(b);
  return n;
}

Vector total_degree_vector(const BigradedAlgebra& alg, int k, const Form& f) {
  Vector out;
  for (const Bidegree b : alg.bidegrees()) {
    if (b.degree() != k) continue;
    const Vector* v = f.block(b);
    if (v == nullptr) {
      out.resize(out.size() + alg.dim(b));
    } else {
      out.insert(out.end(), v->begin(), v->end());
    }
  }
  for (const auto& [b, v] : f.blocks())
    if (b.degree() != k) throw std::invalid_argument("total_degree_vector: form has components outside degree " + std::to_string(k));
  return out;
}

Form form_from_total_degree(const BigradedAlgebra& alg, int k, const Vector& v) {
  Form out;
  std::size_t off = 0;
  for (const Bidegree b : alg.bidegrees()) {
    if (b.degree() != k) continue;
    const std::size_t n = alg.dim(b);
    if (off + n > v.size()) throw std::invalid_argument("form_from_total_degree: vector too short");
    out.add(b, Vector(v.begin() + static_cast<std::ptrdiff_t>(off), v.begin() + static_cast<std::ptrdiff_t>(off + n)));
    off += n;
  }
  if (off != v.size()) throw std::invalid_argument("form_from_total_degree: vector too long");
  return out;
}

BlockOperator block_inverse(const BigradedAlgebra& alg, const BlockOperator& op) {
  BlockOperator out;
  std::map<Bidegree, int> seen;
  for (const auto& [key, m] : op.blocks()) {
    if (++seen[key.first] > 1 || m.rows() != m.cols())
      throw std::domain_error("block_inverse: operator does not map blocks bijectively");
    out.add_block(key.second, key.first, inverse(m));
  }
  for (const Bidegree b : alg.bidegrees())
    if (alg.dim(b) != 0 && seen.find(b) == seen.end())
      throw std::domain_error("block_inverse: operator vanishes on block " + to_string(b));
  return out;
}

}  // namespace akh
