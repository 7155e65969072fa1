#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>

#include "akh/bigraded_algebra.hpp"

namespace akh {

/// Linear operator on the bigraded algebra, stored as one exact matrix per
/// (source, target) bidegree pair. Zero blocks are never stored, so an
/// operator with a single bidegree shift has at most one block per source.
class BlockOperator {
 public:
  using Key = std::pair<Bidegree, Bidegree>;  ///< (source, target)

  BlockOperator() = default;

  static BlockOperator identity(const BigradedAlgebra& alg);
  /// Multiplication by scale(p, q) on each block.
  static BlockOperator diagonal(const BigradedAlgebra& alg,
                                const std::function<GaussScalar(Bidegree)>& scale);

  /// Adds m into the (src, tgt) block.
  void add_block(Bidegree src, Bidegree tgt, const ExactMatrix& m);
  const std::map<Key, ExactMatrix>& blocks() const { return blocks_; }
  /// nullptr for a zero block.
  const ExactMatrix* block(Bidegree src, Bidegree tgt) const;

  bool is_zero() const { return blocks_.empty(); }
  /// Total degree (p+q shift) when every block shares it; nullopt for the
  /// zero operator or a mixed-degree one.
  std::optional<int> degree() const;
  bool is_homogeneous() const { return is_zero() || degree().has_value(); }
  /// Only the blocks with bidegree shift (r, s).
  BlockOperator component(int r, int s) const;

  Form apply(const Form& f) const;

  BlockOperator operator-() const;
  BlockOperator& operator+=(const BlockOperator& o);
  BlockOperator& operator-=(const BlockOperator& o);
  BlockOperator& operator*=(const GaussScalar& c);
  friend BlockOperator operator+(BlockOperator a, const BlockOperator& b) { return a += b; }
  friend BlockOperator operator-(BlockOperator a, const BlockOperator& b) { return a -= b; }
  friend BlockOperator operator*(BlockOperator a, const GaussScalar& c) { return a *= c; }
  friend BlockOperator operator*(const GaussScalar& c, BlockOperator a) { return a *= c; }
  /// Composition: (a * b)(x) = a(b(x)).
  friend BlockOperator operator*(const BlockOperator& a, const BlockOperator& b);
  friend bool operator==(const BlockOperator&, const BlockOperator&) = default;

 private:
  std::map<Key, ExactMatrix> blocks_;
};

/// [A, B] = AB - (-1)^{deg A deg B} BA. Throws std::invalid_argument when an
/// operand is nonzero and of mixed degree.
BlockOperator graded_commutator(const BlockOperator& a, const BlockOperator& b);

/// First source block (in bidegree order) where a and b differ, if any.
std::optional<Bidegree> first_difference(const BlockOperator& a, const BlockOperator& b);

/// Matrix of op restricted to source block src, targets stacked in bidegree
/// order. Rows = sum of the target dimensions that appear.
ExactMatrix source_matrix(const BigradedAlgebra& alg, const BlockOperator& op, Bidegree src);

/// Matrix of op from total degree j to total degree k, blocks laid out in
/// bidegree order.
ExactMatrix total_degree_matrix(const BigradedAlgebra& alg, const BlockOperator& op, int from, int to);

/// Conversions between a Form of pure total degree k and its coordinates in
/// the total-degree layout used by total_degree_matrix.
std::size_t total_degree_dim(const BigradedAlgebra& alg, int k);
Vector total_degree_vector(const BigradedAlgebra& alg, int k, const Form& f);
Form form_from_total_degree(const BigradedAlgebra& alg, int k, const Vector& v);

/// Blockwise inverse of an operator that maps each block bijectively onto
/// a single block. Throws std::domain_error otherwise.
BlockOperator block_inverse(const BigradedAlgebra& alg, const BlockOperator& op);

}  // namespace akh
