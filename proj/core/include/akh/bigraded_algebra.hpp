#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "akh/forms.hpp"
#include "akh/lie_model.hpp"

namespace akh {

/// Complexified invariant exterior algebra of an almost Hermitian Lie model,
/// graded by bidegree.
///
/// The (1,0)-coframe theta^0..theta^{m-1} spans the +i eigenspace of the dual
/// of J. Each eigenvector is scaled so that theta^a(X_k - i J X_k) = 1, where
/// X_k is the first frame vector it does not annihilate; for an orthonormal
/// frame with J X_k = X_l this is theta^a = (x^k + i x^l) / 2.
///
/// Monomial labels: "a3" is theta^2, "a3~" is its conjugate, joined by '^'
/// in canonical order ("a1^a2^a1~"); "1" is the unit.
class BigradedAlgebra {
 public:
  /// Throws InputError if J is not an orthogonal almost complex structure.
  explicit BigradedAlgebra(LieModel model);

  const LieModel& model() const { return model_; }
  int m() const { return m_; }

  /// Every bidegree (p, q) with 0 <= p, q <= m, in Bidegree order.
  const std::vector<Bidegree>& bidegrees() const { return bidegrees_; }
  bool has(Bidegree b) const { return b.p >= 0 && b.q >= 0 && b.p <= m_ && b.q <= m_; }
  const std::vector<Monomial>& basis(Bidegree b) const;
  std::size_t dim(Bidegree b) const { return basis(b).size(); }
  /// Position of a monomial inside its bidegree block.
  std::size_t index_of(Monomial mono) const { return index_.at(mono); }

  /// Hermitian inner product on a block: gram(b)(i, j) = <basis_j, basis_i>,
  /// so <x, y> = y^H G x.
  const ExactMatrix& gram(Bidegree b) const { return gram_.at(b); }
  const ExactMatrix& gram_inverse(Bidegree b) const { return gram_inv_.at(b); }

  /// Row a holds the real-frame coefficients of generator a:
  /// phi^a = sum_k coframe()(a, k) x^k, with phi^{m+a} = conj(phi^a).
  const ExactMatrix& coframe() const { return T_; }
  /// Inverse of coframe(): x^k = sum_a real_to_complex()(k, a) phi^a.
  const ExactMatrix& real_to_complex() const { return S_; }

  Form one() const;
  Form monomial(Monomial mono, const GaussScalar& c = 1) const;
  Form generator(std::size_t a, bool barred = false) const;
  /// sum_k coeffs[k] x^k.
  Form real_covector(const Vector& coeffs) const;
  /// Real frame monomial x^{k_1} ^ ... ^ x^{k_r}.
  Form real_monomial(std::span<const std::size_t> frame_indices) const;
  /// Real 2-form sum_{i<j} form(i, j) x^i ^ x^j.
  Form real_two_form(const ExactMatrix& form) const;
  /// Volume form omega^m / m!, the orientation induced by J. Equals
  /// orientation() * x^1 ^ ... ^ x^{2m}.
  const Form& vol() const { return vol_; }
  int orientation() const { return orientation_; }

  Form wedge(const Form& a, const Form& b) const;
  Form conj(const Form& a) const;
  Form d(const Form& a) const;
  /// Top-degree coefficient relative to vol.
  GaussScalar integrate(const Form& a) const;
  /// <x, y>, complex-linear in x.
  GaussScalar inner(const Form& x, const Form& y) const;

  exterior::SparseForm<GaussScalar> to_sparse(const Form& a) const;
  Form from_sparse(const exterior::SparseForm<GaussScalar>& a) const;
  Form from_block_vector(Bidegree b, const Vector& v) const { return Form(b, v); }

  /// Differential of a monomial (derivation extension of d on generators).
  exterior::SparseForm<GaussScalar> d_monomial(Monomial mono) const;

  /// Value of a 1-form or 2-form on complex frame-coordinate vectors.
  GaussScalar evaluate(const Form& one_form, const Vector& u) const;
  GaussScalar evaluate(const Form& two_form, const Vector& u, const Vector& v) const;

  std::string monomial_label(Monomial mono) const;
  /// Inverse of monomial_label; throws InputError.
  Monomial parse_monomial_label(std::string_view label) const;
  /// Sign s with conj(mono) = s * conj_monomial(mono).
  Monomial conj_monomial(Monomial mono, int& sign) const;

 private:
  GaussScalar monomial_inner(Monomial x, Monomial y) const;

  LieModel model_;
  int m_;
  ExactMatrix T_;
  ExactMatrix S_;
  ExactMatrix generator_gram_;  // (a, b) -> <phi^a, phi^b>
  std::vector<exterior::SparseForm<GaussScalar>> d_generators_;
  std::vector<Bidegree> bidegrees_;
  std::map<Bidegree, std::vector<Monomial>> bases_;
  std::unordered_map<Monomial, std::size_t> index_;
  std::map<Bidegree, ExactMatrix> gram_;
  std::map<Bidegree, ExactMatrix> gram_inv_;
  Form vol_;
  GaussScalar vol_top_;
  int orientation_ = 1;
};

}  // namespace akh
