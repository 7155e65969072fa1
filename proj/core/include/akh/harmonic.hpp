#pragma once

#include <optional>
#include <string>
#include <vector>

#include "akh/operators.hpp"

namespace akh {

/// Which harmonic space to compute on a block.
///   d          kernel of all eight components mu_bar, d_bar, del, mu and their adjoints
///   mu_bar...  ker(delta) ∩ ker(delta*) for a single component
///   d_bar_mu   ker(Lap_dbar + Lap_mu)
///   del_mu_bar ker(Lap_del + Lap_mubar)
enum class HarmonicKind { d, mu_bar, d_bar, del, mu, d_bar_mu, del_mu_bar };

std::string to_string(HarmonicKind kind);

/// Coordinate vectors (over the block basis) of a harmonic basis. Throws
/// InputError when b is outside 0 <= p, q <= m.
std::vector<Vector> harmonic_vectors(const OperatorSuite& ops, HarmonicKind kind, Bidegree b);
std::vector<Form> harmonic_basis(const OperatorSuite& ops, HarmonicKind kind, Bidegree b);

/// Betti numbers of the invariant complex, b^0..b^{2m}.
std::vector<std::size_t> betti(const OperatorSuite& ops);

struct Diamond {
  int m = 0;
  std::vector<std::vector<std::size_t>> ell;  ///< ell[p][q] = dim ker(Lap_dbar + Lap_mu) on A^{p,q}
  std::vector<std::size_t> betti;
  bool almost_kahler = false;
  // Evaluated on almost Kähler models only.
  std::optional<bool> duality_ok;       ///< ell^{p,q} = ell^{q,p} = ell^{m-q,m-p}
  std::optional<bool> bounds_ok;        ///< sum_{p+q=k} ell^{p,q} <= b^k
  std::optional<bool> diagonal_ok;      ///< ell^{k,k} >= 1
  std::optional<bool> omega_powers_ok;  ///< omega^k is d-harmonic
  std::optional<bool> lefschetz_ok;     ///< every L^{m-k} on harmonics is an isomorphism

  std::size_t at(int p, int q) const { return ell.at(p).at(q); }
};

Diamond ell_diamond(const OperatorSuite& ops);

struct LefschetzMap {
  Bidegree source;
  Bidegree target;
  int power = 0;  ///< m - k
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::size_t rank = 0;
  bool into_harmonic = false;
  bool iso = false;
};

struct CohomologyLefschetz {
  int k = 0;
  std::size_t rank = 0;  ///< rank of L^{m-k}: H^k -> H^{2m-k}
  std::size_t source_betti = 0;
  bool iso = false;
};

struct HardLefschetzReport {
  std::vector<LefschetzMap> maps;
  bool all_iso = false;
  bool monotone = false;  ///< ell^{p,q} <= ell^{p+1,q+1} whenever p+q+2 <= m
  std::vector<CohomologyLefschetz> cohomology;
};

/// Requires an almost Kähler model; throws InputError otherwise.
HardLefschetzReport hard_lefschetz(const OperatorSuite& ops);

struct PrimitiveDecomposition {
  Bidegree bidegree;
  std::size_t ell = 0;
  /// dims[j] = dim L^j(prim^{p-j,q-j}), prim = harmonic ∩ ker Lambda.
  std::vector<std::size_t> dims;
  bool sums_ok = false;
  bool orthogonal = false;
};

PrimitiveDecomposition primitive_decomposition(const OperatorSuite& ops, Bidegree b);

/// Primitive harmonic vectors on a block.
std::vector<Vector> primitive_harmonic_vectors(const OperatorSuite& ops, Bidegree b);

struct HodgeRiemannCheck {
  Bidegree bidegree;
  std::size_t dim = 0;  ///< primitive harmonic dimension
  Signature unsigned_form;  ///< i^{p-q} ∫ alpha ^ conj(beta) ^ omega^{m-k}
  Signature signed_form;    ///< with the factor (-1)^{k(k-1)/2}
  bool positive_definite = false;
};

/// Requires an almost Kähler model and p + q <= m.
HodgeRiemannCheck hodge_riemann_check(const OperatorSuite& ops, Bidegree b);

struct HodgeIndex {
  std::size_t b2_plus = 0;
  std::size_t b2_minus = 0;
  std::size_t b2_zero = 0;
  std::size_t ell11 = 0;
  bool relation_ok = false;        ///< ell11 = b2_minus + 1 and b2_plus >= 1
  bool non_integrable_vanishing = false;  ///< non-integrable implies ell^{2,0} = ell^{0,2} = 0
  bool representative_independent = false;
};

/// Cup-product signature on H^2 from real harmonic representatives.
/// Requires dimension 4 and an almost Kähler model.
HodgeIndex hodge_index(const OperatorSuite& ops);

/// Real 2-form representatives of H^2 (degree-2 d-harmonic forms, realified).
std::vector<Form> real_harmonic_two_forms(const OperatorSuite& ops);

/// dim(ker mu_bar / im mu_bar) on A^{p,q}.
std::size_t mu_bar_cohomology(const OperatorSuite& ops, Bidegree b);

}  // namespace akh
