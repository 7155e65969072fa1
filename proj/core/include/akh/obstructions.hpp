#pragma once

#include <optional>
#include <string>
#include <vector>

#include "akh/harmonic.hpp"
#include "akh/param_poly.hpp"

namespace akh {

/// ker(d_bar) on A^{p,0}; depends only on J.
std::vector<Form> holomorphic_forms(const OperatorSuite& ops, int p);

enum class AkVerdict { nonexistence, inconclusive, vacuous };
std::string to_string(AkVerdict v);

/// Parametric search for invariant almost Kähler structures with the given J.
///
/// omega_t = sum_r t_r w_r runs over the real d-closed (1,1)-forms w_r. T1
/// collects the t for which omega_t ^ alpha lies in the image of d_bar on
/// invariant (2,1)-forms for every holomorphic 1-form alpha. When T1 is
/// everything, a compatible structure would force omega_t ^ alpha = 0 (T2),
/// and the verdict is nonexistence only if omega_t^m vanishes identically
/// on T2.
struct AkNonexistenceReport {
  AkVerdict verdict = AkVerdict::inconclusive;
  std::vector<Form> closed_11_basis;  ///< w_r
  std::size_t holomorphic_dim = 0;
  std::size_t t1_dim = 0;
  bool t1_full = false;
  std::vector<Vector> t2_basis;  ///< real parameter vectors t
  /// omega^m / vol on T2 in the parameters s_j of t = sum_j s_j t2_basis[j].
  std::optional<ParamPoly> top_power_on_t2;
  std::string statement;
};

AkNonexistenceReport ak_nonexistence_report(const OperatorSuite& ops);

struct ObstructionReport {
  std::vector<std::size_t> holomorphic_dims;  ///< dim ker d_bar on A^{p,0}, p = 0..m
  std::size_t b1 = 0;
  bool holomorphic_bound_ok = false;  ///< 2 dim Omega^1 <= b^1
  bool holomorphic_excess = false;    ///< dim Omega^1 > dim Omega^2 + 1
  std::optional<bool> holomorphic_equals_harmonic;  ///< Omega^1 = H_d^{1,0}, almost Kähler models only
  std::optional<LaplacianWitness> laplacian_witness;
  AkNonexistenceReport ak;

  /// Some criterion rules out a compatible invariant almost Kähler structure.
  bool fires() const;
};

ObstructionReport obstructions(const OperatorSuite& ops);

}  // namespace akh
