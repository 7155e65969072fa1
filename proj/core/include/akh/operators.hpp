#pragma once

#include <optional>

#include "akh/calculus.hpp"

namespace akh {

/// Hermitian adjoint with respect to the Gram matrices:
/// each block A: src -> tgt becomes G_src^{-1} A^H G_tgt: tgt -> src.
BlockOperator adjoint(const BigradedAlgebra& alg, const BlockOperator& op);

/// delta delta* + delta* delta.
BlockOperator laplacian(const BigradedAlgebra& alg, const BlockOperator& delta);

/// Every operator of the almost Hermitian calculus of one model, built once
/// and read-only afterwards.
struct OperatorSuite {
  /// Throws InputError if J is not an orthogonal almost complex structure.
  static OperatorSuite build(LieModel model);

  BigradedAlgebra alg;
  StructureReport structure;
  ComponentDifferential d;
  BlockOperator d_total;
  ComponentDifferential adj;  ///< componentwise adjoints mu_bar*, d_bar*, del*, mu*
  BlockOperator d_total_adj;
  BlockOperator star;
  BlockOperator star_inverse;
  BlockOperator weight;
  BlockOperator weight_inverse;
  Form omega;
  LefschetzTriple lefschetz;

  struct Laplacians {
    BlockOperator mu_bar, d_bar, del, mu, d;
  } lap;
};

struct LaplacianWitness {
  Bidegree bidegree;
  Form form;
  /// True when form lies in ker(Lap_dbar + Lap_mu) but not ker(Lap_del + Lap_mubar).
  bool dbar_mu_side = true;
};

/// A basis vector separating ker(Lap_dbar + Lap_mu) from ker(Lap_del + Lap_mubar)
/// on some block, scanning blocks in bidegree order; nullopt when the two
/// kernels agree everywhere.
std::optional<LaplacianWitness> laplacian_symmetry_witness(const OperatorSuite& ops);

}  // namespace akh
