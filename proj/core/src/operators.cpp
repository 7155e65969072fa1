#include "akh/operators.hpp"

namespace akh {

BlockOperator adjoint(const BigradedAlgebra& alg, const BlockOperator& op) {
  BlockOperator out;
  for (const auto& [key, m] : op.blocks()) {
    const auto& [src, tgt] = key;
    out.add_block(tgt, src, alg.gram_inverse(src) * m.adjoint() * alg.gram(tgt));
  }
  return out;
}

BlockOperator laplacian(const BigradedAlgebra& alg, const BlockOperator& delta) {
  const BlockOperator star = adjoint(alg, delta);
  return delta * star + star * delta;
}

OperatorSuite OperatorSuite::build(LieModel model) {
  StructureReport structure = validate(model);
  BigradedAlgebra alg(std::move(model));
  ComponentDifferential d = ce_differential(alg);
  ComponentDifferential adj{adjoint(alg, d.mu_bar), adjoint(alg, d.d_bar), adjoint(alg, d.del), adjoint(alg, d.mu)};
  BlockOperator star = hodge_star(alg);
  BlockOperator star_inverse = block_inverse(alg, star);
  Form omega = fundamental_form(alg);
  LefschetzTriple lefschetz = lefschetz_triple(alg, omega, star);
  Laplacians lap{laplacian(alg, d.mu_bar), laplacian(alg, d.d_bar), laplacian(alg, d.del), laplacian(alg, d.mu),
                 laplacian(alg, d.total())};
  BlockOperator d_total = d.total();
  BlockOperator d_total_adj = adj.total();
  BlockOperator weight = weight_operator(alg);
  BlockOperator weight_inverse = weight_operator_inverse(alg);
  return OperatorSuite{std::move(alg),          std::move(structure), std::move(d),
                       std::move(d_total),      std::move(adj),       std::move(d_total_adj),
                       std::move(star),         std::move(star_inverse), std::move(weight),
                       std::move(weight_inverse), std::move(omega),   std::move(lefschetz),
                       std::move(lap)};
}

std::optional<LaplacianWitness> laplacian_symmetry_witness(const OperatorSuite& ops) {
  const BlockOperator left = ops.lap.d_bar + ops.lap.mu;
  const BlockOperator right = ops.lap.del + ops.lap.mu_bar;
  for (const Bidegree b : ops.alg.bidegrees()) {
    const ExactMatrix ml = source_matrix(ops.alg, left, b);
    const ExactMatrix mr = source_matrix(ops.alg, right, b);
    for (const Vector& v : kernel(ml))
      if (!is_zero(mr * v)) return LaplacianWitness{b, Form(b, v), true};
    for (const Vector& v : kernel(mr))
      if (!is_zero(ml * v)) return LaplacianWitness{b, Form(b, v), false};
  }
  return std::nullopt;
}

}  // namespace akh
