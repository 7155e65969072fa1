#pragma once

#include <optional>
#include <string>
#include <vector>

#include "akh/block_operator.hpp"

namespace akh {

/// d = mu_bar + d_bar + del + mu, with bidegree shifts (-1,2), (0,1), (1,0)
/// and (2,-1).
struct ComponentDifferential {
  BlockOperator mu_bar;
  BlockOperator d_bar;
  BlockOperator del;
  BlockOperator mu;
  BlockOperator total() const { return mu_bar + d_bar + del + mu; }
};

ComponentDifferential ce_differential(const BigradedAlgebra& alg);

struct RelationCheck {
  std::string name;
  bool holds = false;
};

/// The seven bidegree components of d^2 = 0, from mu^2 down to mu_bar^2.
std::vector<RelationCheck> d_squared_relations(const ComponentDifferential& d);

/// Operator of left multiplication eta ^ (.).
BlockOperator wedge_operator(const BigradedAlgebra& alg, const Form& eta);

/// Hodge star A^{p,q} -> A^{m-q,m-p}, solved from alpha ^ *conj(beta) = <alpha, beta> vol.
/// Throws std::domain_error if the defining system is singular.
BlockOperator hodge_star(const BigradedAlgebra& alg);

/// omega(X, Y) = <JX, Y>. Throws InputError unless omega is real, of type
/// (1,1) and nondegenerate.
Form fundamental_form(const BigradedAlgebra& alg);

struct LefschetzTriple {
  BlockOperator L;
  BlockOperator Lambda;  ///< star^{-1} L star
  BlockOperator H;       ///< [L, Lambda]
};

LefschetzTriple lefschetz_triple(const BigradedAlgebra& alg, const Form& omega, const BlockOperator& star);

/// Multiplication by i^{p-q} on A^{p,q}, and its inverse.
BlockOperator weight_operator(const BigradedAlgebra& alg);
BlockOperator weight_operator_inverse(const BigradedAlgebra& alg);

/// Fit of (mu_bar + mu) phi = lambda * phi(N(., .)) over all generators phi
/// and frame pairs. `scalar` is empty when both sides vanish identically.
struct NijenhuisComparison {
  bool consistent = false;
  std::optional<GaussScalar> scalar;
};

NijenhuisComparison compare_nijenhuis(const BigradedAlgebra& alg, const ComponentDifferential& d);

}  // namespace akh
