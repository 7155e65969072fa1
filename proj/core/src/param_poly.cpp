#include "akh/param_poly.hpp"

#include <numeric>
#include <stdexcept>

namespace akh {

ParamPoly::ParamPoly(std::vector<std::string> variables) : variables_(std::move(variables)) {}

ParamPoly ParamPoly::constant(std::vector<std::string> variables, const GaussScalar& c) {
  ParamPoly p(std::move(variables));
  p.add_term(Exponents(p.variables_.size(), 0), c);
  return p;
}

ParamPoly ParamPoly::variable(std::vector<std::string> variables, std::size_t index) {
  if (index >= variables.size()) throw std::out_of_range("ParamPoly::variable index");
  ParamPoly p(std::move(variables));
  Exponents e(p.variables_.size(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

std::size_t ParamPoly::total_degree() const {
  std::size_t deg = 0;
  for (const auto& [e, c] : terms_) deg = std::max<std::size_t>(deg, std::accumulate(e.begin(), e.end(), 0u));
  return deg;
}

void ParamPoly::add_term(const Exponents& e, const GaussScalar& c) {
  if (e.size() != variables_.size()) throw std::invalid_argument("ParamPoly: exponent arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void ParamPoly::require_compatible(const ParamPoly& o) const {
  if (variables_ != o.variables_) throw std::invalid_argument("ParamPoly: variable lists differ");
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
  require_compatible(o);
  ParamPoly product(variables_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      product.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const GaussScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

GaussScalar ParamPoly::evaluate(std::span<const GaussScalar> point) const {
  if (point.size() != variables_.size()) throw std::invalid_argument("ParamPoly::evaluate arity mismatch");
  GaussScalar total;
  for (const auto& [e, c] : terms_) {
    GaussScalar term = c;
    for (std::size_t k = 0; k < e.size(); ++k) {
      for (unsigned r = 0; r < e[k]; ++r) term *= point[k];
    }
    total += term;
  }
  return total;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      out += "*" + variables_[k];
      if (e[k] > 1) out += "^" + std::to_string(e[k]);
    }
  }
  return out;
}

}  // namespace akh
