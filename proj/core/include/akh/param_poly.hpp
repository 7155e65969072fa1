#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "akh/gauss_scalar.hpp"

namespace akh {

/// Multivariate polynomial with GaussScalar coefficients in named parameters.
/// Zero coefficients are never stored; two polynomials combine only when
/// their variable lists agree.
class ParamPoly {
 public:
  using Exponents = std::vector<unsigned>;

  ParamPoly() = default;
  explicit ParamPoly(std::vector<std::string> variables);

  static ParamPoly constant(std::vector<std::string> variables, const GaussScalar& c);
  static ParamPoly variable(std::vector<std::string> variables, std::size_t index);

  const std::vector<std::string>& variables() const { return variables_; }
  const std::map<Exponents, GaussScalar>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t total_degree() const;

  /// Adds c * x^e.
  void add_term(const Exponents& e, const GaussScalar& c);

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  ParamPoly& operator*=(const GaussScalar& c);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r = a;
    return r *= b;
  }
  friend ParamPoly operator*(ParamPoly a, const GaussScalar& c) { return a *= c; }
  friend ParamPoly operator*(const GaussScalar& c, ParamPoly a) { return a *= c; }
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
    return a.variables_ == b.variables_ && a.terms_ == b.terms_;
  }

  GaussScalar evaluate(std::span<const GaussScalar> point) const;

  /// Human-readable form such as "(1/2)*t1^2 + (-1*i)*t1*t2"; "0" for zero.
  std::string to_string() const;

 private:
  void require_compatible(const ParamPoly& o) const;

  std::vector<std::string> variables_;
  std::map<Exponents, GaussScalar> terms_;
};

inline bool is_zero(const ParamPoly& p) { return p.is_zero(); }

}  // namespace akh
