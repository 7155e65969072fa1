#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>

#include "akh/matrix.hpp"

namespace akh {

/// Bidegree (p, q). Ordered by total degree, then by p descending, so
/// (0,0) < (1,0) < (0,1) < (2,0) < (1,1) < (0,2) < ...
struct Bidegree {
  int p = 0;
  int q = 0;
  int degree() const { return p + q; }
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  friend bool operator<(const Bidegree& a, const Bidegree& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.p > b.p;
  }
};

/// "p,q"
std::string to_string(Bidegree b);
Bidegree parse_bidegree(const std::string& text);

/// Exterior monomial on 2m complex generators: bit a < m is theta^a, bit
/// m + a is conj(theta^a). Generators are wedged in ascending bit order.
using Monomial = std::uint32_t;

namespace exterior {

/// Sign of a ^ b relative to the canonical monomial a | b; 0 if they overlap.
int wedge_sign(Monomial a, Monomial b);

inline Bidegree bidegree(Monomial mono, int m) {
  const Monomial low = mono & ((Monomial{1} << m) - 1);
  return {std::popcount(low), std::popcount(mono >> m)};
}

template <class Coeff>
using SparseForm = std::map<Monomial, Coeff>;

template <class Coeff>
void accumulate(SparseForm<Coeff>& into, Monomial mono, const Coeff& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = into.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) into.erase(it);
  }
}

template <class Coeff>
SparseForm<Coeff> wedge(const SparseForm<Coeff>& a, const SparseForm<Coeff>& b) {
  SparseForm<Coeff> out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      Coeff term = ca * cb;
      if (s < 0) term = -term;
      accumulate(out, ma | mb, term);
    }
  }
  return out;
}

}  // namespace exterior

/// Element of the complexified exterior algebra stored as one coefficient
/// vector per bidegree block (over the algebra's canonical monomial basis).
/// Zero blocks are dropped, so equality is structural.
class Form {
 public:
  Form() = default;
  Form(Bidegree b, Vector coeffs) { add(b, coeffs); }

  const std::map<Bidegree, Vector>& blocks() const { return blocks_; }
  /// nullptr when the block is zero.
  const Vector* block(Bidegree b) const;
  void add(Bidegree b, const Vector& coeffs);

  bool is_zero() const { return blocks_.empty(); }
  /// True when all nonzero content lies in bidegree b.
  bool is_pure(Bidegree b) const;

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const GaussScalar& c);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const GaussScalar& c) { return a *= c; }
  friend Form operator*(const GaussScalar& c, Form a) { return a *= c; }
  friend bool operator==(const Form&, const Form&) = default;

 private:
  std::map<Bidegree, Vector> blocks_;
};

}  // namespace akh
