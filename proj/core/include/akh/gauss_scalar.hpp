#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace akh {

/// Parses "p/q" or "p" (optional leading sign) into a canonical rational.
/// Throws InputError on anything else, including a zero denominator.
mpq_class parse_rational(std::string_view text);

std::string rational_to_string(const mpq_class& q);

/// Exact element re + im*i of the Gaussian rationals Q(i).
class GaussScalar {
 public:
  GaussScalar() = default;
  GaussScalar(int value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussScalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussScalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussScalar(mpq_class re, mpq_class im);

  static GaussScalar i() { return {mpq_class(0), mpq_class(1)}; }
  static GaussScalar rational(long num, long den);

  /// Inverse of to_string(): "a", "b*i", "a+b*i", "a-b*i", also "i" and "-i".
  static GaussScalar parse(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussScalar conj() const { return {re_, -im_}; }
  /// |x|^2 = re^2 + im^2.
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }

  GaussScalar operator-() const { return {-re_, -im_}; }
  GaussScalar& operator+=(const GaussScalar& o);
  GaussScalar& operator-=(const GaussScalar& o);
  GaussScalar& operator*=(const GaussScalar& o);
  GaussScalar& operator/=(const GaussScalar& o);

  friend GaussScalar operator+(GaussScalar a, const GaussScalar& b) { return a += b; }
  friend GaussScalar operator-(GaussScalar a, const GaussScalar& b) { return a -= b; }
  friend GaussScalar operator*(GaussScalar a, const GaussScalar& b) { return a *= b; }
  friend GaussScalar operator/(GaussScalar a, const GaussScalar& b) { return a /= b; }
  friend bool operator==(const GaussScalar& a, const GaussScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// i^k for any integer k.
GaussScalar i_pow(int k);

inline bool is_zero(const GaussScalar& x) { return x.is_zero(); }

std::ostream& operator<<(std::ostream& os, const GaussScalar& x);

}  // namespace akh
