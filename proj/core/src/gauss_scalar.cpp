#include "akh/gauss_scalar.hpp"

#include <cctype>
#include <ostream>

#include "akh/error.hpp"

namespace akh {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in rational '" + std::string(text) + "'");
  if (!text.empty() && text.front() == '-') n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(10); }

GaussScalar::GaussScalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussScalar GaussScalar::rational(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return GaussScalar(q);
}

GaussScalar GaussScalar::parse(std::string_view text) {
  if (text == "i" || text == "+i") return i();
  if (text == "-i") return -i();
  constexpr std::string_view suffix = "*i";
  if (text.size() < suffix.size() || text.substr(text.size() - suffix.size()) != suffix) {
    return GaussScalar(parse_rational(text));
  }
  const std::string_view head = text.substr(0, text.size() - suffix.size());
  // A sign after position 0 separates the real and imaginary parts.
  const auto split = head.find_first_of("+-", 1);
  if (split == std::string_view::npos) return {mpq_class(0), parse_rational(head)};
  return {parse_rational(head.substr(0, split)), parse_rational(head.substr(split))};
}

GaussScalar& GaussScalar::operator+=(const GaussScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussScalar& GaussScalar::operator-=(const GaussScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussScalar& GaussScalar::operator*=(const GaussScalar& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussScalar& GaussScalar::operator/=(const GaussScalar& o) {
  if (o.is_zero()) throw std::domain_error("GaussScalar division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const mpq_class n = o.norm2();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussScalar::to_string() const {
  if (is_real()) return rational_to_string(re_);
  if (sgn(re_) == 0) return rational_to_string(im_) + "*i";
  std::string out = rational_to_string(re_);
  if (sgn(im_) > 0) out += '+';
  return out + rational_to_string(im_) + "*i";
}

GaussScalar i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return 1;
    case 1: return GaussScalar::i();
    case 2: return -1;
    default: return -GaussScalar::i();
  }
}

std::ostream& operator<<(std::ostream& os, const GaussScalar& x) { return os << x.to_string(); }

}  // namespace akh
