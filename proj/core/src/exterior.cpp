#include <stdexcept>

#include "akh/error.hpp"
#include "akh/forms.hpp"

namespace akh {

std::string to_string(Bidegree b) { return std::to_string(b.p) + "," + std::to_string(b.q); }

Bidegree parse_bidegree(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const int p = std::stoi(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    const std::string rest = text.substr(comma + 1);
    const int q = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {p, q};
  } catch (const std::logic_error&) {
    throw InputError("malformed bidegree '" + text + "', expected \"p,q\"");
  }
}

namespace exterior {

int wedge_sign(Monomial a, Monomial b) {
  if ((a & b) != 0) return 0;
  int inversions = 0;
  for (Monomial rest = b; rest != 0; rest &= rest - 1) {
    const int y = std::countr_zero(rest);
    inversions += std::popcount(static_cast<std::uint64_t>(a) >> (y + 1));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace exterior

const Vector* Form::block(Bidegree b) const {
  const auto it = blocks_.find(b);
  return it == blocks_.end() ? nullptr : &it->second;
}

void Form::add(Bidegree b, const Vector& coeffs) {
  if (akh::is_zero(coeffs)) return;
  auto [it, inserted] = blocks_.try_emplace(b, coeffs);
  if (inserted) return;
  if (it->second.size() != coeffs.size()) throw std::invalid_argument("Form: block length mismatch");
  for (std::size_t k = 0; k < coeffs.size(); ++k) it->second[k] += coeffs[k];
  if (akh::is_zero(it->second)) blocks_.erase(it);
}

bool Form::is_pure(Bidegree b) const {
  return blocks_.empty() || (blocks_.size() == 1 && blocks_.begin()->first == b);
}

Form Form::operator-() const {
  Form r = *this;
  for (auto& [b, v] : r.blocks_)
    for (auto& x : v) x = -x;
  return r;
}

Form& Form::operator+=(const Form& o) {
  for (const auto& [b, v] : o.blocks_) add(b, v);
  return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form& Form::operator*=(const GaussScalar& c) {
  if (c.is_zero()) {
    blocks_.clear();
    return *this;
  }
  for (auto& [b, v] : blocks_)
    for (auto& x : v) x *= c;
  return *this;
}

}  // namespace akh
