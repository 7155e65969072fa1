#include <charconv>

#include "akh/error.hpp"
#include "akh/lie_model.hpp"

namespace akh {

namespace {

/// J with J X_from = X_to (1-based), hence J X_to = -X_from.
void rotate(ExactMatrix& J, std::size_t from, std::size_t to, int sign = 1) {
  J(to - 1, from - 1) = sign;
  J(from - 1, to - 1) = -sign;
}

BracketEntry br(std::size_t i, std::size_t j, std::size_t k, long c) { return {i - 1, j - 1, k - 1, mpq_class(c)}; }

LieModel torus(std::size_t dim) {
  ExactMatrix J(dim, dim);
  for (std::size_t a = 1; a < dim; a += 2) rotate(J, a, a + 1);
  return LieModel("torus" + std::to_string(dim), dim, {}, J);
}

// Frame X, Y, Z, W = X1..X4 with [X, Y] = -Z. J pairs X with Z and Y with W,
// so omega = x1^x3 + x2^x4 is closed and J is not integrable.
LieModel kodaira_thurston() {
  ExactMatrix J(4, 4);
  rotate(J, 1, 3);
  rotate(J, 2, 4);
  const BracketEntry b[] = {br(1, 2, 3, -1)};
  return LieModel("kodaira_thurston", 4, b, J);
}

// [X1, X2] = X3, [X1, X3] = X4.
std::vector<BracketEntry> filiform_brackets() { return {br(1, 2, 3, 1), br(1, 3, 4, 1)}; }

LieModel filiform_J() {
  ExactMatrix J(4, 4);
  rotate(J, 1, 2);
  rotate(J, 3, 4);
  return LieModel("filiform4_J", 4, filiform_brackets(), J);
}

// J' X1 = X4, J' X2 = X3; omega = x1^x4 + x2^x3.
LieModel filiform_Jprime() {
  ExactMatrix J(4, 4);
  rotate(J, 1, 4);
  rotate(J, 2, 3);
  return LieModel("filiform4_Jprime", 4, filiform_brackets(), J);
}

// [X1,X3] = [X2,X4] = X5, [X1,X4] = -[X2,X3] = X6; J X1 = X2, J X3 = -X4, J X5 = -X6.
LieModel h5_J() {
  ExactMatrix J(6, 6);
  rotate(J, 1, 2);
  rotate(J, 3, 4, -1);
  rotate(J, 5, 6, -1);
  const BracketEntry b[] = {br(1, 3, 5, 1), br(2, 4, 5, 1), br(1, 4, 6, 1), br(2, 3, 6, -1)};
  return LieModel("h5_J", 6, b, J);
}

}  // namespace

LieModel catalog(std::string_view name) {
  if (name == "kodaira_thurston") return kodaira_thurston();
  if (name == "filiform4_J") return filiform_J();
  if (name == "filiform4_Jprime") return filiform_Jprime();
  if (name == "h5_J") return h5_J();
  if (name.starts_with("torus")) {
    const std::string_view digits = name.substr(5);
    std::size_t dim = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), dim);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && dim >= 2 && dim <= 12 && dim % 2 == 0)
      return torus(dim);
  }
  throw InputError("unknown catalog model '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  return {"torus2", "torus4", "torus6", "kodaira_thurston", "filiform4_J", "filiform4_Jprime", "h5_J"};
}

}  // namespace akh
