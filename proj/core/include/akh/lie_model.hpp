#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "akh/matrix.hpp"

namespace akh {

/// One structure constant: [X_i, X_j] contains c * X_k (0-based indices).
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  mpq_class c;
  friend bool operator==(const BracketEntry&, const BracketEntry&) = default;
};

/// Real Lie algebra of even dimension 2m on a frame X_1..X_2m declared
/// orthonormal, together with an endomorphism J of the frame. J acts on
/// coordinate columns: J X_j = sum_i J(i, j) X_i.
///
/// Construction enforces shape only (even dimension, square real J, indices
/// in range, antisymmetry). Whether J is an almost complex structure, the
/// Jacobi identity, etc. are reported by validate().
class LieModel {
 public:
  LieModel(std::string name, std::size_t dim, std::span<const BracketEntry> brackets, ExactMatrix J);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  std::size_t half_dim() const { return dim_ / 2; }
  const ExactMatrix& J() const { return J_; }

  const mpq_class& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  /// Complex-bilinear extension of the bracket to coordinate vectors.
  Vector bracket(const Vector& u, const Vector& v) const;
  Vector apply_J(const Vector& v) const { return J_ * v; }
  Vector frame_vector(std::size_t i) const;

  /// Canonical listing: i < j, nonzero c, sorted by (i, j, k).
  std::vector<BracketEntry> brackets() const;

  friend bool operator==(const LieModel& a, const LieModel& b) {
    return a.name_ == b.name_ && a.dim_ == b.dim_ && a.c_ == b.c_ && a.J_ == b.J_;
  }

 private:
  std::string name_;
  std::size_t dim_;
  std::vector<mpq_class> c_;
  ExactMatrix J_;
};

struct StructureReport {
  bool jacobi_ok = false;
  bool acs_ok = false;         ///< J^2 = -1
  bool compatible_ok = false;  ///< J orthogonal for the declared metric
  bool integrable = false;     ///< Nijenhuis tensor vanishes
  bool almost_kahler = false;  ///< compatible and d(omega) = 0
  bool nilpotent = false;
  std::size_t nilpotency_step = 0;  ///< length of the lower central series; 0 if not nilpotent
  std::optional<std::array<std::size_t, 3>> jacobi_violation;  ///< first offending (i, j, k), 0-based
  std::vector<std::string> warnings;
};

StructureReport validate(const LieModel& model);

/// Values N(X_i, X_j) = [JX,JY] - J[JX,Y] - J[X,JY] - [X,Y] on frame pairs.
class NijenhuisTensor {
 public:
  explicit NijenhuisTensor(std::size_t dim) : dim_(dim), values_(dim * dim, Vector(dim)) {}
  std::size_t dim() const { return dim_; }
  const Vector& at(std::size_t i, std::size_t j) const { return values_[i * dim_ + j]; }
  Vector& at(std::size_t i, std::size_t j) { return values_[i * dim_ + j]; }
  bool is_zero() const;

 private:
  std::size_t dim_;
  std::vector<Vector> values_;
};

Vector nijenhuis(const LieModel& model, const Vector& x, const Vector& y);
NijenhuisTensor nijenhuis(const LieModel& model);

/// omega(X_i, X_j) = <J X_i, X_j> in the orthonormal frame.
ExactMatrix fundamental_matrix(const LieModel& model);

/// True when the real invariant 2-form with coefficient matrix `form`
/// (form(i,j) = value on (X_i, X_j), antisymmetric) is closed.
bool is_closed_two_form(const LieModel& model, const ExactMatrix& form);

// Catalog -------------------------------------------------------------------

/// Compiled-in models: torus<2m> (2 <= 2m <= 12), kodaira_thurston,
/// filiform4_J, filiform4_Jprime, h5_J. Throws InputError for other names.
LieModel catalog(std::string_view name);
std::vector<std::string> catalog_names();

// Model file format ---------------------------------------------------------

/// JSON document {"format": 1, "name", "dim", "brackets": [{i, j, k, c}],
/// "J": [[...]]} with 1-based indices and rationals as "p/q" strings.
/// Throws InputError with a field or line diagnostic.
LieModel parse_model(std::string_view json_text);
LieModel load_model(const std::string& path);
std::string serialize_model(const LieModel& model);

}  // namespace akh
