#include "akh/lie_model.hpp"

#include <algorithm>

#include "akh/error.hpp"

namespace akh {

LieModel::LieModel(std::string name, std::size_t dim, std::span<const BracketEntry> brackets, ExactMatrix J)
    : name_(std::move(name)), dim_(dim), c_(dim * dim * dim), J_(std::move(J)) {
  if (dim_ == 0 || dim_ % 2 != 0) throw InputError("dimension must be even and positive, got " + std::to_string(dim_));
  if (J_.rows() != dim_ || J_.cols() != dim_)
    throw InputError("J must be " + std::to_string(dim_) + "x" + std::to_string(dim_));
  if (!J_.is_real()) throw InputError("J must have rational entries");
  for (const auto& b : brackets) {
    if (b.i >= dim_ || b.j >= dim_ || b.k >= dim_) throw InputError("bracket index out of range");
    if (b.i == b.j) {
      if (sgn(b.c) != 0) throw InputError("bracket [X_i, X_i] must vanish");
      continue;
    }
    mpq_class c = b.c;
    c.canonicalize();
    c_[(b.i * dim_ + b.j) * dim_ + b.k] += c;
    c_[(b.j * dim_ + b.i) * dim_ + b.k] -= c;
  }
}

Vector LieModel::bracket(const Vector& u, const Vector& v) const {
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j || v[j].is_zero()) continue;
      const GaussScalar uv = u[i] * v[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const mpq_class& c = structure_constant(i, j, k);
        if (sgn(c) != 0) out[k] += uv * GaussScalar(c);
      }
    }
  }
  return out;
}

Vector LieModel::frame_vector(std::size_t i) const {
  Vector v(dim_);
  v.at(i) = 1;
  return v;
}

std::vector<BracketEntry> LieModel::brackets() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(structure_constant(i, j, k)) != 0) out.push_back({i, j, k, structure_constant(i, j, k)});
  return out;
}

bool NijenhuisTensor::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Vector& v) { return akh::is_zero(v); });
}

Vector nijenhuis(const LieModel& model, const Vector& x, const Vector& y) {
  const Vector jx = model.apply_J(x);
  const Vector jy = model.apply_J(y);
  Vector n = model.bracket(jx, jy);
  const Vector a = model.apply_J(model.bracket(jx, y));
  const Vector b = model.apply_J(model.bracket(x, jy));
  const Vector c = model.bracket(x, y);
  for (std::size_t k = 0; k < n.size(); ++k) n[k] -= a[k] + b[k] + c[k];
  return n;
}

NijenhuisTensor nijenhuis(const LieModel& model) {
  const std::size_t n = model.dim();
  NijenhuisTensor t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = nijenhuis(model, model.frame_vector(i), model.frame_vector(j));
  return t;
}

ExactMatrix fundamental_matrix(const LieModel& model) { return model.J().transpose(); }

bool is_closed_two_form(const LieModel& model, const ExactMatrix& form) {
  const std::size_t n = model.dim();
  // d(form)(X_a, X_b, X_c) = -form([X_a,X_b], X_c) + form([X_a,X_c], X_b) - form([X_b,X_c], X_a)
  auto pair = [&](std::size_t a, std::size_t b, std::size_t c) {
    GaussScalar s;
    for (std::size_t k = 0; k < n; ++k) {
      const mpq_class& ck = model.structure_constant(a, b, k);
      if (sgn(ck) != 0) s += GaussScalar(ck) * form(k, c);
    }
    return s;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (!(pair(b, c, a) - pair(a, c, b) + pair(a, b, c)).is_zero()) return false;
  return true;
}

namespace {

std::optional<std::array<std::size_t, 3>> first_jacobi_violation(const LieModel& model) {
  const std::size_t n = model.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector xi = model.frame_vector(i), xj = model.frame_vector(j), xk = model.frame_vector(k);
        Vector s = model.bracket(xi, model.bracket(xj, xk));
        const Vector t = model.bracket(xj, model.bracket(xk, xi));
        const Vector u = model.bracket(xk, model.bracket(xi, xj));
        for (std::size_t r = 0; r < n; ++r) s[r] += t[r] + u[r];
        if (!is_zero(s)) return std::array<std::size_t, 3>{i, j, k};
      }
  return std::nullopt;
}

/// Length of the lower central series g > [g,g] > [g,[g,g]] > ... reaching
/// zero, or 0 if it stabilizes at a nonzero ideal.
std::size_t lower_central_length(const LieModel& model) {
  const std::size_t n = model.dim();
  std::vector<Vector> current;
  for (std::size_t i = 0; i < n; ++i) current.push_back(model.frame_vector(i));
  std::size_t step = 0;
  while (!current.empty()) {
    std::vector<Vector> next;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& v : current) next.push_back(model.bracket(model.frame_vector(i), v));
    next = independent_subset(next, n);
    ++step;
    if (next.size() == current.size()) return 0;
    current = std::move(next);
  }
  return step;
}

}  // namespace

StructureReport validate(const LieModel& model) {
  StructureReport r;
  r.jacobi_violation = first_jacobi_violation(model);
  r.jacobi_ok = !r.jacobi_violation.has_value();

  const ExactMatrix& J = model.J();
  const std::size_t n = model.dim();
  r.acs_ok = (J * J) == -ExactMatrix::identity(n);
  r.compatible_ok = r.acs_ok && (J.transpose() * J) == ExactMatrix::identity(n);
  r.integrable = r.acs_ok && nijenhuis(model).is_zero();
  r.almost_kahler = r.compatible_ok && r.jacobi_ok && is_closed_two_form(model, fundamental_matrix(model));

  r.nilpotency_step = r.jacobi_ok ? lower_central_length(model) : 0;
  r.nilpotent = r.nilpotency_step > 0;
  if (!r.jacobi_ok) r.warnings.push_back("Jacobi identity fails; brackets do not define a Lie algebra");
  if (!r.acs_ok) r.warnings.push_back("J^2 != -1");
  else if (!r.compatible_ok) r.warnings.push_back("J is not orthogonal for the declared orthonormal frame");
  if (r.jacobi_ok && !r.nilpotent)
    r.warnings.push_back("algebra is not nilpotent; Betti numbers describe the invariant complex only");
  return r;
}

}  // namespace akh
