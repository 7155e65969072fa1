#include "akh/obstructions.hpp"

#include <stdexcept>

namespace akh {

namespace {

/// Real and imaginary parts of a complex system in real unknowns, stacked.
ExactMatrix realify_rows(const ExactMatrix& m) {
  ExactMatrix out(2 * m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out(2 * r, c) = GaussScalar(m(r, c).re());
      out(2 * r + 1, c) = GaussScalar(m(r, c).im());
    }
  return out;
}

/// Real basis of the real (1,1)-forms: i a a~, a b~ - b a~, i(a b~ + b a~).
std::vector<Form> real_11_basis(const BigradedAlgebra& alg) {
  const GaussScalar I = GaussScalar::i();
  std::vector<Form> out;
  const int m = alg.m();
  auto term = [&](int a, int b) { return alg.wedge(alg.generator(a), alg.generator(b, true)); };
  for (int a = 0; a < m; ++a) {
    out.push_back(term(a, a) * I);
    for (int b = a + 1; b < m; ++b) {
      out.push_back(term(a, b) - term(b, a));
      out.push_back((term(a, b) + term(b, a)) * I);
    }
  }
  return out;
}

ExactMatrix columns_of(const BigradedAlgebra& alg, Bidegree b, const std::vector<Form>& forms) {
  std::vector<Vector> cols;
  for (const Form& f : forms) {
    if (!f.is_pure(b)) throw std::logic_error("columns_of: form outside block " + to_string(b));
    const Vector* v = f.block(b);
    cols.push_back(v == nullptr ? Vector(alg.dim(b)) : *v);
  }
  return ExactMatrix::from_columns(alg.dim(b), cols);
}

}  // namespace

std::vector<Form> holomorphic_forms(const OperatorSuite& ops, int p) {
  const Bidegree b{p, 0};
  if (!ops.alg.has(b)) return {};
  std::vector<Form> out;
  for (const Vector& v : kernel(source_matrix(ops.alg, ops.d.d_bar, b))) out.emplace_back(b, v);
  return out;
}

std::string to_string(AkVerdict v) {
  switch (v) {
    case AkVerdict::nonexistence: return "no invariant almost Kähler structure compatible with J";
    case AkVerdict::inconclusive: return "inconclusive";
    case AkVerdict::vacuous: return "test vacuous";
  }
  return "?";
}

AkNonexistenceReport ak_nonexistence_report(const OperatorSuite& ops) {
  const BigradedAlgebra& alg = ops.alg;
  AkNonexistenceReport rep;

  const std::vector<Form> candidates = real_11_basis(alg);
  std::vector<Form> dforms;
  for (const Form& g : candidates) dforms.push_back(alg.d(g));
  std::vector<Vector> dcols;
  for (const Form& f : dforms) dcols.push_back(total_degree_vector(alg, 3, f));
  for (const Vector& t : kernel(realify_rows(ExactMatrix::from_columns(total_degree_dim(alg, 3), dcols)))) {
    Form w;
    for (std::size_t r = 0; r < t.size(); ++r) w += candidates[r] * t[r];
    rep.closed_11_basis.push_back(w);
  }
  const std::size_t nparams = rep.closed_11_basis.size();

  const std::vector<Form> hol = holomorphic_forms(ops, 1);
  rep.holomorphic_dim = hol.size();
  if (hol.empty()) {
    rep.verdict = AkVerdict::vacuous;
    rep.statement = "test vacuous: there are no invariant holomorphic 1-forms";
    return rep;
  }

  // Conditions are collected as complex rows over the real parameters t.
  const Bidegree tgt{2, 1};
  const ExactMatrix* dbar = ops.d.d_bar.block({2, 0}, tgt);
  const ExactMatrix image = dbar == nullptr ? ExactMatrix(alg.dim(tgt), 0) : *dbar;
  const std::vector<Vector> left_null = kernel(image.transpose());
  std::vector<Vector> t1_rows, t2_rows;
  for (const Form& alpha : hol) {
    std::vector<Form> images;
    for (const Form& w : rep.closed_11_basis) images.push_back(alg.wedge(w, alpha));
    const ExactMatrix V = columns_of(alg, tgt, images);
    for (const Vector& y : left_null) {
      Vector row(nparams);
      for (std::size_t r = 0; r < nparams; ++r)
        for (std::size_t i = 0; i < y.size(); ++i) row[r] += y[i] * V(i, r);
      t1_rows.push_back(row);
    }
    for (std::size_t i = 0; i < V.rows(); ++i) t2_rows.push_back(V.row(i));
  }
  auto stack = [&](const std::vector<Vector>& rows) {
    ExactMatrix m(rows.size(), nparams);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t r = 0; r < nparams; ++r) m(i, r) = rows[i][r];
    return realify_rows(m);
  };
  rep.t1_dim = kernel(stack(t1_rows)).size();
  rep.t1_full = rep.t1_dim == nparams;
  if (!rep.t1_full) {
    rep.verdict = AkVerdict::inconclusive;
    rep.statement = "inconclusive: the image condition constrains the closed (1,1)-forms to a proper subspace";
    return rep;
  }

  rep.t2_basis = kernel(stack(t2_rows));
  std::vector<std::string> names;
  for (std::size_t j = 0; j < rep.t2_basis.size(); ++j) names.push_back("s" + std::to_string(j + 1));
  exterior::SparseForm<ParamPoly> omega;
  for (std::size_t j = 0; j < rep.t2_basis.size(); ++j) {
    Form w;
    for (std::size_t r = 0; r < nparams; ++r) w += rep.closed_11_basis[r] * rep.t2_basis[j][r];
    const ParamPoly s = ParamPoly::variable(names, j);
    for (const auto& [mono, c] : alg.to_sparse(w)) exterior::accumulate(omega, mono, s * c);
  }
  exterior::SparseForm<ParamPoly> top{{0, ParamPoly::constant(names, 1)}};
  for (int k = 0; k < alg.m(); ++k) top = exterior::wedge(top, omega);
  const Monomial full = static_cast<Monomial>((std::uint64_t{1} << (2 * alg.m())) - 1);
  const GaussScalar vol_top = alg.to_sparse(alg.vol()).at(full);
  const auto it = top.find(full);
  rep.top_power_on_t2 = it == top.end() ? ParamPoly(names) : it->second * (GaussScalar(1) / vol_top);

  if (rep.top_power_on_t2->is_zero()) {
    rep.verdict = AkVerdict::nonexistence;
    rep.statement = "no invariant almost Kähler structure compatible with J: every closed (1,1)-form "
                    "surviving the Lefschetz condition has omega^m = 0";
  } else {
    rep.verdict = AkVerdict::inconclusive;
    rep.statement = "inconclusive: nondegenerate closed (1,1)-forms survive the Lefschetz condition";
  }
  return rep;
}

bool ObstructionReport::fires() const {
  return !holomorphic_bound_ok || laplacian_witness.has_value() || ak.verdict == AkVerdict::nonexistence;
}

ObstructionReport obstructions(const OperatorSuite& ops) {
  ObstructionReport rep;
  for (int p = 0; p <= ops.alg.m(); ++p) rep.holomorphic_dims.push_back(holomorphic_forms(ops, p).size());
  rep.b1 = betti(ops)[1];
  const std::size_t h1 = rep.holomorphic_dims.size() > 1 ? rep.holomorphic_dims[1] : 0;
  const std::size_t h2 = rep.holomorphic_dims.size() > 2 ? rep.holomorphic_dims[2] : 0;
  rep.holomorphic_bound_ok = 2 * h1 <= rep.b1;
  rep.holomorphic_excess = h1 > h2 + 1;
  if (ops.structure.almost_kahler) {
    const std::vector<Vector> hol = kernel(source_matrix(ops.alg, ops.d.d_bar, {1, 0}));
    const std::vector<Vector> harm = harmonic_vectors(ops, HarmonicKind::d, {1, 0});
    bool same = hol.size() == harm.size();
    for (const Vector& v : harm)
      if (!in_span(hol, v, ops.alg.dim({1, 0}))) same = false;
    rep.holomorphic_equals_harmonic = same;
  }
  rep.laplacian_witness = laplacian_symmetry_witness(ops);
  rep.ak = ak_nonexistence_report(ops);
  return rep;
}

}  // namespace akh
