#include "akh/harmonic.hpp"

#include <stdexcept>

#include "akh/error.hpp"

namespace akh {

namespace {

void require_block(const OperatorSuite& ops, Bidegree b) {
  if (!ops.alg.has(b)) throw InputError("bidegree " + to_string(b) + " is outside 0 <= p, q <= " + std::to_string(ops.alg.m()));
}

void require_almost_kahler(const OperatorSuite& ops, const char* what) {
  if (!ops.structure.almost_kahler) throw InputError(std::string(what) + " requires an almost Kähler model");
}

/// Images of block vectors under op, read off block tgt.
std::vector<Vector> apply_all(const BlockOperator& op, Bidegree src, Bidegree tgt, const std::vector<Vector>& vs,
                              std::size_t tgt_dim) {
  std::vector<Vector> out;
  for (const Vector& v : vs) {
    const Form image = op.apply(Form(src, v));
    const Vector* w = image.block(tgt);
    out.push_back(w == nullptr ? Vector(tgt_dim) : *w);
    for (const auto& [b, x] : image.blocks())
      if (!(b == tgt)) throw std::logic_error("apply_all: image leaves the target block");
  }
  return out;
}

std::size_t rank_of(const std::vector<Vector>& vs, std::size_t dim) {
  if (vs.empty()) return 0;
  return rank(ExactMatrix::from_columns(dim, vs));
}

/// Basis of the elements of span(vs) annihilated by m.
std::vector<Vector> restrict_kernel(const ExactMatrix& m, const std::vector<Vector>& vs, std::size_t dim) {
  if (vs.empty()) return {};
  const ExactMatrix basis = ExactMatrix::from_columns(dim, vs);
  std::vector<Vector> out;
  for (const Vector& c : kernel(m * basis)) out.push_back(basis * c);
  return out;
}

BlockOperator power(const BigradedAlgebra& alg, const BlockOperator& op, int k) {
  BlockOperator out = BlockOperator::identity(alg);
  for (int i = 0; i < k; ++i) out = op * out;
  return out;
}

Form form_power(const BigradedAlgebra& alg, const Form& f, int k) {
  Form out = alg.one();
  for (int i = 0; i < k; ++i) out = alg.wedge(out, f);
  return out;
}

}  // namespace

std::string to_string(HarmonicKind kind) {
  switch (kind) {
    case HarmonicKind::d: return "d";
    case HarmonicKind::mu_bar: return "mu_bar";
    case HarmonicKind::d_bar: return "d_bar";
    case HarmonicKind::del: return "del";
    case HarmonicKind::mu: return "mu";
    case HarmonicKind::d_bar_mu: return "d_bar+mu";
    case HarmonicKind::del_mu_bar: return "del+mu_bar";
  }
  return "?";
}

std::vector<Vector> harmonic_vectors(const OperatorSuite& ops, HarmonicKind kind, Bidegree b) {
  require_block(ops, b);
  const BigradedAlgebra& alg = ops.alg;
  auto pair = [&](const BlockOperator& delta, const BlockOperator& adj) {
    const ExactMatrix ms[] = {source_matrix(alg, delta, b), source_matrix(alg, adj, b)};
    return kernel_intersection(ms);
  };
  switch (kind) {
    case HarmonicKind::d: {
      const ExactMatrix ms[] = {
          source_matrix(alg, ops.d.mu_bar, b),   source_matrix(alg, ops.d.d_bar, b),
          source_matrix(alg, ops.d.del, b),      source_matrix(alg, ops.d.mu, b),
          source_matrix(alg, ops.adj.mu_bar, b), source_matrix(alg, ops.adj.d_bar, b),
          source_matrix(alg, ops.adj.del, b),    source_matrix(alg, ops.adj.mu, b),
      };
      return kernel_intersection(ms);
    }
    case HarmonicKind::mu_bar: return pair(ops.d.mu_bar, ops.adj.mu_bar);
    case HarmonicKind::d_bar: return pair(ops.d.d_bar, ops.adj.d_bar);
    case HarmonicKind::del: return pair(ops.d.del, ops.adj.del);
    case HarmonicKind::mu: return pair(ops.d.mu, ops.adj.mu);
    case HarmonicKind::d_bar_mu: return kernel(source_matrix(alg, ops.lap.d_bar + ops.lap.mu, b));
    case HarmonicKind::del_mu_bar: return kernel(source_matrix(alg, ops.lap.del + ops.lap.mu_bar, b));
  }
  throw std::invalid_argument("harmonic_vectors: unknown kind");
}

std::vector<Form> harmonic_basis(const OperatorSuite& ops, HarmonicKind kind, Bidegree b) {
  std::vector<Form> out;
  for (const Vector& v : harmonic_vectors(ops, kind, b)) out.emplace_back(b, v);
  return out;
}

std::vector<std::size_t> betti(const OperatorSuite& ops) {
  const BigradedAlgebra& alg = ops.alg;
  const int top = 2 * alg.m();
  std::vector<std::size_t> ranks(top + 2, 0);  // ranks[k] = rank d: A^k -> A^{k+1}
  std::vector<std::size_t> dims(top + 1, 0);
  for (const Bidegree b : alg.bidegrees()) dims[b.degree()] += alg.dim(b);
  for (int k = 0; k < top; ++k) ranks[k] = rank(total_degree_matrix(alg, ops.d_total, k, k + 1));
  std::vector<std::size_t> out(top + 1);
  for (int k = 0; k <= top; ++k) out[k] = dims[k] - ranks[k] - (k > 0 ? ranks[k - 1] : 0);
  return out;
}

Diamond ell_diamond(const OperatorSuite& ops) {
  const int m = ops.alg.m();
  Diamond dm;
  dm.m = m;
  dm.ell.assign(m + 1, std::vector<std::size_t>(m + 1, 0));
  for (const Bidegree b : ops.alg.bidegrees()) dm.ell[b.p][b.q] = harmonic_vectors(ops, HarmonicKind::d_bar_mu, b).size();
  dm.betti = betti(ops);
  dm.almost_kahler = ops.structure.almost_kahler;
  if (!dm.almost_kahler) return dm;

  bool duality = true, bounds = true, diagonal = true, omega_ok = true;
  for (int p = 0; p <= m; ++p)
    for (int q = 0; q <= m; ++q) {
      const std::size_t v = dm.ell[p][q];
      if (v != dm.ell[q][p] || v != dm.ell[m - p][m - q] || v != dm.ell[m - q][m - p]) duality = false;
    }
  for (int k = 0; k <= 2 * m; ++k) {
    std::size_t sum = 0;
    for (int p = 0; p <= m; ++p)
      if (k - p >= 0 && k - p <= m) sum += dm.ell[p][k - p];
    if (sum > dm.betti[k]) bounds = false;
  }
  for (int k = 0; k <= m; ++k) {
    if (dm.ell[k][k] < 1) diagonal = false;
    const Form wk = form_power(ops.alg, ops.omega, k);
    for (const BlockOperator* op : {&ops.d.mu_bar, &ops.d.d_bar, &ops.d.del, &ops.d.mu, &ops.adj.mu_bar, &ops.adj.d_bar,
                                    &ops.adj.del, &ops.adj.mu})
      if (!op->apply(wk).is_zero()) omega_ok = false;
  }
  dm.duality_ok = duality;
  dm.bounds_ok = bounds;
  dm.diagonal_ok = diagonal;
  dm.omega_powers_ok = omega_ok;
  dm.lefschetz_ok = hard_lefschetz(ops).all_iso;
  return dm;
}

HardLefschetzReport hard_lefschetz(const OperatorSuite& ops) {
  require_almost_kahler(ops, "hard Lefschetz");
  const BigradedAlgebra& alg = ops.alg;
  const int m = alg.m();
  HardLefschetzReport rep;
  rep.all_iso = true;
  for (int k = 0; k <= m; ++k) {
    const BlockOperator Lk = power(alg, ops.lefschetz.L, m - k);
    for (int p = std::min(k, m); p >= 0 && k - p <= m; --p) {
      const Bidegree src{p, k - p};
      const Bidegree tgt{p + m - k, m - p};
      const std::vector<Vector> hs = harmonic_vectors(ops, HarmonicKind::d, src);
      const std::vector<Vector> ht = harmonic_vectors(ops, HarmonicKind::d, tgt);
      const std::vector<Vector> images = apply_all(Lk, src, tgt, hs, alg.dim(tgt));
      LefschetzMap map{src, tgt, m - k, hs.size(), ht.size(), rank_of(images, alg.dim(tgt)), true, false};
      for (const Vector& v : images)
        if (!in_span(ht, v, alg.dim(tgt))) map.into_harmonic = false;
      map.iso = map.into_harmonic && map.rank == map.source_dim && map.rank == map.target_dim;
      if (!map.iso) rep.all_iso = false;
      rep.maps.push_back(map);
    }
  }
  rep.monotone = true;
  for (int p = 0; p <= m; ++p)
    for (int q = 0; p + q + 2 <= m; ++q)
      if (harmonic_vectors(ops, HarmonicKind::d, {p, q}).size() > harmonic_vectors(ops, HarmonicKind::d, {p + 1, q + 1}).size())
        rep.monotone = false;

  const std::vector<std::size_t> b = betti(ops);
  for (int k = 0; k < m; ++k) {
    const int j = 2 * m - k;
    const ExactMatrix dk = total_degree_matrix(alg, ops.d_total, k, k + 1);
    const ExactMatrix exact_j = total_degree_matrix(alg, ops.d_total, j - 1, j);
    const ExactMatrix Lk = total_degree_matrix(alg, power(alg, ops.lefschetz.L, m - k), k, j);
    std::vector<Vector> cols;
    for (const Vector& z : kernel(dk)) cols.push_back(Lk * z);
    const std::size_t exact_rank = rank(exact_j);
    std::vector<ExactMatrix> parts{exact_j};
    if (!cols.empty()) parts.push_back(ExactMatrix::from_columns(exact_j.rows(), cols));
    const std::size_t r = rank(ExactMatrix::hstack(parts)) - exact_rank;
    rep.cohomology.push_back({k, r, b[k], r == b[k] && r == b[j]});
  }
  return rep;
}

std::vector<Vector> primitive_harmonic_vectors(const OperatorSuite& ops, Bidegree b) {
  const std::vector<Vector> hs = harmonic_vectors(ops, HarmonicKind::d, b);
  return restrict_kernel(source_matrix(ops.alg, ops.lefschetz.Lambda, b), hs, ops.alg.dim(b));
}

PrimitiveDecomposition primitive_decomposition(const OperatorSuite& ops, Bidegree b) {
  require_block(ops, b);
  const BigradedAlgebra& alg = ops.alg;
  PrimitiveDecomposition out{b, harmonic_vectors(ops, HarmonicKind::d, b).size(), {}, false, true};
  std::vector<std::vector<Vector>> summands;
  for (int j = 0; j <= std::min(b.p, b.q); ++j) {
    const Bidegree src{b.p - j, b.q - j};
    const std::vector<Vector> images =
        apply_all(power(alg, ops.lefschetz.L, j), src, b, primitive_harmonic_vectors(ops, src), alg.dim(b));
    out.dims.push_back(rank_of(images, alg.dim(b)));
    summands.push_back(images);
  }
  std::size_t total = 0;
  std::vector<Vector> all;
  for (std::size_t j = 0; j < summands.size(); ++j) {
    total += out.dims[j];
    all.insert(all.end(), summands[j].begin(), summands[j].end());
    for (std::size_t i = 0; i < j; ++i)
      for (const Vector& x : summands[i])
        for (const Vector& y : summands[j])
          if (!alg.inner(Form(b, x), Form(b, y)).is_zero()) out.orthogonal = false;
  }
  out.sums_ok = total == out.ell && rank_of(all, alg.dim(b)) == out.ell;
  return out;
}

HodgeRiemannCheck hodge_riemann_check(const OperatorSuite& ops, Bidegree b) {
  require_almost_kahler(ops, "the Hodge-Riemann check");
  require_block(ops, b);
  const BigradedAlgebra& alg = ops.alg;
  const int k = b.degree();
  if (k > alg.m()) throw InputError("Hodge-Riemann check needs p + q <= m");
  const std::vector<Vector> prim = primitive_harmonic_vectors(ops, b);
  const Form wpow = form_power(alg, ops.omega, alg.m() - k);
  const GaussScalar weight = i_pow(b.p - b.q);
  const GaussScalar sign = (k * (k - 1) / 2) % 2 == 0 ? 1 : -1;
  ExactMatrix h(prim.size(), prim.size());
  for (std::size_t i = 0; i < prim.size(); ++i)
    for (std::size_t j = 0; j < prim.size(); ++j)
      h(i, j) = weight * alg.integrate(alg.wedge(alg.wedge(Form(b, prim[i]), alg.conj(Form(b, prim[j]))), wpow));
  HodgeRiemannCheck out{b, prim.size(), hermitian_signature(h), hermitian_signature(h * sign), false};
  out.positive_definite = out.signed_form.positive == prim.size();
  return out;
}

std::vector<Form> real_harmonic_two_forms(const OperatorSuite& ops) {
  const BigradedAlgebra& alg = ops.alg;
  const ExactMatrix ms[] = {total_degree_matrix(alg, ops.d_total, 2, 3), total_degree_matrix(alg, ops.d_total_adj, 2, 1)};
  const std::vector<Vector> complex_basis = kernel_intersection(ms);
  std::vector<Vector> candidates;
  const GaussScalar half = GaussScalar::rational(1, 2);
  const GaussScalar minus_half_i = -half * GaussScalar::i();
  for (const Vector& v : complex_basis) {
    const Form h = form_from_total_degree(alg, 2, v);
    const Form hc = alg.conj(h);
    candidates.push_back(total_degree_vector(alg, 2, (h + hc) * half));
    candidates.push_back(total_degree_vector(alg, 2, (h - hc) * minus_half_i));
  }
  const std::size_t dim = ms[0].cols();
  std::vector<Form> out;
  for (const Vector& v : independent_subset(candidates, dim))
    if (!is_zero(v)) out.push_back(form_from_total_degree(alg, 2, v));
  if (out.size() != complex_basis.size()) throw std::logic_error("real_harmonic_two_forms: realification lost rank");
  return out;
}

HodgeIndex hodge_index(const OperatorSuite& ops) {
  const BigradedAlgebra& alg = ops.alg;
  if (alg.m() != 2) throw InputError("Hodge index is defined for 4-dimensional models");
  require_almost_kahler(ops, "Hodge index");
  const std::vector<Form> reps = real_harmonic_two_forms(ops);
  auto cup_gram = [&](const std::vector<Form>& fs) {
    ExactMatrix q(fs.size(), fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = 0; j < fs.size(); ++j) q(i, j) = alg.integrate(alg.wedge(fs[i], fs[j]));
    return q;
  };
  const ExactMatrix q = cup_gram(reps);
  const Signature sig = symmetric_signature(q);

  std::vector<Form> shifted = reps;
  const std::size_t n = alg.model().dim();
  for (std::size_t i = 0; i < shifted.size(); ++i) {
    Vector e(n);
    e[i % n] = 1;
    e[(i + 1) % n] = GaussScalar::rational(static_cast<long>(i) + 2, 3);
    shifted[i] += alg.d(alg.real_covector(e));
  }

  HodgeIndex out;
  out.b2_plus = sig.positive;
  out.b2_minus = sig.negative;
  out.b2_zero = sig.zero;
  out.ell11 = harmonic_vectors(ops, HarmonicKind::d_bar_mu, {1, 1}).size();
  out.relation_ok = out.ell11 == out.b2_minus + 1 && out.b2_plus >= 1;
  out.non_integrable_vanishing = ops.structure.integrable ||
                                 (harmonic_vectors(ops, HarmonicKind::d_bar_mu, {2, 0}).empty() &&
                                  harmonic_vectors(ops, HarmonicKind::d_bar_mu, {0, 2}).empty());
  out.representative_independent = cup_gram(shifted) == q;
  return out;
}

std::size_t mu_bar_cohomology(const OperatorSuite& ops, Bidegree b) {
  require_block(ops, b);
  const BigradedAlgebra& alg = ops.alg;
  const ExactMatrix* out_block = ops.d.mu_bar.block(b, {b.p - 1, b.q + 2});
  const std::size_t kernel_dim = alg.dim(b) - (out_block == nullptr ? 0 : rank(*out_block));
  const ExactMatrix* in_block = ops.d.mu_bar.block({b.p + 1, b.q - 2}, b);
  return kernel_dim - (in_block == nullptr ? 0 : rank(*in_block));
}

}  // namespace akh
