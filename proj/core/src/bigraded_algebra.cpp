#include "akh/bigraded_algebra.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "akh/calculus.hpp"
#include "akh/error.hpp"

namespace akh {

namespace {

using exterior::SparseForm;

void combinations(int n, int k, int start, Monomial acc, std::vector<Monomial>& out) {
  if (k == 0) {
    out.push_back(acc);
    return;
  }
  for (int i = start; i <= n - k; ++i) combinations(n, k - 1, i + 1, acc | (Monomial{1} << i), out);
}

std::vector<Monomial> subsets(int n, int k) {
  std::vector<Monomial> out;
  combinations(n, k, 0, 0, out);
  return out;
}

std::vector<int> bits_of(Monomial mono) {
  std::vector<int> out;
  for (Monomial rest = mono; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest));
  return out;
}

}  // namespace

BigradedAlgebra::BigradedAlgebra(LieModel model) : model_(std::move(model)), m_(static_cast<int>(model_.half_dim())) {
  const std::size_t n = model_.dim();
  const ExactMatrix& J = model_.J();
  if (J * J != -ExactMatrix::identity(n)) throw InputError("J eigenspace defect: J^2 != -1");
  if (J.transpose() * J != ExactMatrix::identity(n))
    throw InputError("J is not orthogonal for the declared orthonormal frame");

  ExactMatrix shifted = J.transpose();
  for (std::size_t k = 0; k < n; ++k) shifted(k, k) -= GaussScalar::i();
  std::vector<Vector> eigen = kernel(shifted);
  if (eigen.size() != static_cast<std::size_t>(m_)) throw InputError("J eigenspace defect: +i eigenspace has wrong dimension");
  auto leading = [](const Vector& v) {
    return static_cast<std::size_t>(std::find_if(v.begin(), v.end(), [](const GaussScalar& x) { return !x.is_zero(); }) -
                                    v.begin());
  };
  std::stable_sort(eigen.begin(), eigen.end(), [&](const Vector& a, const Vector& b) { return leading(a) < leading(b); });

  T_ = ExactMatrix(n, n);
  for (int a = 0; a < m_; ++a) {
    const Vector& v = eigen[a];
    const GaussScalar scale = GaussScalar::rational(1, 2) / v[leading(v)];
    for (std::size_t k = 0; k < n; ++k) {
      T_(a, k) = v[k] * scale;
      T_(a + m_, k) = T_(a, k).conj();
    }
  }
  S_ = inverse(T_);

  generator_gram_ = ExactMatrix(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) generator_gram_(a, b) += T_(a, k) * T_(b, k).conj();

  std::vector<SparseForm<GaussScalar>> x(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a) exterior::accumulate(x[k], Monomial{1} << a, S_(k, a));

  std::vector<SparseForm<GaussScalar>> dx(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const SparseForm<GaussScalar> xij = exterior::wedge(x[i], x[j]);
      for (std::size_t k = 0; k < n; ++k) {
        const mpq_class& c = model_.structure_constant(i, j, k);
        if (sgn(c) == 0) continue;
        for (const auto& [mono, coef] : xij) exterior::accumulate(dx[k], mono, -GaussScalar(c) * coef);
      }
    }
  }
  d_generators_.assign(n, {});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t k = 0; k < n; ++k) {
      if (T_(a, k).is_zero()) continue;
      for (const auto& [mono, coef] : dx[k]) exterior::accumulate(d_generators_[a], mono, T_(a, k) * coef);
    }

  for (int deg = 0; deg <= 2 * m_; ++deg)
    for (int p = std::min(deg, m_); p >= 0 && deg - p <= m_; --p) bidegrees_.push_back({p, deg - p});
  for (const Bidegree b : bidegrees_) {
    std::vector<Monomial>& basis = bases_[b];
    for (const Monomial lo : subsets(m_, b.p))
      for (const Monomial hi : subsets(m_, b.q)) basis.push_back(lo | (hi << m_));
    for (std::size_t i = 0; i < basis.size(); ++i) index_[basis[i]] = i;

    ExactMatrix G(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) G(i, j) = monomial_inner(basis[j], basis[i]);
    gram_inv_.emplace(b, inverse(G));
    gram_.emplace(b, std::move(G));
  }

  const Monomial full = static_cast<Monomial>((std::uint64_t{1} << n) - 1);
  SparseForm<GaussScalar> top{{0, GaussScalar(1)}};
  for (std::size_t k = 0; k < n; ++k) top = exterior::wedge(top, x[k]);

  const ExactMatrix F = fundamental_matrix(model_);
  SparseForm<GaussScalar> omega;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!F(i, j).is_zero())
        for (const auto& [mono, c] : exterior::wedge(x[i], x[j])) exterior::accumulate(omega, mono, F(i, j) * c);
  SparseForm<GaussScalar> omega_top{{0, GaussScalar(1)}};
  mpq_class factorial = 1;
  for (int k = 1; k <= m_; ++k) {
    omega_top = exterior::wedge(omega_top, omega);
    factorial *= k;
  }
  const GaussScalar ratio = omega_top.count(full) ? omega_top.at(full) / (top.at(full) * GaussScalar(factorial)) : 0;
  if (ratio == GaussScalar(1)) {
    orientation_ = 1;
  } else if (ratio == GaussScalar(-1)) {
    orientation_ = -1;
  } else {
    throw InputError("fundamental form is degenerate or J is not compatible with the frame");
  }
  vol_top_ = top.at(full) * orientation_;
  vol_ = from_sparse({{full, vol_top_}});
}

const std::vector<Monomial>& BigradedAlgebra::basis(Bidegree b) const {
  static const std::vector<Monomial> empty;
  const auto it = bases_.find(b);
  return it == bases_.end() ? empty : it->second;
}

GaussScalar BigradedAlgebra::monomial_inner(Monomial x, Monomial y) const {
  const std::vector<int> bx = bits_of(x);
  const std::vector<int> by = bits_of(y);
  if (bx.size() != by.size()) return 0;
  ExactMatrix M(bx.size(), by.size());
  for (std::size_t r = 0; r < bx.size(); ++r)
    for (std::size_t s = 0; s < by.size(); ++s) M(r, s) = generator_gram_(bx[r], by[s]);
  return determinant(M);
}

Form BigradedAlgebra::one() const { return monomial(0); }

Form BigradedAlgebra::monomial(Monomial mono, const GaussScalar& c) const {
  const Bidegree b = exterior::bidegree(mono, m_);
  Vector v(dim(b));
  v.at(index_of(mono)) = c;
  return Form(b, v);
}

Form BigradedAlgebra::generator(std::size_t a, bool barred) const {
  if (a >= static_cast<std::size_t>(m_)) throw std::out_of_range("generator index");
  return monomial(Monomial{1} << (barred ? a + m_ : a));
}

Form BigradedAlgebra::real_covector(const Vector& coeffs) const {
  if (coeffs.size() != model_.dim()) throw std::invalid_argument("real_covector: length mismatch");
  SparseForm<GaussScalar> out;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (std::size_t a = 0; a < coeffs.size(); ++a) exterior::accumulate(out, Monomial{1} << a, coeffs[k] * S_(k, a));
  return from_sparse(out);
}

Form BigradedAlgebra::real_monomial(std::span<const std::size_t> frame_indices) const {
  Form out = one();
  for (const std::size_t k : frame_indices) {
    Vector e(model_.dim());
    e.at(k) = 1;
    out = wedge(out, real_covector(e));
  }
  return out;
}

Form BigradedAlgebra::real_two_form(const ExactMatrix& form) const {
  const std::size_t n = model_.dim();
  Form out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (form(i, j).is_zero()) continue;
      const std::size_t idx[] = {i, j};
      out += real_monomial(idx) * form(i, j);
    }
  return out;
}

Form BigradedAlgebra::wedge(const Form& a, const Form& b) const {
  return from_sparse(exterior::wedge(to_sparse(a), to_sparse(b)));
}

Monomial BigradedAlgebra::conj_monomial(Monomial mono, int& sign) const {
  const Monomial low_mask = (Monomial{1} << m_) - 1;
  const Monomial lo = mono & low_mask;
  const Monomial hi = mono >> m_;
  sign = (std::popcount(lo) * std::popcount(hi)) % 2 == 0 ? 1 : -1;
  return hi | (lo << m_);
}

Form BigradedAlgebra::conj(const Form& a) const {
  SparseForm<GaussScalar> out;
  for (const auto& [mono, c] : to_sparse(a)) {
    int sign = 1;
    const Monomial image = conj_monomial(mono, sign);
    exterior::accumulate(out, image, sign > 0 ? c.conj() : -c.conj());
  }
  return from_sparse(out);
}

SparseForm<GaussScalar> BigradedAlgebra::d_monomial(Monomial mono) const {
  SparseForm<GaussScalar> out;
  int r = 0;
  for (const int g : bits_of(mono)) {
    const Monomial left = mono & ((Monomial{1} << g) - 1);
    const Monomial right = mono & ~((Monomial{2} << g) - 1);
    for (const auto& [t, c] : d_generators_[g]) {
      const int s = exterior::wedge_sign(left, t) * exterior::wedge_sign(left | t, right);
      if (s == 0) continue;
      exterior::accumulate(out, left | t | right, (s * (r % 2 == 0 ? 1 : -1)) > 0 ? c : -c);
    }
    ++r;
  }
  return out;
}

Form BigradedAlgebra::d(const Form& a) const {
  SparseForm<GaussScalar> out;
  for (const auto& [mono, c] : to_sparse(a))
    for (const auto& [t, ct] : d_monomial(mono)) exterior::accumulate(out, t, c * ct);
  return from_sparse(out);
}

GaussScalar BigradedAlgebra::integrate(const Form& a) const {
  const Vector* top = a.block({m_, m_});
  return top == nullptr ? GaussScalar(0) : (*top)[0] / vol_top_;
}

GaussScalar BigradedAlgebra::inner(const Form& x, const Form& y) const {
  GaussScalar out;
  for (const auto& [b, vx] : x.blocks()) {
    const Vector* vy = y.block(b);
    if (vy == nullptr) continue;
    const Vector gx = gram(b) * vx;
    for (std::size_t i = 0; i < gx.size(); ++i) out += (*vy)[i].conj() * gx[i];
  }
  return out;
}

SparseForm<GaussScalar> BigradedAlgebra::to_sparse(const Form& a) const {
  SparseForm<GaussScalar> out;
  for (const auto& [b, v] : a.blocks()) {
    const std::vector<Monomial>& basis = this->basis(b);
    if (basis.size() != v.size()) throw std::invalid_argument("Form block " + to_string(b) + " does not fit the algebra");
    for (std::size_t i = 0; i < v.size(); ++i) exterior::accumulate(out, basis[i], v[i]);
  }
  return out;
}

Form BigradedAlgebra::from_sparse(const SparseForm<GaussScalar>& a) const {
  std::map<Bidegree, Vector> blocks;
  for (const auto& [mono, c] : a) {
    const Bidegree b = exterior::bidegree(mono, m_);
    auto [it, inserted] = blocks.try_emplace(b);
    if (inserted) it->second.resize(dim(b));
    it->second[index_of(mono)] = c;
  }
  Form out;
  for (const auto& [b, v] : blocks) out.add(b, v);
  return out;
}

GaussScalar BigradedAlgebra::evaluate(const Form& one_form, const Vector& u) const {
  const auto phi = [&](int a) {
    GaussScalar s;
    for (std::size_t k = 0; k < u.size(); ++k) s += T_(a, k) * u[k];
    return s;
  };
  GaussScalar out;
  for (const auto& [mono, c] : to_sparse(one_form)) {
    if (std::popcount(mono) != 1) throw std::invalid_argument("evaluate: expected a 1-form");
    out += c * phi(std::countr_zero(mono));
  }
  return out;
}

GaussScalar BigradedAlgebra::evaluate(const Form& two_form, const Vector& u, const Vector& v) const {
  const auto phi = [&](int a, const Vector& w) {
    GaussScalar s;
    for (std::size_t k = 0; k < w.size(); ++k) s += T_(a, k) * w[k];
    return s;
  };
  GaussScalar out;
  for (const auto& [mono, c] : to_sparse(two_form)) {
    const std::vector<int> g = bits_of(mono);
    if (g.size() != 2) throw std::invalid_argument("evaluate: expected a 2-form");
    out += c * (phi(g[0], u) * phi(g[1], v) - phi(g[0], v) * phi(g[1], u));
  }
  return out;
}

std::string BigradedAlgebra::monomial_label(Monomial mono) const {
  if (mono == 0) return "1";
  std::string out;
  for (const int g : bits_of(mono)) {
    if (!out.empty()) out += '^';
    out += 'a' + std::to_string(g % m_ + 1);
    if (g >= m_) out += '~';
  }
  return out;
}

Monomial BigradedAlgebra::parse_monomial_label(std::string_view label) const {
  if (label == "1") return 0;
  Monomial out = 0;
  int last = -1;
  std::size_t pos = 0;
  while (pos <= label.size()) {
    const std::size_t end = std::min(label.find('^', pos), label.size());
    std::string_view tok = label.substr(pos, end - pos);
    const bool barred = !tok.empty() && tok.back() == '~';
    if (barred) tok.remove_suffix(1);
    if (tok.size() < 2 || tok[0] != 'a' || !std::all_of(tok.begin() + 1, tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw InputError("malformed monomial '" + std::string(label) + "'");
    const int idx = std::stoi(std::string(tok.substr(1))) - 1;
    if (idx < 0 || idx >= m_) throw InputError("monomial '" + std::string(label) + "': index out of range");
    const int g = idx + (barred ? m_ : 0);
    if (g <= last) throw InputError("monomial '" + std::string(label) + "' is not in canonical order");
    last = g;
    out |= Monomial{1} << g;
    pos = end + 1;
  }
  return out;
}

// Calculus ------------------------------------------------------------------

namespace {

template <class F>
BlockOperator monomial_operator(const BigradedAlgebra& alg, F&& image) {
  BlockOperator op;
  for (const Bidegree src : alg.bidegrees()) {
    const std::vector<Monomial>& basis = alg.basis(src);
    std::map<Bidegree, ExactMatrix> parts;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      for (const auto& [mono, c] : image(basis[j])) {
        const Bidegree tgt = exterior::bidegree(mono, alg.m());
        auto [it, inserted] = parts.try_emplace(tgt);
        if (inserted) it->second = ExactMatrix(alg.dim(tgt), basis.size());
        it->second(alg.index_of(mono), j) = c;
      }
    }
    for (const auto& [tgt, mat] : parts) op.add_block(src, tgt, mat);
  }
  return op;
}

}  // namespace

ComponentDifferential ce_differential(const BigradedAlgebra& alg) {
  const BlockOperator d = monomial_operator(alg, [&](Monomial mono) { return alg.d_monomial(mono); });
  ComponentDifferential out{d.component(-1, 2), d.component(0, 1), d.component(1, 0), d.component(2, -1)};
  if (out.total() != d) throw std::logic_error("ce_differential: component of unexpected bidegree");
  return out;
}

std::vector<RelationCheck> d_squared_relations(const ComponentDifferential& d) {
  const auto& [mb, db, dl, mu] = d;
  const auto zero = [](const BlockOperator& op) { return op.is_zero(); };
  return {
      {"mu^2 = 0", zero(mu * mu)},
      {"mu del + del mu = 0", zero(mu * dl + dl * mu)},
      {"mu dbar + dbar mu + del^2 = 0", zero(mu * db + db * mu + dl * dl)},
      {"mu mubar + del dbar + dbar del + mubar mu = 0", zero(mu * mb + dl * db + db * dl + mb * mu)},
      {"mubar del + del mubar + dbar^2 = 0", zero(mb * dl + dl * mb + db * db)},
      {"mubar dbar + dbar mubar = 0", zero(mb * db + db * mb)},
      {"mubar^2 = 0", zero(mb * mb)},
  };
}

BlockOperator wedge_operator(const BigradedAlgebra& alg, const Form& eta) {
  const SparseForm<GaussScalar> e = alg.to_sparse(eta);
  return monomial_operator(alg, [&](Monomial mono) { return exterior::wedge(e, SparseForm<GaussScalar>{{mono, 1}}); });
}

BlockOperator hodge_star(const BigradedAlgebra& alg) {
  const int m = alg.m();
  const Monomial full = static_cast<Monomial>((std::uint64_t{1} << (2 * m)) - 1);
  const GaussScalar vtop = alg.to_sparse(alg.vol()).at(full);
  BlockOperator star;
  for (const Bidegree src : alg.bidegrees()) {
    const Bidegree tgt{m - src.q, m - src.p};
    const Bidegree pair{src.q, src.p};
    const std::vector<Monomial>& alpha = alg.basis(pair);
    const std::vector<Monomial>& nu = alg.basis(tgt);
    const std::vector<Monomial>& beta = alg.basis(src);
    ExactMatrix P(alpha.size(), nu.size());
    for (std::size_t i = 0; i < alpha.size(); ++i)
      for (std::size_t l = 0; l < nu.size(); ++l)
        if ((alpha[i] | nu[l]) == full) P(i, l) = exterior::wedge_sign(alpha[i], nu[l]);
    ExactMatrix X(nu.size(), beta.size());
    for (std::size_t j = 0; j < beta.size(); ++j) {
      int sign = 1;
      const std::size_t t = alg.index_of(alg.conj_monomial(beta[j], sign));
      Vector rhs(alpha.size());
      for (std::size_t i = 0; i < alpha.size(); ++i) rhs[i] = vtop * alg.gram(pair)(t, i) * sign;
      const std::optional<Vector> col = solve(P, rhs);
      if (!col) throw std::domain_error("hodge_star: singular defining system on block " + to_string(src));
      for (std::size_t l = 0; l < nu.size(); ++l) X(l, j) = (*col)[l];
    }
    star.add_block(src, tgt, X);
  }
  return star;
}

Form fundamental_form(const BigradedAlgebra& alg) {
  const Form omega = alg.real_two_form(fundamental_matrix(alg.model()));
  if (!omega.is_pure({1, 1}) || alg.conj(omega) != omega) throw InputError("fundamental form is not a real (1,1)-form");
  Form power = alg.one();
  for (int k = 0; k < alg.m(); ++k) power = alg.wedge(power, omega);
  if (power.is_zero()) throw InputError("fundamental form is degenerate");
  return omega;
}

LefschetzTriple lefschetz_triple(const BigradedAlgebra& alg, const Form& omega, const BlockOperator& star) {
  LefschetzTriple t;
  t.L = wedge_operator(alg, omega);
  t.Lambda = block_inverse(alg, star) * t.L * star;
  t.H = graded_commutator(t.L, t.Lambda);
  return t;
}

BlockOperator weight_operator(const BigradedAlgebra& alg) {
  return BlockOperator::diagonal(alg, [](Bidegree b) { return i_pow(b.p - b.q); });
}

BlockOperator weight_operator_inverse(const BigradedAlgebra& alg) {
  return BlockOperator::diagonal(alg, [](Bidegree b) { return i_pow(b.q - b.p); });
}

NijenhuisComparison compare_nijenhuis(const BigradedAlgebra& alg, const ComponentDifferential& d) {
  const LieModel& model = alg.model();
  const std::size_t n = model.dim();
  const BlockOperator torsion = d.mu_bar + d.mu;
  const NijenhuisTensor N = nijenhuis(model);
  NijenhuisComparison out{true, std::nullopt};
  std::vector<std::pair<GaussScalar, GaussScalar>> samples;
  for (int a = 0; a < alg.m(); ++a)
    for (const bool barred : {false, true}) {
      const Form phi = alg.generator(a, barred);
      const Form lhs = torsion.apply(phi);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          samples.emplace_back(alg.evaluate(lhs, model.frame_vector(i), model.frame_vector(j)),
                               alg.evaluate(phi, N.at(i, j)));
    }
  for (const auto& [lhs, rhs] : samples)
    if (!out.scalar && !rhs.is_zero()) out.scalar = lhs / rhs;
  for (const auto& [lhs, rhs] : samples)
    if (lhs != (out.scalar ? *out.scalar * rhs : GaussScalar(0))) out.consistent = false;
  return out;
}

}  // namespace akh
