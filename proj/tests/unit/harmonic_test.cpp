#include <gtest/gtest.h>

#include "akh/error.hpp"
#include "akh/harmonic.hpp"
#include "akh/obstructions.hpp"
#include "oracle.hpp"

namespace akh {
namespace {

const OperatorSuite& suite(const std::string& name) {
  static std::map<std::string, OperatorSuite> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, OperatorSuite::build(catalog(name))).first;
  return it->second;
}

std::vector<std::string> almost_kahler_models() {
  std::vector<std::string> out;
  for (const auto& name : catalog_names())
    if (validate(catalog(name)).almost_kahler) out.push_back(name);
  return out;
}

using Rows = std::vector<std::vector<std::size_t>>;

// Diamond rows by total degree, q ascending within a row.
Rows diamond_rows(const Diamond& d) {
  Rows rows(2 * d.m + 1);
  for (int k = 0; k <= 2 * d.m; ++k)
    for (int q = std::max(0, k - d.m); q <= std::min(k, d.m); ++q) rows[k].push_back(d.at(k - q, q));
  return rows;
}

TEST(Betti, MatchesRealOracleAndPoincareDuality) {
  for (const auto& name : catalog_names()) {
    const auto b = betti(suite(name));
    EXPECT_EQ(b, oracle::betti(catalog(name))) << name;
    for (std::size_t k = 0; k < b.size(); ++k) EXPECT_EQ(b[k], b[b.size() - 1 - k]) << name;
  }
  EXPECT_EQ(betti(suite("torus6")), (std::vector<std::size_t>{1, 6, 15, 20, 15, 6, 1}));
  EXPECT_EQ(betti(suite("kodaira_thurston")), (std::vector<std::size_t>{1, 3, 4, 3, 1}));
  EXPECT_EQ(betti(suite("filiform4_J")), (std::vector<std::size_t>{1, 2, 2, 2, 1}));
}

TEST(Betti, DHarmonicDimensionsSumToBetti) {
  for (const auto& name : catalog_names()) {
    const auto& ops = suite(name);
    const auto b = betti(ops);
    for (int k = 0; k <= 2 * ops.alg.m(); ++k) {
      const auto lap = total_degree_matrix(ops.alg, ops.lap.d, k, k);
      EXPECT_EQ(kernel(lap).size(), b[k]) << name << " degree " << k;
    }
  }
}

TEST(Harmonic, TorusEverythingIsHarmonic) {
  const auto& ops = suite("torus4");
  for (const auto& b : ops.alg.bidegrees())
    for (auto kind : {HarmonicKind::d, HarmonicKind::d_bar_mu, HarmonicKind::mu_bar})
      EXPECT_EQ(harmonic_vectors(ops, kind, b).size(), ops.alg.dim(b));
}

TEST(Harmonic, KodairaThurstonEightfoldKernels) {
  const auto& ops = suite("kodaira_thurston");
  EXPECT_EQ(harmonic_vectors(ops, HarmonicKind::d, {1, 1}).size(), 3u);
  EXPECT_EQ(harmonic_vectors(ops, HarmonicKind::d, {1, 0}).size(), 1u);
  // same numbers from a direct stack of the eight component matrices
  for (Bidegree b : {Bidegree{1, 1}, Bidegree{1, 0}}) {
    std::vector<ExactMatrix> stack;
    for (const BlockOperator* op : {&ops.d.mu_bar, &ops.d.d_bar, &ops.d.del, &ops.d.mu, &ops.adj.mu_bar, &ops.adj.d_bar,
                                    &ops.adj.del, &ops.adj.mu})
      stack.push_back(source_matrix(ops.alg, *op, b));
    EXPECT_EQ(kernel_intersection(stack).size(), (b == Bidegree{1, 1} ? 3u : 1u));
  }
}

TEST(Harmonic, RejectsOutOfRangeBidegree) {
  EXPECT_THROW(harmonic_vectors(suite("torus4"), HarmonicKind::d, {3, 0}), InputError);
  EXPECT_THROW(harmonic_vectors(suite("torus4"), HarmonicKind::d, {-1, 1}), InputError);
}

TEST(Harmonic, ThreeKernelsCoincideOnAlmostKahlerModels) {
  for (const auto& name : almost_kahler_models()) {
    const auto& ops = suite(name);
    const auto lap1 = ops.lap.d_bar + ops.lap.mu, lap2 = ops.lap.del + ops.lap.mu_bar;
    for (const auto& b : ops.alg.bidegrees()) {
      const auto eight = harmonic_vectors(ops, HarmonicKind::d, b);
      const auto k1 = harmonic_vectors(ops, HarmonicKind::d_bar_mu, b);
      const auto k2 = harmonic_vectors(ops, HarmonicKind::del_mu_bar, b);
      EXPECT_EQ(k1.size(), eight.size()) << name << " " << to_string(b);
      EXPECT_EQ(k2.size(), eight.size()) << name << " " << to_string(b);
      for (const auto& v : eight) {
        const Form f(b, v);
        EXPECT_TRUE(lap1.apply(f).is_zero());
        EXPECT_TRUE(lap2.apply(f).is_zero());
        EXPECT_TRUE(ops.lap.d.apply(f).is_zero());
      }
    }
  }
}

TEST(Diamond, KnownModels) {
  EXPECT_EQ(diamond_rows(ell_diamond(suite("kodaira_thurston"))), (Rows{{1}, {1, 1}, {0, 3, 0}, {1, 1}, {1}}));
  EXPECT_EQ(diamond_rows(ell_diamond(suite("torus4"))), (Rows{{1}, {2, 2}, {1, 4, 1}, {2, 2}, {1}}));
  EXPECT_EQ(diamond_rows(ell_diamond(suite("filiform4_Jprime"))), (Rows{{1}, {0, 0}, {0, 2, 0}, {0, 0}, {1}}));
}

TEST(Diamond, TorusNumbersAreProductsOfBinomials) {
  const auto d = ell_diamond(suite("torus6"));
  const std::size_t c[] = {1, 3, 3, 1};
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) EXPECT_EQ(d.at(p, q), c[p] * c[q]);
}

TEST(Diamond, FlagsHoldOnAlmostKahlerModelsAndAreRecomputable) {
  for (const auto& name : almost_kahler_models()) {
    const auto d = ell_diamond(suite(name));
    ASSERT_TRUE(d.almost_kahler);
    EXPECT_TRUE(d.duality_ok.value()) << name;
    EXPECT_TRUE(d.bounds_ok.value()) << name;
    EXPECT_TRUE(d.diagonal_ok.value()) << name;
    EXPECT_TRUE(d.omega_powers_ok.value()) << name;
    EXPECT_TRUE(d.lefschetz_ok.value()) << name;
    const int m = d.m;
    for (int p = 0; p <= m; ++p)
      for (int q = 0; q <= m; ++q) {
        EXPECT_EQ(d.at(p, q), d.at(q, p));
        EXPECT_EQ(d.at(p, q), d.at(m - q, m - p));
      }
    for (int k = 0; k <= m; ++k) EXPECT_GE(d.at(k, k), 1u);
    for (int k = 0; k <= 2 * m; ++k) {
      std::size_t sum = 0;
      for (int p = std::max(0, k - m); p <= std::min(k, m); ++p) sum += d.at(p, k - p);
      EXPECT_LE(sum, d.betti[k]) << name;
    }
  }
  const auto h5 = ell_diamond(suite("h5_J"));
  EXPECT_FALSE(h5.almost_kahler);
  EXPECT_FALSE(h5.duality_ok.has_value());
}

TEST(Diamond, PowersOfOmegaAreDHarmonic) {
  for (const auto& name : almost_kahler_models()) {
    const auto& ops = suite(name);
    Form power = ops.alg.one();
    for (int k = 0; k <= ops.alg.m(); ++k) {
      EXPECT_TRUE(ops.d_total.apply(power).is_zero()) << name;
      EXPECT_TRUE(ops.d_total_adj.apply(power).is_zero()) << name;
      power = ops.alg.wedge(power, ops.omega);
    }
  }
}

TEST(HardLefschetz, IsomorphismsAndMonotonicity) {
  for (const auto& name : almost_kahler_models()) {
    const auto rep = hard_lefschetz(suite(name));
    EXPECT_TRUE(rep.all_iso) << name;
    EXPECT_TRUE(rep.monotone) << name;
    for (const auto& map : rep.maps) {
      EXPECT_TRUE(map.into_harmonic);
      EXPECT_EQ(map.rank, map.source_dim);
      EXPECT_EQ(map.source_dim, map.target_dim);
    }
  }
}

TEST(HardLefschetz, KodairaThurstonHarmonicVersusCohomology) {
  const auto rep = hard_lefschetz(suite("kodaira_thurston"));
  bool found = false;
  for (const auto& map : rep.maps)
    if (map.source == Bidegree{1, 0}) {
      EXPECT_EQ(map.target, (Bidegree{2, 1}));
      EXPECT_EQ(map.source_dim, 1u);
      EXPECT_TRUE(map.iso);
      found = true;
    }
  EXPECT_TRUE(found);
  ASSERT_FALSE(rep.cohomology.empty());
  bool checked_h1 = false;
  for (const auto& c : rep.cohomology)
    if (c.k == 1) {
      EXPECT_EQ(c.source_betti, 3u);
      EXPECT_LT(c.rank, 3u);
      EXPECT_FALSE(c.iso);
      checked_h1 = true;
    }
  EXPECT_TRUE(checked_h1);
}

TEST(HardLefschetz, RequiresAlmostKahler) { EXPECT_THROW(hard_lefschetz(suite("h5_J")), InputError); }

TEST(PrimitiveDecomposition, KodairaThurstonOneOne) {
  const auto p = primitive_decomposition(suite("kodaira_thurston"), {1, 1});
  EXPECT_EQ(p.ell, 3u);
  EXPECT_EQ(p.dims, (std::vector<std::size_t>{2, 1}));
  EXPECT_TRUE(p.sums_ok);
  EXPECT_TRUE(p.orthogonal);
}

TEST(PrimitiveDecomposition, SumsOnAllAlmostKahlerBlocks) {
  for (const auto& name : almost_kahler_models()) {
    const auto& ops = suite(name);
    for (const auto& b : ops.alg.bidegrees()) {
      const auto p = primitive_decomposition(ops, b);
      EXPECT_TRUE(p.sums_ok) << name << " " << to_string(b);
      EXPECT_TRUE(p.orthogonal) << name << " " << to_string(b);
      for (const auto& v : primitive_harmonic_vectors(ops, b))
        EXPECT_TRUE(ops.lefschetz.Lambda.apply(Form(b, v)).is_zero());
    }
  }
}

TEST(HodgeRiemann, PositiveOnPrimitiveHarmonics) {
  for (const auto& name : almost_kahler_models()) {
    const auto& ops = suite(name);
    for (const auto& b : ops.alg.bidegrees()) {
      if (b.degree() > ops.alg.m()) continue;
      const auto hr = hodge_riemann_check(ops, b);
      EXPECT_TRUE(hr.positive_definite) << name << " " << to_string(b);
      EXPECT_EQ(hr.signed_form.positive, hr.dim);
    }
  }
  const auto kt = hodge_riemann_check(suite("kodaira_thurston"), {1, 1});
  EXPECT_EQ(kt.dim, 2u);
  EXPECT_EQ(kt.unsigned_form, (Signature{0, 2, 0}));
}

// Cup-product signature on H^2 from closed real 2-forms, computed on the
// real complex; exact forms pair to zero with every closed form.
Signature oracle_cup_signature(const LieModel& model, int orientation) {
  const auto closed = oracle::closed_forms(model, 2);
  const std::uint32_t top = (1u << model.dim()) - 1;
  ExactMatrix g(closed.size(), closed.size());
  for (std::size_t i = 0; i < closed.size(); ++i)
    for (std::size_t j = 0; j < closed.size(); ++j) {
      const auto w = oracle::wedge(closed[i], closed[j]);
      const auto it = w.find(top);
      g(i, j) = it == w.end() ? GaussScalar(0) : GaussScalar(it->second * orientation);
    }
  auto sig = symmetric_signature(g);
  sig.zero -= oracle::exact_dim(model, 2);
  return sig;
}

TEST(HodgeIndex, KnownModelsAgainstOracle) {
  struct Case {
    const char* name;
    std::size_t plus, minus, ell11;
  };
  for (const auto& c : {Case{"kodaira_thurston", 2, 2, 3}, Case{"torus4", 3, 3, 4}, Case{"filiform4_Jprime", 1, 1, 2}}) {
    const auto& ops = suite(c.name);
    const auto idx = hodge_index(ops);
    const auto sig = oracle_cup_signature(ops.alg.model(), ops.alg.orientation());
    EXPECT_EQ(sig, (Signature{c.plus, c.minus, 0})) << c.name;
    EXPECT_EQ(idx.b2_plus, c.plus) << c.name;
    EXPECT_EQ(idx.b2_minus, c.minus) << c.name;
    EXPECT_EQ(idx.b2_zero, 0u);
    EXPECT_EQ(idx.ell11, c.ell11) << c.name;
    EXPECT_TRUE(idx.relation_ok);
    EXPECT_TRUE(idx.non_integrable_vanishing);
    EXPECT_TRUE(idx.representative_independent);
  }
  EXPECT_THROW(hodge_index(suite("torus6")), InputError);
  EXPECT_THROW(hodge_index(suite("filiform4_J")), InputError);
}

TEST(HodgeIndex, RepresentativesAreRealAndClosed) {
  const auto& ops = suite("kodaira_thurston");
  const auto reps = real_harmonic_two_forms(ops);
  EXPECT_EQ(reps.size(), 4u);
  for (const auto& f : reps) {
    EXPECT_EQ(ops.alg.conj(f), f);
    EXPECT_TRUE(ops.alg.d(f).is_zero());
  }
}

TEST(MuBarCohomology, KodairaThurstonAndIntegrable) {
  EXPECT_EQ(mu_bar_cohomology(suite("kodaira_thurston"), {0, 1}), 2u);
  EXPECT_EQ(mu_bar_cohomology(suite("kodaira_thurston"), {1, 0}), 1u);
  const auto& h5 = suite("h5_J");
  for (const auto& b : h5.alg.bidegrees()) EXPECT_EQ(mu_bar_cohomology(h5, b), h5.alg.dim(b));
}

TEST(Obstructions, HolomorphicFormsAndBound) {
  const auto kt = obstructions(suite("kodaira_thurston"));
  EXPECT_EQ(kt.holomorphic_dims[1], 1u);
  EXPECT_TRUE(kt.holomorphic_bound_ok);
  EXPECT_FALSE(kt.fires());

  const auto t4 = obstructions(suite("torus4"));
  EXPECT_EQ(t4.holomorphic_dims[1], 2u);
  EXPECT_EQ(t4.b1, 4u);
  EXPECT_TRUE(t4.holomorphic_bound_ok);
  EXPECT_EQ(t4.ak.verdict, AkVerdict::inconclusive);

  const auto h5 = obstructions(suite("h5_J"));
  EXPECT_EQ(h5.holomorphic_dims[1], 3u);
  EXPECT_EQ(h5.b1, 4u);
  EXPECT_FALSE(h5.holomorphic_bound_ok);
  ASSERT_TRUE(h5.laplacian_witness.has_value());
  EXPECT_TRUE(h5.fires());
}

TEST(Obstructions, HolomorphicFormsAreDbarClosed) {
  for (const auto& name : catalog_names()) {
    const auto& ops = suite(name);
    for (int p = 0; p <= ops.alg.m(); ++p)
      for (const auto& f : holomorphic_forms(ops, p)) {
        EXPECT_TRUE(f.is_pure({p, 0}));
        EXPECT_TRUE(ops.d.d_bar.apply(f).is_zero());
      }
  }
}

TEST(AkNonexistence, FiliformCertificate) {
  const auto rep = ak_nonexistence_report(suite("filiform4_J"));
  EXPECT_EQ(rep.verdict, AkVerdict::nonexistence);
  EXPECT_EQ(rep.closed_11_basis.size(), 2u);
  EXPECT_TRUE(rep.t1_full);
  EXPECT_EQ(rep.t2_basis.size(), 1u);
  ASSERT_TRUE(rep.top_power_on_t2.has_value());
  EXPECT_TRUE(rep.top_power_on_t2->is_zero());
  EXPECT_NE(rep.statement.find("no invariant almost Kähler structure"), std::string::npos);
  for (const auto& w : rep.closed_11_basis) {
    EXPECT_TRUE(w.is_pure({1, 1}));
    EXPECT_EQ(suite("filiform4_J").alg.conj(w), w);
    EXPECT_TRUE(suite("filiform4_J").alg.d(w).is_zero());
  }
}

TEST(AkNonexistence, OtherVerdicts) {
  EXPECT_EQ(ak_nonexistence_report(suite("kodaira_thurston")).verdict, AkVerdict::inconclusive);
  EXPECT_EQ(ak_nonexistence_report(suite("torus4")).verdict, AkVerdict::inconclusive);
  EXPECT_EQ(ak_nonexistence_report(suite("filiform4_Jprime")).verdict, AkVerdict::vacuous);
}

}  // namespace
}  // namespace akh
