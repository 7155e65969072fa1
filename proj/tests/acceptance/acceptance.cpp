// Acceptance runner: one PASS/FAIL line per criterion, failing sub-checks
// listed underneath. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "akh/calculus.hpp"
#include "akh/harmonic.hpp"
#include "akh/identity_ledger.hpp"
#include "akh/obstructions.hpp"
#include "akh/operators.hpp"
#include "akh_cli/cli.hpp"

namespace {

using namespace akh;

class Criterion {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool passed() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

using Rows = std::vector<std::vector<std::size_t>>;

Rows diamond_rows(const Diamond& d) {
  Rows rows(2 * d.m + 1);
  for (int k = 0; k <= 2 * d.m; ++k)
    for (int q = std::max(0, k - d.m); q <= std::min(k, d.m); ++q) rows[k].push_back(d.at(k - q, q));
  return rows;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const GaussScalar I = GaussScalar::i();

void kodaira_thurston(Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto ops = OperatorSuite::build(catalog("kodaira_thurston"));
  const auto d = ell_diamond(ops);
  c.check(diamond_rows(d) == Rows{{1}, {1, 1}, {0, 3, 0}, {1, 1}, {1}}, "diamond (1; 1,1; 0,3,0; 1,1; 1)");
  c.check(betti(ops) == std::vector<std::size_t>{1, 3, 4, 3, 1}, "Betti (1,3,4,3,1)");
  const auto idx = hodge_index(ops);
  c.check(idx.b2_plus == 2 && idx.b2_minus == 2 && idx.b2_zero == 0, "intersection index (2,2)");
  c.check(idx.ell11 == 3 && idx.ell11 == idx.b2_minus + 1 && idx.relation_ok, "ell^{1,1} = b2- + 1 = 3");
  c.check(!ops.structure.integrable && d.at(2, 0) == 0 && d.at(0, 2) == 0 && idx.non_integrable_vanishing,
          "non-integrable forces ell^{2,0} = ell^{0,2} = 0");
  c.check(mu_bar_cohomology(ops, {0, 1}) == 2, "mu_bar cohomology (0,1) = 2");
  c.check(mu_bar_cohomology(ops, {1, 0}) == 1, "mu_bar cohomology (1,0) = 1");
  const double t = seconds_since(t0);
  c.check(t < 5.0, "runtime " + std::to_string(t) + " s < 5 s");
}

void identity_ledger(Criterion& c) {
  for (const char* name : {"torus2", "torus4", "torus6", "kodaira_thurston"}) {
    const auto ops = OperatorSuite::build(catalog(name));
    const auto ledger = verify_identities(ops);
    c.check(ledger.entries.size() >= 21, std::string(name) + ": ledger has at least 21 identities");
    for (const auto& e : ledger.entries) c.check(e.holds, std::string(name) + ": " + e.id);
    const auto rel = d_squared_relations(ops.d);
    c.check(rel.size() == 7, std::string(name) + ": seven d^2 relations");
    for (const auto& r : rel) c.check(r.holds, std::string(name) + ": " + r.name);
  }
}

void h5_witness(Criterion& c) {
  const auto ops = OperatorSuite::build(catalog("h5_J"));
  const auto& alg = ops.alg;
  // A = X5 + iX6, B = X1 - iX2, C = X3 + iX4; a, b, c the dual (1,0)-forms
  const Vector A{0, 0, 0, 0, 1, I}, B{1, -I, 0, 0, 0, 0}, C{0, 0, 1, I, 0, 0};
  std::size_t ia = 0, ib = 0, ic = 0;
  for (std::size_t g = 0; g < 3; ++g) {
    if (alg.evaluate(alg.generator(g), A) == GaussScalar(1)) ia = g;
    if (alg.evaluate(alg.generator(g), B) == GaussScalar(1)) ib = g;
    if (alg.evaluate(alg.generator(g), C) == GaussScalar(1)) ic = g;
  }
  const Form a = alg.generator(ia);
  const Form bc = alg.wedge(alg.generator(ib), alg.generator(ic));
  c.check(ops.structure.integrable, "integrability flag true");

  const auto ledger = verify_identities(ops);
  const auto& sym = ledger.at("laplacian_symmetry");
  c.check(!sym.holds, "Laplacian symmetry identity reported as failing");
  c.check(sym.witness && sym.failing_block == Bidegree{1, 0} && sym.witness->is_pure({1, 0}) &&
              in_span(std::vector<Vector>{*a.block({1, 0})}, *sym.witness->block({1, 0}), alg.dim({1, 0})),
          "identity witness is a multiple of a in bidegree (1,0)");
  const auto w = laplacian_symmetry_witness(ops);
  c.check(w && w->dbar_mu_side && w->form == a, "a in ker(Lap_dbar + Lap_mu) but not ker(Lap_del + Lap_mubar)");

  const Form da = alg.d(a);
  c.check(da == ops.d.del.apply(a), "da = del a");
  const Vector* da_block = da.block({2, 0});
  const GaussScalar coefficient = da_block ? (*da_block)[alg.index_of((1u << ib) | (1u << ic))] : GaussScalar(0);
  c.check(da == bc * coefficient, "da is a multiple of b^c");
  const GaussScalar expected = GaussScalar::rational(-1, 2);
  c.check(coefficient == expected,
          "da = -1/2 b^c: computed da = " + coefficient.to_string() + " b^c with b, c dual to B, C");

  std::ostringstream out, err;
  const int code = cli::main_entry({"akh", "obstructions", "--catalog", "h5_J"}, out, err);
  c.check(code == cli::kExitObstruction, "obstructions exit code 2 (got " + std::to_string(code) + ")");
}

void filiform(Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  {
    const auto ops = OperatorSuite::build(catalog("filiform4_J"));
    const auto& alg = ops.alg;
    const Form a = alg.generator(0), b = alg.generator(1);
    const Form abar = alg.generator(0, true), bbar = alg.generator(1, true);
    const GaussScalar k = GaussScalar(1) / (GaussScalar(2) * I);
    c.check(ops.d.mu_bar.apply(b) == alg.wedge(abar, bbar) * k, "mu_bar b = (1/2i) abar^bbar");
    c.check(ops.d.d_bar.apply(b) == (alg.wedge(a, bbar) - alg.wedge(b, abar)) * k - alg.wedge(a, abar) * I,
            "d_bar b = (1/2i)(a^bbar - b^abar) - i a^abar");
    c.check(ops.d.del.apply(b) == alg.wedge(a, b) * k, "del b = (1/2i) a^b");
    c.check(ops.d.mu.apply(b).is_zero() && alg.d(a).is_zero() && alg.d(abar).is_zero(),
            "all other coframe differentials vanish");
    const auto rep = ak_nonexistence_report(ops);
    c.check(rep.verdict == AkVerdict::nonexistence, "verdict nonexistence");
    c.check(rep.statement.find("no invariant almost Kähler structure") != std::string::npos, "statement text");
    c.check(rep.t2_basis.size() == 1, "T2 is a one-parameter family");
    c.check(rep.top_power_on_t2 && rep.top_power_on_t2->is_zero(), "omega^2 vanishes identically on T2");
  }
  {
    const auto ops = OperatorSuite::build(catalog("filiform4_Jprime"));
    ExactMatrix w(4, 4);
    w(0, 3) = 1;
    w(1, 2) = 1;
    c.check(ops.omega == ops.alg.real_two_form(w), "J' has omega = x1^x4 + x2^x3");
    c.check(ops.structure.almost_kahler, "J' is almost Kähler");
    c.check(diamond_rows(ell_diamond(ops)) == Rows{{1}, {0, 0}, {0, 2, 0}, {0, 0}, {1}}, "J' diamond (1; 0,0; 0,2,0; 0,0; 1)");
    const auto b = betti(ops);
    c.check(b[1] == 2 && b[2] == 2 && b[3] == 2, "b1 = b2 = b3 = 2");
  }
  const double t = seconds_since(t0);
  c.check(t < 5.0, "runtime " + std::to_string(t) + " s < 5 s");
}

std::vector<std::string> almost_kahler_models() {
  std::vector<std::string> out;
  for (const auto& name : catalog_names())
    if (validate(catalog(name)).almost_kahler) out.push_back(name);
  return out;
}

void oracle_equivalence(Criterion& c) {
  for (const auto& name : almost_kahler_models()) {
    const auto ops = OperatorSuite::build(catalog(name));
    const auto lap1 = ops.lap.d_bar + ops.lap.mu, lap2 = ops.lap.del + ops.lap.mu_bar;
    for (const auto& b : ops.alg.bidegrees()) {
      const std::string where = name + " (" + to_string(b) + ")";
      const auto eight = harmonic_vectors(ops, HarmonicKind::d, b);
      const auto k1 = harmonic_vectors(ops, HarmonicKind::d_bar_mu, b);
      const auto k2 = harmonic_vectors(ops, HarmonicKind::del_mu_bar, b);
      c.check(k1.size() == eight.size() && k2.size() == eight.size(), where + ": dimensions agree");
      for (const auto& v : eight) {
        const Form f(b, v);
        c.check(lap1.apply(f).is_zero() && lap2.apply(f).is_zero(), where + ": eightfold kernel inside both");
      }
      for (const auto& v : k1) c.check(in_span(eight, v, ops.alg.dim(b)), where + ": ker(Lap_dbar + Lap_mu) inside eightfold");
      for (const auto& v : k2) c.check(in_span(eight, v, ops.alg.dim(b)), where + ": ker(Lap_del + Lap_mubar) inside eightfold");
    }
  }
}

void property_suites(Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& name : catalog_names()) {
    const auto ops = OperatorSuite::build(catalog(name));
    const auto& alg = ops.alg;
    const int m = alg.m();
    const auto expected_h = BlockOperator::diagonal(alg, [&](Bidegree b) { return GaussScalar(b.degree() - m); });
    c.check(ops.lefschetz.H == expected_h, name + ": H = p + q - m");
    c.check(graded_commutator(ops.lefschetz.H, ops.lefschetz.L) == ops.lefschetz.L * GaussScalar(2), name + ": [H, L] = 2L");
    c.check(graded_commutator(ops.lefschetz.H, ops.lefschetz.Lambda) == ops.lefschetz.Lambda * GaussScalar(-2),
            name + ": [H, Lambda] = -2 Lambda");
    c.check(ops.adj.mu_bar == -(ops.star * ops.d.mu * ops.star), name + ": mu_bar* = -star mu star");
    if (!ops.structure.almost_kahler) continue;

    const auto d = ell_diamond(ops);
    c.check(d.duality_ok.value_or(false), name + ": diamond symmetries");
    c.check(d.bounds_ok.value_or(false), name + ": Betti bounds");
    c.check(d.diagonal_ok.value_or(false), name + ": ell^{k,k} >= 1");
    c.check(d.omega_powers_ok.value_or(false), name + ": omega^k harmonic");
    const auto hl = hard_lefschetz(ops);
    c.check(hl.all_iso, name + ": hard Lefschetz isomorphisms");
    c.check(hl.monotone, name + ": ell monotonicity");
    for (const auto& b : alg.bidegrees()) {
      c.check(primitive_decomposition(ops, b).sums_ok, name + " (" + to_string(b) + "): primitive decomposition sums");
      if (b.degree() <= m)
        c.check(hodge_riemann_check(ops, b).positive_definite, name + " (" + to_string(b) + "): Hodge-Riemann positivity");
    }
  }
  const double t = seconds_since(t0);
  c.check(t < 60.0, "runtime " + std::to_string(t) + " s < 60 s");
}

void determinism(Criterion& c) {
  for (const auto& name : catalog_names()) {
    std::string runs[2];
    for (auto& r : runs) {
      std::ostringstream out, err;
      cli::main_entry({"akh", "report", "--catalog", name, "--format", "json"}, out, err);
      r = out.str();
    }
    c.check(!runs[0].empty() && runs[0] == runs[1], name + ": byte-identical JSON reports");
  }
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Criterion&)>> criteria[] = {
      {"Kodaira-Thurston reproduction", kodaira_thurston},
      {"identity ledger on torus2/4/6 and Kodaira-Thurston", identity_ledger},
      {"h5 witness", h5_witness},
      {"filiform coframe, nonexistence certificate and J' diamond", filiform},
      {"harmonic kernel equivalence on almost Kähler models", oracle_equivalence},
      {"property suites", property_suites},
      {"JSON determinism", determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [title, body] : criteria) {
    ++index;
    Criterion c;
    try {
      body(c);
    } catch (const std::exception& e) {
      c.check(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.passed() ? "PASS" : "FAIL") << " " << index << " " << title << "\n";
    for (const auto& f : c.failures()) std::cout << "    failed: " << f << "\n";
    failed += c.passed() ? 0 : 1;
  }
  std::cout << (7 - failed) << "/7 criteria passed\n";
  return failed == 0 ? 0 : 1;
}
