#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace akh::cli {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

Json optional_flag(const std::optional<bool>& f) { return f ? Json(*f) : Json(nullptr); }

Json signature_json(const Signature& s) { return Json{{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}}; }

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

}  // namespace

Json form_json(const BigradedAlgebra& alg, const Form& f) {
  Json out = Json::object();
  for (const auto& [b, v] : f.blocks()) {
    Json block = Json::object();
    const auto& basis = alg.basis(b);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) block[alg.monomial_label(basis[i])] = v[i].to_string();
    out[to_string(b)] = std::move(block);
  }
  return out;
}

std::string form_text(const BigradedAlgebra& alg, const Form& f) {
  std::string out;
  for (const auto& [mono, c] : alg.to_sparse(f)) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ") " + alg.monomial_label(mono);
  }
  return out.empty() ? "0" : out;
}

Json model_json(const LieModel& model) {
  return Json{{"name", model.name()}, {"dim", model.dim()}, {"m", model.half_dim()}};
}

Json structure_json(const OperatorSuite& ops) {
  const StructureReport& s = ops.structure;
  Json out{{"jacobi_ok", s.jacobi_ok},         {"acs_ok", s.acs_ok},
           {"compatible_ok", s.compatible_ok}, {"integrable", s.integrable},
           {"almost_kahler", s.almost_kahler}, {"nilpotent", s.nilpotent},
           {"nilpotency_step", s.nilpotency_step}};
  out["warnings"] = s.warnings;
  const NijenhuisComparison nc = compare_nijenhuis(ops.alg, ops.d);
  out["nijenhuis"] = Json{{"vanishes", nijenhuis(ops.alg.model()).is_zero()},
                          {"fitted_scalar", nc.scalar ? Json(nc.scalar->to_string()) : Json(nullptr)},
                          {"consistent", nc.consistent}};
  Json coframe = Json::array();
  for (int a = 0; a < ops.alg.m(); ++a) {
    Vector row;
    for (std::size_t k = 0; k < ops.alg.model().dim(); ++k) row.push_back(ops.alg.coframe()(a, k));
    coframe.push_back(Json{{"label", "a" + std::to_string(a + 1)}, {"frame_coefficients", vector_json(row)}});
  }
  out["coframe"] = std::move(coframe);
  out["orientation"] = ops.alg.orientation();
  return out;
}

Json identities_json(const OperatorSuite& ops, const IdentityLedger& ledger, const std::vector<RelationCheck>& d2) {
  Json entries = Json::array();
  for (const auto& e : ledger.entries) {
    Json j{{"id", e.id}, {"statement", e.statement}, {"status", e.holds ? "holds" : "fails"}};
    if (e.failing_block) j["failing_block"] = to_string(*e.failing_block);
    if (e.witness) j["witness"] = form_json(ops.alg, *e.witness);
    entries.push_back(std::move(j));
  }
  Json rel = Json::array();
  for (const auto& r : d2) rel.push_back(Json{{"relation", r.name}, {"holds", r.holds}});
  const bool star_mu = ops.adj.mu_bar == -(ops.star * ops.d.mu * ops.star);
  const bool star_del = ops.adj.d_bar == -(ops.star * ops.d.del * ops.star);
  return Json{{"ledger", std::move(entries)},
              {"all_hold", ledger.all_hold()},
              {"d_squared", std::move(rel)},
              {"adjoint_cross_checks", Json{{"mu_bar* = -star mu star", star_mu}, {"d_bar* = -star del star", star_del}}}};
}

Json diamond_json(const Diamond& d) {
  Json flags = Json{{"duality_ok", optional_flag(d.duality_ok)},
                    {"bounds_ok", optional_flag(d.bounds_ok)},
                    {"diagonal_ok", optional_flag(d.diagonal_ok)},
                    {"omega_powers_harmonic", optional_flag(d.omega_powers_ok)},
                    {"lefschetz_ok", optional_flag(d.lefschetz_ok)}};
  return Json{{"m", d.m}, {"ell", d.ell}, {"betti", d.betti}, {"almost_kahler", d.almost_kahler}, {"flags", flags}};
}

Json lefschetz_json(const HardLefschetzReport& rep) {
  Json maps = Json::array();
  for (const auto& m : rep.maps)
    maps.push_back(Json{{"source", to_string(m.source)},
                        {"target", to_string(m.target)},
                        {"power", m.power},
                        {"source_dim", m.source_dim},
                        {"target_dim", m.target_dim},
                        {"rank", m.rank},
                        {"into_harmonic", m.into_harmonic},
                        {"iso", m.iso}});
  Json coh = Json::array();
  for (const auto& c : rep.cohomology)
    coh.push_back(Json{{"k", c.k}, {"rank", c.rank}, {"betti", c.source_betti}, {"iso", c.iso}});
  return Json{{"harmonic_maps", std::move(maps)},
              {"all_iso", rep.all_iso},
              {"monotone", rep.monotone},
              {"cohomology_maps", std::move(coh)}};
}

Json hodge_json(const OperatorSuite& ops) {
  const BigradedAlgebra& alg = ops.alg;
  Json out = Json::object();
  Json mubar = Json::object();
  for (const Bidegree b : alg.bidegrees()) mubar[to_string(b)] = mu_bar_cohomology(ops, b);
  out["mu_bar_cohomology"] = std::move(mubar);
  if (!ops.structure.almost_kahler) return out;
  Json prim = Json::object();
  Json hr = Json::object();
  for (const Bidegree b : alg.bidegrees()) {
    const PrimitiveDecomposition pd = primitive_decomposition(ops, b);
    prim[to_string(b)] = Json{{"ell", pd.ell}, {"summand_dims", pd.dims}, {"sums_ok", pd.sums_ok}, {"orthogonal", pd.orthogonal}};
    if (b.degree() <= alg.m()) {
      const HodgeRiemannCheck c = hodge_riemann_check(ops, b);
      hr[to_string(b)] = Json{{"primitive_dim", c.dim},
                              {"unsigned_signature", signature_json(c.unsigned_form)},
                              {"signed_signature", signature_json(c.signed_form)},
                              {"positive_definite", c.positive_definite}};
    }
  }
  out["primitive_decomposition"] = std::move(prim);
  out["hodge_riemann"] = std::move(hr);
  if (alg.m() == 2) {
    const HodgeIndex hi = hodge_index(ops);
    out["hodge_index"] = Json{{"b2_plus", hi.b2_plus},
                              {"b2_minus", hi.b2_minus},
                              {"b2_zero", hi.b2_zero},
                              {"ell11", hi.ell11},
                              {"relation_ok", hi.relation_ok},
                              {"non_integrable_vanishing", hi.non_integrable_vanishing},
                              {"representative_independent", hi.representative_independent}};
  }
  return out;
}

Json obstructions_json(const OperatorSuite& ops, const ObstructionReport& rep) {
  const std::size_t h1 = rep.holomorphic_dims.size() > 1 ? rep.holomorphic_dims[1] : 0;
  Json witness = nullptr;
  if (rep.laplacian_witness)
    witness = Json{{"bidegree", to_string(rep.laplacian_witness->bidegree)},
                   {"kernel", rep.laplacian_witness->dbar_mu_side ? "dbar+mu" : "del+mubar"},
                   {"form", form_json(ops.alg, rep.laplacian_witness->form)}};
  const AkNonexistenceReport& ak = rep.ak;
  Json closed = Json::array();
  for (const Form& w : ak.closed_11_basis) closed.push_back(form_json(ops.alg, w));
  Json t2 = Json::array();
  for (const Vector& v : ak.t2_basis) t2.push_back(vector_json(v));
  Json akj{{"verdict", to_string(ak.verdict)},
           {"scope", "invariant forms"},
           {"statement", ak.statement},
           {"closed_real_11_basis", std::move(closed)},
           {"holomorphic_1_forms", ak.holomorphic_dim},
           {"t1_dim", ak.t1_dim},
           {"t1_full", ak.t1_full},
           {"t2_basis", std::move(t2)},
           {"top_power_on_t2", ak.top_power_on_t2 ? Json(ak.top_power_on_t2->to_string()) : Json(nullptr)}};
  return Json{{"holomorphic_dims", rep.holomorphic_dims},
              {"b1", rep.b1},
              {"holomorphic_bound", Json{{"ok", rep.holomorphic_bound_ok}, {"lhs", 2 * h1}, {"b1", rep.b1}}},
              {"holomorphic_excess", rep.holomorphic_excess},
              {"holomorphic_equals_harmonic", optional_flag(rep.holomorphic_equals_harmonic)},
              {"laplacian_witness", std::move(witness)},
              {"almost_kahler_search", std::move(akj)},
              {"fires", rep.fires()}};
}

std::string structure_text(const OperatorSuite& ops, int verbosity) {
  const StructureReport& s = ops.structure;
  std::ostringstream os;
  os << "model " << ops.alg.model().name() << " (dim " << ops.alg.model().dim() << ")\n"
     << "  jacobi          " << yes_no(s.jacobi_ok) << "\n"
     << "  J^2 = -1        " << yes_no(s.acs_ok) << "\n"
     << "  J orthogonal    " << yes_no(s.compatible_ok) << "\n"
     << "  integrable      " << yes_no(s.integrable) << "\n"
     << "  almost Kähler   " << yes_no(s.almost_kahler) << "\n"
     << "  nilpotent       " << yes_no(s.nilpotent);
  if (s.nilpotent) os << " (step " << s.nilpotency_step << ")";
  os << "\n";
  for (const auto& w : s.warnings) os << "  warning: " << w << "\n";
  if (verbosity > 0) {
    const NijenhuisComparison nc = compare_nijenhuis(ops.alg, ops.d);
    os << "  (mubar+mu) vs Nijenhuis scalar: " << (nc.scalar ? nc.scalar->to_string() : "none (both vanish)")
       << (nc.consistent ? "" : " INCONSISTENT") << "\n";
    for (int a = 0; a < ops.alg.m(); ++a)
      os << "  d a" << a + 1 << " = " << form_text(ops.alg, ops.alg.d(ops.alg.generator(a))) << "\n";
  }
  return os.str();
}

std::string identities_text(const OperatorSuite& ops, const IdentityLedger& ledger, const std::vector<RelationCheck>& d2,
                            int verbosity) {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& e : ledger.entries) width = std::max(width, e.id.size());
  for (const auto& r : d2) os << (r.holds ? "holds  " : "FAILS  ") << "d^2: " << r.name << "\n";
  for (const auto& e : ledger.entries) {
    os << (e.holds ? "holds  " : "FAILS  ") << e.id << std::string(width - e.id.size() + 2, ' ') << e.statement;
    if (!e.holds) {
      os << "  [block " << to_string(*e.failing_block) << "]";
      if (verbosity > 0 && e.witness) os << " witness " << form_text(ops.alg, *e.witness);
    }
    os << "\n";
  }
  return os.str();
}

std::string diamond_text(const Diamond& d) {
  std::size_t w = 1;
  for (const auto& row : d.ell)
    for (const std::size_t v : row) w = std::max(w, std::to_string(v).size());
  const std::size_t pitch = 2 * ((w + 2) / 2);
  const int maxn = d.m + 1;
  std::ostringstream os;
  for (int k = 0; k <= 2 * d.m; ++k) {
    std::vector<std::size_t> row;
    for (int p = std::min(k, d.m); p >= 0 && k - p <= d.m; --p) row.push_back(d.ell[p][k - p]);
    os << std::string((maxn - static_cast<int>(row.size())) * pitch / 2, ' ');
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string cell = std::to_string(row[i]);
      if (i > 0) os << std::string(pitch - w, ' ');
      os << std::string(w - cell.size(), ' ') << cell;
    }
    os << "\n";
  }
  return os.str();
}

std::string diamond_flags_text(const Diamond& d) {
  if (!d.almost_kahler) return "flags suppressed: model is not almost Kähler\n";
  std::ostringstream os;
  os << "duality " << yes_no(*d.duality_ok) << ", betti bounds " << yes_no(*d.bounds_ok) << ", ell^{k,k} >= 1 "
     << yes_no(*d.diagonal_ok) << ", omega^k harmonic " << yes_no(*d.omega_powers_ok) << ", hard Lefschetz "
     << yes_no(*d.lefschetz_ok) << "\n";
  return os.str();
}

std::string betti_text(const std::vector<std::size_t>& b) {
  std::ostringstream os;
  os << "betti";
  for (std::size_t k = 0; k < b.size(); ++k) os << (k == 0 ? " " : ", ") << b[k];
  os << "\n";
  return os.str();
}

std::string lefschetz_text(const HardLefschetzReport& rep) {
  std::ostringstream os;
  for (const auto& m : rep.maps)
    os << "L^" << m.power << ": H(" << to_string(m.source) << ") -> H(" << to_string(m.target) << ")  " << m.source_dim << " -> "
       << m.target_dim << ", rank " << m.rank << (m.iso ? "  iso" : "  NOT iso") << "\n";
  os << "monotone ell^{p,q} <= ell^{p+1,q+1}: " << yes_no(rep.monotone) << "\n";
  for (const auto& c : rep.cohomology)
    os << "cohomology L^" << rep.cohomology.size() - c.k << ": H^" << c.k << " rank " << c.rank << " of " << c.source_betti
       << (c.iso ? "  iso" : "  NOT iso") << "\n";
  return os.str();
}

std::string hodge_text(const OperatorSuite& ops) {
  std::ostringstream os;
  os << "mu_bar cohomology:";
  for (const Bidegree b : ops.alg.bidegrees()) os << " (" << to_string(b) << ")=" << mu_bar_cohomology(ops, b);
  os << "\n";
  if (!ops.structure.almost_kahler) return os.str();
  for (const Bidegree b : ops.alg.bidegrees()) {
    if (b.degree() > ops.alg.m()) continue;
    const HodgeRiemannCheck c = hodge_riemann_check(ops, b);
    os << "Hodge-Riemann (" << to_string(b) << "): primitive dim " << c.dim << ", "
       << (c.positive_definite ? "positive definite" : "NOT positive definite") << "\n";
  }
  if (ops.alg.m() == 2) {
    const HodgeIndex hi = hodge_index(ops);
    os << "intersection index (" << hi.b2_plus << "," << hi.b2_minus << "), ell^{1,1} = " << hi.ell11
       << ", ell^{1,1} = b2- + 1: " << yes_no(hi.relation_ok) << "\n";
  }
  return os.str();
}

std::string obstructions_text(const OperatorSuite& ops, const ObstructionReport& rep, int verbosity) {
  std::ostringstream os;
  const std::size_t h1 = rep.holomorphic_dims.size() > 1 ? rep.holomorphic_dims[1] : 0;
  os << "holomorphic forms dim Omega^p:";
  for (const std::size_t h : rep.holomorphic_dims) os << " " << h;
  os << "\n";
  os << "2 dim Omega^1 <= b^1: " << 2 * h1 << (rep.holomorphic_bound_ok ? " <= " : " > ") << rep.b1
     << (rep.holomorphic_bound_ok ? "" : "  OBSTRUCTION") << "\n";
  os << "dim Omega^1 > dim Omega^2 + 1: " << yes_no(rep.holomorphic_excess) << "\n";
  if (rep.laplacian_witness) {
    const auto& w = *rep.laplacian_witness;
    os << "Laplacian asymmetry witness in (" << to_string(w.bidegree) << "): " << form_text(ops.alg, w.form) << " lies in "
       << (w.dbar_mu_side ? "ker(Lap_dbar + Lap_mu) but not ker(Lap_del + Lap_mubar)"
                          : "ker(Lap_del + Lap_mubar) but not ker(Lap_dbar + Lap_mu)")
       << "  OBSTRUCTION\n";
  } else {
    os << "Laplacian asymmetry: none (symmetric)\n";
  }
  os << "almost Kähler search (invariant forms): " << rep.ak.statement << "\n";
  if (verbosity > 0) {
    os << "  closed real (1,1)-forms: " << rep.ak.closed_11_basis.size() << ", T1 dim " << rep.ak.t1_dim
       << ", T2 dim " << rep.ak.t2_basis.size() << "\n";
    if (rep.ak.top_power_on_t2) os << "  omega^m on T2: " << rep.ak.top_power_on_t2->to_string() << "\n";
  }
  return os.str();
}

}  // namespace akh::cli
