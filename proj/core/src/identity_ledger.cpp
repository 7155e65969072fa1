#include "akh/identity_ledger.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <stdexcept>
#include <thread>
#include <utility>

namespace akh {

namespace {

using Equation = std::pair<BlockOperator, BlockOperator>;

struct IdentityDef {
  const char* id;
  const char* statement;
  std::function<std::vector<Equation>(const OperatorSuite&)> equations;
};

BlockOperator comm(const BlockOperator& a, const BlockOperator& b) { return graded_commutator(a, b); }

/// a = b = c = ... as consecutive equations against the first term.
std::vector<Equation> chain(std::vector<BlockOperator> terms) {
  std::vector<Equation> out;
  for (std::size_t k = 1; k < terms.size(); ++k) out.emplace_back(terms[0], terms[k]);
  return out;
}

const std::vector<IdentityDef>& definitions() {
  static const GaussScalar I = GaussScalar::i();
  static const std::vector<IdentityDef> all = {
      {"L_commutes_mu", "[L, μ̄] = [L, μ] = 0",
       [](const OperatorSuite& o) {
         const auto& L = o.lefschetz.L;
         return chain({{}, comm(L, o.d.mu_bar), comm(L, o.d.mu)});
       }},
      {"Lambda_commutes_mu_adjoint", "[Λ, μ̄*] = [Λ, μ*] = 0",
       [](const OperatorSuite& o) {
         const auto& Lm = o.lefschetz.Lambda;
         return chain({{}, comm(Lm, o.adj.mu_bar), comm(Lm, o.adj.mu)});
       }},
      {"L_commutes_del", "[L, ∂̄] = [L, ∂] = 0",
       [](const OperatorSuite& o) {
         const auto& L = o.lefschetz.L;
         return chain({{}, comm(L, o.d.d_bar), comm(L, o.d.del)});
       }},
      {"Lambda_commutes_del_adjoint", "[Λ, ∂̄*] = [Λ, ∂*] = 0",
       [](const OperatorSuite& o) {
         const auto& Lm = o.lefschetz.Lambda;
         return chain({{}, comm(Lm, o.adj.d_bar), comm(Lm, o.adj.del)});
       }},
      {"L_mu_adjoint", "[L, μ̄*] = iμ, [L, μ*] = -iμ̄",
       [](const OperatorSuite& o) {
         const auto& L = o.lefschetz.L;
         return std::vector<Equation>{{comm(L, o.adj.mu_bar), I * o.d.mu}, {comm(L, o.adj.mu), -I * o.d.mu_bar}};
       }},
      {"Lambda_mu", "[Λ, μ̄] = iμ*, [Λ, μ] = -iμ̄*",
       [](const OperatorSuite& o) {
         const auto& Lm = o.lefschetz.Lambda;
         return std::vector<Equation>{{comm(Lm, o.d.mu_bar), I * o.adj.mu}, {comm(Lm, o.d.mu), -I * o.adj.mu_bar}};
       }},
      {"L_del_adjoint", "[L, ∂̄*] = -i∂, [L, ∂*] = i∂̄",
       [](const OperatorSuite& o) {
         const auto& L = o.lefschetz.L;
         return std::vector<Equation>{{comm(L, o.adj.d_bar), -I * o.d.del}, {comm(L, o.adj.del), I * o.d.d_bar}};
       }},
      {"Lambda_del", "[Λ, ∂̄] = -i∂*, [Λ, ∂] = i∂̄*",
       [](const OperatorSuite& o) {
         const auto& Lm = o.lefschetz.Lambda;
         return std::vector<Equation>{{comm(Lm, o.d.d_bar), -I * o.adj.del}, {comm(Lm, o.d.del), I * o.adj.d_bar}};
       }},
      {"mubar_mu_adjoint", "[μ̄, μ*] = 0",
       [](const OperatorSuite& o) { return chain({{}, comm(o.d.mu_bar, o.adj.mu)}); }},
      {"mu_mubar_adjoint", "[μ, μ̄*] = 0",
       [](const OperatorSuite& o) { return chain({{}, comm(o.d.mu, o.adj.mu_bar)}); }},
      {"mubar_del_adjoint", "[μ̄, ∂*] = [∂̄, μ*]",
       [](const OperatorSuite& o) { return chain({comm(o.d.mu_bar, o.adj.del), comm(o.d.d_bar, o.adj.mu)}); }},
      {"mu_dbar_adjoint", "[μ, ∂̄*] = [∂, μ̄*]",
       [](const OperatorSuite& o) { return chain({comm(o.d.mu, o.adj.d_bar), comm(o.d.del, o.adj.mu_bar)}); }},
      {"del_dbar_adjoint", "[∂, ∂̄*] = [μ̄*, ∂̄] + [μ, ∂*]",
       [](const OperatorSuite& o) {
         return chain({comm(o.d.del, o.adj.d_bar), comm(o.adj.mu_bar, o.d.d_bar) + comm(o.d.mu, o.adj.del)});
       }},
      {"dbar_del_adjoint", "[∂̄, ∂*] = [μ*, ∂] + [μ̄, ∂̄*]",
       [](const OperatorSuite& o) {
         return chain({comm(o.d.d_bar, o.adj.del), comm(o.adj.mu, o.d.del) + comm(o.d.mu_bar, o.adj.d_bar)});
       }},
      {"laplacian_mu_split", "Δ_{μ̄+μ} = Δ_μ̄ + Δ_μ",
       [](const OperatorSuite& o) {
         return chain({laplacian(o.alg, o.d.mu_bar + o.d.mu), o.lap.mu_bar + o.lap.mu});
       }},
      {"laplacian_symmetry", "Δ_∂̄ + Δ_μ = Δ_∂ + Δ_μ̄",
       [](const OperatorSuite& o) { return chain({o.lap.d_bar + o.lap.mu, o.lap.del + o.lap.mu_bar}); }},
      {"laplacian_d", "Δ_d = 2(Δ_∂̄ + Δ_μ + [μ̄, ∂*] + [μ, ∂̄*] + [∂, ∂̄*] + [∂̄, ∂*])",
       [](const OperatorSuite& o) {
         const BlockOperator inner = o.lap.d_bar + o.lap.mu + comm(o.d.mu_bar, o.adj.del) +
                                     comm(o.d.mu, o.adj.d_bar) + comm(o.d.del, o.adj.d_bar) +
                                     comm(o.d.d_bar, o.adj.del);
         return chain({o.lap.d, GaussScalar(2) * inner});
       }},
      {"L_laplacian_chain", "[L, Δ_∂̄] = [L, Δ_μ̄] = -[L, Δ_∂] = -[L, Δ_μ]",
       [](const OperatorSuite& o) {
         const auto& L = o.lefschetz.L;
         return chain({comm(L, o.lap.d_bar), comm(L, o.lap.mu_bar), -comm(L, o.lap.del), -comm(L, o.lap.mu)});
       }},
      {"L_laplacian_commutator", "[L, Δ_∂̄] = -i[∂̄, ∂] = i[μ̄, μ]",
       [](const OperatorSuite& o) {
         return chain({comm(o.lefschetz.L, o.lap.d_bar), -I * comm(o.d.d_bar, o.d.del), I * comm(o.d.mu_bar, o.d.mu)});
       }},
      {"Lambda_laplacian_chain", "[Λ, Δ_∂̄] = [Λ, Δ_μ̄] = -[Λ, Δ_∂] = -[Λ, Δ_μ]",
       [](const OperatorSuite& o) {
         const auto& Lm = o.lefschetz.Lambda;
         return chain({comm(Lm, o.lap.d_bar), comm(Lm, o.lap.mu_bar), -comm(Lm, o.lap.del), -comm(Lm, o.lap.mu)});
       }},
      {"Lambda_laplacian_commutator", "[Λ, Δ_∂̄] = -i[∂̄*, ∂*] = i[μ̄*, μ*]",
       [](const OperatorSuite& o) {
         return chain({comm(o.lefschetz.Lambda, o.lap.d_bar), -I * comm(o.adj.d_bar, o.adj.del),
                       I * comm(o.adj.mu_bar, o.adj.mu)});
       }},
      {"Lambda_d_star_weight", "[Λ, d] = ⋆ 𝕀⁻¹ d 𝕀 ⋆",
       [](const OperatorSuite& o) {
         return chain({comm(o.lefschetz.Lambda, o.d_total), o.star * o.weight_inverse * o.d_total * o.weight * o.star});
       }},
  };
  return all;
}

IdentityEntry check(const OperatorSuite& ops, const IdentityDef& def) {
  IdentityEntry e{def.id, def.statement, true, std::nullopt, std::nullopt};
  for (const auto& [lhs, rhs] : def.equations(ops)) {
    const BlockOperator diff = lhs - rhs;
    if (diff.is_zero()) continue;
    e.holds = false;
    // Blocks are keyed (source, target) in bidegree order, so the first key
    // has the smallest failing source.
    const auto& [key, m] = *diff.blocks().begin();
    e.failing_block = key.first;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (is_zero(m.column(j))) continue;
      Vector v(m.cols());
      v[j] = 1;
      e.witness = Form(key.first, v);
      break;
    }
    break;
  }
  return e;
}

}  // namespace

bool IdentityLedger::all_hold() const {
  for (const auto& e : entries)
    if (!e.holds) return false;
  return true;
}

const IdentityEntry& IdentityLedger::at(const std::string& id) const {
  for (const auto& e : entries)
    if (e.id == id) return e;
  throw std::out_of_range("no identity '" + id + "'");
}

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& s : definitions()) out.emplace_back(s.id);
    return out;
  }();
  return ids;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("AKH_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

IdentityLedger verify_identities(const OperatorSuite& ops, unsigned threads) {
  const auto& all = definitions();
  IdentityLedger ledger;
  ledger.entries.resize(all.size());
  if (threads == 0) threads = default_thread_count();
  threads = std::min<unsigned>(threads, static_cast<unsigned>(all.size()));

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(all.size());
  auto worker = [&] {
    for (std::size_t k = next++; k < all.size(); k = next++) {
      try {
        ledger.entries[k] = check(ops, all[k]);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
  return ledger;
}

}  // namespace akh
