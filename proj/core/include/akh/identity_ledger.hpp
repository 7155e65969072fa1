#pragma once

#include <optional>
#include <string>
#include <vector>

#include "akh/operators.hpp"

namespace akh {

struct IdentityEntry {
  std::string id;
  std::string statement;
  bool holds = false;
  /// Source block of the first failing equation, and a basis vector of that
  /// block on which the two sides differ.
  std::optional<Bidegree> failing_block;
  std::optional<Form> witness;
};

struct IdentityLedger {
  std::vector<IdentityEntry> entries;
  bool all_hold() const;
  const IdentityEntry& at(const std::string& id) const;
};

/// Stable ids of the ledger, in report order.
const std::vector<std::string>& identity_ids();

/// Checks every identity as an exact blockwise matrix equation. Entries are
/// verified concurrently on up to `threads` workers (0 reads AKH_THREADS,
/// falling back to the hardware concurrency); output order is fixed.
IdentityLedger verify_identities(const OperatorSuite& ops, unsigned threads = 0);

/// Worker count from AKH_THREADS, or the hardware concurrency when unset.
unsigned default_thread_count();

}  // namespace akh
