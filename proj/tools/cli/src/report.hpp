#pragma once

#include <string>

#include <json.hpp>

#include "akh/identity_ledger.hpp"
#include "akh/obstructions.hpp"

namespace akh::cli {

using Json = nlohmann::ordered_json;

Json form_json(const BigradedAlgebra& alg, const Form& f);
std::string form_text(const BigradedAlgebra& alg, const Form& f);

Json model_json(const LieModel& model);
Json structure_json(const OperatorSuite& ops);
Json identities_json(const OperatorSuite& ops, const IdentityLedger& ledger, const std::vector<RelationCheck>& d2);
Json diamond_json(const Diamond& d);
Json lefschetz_json(const HardLefschetzReport& rep);
Json hodge_json(const OperatorSuite& ops);
Json obstructions_json(const OperatorSuite& ops, const ObstructionReport& rep);

std::string structure_text(const OperatorSuite& ops, int verbosity);
std::string identities_text(const OperatorSuite& ops, const IdentityLedger& ledger, const std::vector<RelationCheck>& d2,
                            int verbosity);
/// Staggered triangle, one row per total degree, p descending along a row.
std::string diamond_text(const Diamond& d);
std::string diamond_flags_text(const Diamond& d);
std::string betti_text(const std::vector<std::size_t>& b);
std::string lefschetz_text(const HardLefschetzReport& rep);
std::string hodge_text(const OperatorSuite& ops);
std::string obstructions_text(const OperatorSuite& ops, const ObstructionReport& rep, int verbosity);

}  // namespace akh::cli
