#include <CLI11.hpp>
#include <ostream>

#include "akh/error.hpp"
#include "akh_cli/cli.hpp"
#include "report.hpp"

namespace akh::cli {

namespace {

constexpr const char* kFooter =
    "Models: --catalog NAME (torus2 ... torus12, kodaira_thurston, filiform4_J,\n"
    "filiform4_Jprime, h5_J) or --model FILE (JSON: {\"format\": 1, \"name\", \"dim\",\n"
    "\"brackets\": [{\"i\", \"j\", \"k\", \"c\"}], \"J\": [[...]]}, 1-based indices, rationals\n"
    "as \"p/q\").\n"
    "Forms print as {\"p,q\": {monomial: coefficient}}. Monomial a3 is the third\n"
    "(1,0)-coframe element, a3~ its conjugate; factors are joined by ^ in\n"
    "canonical order, unbarred first. Coefficients are Gaussian rationals \"x+y*i\".\n"
    "Exit status: 0 clean, 1 input error, 2 obstruction or identity failure on an\n"
    "almost Kähler model. AKH_THREADS caps worker threads.";

struct CommandInfo {
  Command command;
  const char* name;
  const char* help;
};

constexpr CommandInfo kCommands[] = {
    {Command::validate, "validate", "Check Jacobi, J^2 = -1, orthogonality, integrability, almost Kähler"},
    {Command::identities, "identities", "Verify the almost Kähler identity ledger and d^2 = 0 components"},
    {Command::diamond, "diamond", "Harmonic numbers ell^{p,q} as a diamond"},
    {Command::betti, "betti", "Betti numbers of the invariant complex"},
    {Command::lefschetz, "lefschetz", "Hard Lefschetz maps on harmonic forms and on cohomology"},
    {Command::obstructions, "obstructions", "Obstructions to compatible invariant symplectic forms"},
    {Command::report, "report", "Everything above"},
};

LieModel load(const RunConfig& config) {
  if (config.catalog.has_value() == config.model_path.has_value())
    throw InputError("exactly one of --catalog or --model is required");
  return config.catalog ? catalog(*config.catalog) : load_model(*config.model_path);
}

bool identities_fail(const IdentityLedger& ledger, const std::vector<RelationCheck>& d2) {
  if (!ledger.all_hold()) return true;
  for (const auto& r : d2)
    if (!r.holds) return true;
  return false;
}

int execute(const RunConfig& config, std::ostream& out) {
  LieModel model = load(config);
  const StructureReport pre = validate(model);
  if (!pre.jacobi_ok) {
    const auto& v = *pre.jacobi_violation;
    throw InputError("Jacobi identity fails for (X" + std::to_string(v[0] + 1) + ", X" + std::to_string(v[1] + 1) + ", X" +
                     std::to_string(v[2] + 1) + ")");
  }
  const OperatorSuite ops = OperatorSuite::build(std::move(model));
  const bool json = config.format == Format::json;
  const bool ak = ops.structure.almost_kahler;
  Json doc{{"model", model_json(ops.alg.model())}};
  std::string text;
  int status = kExitOk;

  const auto want = [&](Command c) { return config.command == c || config.command == Command::report; };

  if (want(Command::validate)) {
    doc["structure"] = structure_json(ops);
    text += structure_text(ops, config.verbosity);
  }
  if (want(Command::identities)) {
    const IdentityLedger ledger = verify_identities(ops);
    const auto d2 = d_squared_relations(ops.d);
    doc["identities"] = identities_json(ops, ledger, d2);
    text += identities_text(ops, ledger, d2, config.verbosity);
    if (ak && identities_fail(ledger, d2)) status = kExitObstruction;
  }
  if (want(Command::diamond)) {
    const Diamond d = ell_diamond(ops);
    doc["diamond"] = diamond_json(d);
    text += diamond_text(d) + diamond_flags_text(d);
  }
  if (want(Command::betti)) {
    const auto b = betti(ops);
    doc["betti"] = b;
    text += betti_text(b);
  }
  if (config.command == Command::lefschetz && !ak) throw InputError("lefschetz requires an almost Kähler model");
  if (want(Command::lefschetz) && ak) {
    const HardLefschetzReport rep = hard_lefschetz(ops);
    doc["hard_lefschetz"] = lefschetz_json(rep);
    text += lefschetz_text(rep);
  }
  if (config.command == Command::report) {
    doc["hodge"] = hodge_json(ops);
    text += hodge_text(ops);
  }
  if (want(Command::obstructions)) {
    const ObstructionReport rep = obstructions(ops);
    doc["obstructions"] = obstructions_json(ops, rep);
    text += obstructions_text(ops, rep, config.verbosity);
    if (rep.fires()) status = kExitObstruction;
  }
  doc["exit_status"] = status;
  if (json) {
    out << doc.dump(2) << "\n";
  } else {
    out << text;
  }
  return status;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return execute(config, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact almost Hermitian calculus on Lie algebra models", "akh"};
  app.footer(kFooter);
  app.require_subcommand(1);
  RunConfig config;
  std::string catalog_name, model_path, format = "text";
  for (const auto& info : kCommands) {
    CLI::App* sub = app.add_subcommand(info.name, info.help);
    CLI::Option* cat = sub->add_option("--catalog", catalog_name, "Compiled-in model name");
    CLI::Option* file = sub->add_option("--model", model_path, "Model JSON file");
    cat->excludes(file);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("-v,--verbose", config.verbosity, "More detail (repeatable)");
    sub->callback([&config, cmd = info.command] { config.command = cmd; });
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }
  if (!catalog_name.empty()) config.catalog = catalog_name;
  if (!model_path.empty()) config.model_path = model_path;
  config.format = format == "json" ? Format::json : Format::text;
  return run(config, out, err);
}

}  // namespace akh::cli
