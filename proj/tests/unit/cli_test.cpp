#include <gtest/gtest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "akh/lie_model.hpp"
#include "akh_cli/cli.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "akh");
  std::ostringstream out, err;
  const int code = akh::cli::main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

bool has_line(const std::string& text, const std::string& wanted) {
  for (const auto& l : lines(text))
    if (l == wanted) return true;
  return false;
}

TEST(Cli, ValidateTorusIsClean) {
  const auto r = run({"validate", "--catalog", "torus4"});
  EXPECT_EQ(r.code, akh::cli::kExitOk);
  const auto j = nlohmann::json::parse(run({"validate", "--catalog", "torus4", "--format", "json"}).out);
  for (const char* flag : {"jacobi_ok", "acs_ok", "compatible_ok", "integrable", "almost_kahler"})
    EXPECT_TRUE(j["structure"][flag].get<bool>()) << flag;
}

TEST(Cli, KodairaThurstonJsonReport) {
  const auto r = run({"report", "--catalog", "kodaira_thurston", "--format", "json"});
  ASSERT_EQ(r.code, akh::cli::kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["diamond"]["ell"], nlohmann::json::parse("[[1,1,0],[1,3,1],[0,1,1]]"));
  EXPECT_EQ(j["diamond"]["betti"], nlohmann::json::parse("[1,3,4,3,1]"));
  EXPECT_EQ(j["hodge"]["hodge_index"]["b2_plus"], 2);
  EXPECT_EQ(j["hodge"]["hodge_index"]["b2_minus"], 2);
  EXPECT_TRUE(j["identities"]["all_hold"].get<bool>());
  EXPECT_EQ(j["exit_status"], 0);
}

TEST(Cli, H5ObstructionsExitTwoWithWitness) {
  const auto r = run({"obstructions", "--catalog", "h5_J"});
  EXPECT_EQ(r.code, akh::cli::kExitObstruction);
  EXPECT_NE(r.out.find("6 > 4"), std::string::npos);
  EXPECT_NE(r.out.find("a3"), std::string::npos);

  const auto j = nlohmann::json::parse(run({"obstructions", "--catalog", "h5_J", "--format", "json"}).out);
  const auto& w = j["obstructions"]["laplacian_witness"];
  EXPECT_EQ(w["bidegree"], "1,0");
  EXPECT_EQ(j["exit_status"], 2);
}

TEST(Cli, DiamondTextMiddleRows) {
  struct Case {
    const char* model;
    const char* middle;
  };
  for (const auto& c : {Case{"kodaira_thurston", "0 3 0"}, Case{"torus4", "1 4 1"}, Case{"filiform4_Jprime", "0 2 0"}}) {
    const auto r = run({"diamond", "--catalog", c.model});
    EXPECT_EQ(r.code, 0) << c.model;
    EXPECT_TRUE(has_line(r.out, c.middle)) << c.model << "\n" << r.out;
  }
  const auto kt = run({"diamond", "--catalog", "kodaira_thurston"});
  EXPECT_TRUE(has_line(kt.out, "  1"));
  EXPECT_TRUE(has_line(kt.out, " 1 1"));
}

TEST(Cli, BettiCommand) {
  const auto j = nlohmann::json::parse(run({"betti", "--catalog", "filiform4_J", "--format", "json"}).out);
  EXPECT_EQ(j["betti"], nlohmann::json::parse("[1,2,2,2,1]"));
}

TEST(Cli, IdentitiesFailOnlyReportedForNonKahler) {
  const auto h5 = run({"identities", "--catalog", "h5_J", "--format", "json"});
  EXPECT_EQ(h5.code, 0);
  const auto j = nlohmann::json::parse(h5.out);
  bool found = false;
  for (const auto& e : j["identities"]["ledger"])
    if (e["id"] == "laplacian_symmetry") {
      EXPECT_EQ(e["status"], "fails");
      EXPECT_EQ(e["failing_block"], "1,0");
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(Cli, LefschetzNeedsAlmostKahler) {
  EXPECT_EQ(run({"lefschetz", "--catalog", "kodaira_thurston"}).code, 0);
  const auto r = run({"lefschetz", "--catalog", "h5_J"});
  EXPECT_EQ(r.code, akh::cli::kExitInputError);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"report", "--catalog", "nope"}).code, akh::cli::kExitInputError);
  EXPECT_EQ(run({"report"}).code, akh::cli::kExitInputError);
  EXPECT_EQ(run({"report", "--catalog", "torus4", "--model", "x.json"}).code, akh::cli::kExitInputError);
  EXPECT_EQ(run({"report", "--catalog", "torus4", "--format", "xml"}).code, akh::cli::kExitInputError);
  EXPECT_EQ(run({"frobnicate"}).code, akh::cli::kExitInputError);
  EXPECT_EQ(run({"report", "--model", "/nonexistent/model.json"}).code, akh::cli::kExitInputError);

  const std::string path = ::testing::TempDir() + "akh_cli_bad_model.json";
  std::ofstream(path) << "{\n  \"format\": 1,\n  \"name\": \"x\",\n  \"dim\": 2,\n  \"J\": [[\"0\", \"-1\"], [\"1\"]]\n}\n";
  const auto r = run({"validate", "--model", path});
  EXPECT_EQ(r.code, akh::cli::kExitInputError);
  EXPECT_NE(r.err.find("J[1]"), std::string::npos) << r.err;
}

TEST(Cli, HelpExitsCleanly) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("kodaira_thurston"), std::string::npos);
}

TEST(Cli, ModelFileMatchesCatalog) {
  const std::string path = ::testing::TempDir() + "akh_cli_kt.json";
  std::ofstream(path) << akh::serialize_model(akh::catalog("kodaira_thurston"));
  const auto from_file = run({"diamond", "--model", path});
  const auto from_catalog = run({"diamond", "--catalog", "kodaira_thurston"});
  EXPECT_EQ(from_file.code, 0);
  EXPECT_EQ(from_file.out, from_catalog.out);
}

TEST(Cli, JsonReportIsDeterministic) {
  for (const auto& name : akh::catalog_names()) {
    const auto a = run({"report", "--catalog", name, "--format", "json"});
    const auto b = run({"report", "--catalog", name, "--format", "json"});
    EXPECT_EQ(a.out, b.out) << name;
    EXPECT_EQ(a.code, b.code) << name;
  }
}

}  // namespace
