#include <gtest/gtest.h>

#include <fstream>
#include <random>

#include "akh/error.hpp"
#include "akh/lie_model.hpp"
#include "oracle.hpp"

namespace akh {
namespace {

ExactMatrix rotation_J(std::size_t dim, std::initializer_list<std::pair<std::size_t, std::size_t>> pairs) {
  ExactMatrix J(dim, dim);
  for (auto [from, to] : pairs) {
    J(to - 1, from - 1) = 1;
    J(from - 1, to - 1) = -1;
  }
  return J;
}

// [X, Y] = -Z with J X = Y, J Z = W.
LieModel kt_variant() {
  const BracketEntry b[] = {{0, 1, 2, mpq_class(-1)}};
  return LieModel("kt_variant", 4, b, rotation_J(4, {{1, 2}, {3, 4}}));
}

TEST(Validate, AbelianWithStandardJ) {
  const auto r = validate(catalog("torus4"));
  EXPECT_TRUE(r.jacobi_ok);
  EXPECT_TRUE(r.acs_ok);
  EXPECT_TRUE(r.compatible_ok);
  EXPECT_TRUE(r.integrable);
  EXPECT_TRUE(r.almost_kahler);
  EXPECT_TRUE(r.nilpotent);
  EXPECT_TRUE(r.warnings.empty());
}

TEST(Validate, KodairaThurstonCatalogIsAlmostKahlerNonIntegrable) {
  const auto model = catalog("kodaira_thurston");
  const auto r = validate(model);
  EXPECT_TRUE(r.jacobi_ok);
  EXPECT_TRUE(r.almost_kahler);
  EXPECT_FALSE(r.integrable);
  EXPECT_EQ(r.nilpotency_step, 2u);
  EXPECT_TRUE(oracle::fundamental_form_closed(model));
}

TEST(Validate, KodairaThurstonWithJPairingXYIsIntegrableNotAlmostKahler) {
  const auto model = kt_variant();
  const auto r = validate(model);
  EXPECT_TRUE(r.jacobi_ok);
  EXPECT_TRUE(r.integrable);
  EXPECT_FALSE(r.almost_kahler);
  EXPECT_FALSE(oracle::fundamental_form_closed(model));
}

TEST(Validate, H5StructureIsIntegrable) {
  const auto r = validate(catalog("h5_J"));
  EXPECT_TRUE(r.jacobi_ok);
  EXPECT_TRUE(r.integrable);
  EXPECT_FALSE(r.almost_kahler);
}

TEST(Validate, DetectsJacobiFailure) {
  // [X1,X2] = X3, [X2,X3] = X1, [X3,X1] = X1 is not a Lie bracket
  const BracketEntry b[] = {{0, 1, 2, mpq_class(1)}, {1, 2, 0, mpq_class(1)}, {2, 0, 0, mpq_class(1)}};
  const auto r = validate(LieModel("bad", 4, b, rotation_J(4, {{1, 2}, {3, 4}})));
  EXPECT_FALSE(r.jacobi_ok);
  ASSERT_TRUE(r.jacobi_violation.has_value());
  EXPECT_FALSE(r.warnings.empty());
}

TEST(Validate, DetectsNonComplexAndNonOrthogonalJ) {
  ExactMatrix doubled = rotation_J(2, {{1, 2}}) * GaussScalar(2);
  EXPECT_FALSE(validate(LieModel("scaled", 2, {}, doubled)).acs_ok);

  // J X1 = 2 X2, J X2 = -X1/2 squares to -1 but is not orthogonal
  ExactMatrix skew(2, 2);
  skew(1, 0) = 2;
  skew(0, 1) = GaussScalar::rational(-1, 2);
  const auto r = validate(LieModel("skew", 2, {}, skew));
  EXPECT_TRUE(r.acs_ok);
  EXPECT_FALSE(r.compatible_ok);
  EXPECT_FALSE(r.almost_kahler);
}

TEST(Validate, AlmostKahlerImpliesCompatibleOnCatalog) {
  for (const auto& name : catalog_names()) {
    const auto r = validate(catalog(name));
    if (r.almost_kahler) EXPECT_TRUE(r.compatible_ok) << name;
    EXPECT_EQ(r.integrable, nijenhuis(catalog(name)).is_zero()) << name;
  }
}

TEST(Nijenhuis, MatchesBruteForceOracleOnCatalog) {
  for (const auto& name : catalog_names()) {
    const auto model = catalog(name);
    const auto n = nijenhuis(model);
    for (std::size_t i = 0; i < model.dim(); ++i)
      for (std::size_t j = 0; j < model.dim(); ++j) {
        const auto expected = oracle::nijenhuis(model, i, j);
        for (std::size_t k = 0; k < model.dim(); ++k) EXPECT_EQ(n.at(i, j)[k], GaussScalar(expected[k])) << name;
      }
  }
}

TEST(Nijenhuis, AbelianZeroFiliformNonzero) {
  EXPECT_TRUE(nijenhuis(catalog("torus6")).is_zero());
  EXPECT_FALSE(nijenhuis(catalog("filiform4_J")).is_zero());
}

TEST(Nijenhuis, AntisymmetricAndJAntilinear) {
  for (const auto& name : catalog_names()) {
    const auto model = catalog(name);
    for (std::size_t i = 0; i < model.dim(); ++i)
      for (std::size_t j = 0; j < model.dim(); ++j) {
        const auto x = model.frame_vector(i), y = model.frame_vector(j);
        Vector sum = nijenhuis(model, x, y);
        const Vector swapped = nijenhuis(model, y, x);
        for (std::size_t k = 0; k < sum.size(); ++k) EXPECT_EQ(sum[k], -swapped[k]);
        // N(JX, Y) = -J N(X, Y)
        const Vector lhs = nijenhuis(model, model.apply_J(x), y);
        const Vector rhs = model.apply_J(nijenhuis(model, x, y));
        for (std::size_t k = 0; k < lhs.size(); ++k) EXPECT_EQ(lhs[k], -rhs[k]) << name;
      }
  }
}

TEST(FundamentalMatrix, TorusAndClosedness) {
  const auto model = catalog("torus4");
  const auto w = fundamental_matrix(model);
  EXPECT_EQ(w(0, 1), GaussScalar(1));
  EXPECT_EQ(w(2, 3), GaussScalar(1));
  EXPECT_EQ(w(0, 2), GaussScalar(0));
  EXPECT_TRUE(is_closed_two_form(model, w));
  EXPECT_TRUE(is_closed_two_form(catalog("kodaira_thurston"), fundamental_matrix(catalog("kodaira_thurston"))));
  EXPECT_FALSE(is_closed_two_form(catalog("filiform4_J"), fundamental_matrix(catalog("filiform4_J"))));
}

TEST(FundamentalMatrix, ClosednessMatchesOracle) {
  for (const auto& name : catalog_names()) {
    const auto model = catalog(name);
    EXPECT_EQ(is_closed_two_form(model, fundamental_matrix(model)), oracle::fundamental_form_closed(model)) << name;
  }
}

TEST(Catalog, Entries) {
  const auto kt = catalog("kodaira_thurston");
  EXPECT_EQ(kt.dim(), 4u);
  ASSERT_EQ(kt.brackets().size(), 1u);
  EXPECT_EQ(kt.brackets()[0], (BracketEntry{0, 1, 2, mpq_class(-1)}));

  const auto h5 = catalog("h5_J");
  EXPECT_EQ(h5.dim(), 6u);
  EXPECT_EQ(h5.apply_J(h5.frame_vector(0)), h5.frame_vector(1));
  const Vector jx3 = h5.apply_J(h5.frame_vector(2));
  const Vector jx5 = h5.apply_J(h5.frame_vector(4));
  EXPECT_EQ(jx3[3], GaussScalar(-1));
  EXPECT_EQ(jx5[5], GaussScalar(-1));

  const auto t4 = catalog("torus4");
  EXPECT_TRUE(t4.brackets().empty());
  EXPECT_EQ(t4.apply_J(t4.frame_vector(0)), t4.frame_vector(1));

  EXPECT_THROW(catalog("torus5"), InputError);
  EXPECT_THROW(catalog("torus14"), InputError);
  EXPECT_THROW(catalog("nope"), InputError);
}

TEST(ModelIo, RoundTripCatalog) {
  for (const auto& name : catalog_names()) {
    const auto model = catalog(name);
    const auto text = serialize_model(model);
    const auto back = parse_model(text);
    EXPECT_EQ(back, model) << name;
    EXPECT_EQ(serialize_model(back), text);
  }
}

TEST(ModelIo, RoundTripRandomRationalModels) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4), idx(0, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<BracketEntry> b;
    for (int t = 0; t < 3; ++t) {
      std::size_t i = idx(rng), j = idx(rng);
      if (i == j) continue;
      if (i > j) std::swap(i, j);
      bool taken = false;
      for (const auto& e : b) taken |= e.i == i && e.j == j;
      if (!taken) b.push_back({i, j, static_cast<std::size_t>(idx(rng)), mpq_class(num(rng), den(rng))});
    }
    const LieModel model("random", 4, b, rotation_J(4, {{1, 3}, {2, 4}}));
    EXPECT_EQ(parse_model(serialize_model(model)), model);
  }
}

TEST(ModelIo, LoadFromFile) {
  const std::string path = ::testing::TempDir() + "akh_model_io_test.json";
  std::ofstream(path) << serialize_model(catalog("h5_J"));
  EXPECT_EQ(load_model(path), catalog("h5_J"));
  EXPECT_THROW(load_model(path + ".missing"), InputError);
}

std::string error_of(const std::string& text) {
  try {
    parse_model(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(ModelIo, Diagnostics) {
  const std::string j2 = R"("J": [["0","-1"],["1","0"]])";
  EXPECT_NE(error_of("{\n\"format\": 1,\n oops }").find("line 3"), std::string::npos);
  EXPECT_NE(error_of(R"({"format": 2})").find("format"), std::string::npos);
  EXPECT_NE(error_of(R"({"format": 1, "name": "x", "dim": 3, "brackets": [], )" + j2 + "}").find("even"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"format": 1, "name": "x", "dim": 2, "brackets": [{"i": 1, "j": 3, "k": 1, "c": "1"}], )" + j2 + "}")
                .find("brackets[0].j"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"format": 1, "name": "x", "dim": 2, "brackets": [{"i": 1, "j": 2, "k": 1, "c": "1/0"}], )" + j2 + "}")
                .find("brackets[0].c"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"format": 1, "name": "x", "dim": 2, "brackets": [], "J": [["0"]]})").find("J"), std::string::npos);
}

}  // namespace
}  // namespace akh
