#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "g2/relations.hpp"
#include "g2/serialize.hpp"
#include "g2/suite.hpp"

using namespace g2;

TEST(Serialize, MatrixRoundTrip) {
  for (const char* d : {"int", "rat", "zmod:7", "gf:2^2", "poly:int:t,u", "loc:zmod:6:3"}) {
    const Ring r = Ring::parse(d);
    const Chevalley g(calibrated_table(), r);
    const Matrix m = (g.x(kAlpha1, 2) * g.x(Root{-3, -2}, 1)).matrix();
    const auto text = matrix_to_json(m).dump();
    EXPECT_EQ(matrix_from_json(r, nlohmann::json::parse(text)), m) << d;
  }
  EXPECT_THROW(matrix_from_json(Ring::integers(), nlohmann::json::array({1, 2})), Error);
}

TEST(Serialize, WordRoundTrip) {
  const Ring r = Ring::modular(7);
  const GroupWord w{{{Letter::Kind::X, kAlpha1, r->from_int(3)},
                     {Letter::Kind::W, Root{-1, -1}, r->from_int(2)},
                     {Letter::Kind::H, Root{3, 2}, r->from_int(6)}}};
  const auto back = word_from_json(r, word_to_json(r, w));
  const Chevalley g(calibrated_table(), r);
  EXPECT_EQ(g.eval(back).matrix(), g.eval(w).matrix());
  ASSERT_EQ(back.letters.size(), 3u);
  EXPECT_EQ(back.letters[1].kind, Letter::Kind::W);
}

TEST(Serialize, TableRoundTrip) {
  const auto& t = calibrated_table();
  EXPECT_EQ(table_from_json(nlohmann::json::parse(table_to_json(t).dump())), t);
}

TEST(Serialize, SpecRoundTrip) {
  const Ring f4 = Ring::parse("gf:2^2");
  const Chevalley g(calibrated_table(), f4);
  auto spec = make_standard_spec(g, g.x(kAlpha2, 1) * g.h(kAlpha1, f4.as<FiniteFieldRing>()->generator()),
                                 RingMap::frobenius(f4));
  const auto j = nlohmann::json::parse(spec_to_json(spec).dump());
  const auto back = spec_from_json(j);
  EXPECT_EQ(back.ring.descriptor(), "gf:2^2");
  EXPECT_EQ(back.images, spec.images);
  ASSERT_TRUE(back.table.has_value());
  EXPECT_EQ(*back.table, *spec.table);
  EXPECT_EQ(spec_to_json(back), spec_to_json(spec));

  spec.claimed_g = g.x(kAlpha1, 1);
  spec.claimed_rho = RingMap::frobenius(f4);
  const auto with_claim = spec_from_json(spec_to_json(spec));
  ASSERT_TRUE(with_claim.claimed_g.has_value());
  EXPECT_EQ(with_claim.claimed_g->matrix(), spec.claimed_g->matrix());
  EXPECT_EQ(with_claim.claimed_rho->table(), spec.claimed_rho->table());
}

TEST(Serialize, DecompositionReport) {
  const Ring z5 = Ring::modular(5);
  const Chevalley g(calibrated_table(), z5);
  const GeneratorRelations rel(calibrated_table());
  const auto spec = make_standard_spec(g, g.x(kAlpha1, 2), RingMap::identity(z5));
  const auto d = decompose_standard(spec, rel);
  const auto j = decomposition_to_json(z5, d);
  EXPECT_EQ(j.at("residual"), "Exact");
  EXPECT_EQ(matrix_from_json(z5, j.at("g")), d.g.matrix());
  EXPECT_EQ(matrix_from_json(z5, j.at("g_inverse")), d.g.inverse_matrix());
  EXPECT_EQ(RingMap::from_json(j.at("rho")).table(), d.rho.table());
}

TEST(Serialize, Fleet) {
  const auto fleet = load_fleet(G2_TEST_FLEET);
  std::vector<std::string> names;
  for (const auto& r : fleet) names.push_back(r.descriptor());
  EXPECT_EQ(names, (std::vector<std::string>{"zmod:4", "zmod:5", "zmod:7", "zmod:8", "zmod:25", "gf:2^2", "gf:7^1"}));
  EXPECT_THROW(load_fleet("/nonexistent/fleet.json"), Error);
}
