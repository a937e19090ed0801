#include <gtest/gtest.h>

#include "g2/proofkit.hpp"
#include "g2/relations.hpp"

using namespace g2;

namespace {

const StructureTable& table() { return calibrated_table(); }

void expect_reproduces(const AutomorphismSpec& spec, const DecompositionResult& d) {
  const Chevalley g(table(), spec.ring);
  for (const auto& a : all_roots()) {
    const Matrix img = d.g.conjugate(g.x(a, d.rho(spec.ring->one()))).matrix();
    EXPECT_EQ(img, spec.images[root_index(a)]) << root_key(a);
    if (!spec.table) continue;
    for (const auto& t : spec.ring->elements()) {
      EXPECT_EQ(d.g.conjugate(g.x(a, d.rho(t))).matrix(),
                (*spec.table)[root_index(a)][static_cast<std::size_t>(spec.ring->index_of(t))]);
    }
  }
}

}  // namespace

TEST(Decompose, InnerByTorus) {
  const Ring z5 = Ring::modular(5);
  const Chevalley g(table(), z5);
  const GeneratorRelations rel(table());
  const auto spec = make_standard_spec(g, g.h(kAlpha1, z5->from_int(2)), RingMap::identity(z5));
  const auto d = decompose_standard(spec, rel);
  EXPECT_TRUE(d.exact());
  for (const auto& t : z5->elements()) EXPECT_EQ(d.rho(t), t);
  expect_reproduces(spec, d);
}

TEST(Decompose, FrobeniusTwist) {
  const Ring f4 = Ring::parse("gf:2^2");
  const Chevalley g(table(), f4);
  const GeneratorRelations rel(table());
  const Value w = f4.as<FiniteFieldRing>()->generator();
  const GroupMatrix inner = g.x(kAlpha2, w) * g.h(Root{1, 1}, w);
  const auto spec = make_standard_spec(g, inner, RingMap::frobenius(f4));
  const auto d = decompose_standard(spec, rel);
  EXPECT_TRUE(d.exact());
  EXPECT_EQ(d.rho(w), f4->mul(w, w));
  expect_reproduces(spec, d);
}

TEST(Decompose, Identity) {
  const Ring z7 = Ring::modular(7);
  const Chevalley g(table(), z7);
  const auto spec = make_standard_spec(g, GroupMatrix::identity(z7), RingMap::identity(z7));
  const auto d = decompose_standard(spec, GeneratorRelations(table()));
  EXPECT_TRUE(d.exact());
  EXPECT_TRUE(d.g.matrix().is_identity());
}

TEST(Decompose, RandomRoundTrips) {
  const GeneratorRelations rel(table());
  for (const char* desc : {"zmod:5", "zmod:7", "gf:2^2", "zmod:4"}) {
    const Ring r = Ring::parse(desc);
    const Chevalley g(table(), r);
    std::mt19937_64 rng(0);
    for (int n = 0; n < 5; ++n) {
      const auto rs = random_standard_spec(g, rng, true, 4);
      EXPECT_TRUE(check_spec_relations(rs.spec, rel).pass);
      const auto d = decompose_standard(rs.spec, rel);
      EXPECT_TRUE(d.exact()) << desc;
      expect_reproduces(rs.spec, d);
    }
  }
}

TEST(Decompose, ImagesWithoutTable) {
  const Ring z7 = Ring::modular(7);
  const Chevalley g(table(), z7);
  auto spec = make_standard_spec(g, g.w(kAlpha2, z7->one()) * g.x(kAlpha1, 3), RingMap::identity(z7));
  spec.table.reset();
  const auto d = decompose_standard(spec, GeneratorRelations(table()));
  EXPECT_TRUE(d.exact());
  expect_reproduces(spec, d);
}

TEST(Decompose, FirstFailureNamesRoot) {
  const Ring z5 = Ring::modular(5);
  const Chevalley g(table(), z5);
  const auto spec = make_standard_spec(g, g.x(kAlpha1, 1), RingMap::identity(z5));
  EXPECT_FALSE(first_failure(spec, g, g.x(kAlpha1, 1), RingMap::identity(z5)).has_value());
  const auto f = first_failure(spec, g, GroupMatrix::identity(z5), RingMap::identity(z5));
  ASSERT_TRUE(f.has_value());
}
