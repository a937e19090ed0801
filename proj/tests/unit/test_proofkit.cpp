#include <gtest/gtest.h>

#include "g2/localize.hpp"
#include "g2/proofkit.hpp"
#include "g2/relations.hpp"

using namespace g2;

namespace {

const StructureTable& table() { return calibrated_table(); }

Matrix ad_squared(const Ring& r, const Root& b) {
  const IntMatrix x = ad_matrix(table(), b);
  return Matrix::from_int(r, x * x);
}

}  // namespace

TEST(ProofKit, LongRecoveryOverIntegers) {
  const Ring z = Ring::integers();
  const Chevalley g(table(), z);
  for (const auto& a : all_roots()) {
    if (!a.is_long()) {
      EXPECT_THROW(recover_X_long(g, a), Error);
      continue;
    }
    const auto rec = recover_X_long(g, a);
    EXPECT_FALSE(rec.squares.empty());
    for (const auto& s : rec.squares) {
      EXPECT_TRUE(s.sign == 1 || s.sign == -1);
      EXPECT_TRUE(s.gamma.is_long() && s.beta.is_long());
      EXPECT_EQ(s.gamma + s.beta, a);
    }
    EXPECT_EQ(rec.X, Matrix::from_int(z, ad_matrix(table(), a)));
  }
}

TEST(ProofKit, LongSquareHasOneEntry) {
  const Ring z = Ring::integers();
  const Chevalley g(table(), z);
  const Matrix e = Matrix::identity(z);
  for (const auto& a : all_roots()) {
    if (!a.is_long()) continue;
    for (const auto& s : recover_X_long(g, a).squares) {
      const Matrix x = g.x(s.gamma, 1).matrix(), y = g.x(s.beta, 1).matrix();
      const Matrix c = x * y - x - y + e;
      const Matrix sq = c * c;
      EXPECT_EQ(sq, root_pair_unit(z, a).scaled(z->from_int(s.sign)));
    }
  }
}

TEST(ProofKit, RecoveryReducesModSix) {
  const Ring z6 = Ring::modular(6);
  const Chevalley g(table(), z6);
  for (const auto& a : all_roots()) {
    if (a.is_long()) EXPECT_EQ(recover_X_long(g, a).X, Matrix::from_int(z6, ad_matrix(table(), a)));
  }
}

TEST(ProofKit, RecoverAllRootsOverIntegers) {
  const Ring z = Ring::integers();
  const Chevalley g(table(), z);
  for (const auto& a : all_roots()) EXPECT_EQ(recover_X(g, a), Matrix::from_int(z, ad_matrix(table(), a))) << root_key(a);
}

TEST(ProofKit, ShortIdentities) {
  for (const char* d : {"rat", "zmod:4", "zmod:5", "zmod:7", "zmod:25", "gf:2^2"}) {
    const Ring r = Ring::parse(d);
    const Chevalley g(table(), r);
    for (const auto& b : all_roots()) {
      if (!b.is_short()) continue;
      for (const auto& c : check_short_identities(g, b)) EXPECT_TRUE(c.pass) << d << " " << c.name;
      const auto data = recover_short_data(g, b);
      EXPECT_EQ(data.Xsq, ad_squared(r, b)) << d;
      EXPECT_TRUE(data.eq2_consistent);
    }
  }
}

TEST(ProofKit, ShortIdentitiesInCharacteristicTwo) {
  const Ring f4 = Ring::parse("gf:2^2");
  const Chevalley g(table(), f4);
  for (const auto& b : all_roots()) {
    if (b.is_short()) EXPECT_TRUE(recover_short_data(g, b).twoX.is_zero());
  }
}

TEST(ProofKit, ShortIdentitiesNeedThree) {
  const Chevalley g(table(), Ring::modular(6));
  try {
    recover_short_data(g, kAlpha1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ThreeNotInvertible);
    EXPECT_NE(std::string(e.what()).find("3 not invertible"), std::string::npos);
  }
}

TEST(ProofKit, HWord) {
  for (const char* d : {"rat", "zmod:7"}) {
    const Ring r = Ring::parse(d);
    const Chevalley g(table(), r);
    for (const auto& a : all_roots()) {
      EXPECT_TRUE(g.eval(h_word(r, a, r->one())).matrix().is_identity());
      for (std::int64_t t : {2, 3}) {
        const Value tv = r->from_int(t);
        const auto w = h_word(r, a, tv);
        EXPECT_EQ(w.letters.size(), 6u);
        EXPECT_EQ(g.eval(w).matrix(), g.h(a, tv).matrix());
      }
    }
  }
  EXPECT_THROW(h_word(Ring::modular(6), kAlpha1, Ring::modular(6)->from_int(2)), Error);
}

TEST(ProofKit, ShortUnitWord) {
  for (const auto& b : all_roots()) {
    if (!b.is_short()) {
      continue;
    }
    const Root a = adjacent_long_root(b);
    EXPECT_TRUE(a.is_long());
    EXPECT_EQ(2 * inner_product(b, a) / inner_product(a, a), 1);
  }
  const Ring z5 = Ring::modular(5);
  const Chevalley g(table(), z5);
  for (const auto& b : all_roots()) {
    if (!b.is_short()) continue;
    EXPECT_EQ(g.eval(short_unit_word(z5, b, z5->one())).matrix(), g.x(b, 1).matrix());
    for (const auto& t : units_of(z5)) EXPECT_EQ(g.eval(short_unit_word(z5, b, t)).matrix(), g.x(b, t).matrix());
  }
  for (const auto& a : all_roots()) {
    if (a.is_long()) EXPECT_EQ(2 * inner_product(a, adjacent_long_root(a)) / 6, 1);
  }
}

TEST(ProofKit, IntegralityCheck) {
  const Ring z6 = Ring::modular(6);
  const Ring prod23 = Ring::parse("prod:zmod:2,zmod:3");
  const auto iso = RingMap::into_product(
      z6, prod23, {RingMap::reduction(z6, Ring::modular(2)), RingMap::reduction(z6, Ring::modular(3))});
  const Chevalley g23(table(), prod23);
  const std::vector<std::pair<Root, Value>> targets{{kAlpha1, z6->one()}, {kAlpha2, z6->from_int(2)}, {Root{1, 1}, z6->from_int(5)}};
  for (const auto& e : conjugation_integrality_check(g23, GroupMatrix::identity(prod23), iso, targets)) EXPECT_TRUE(e.in_image);
  const GroupMatrix r_point = g23.x(kAlpha2, iso(z6->from_int(5))) * g23.h(kAlpha1, iso(z6->from_int(5)));
  for (const auto& e : conjugation_integrality_check(g23, r_point, iso, targets)) EXPECT_TRUE(e.in_image);

  const Ring pair = Ring::parse("prod:zmod:6,zmod:6");
  const auto diag = RingMap::into_product(z6, pair, {RingMap::identity(z6), RingMap::identity(z6)});
  const Chevalley g66(table(), pair);
  const Value twist = pair.as<ProductRing>()->combine({z6->one(), z6->from_int(5)});
  const GroupMatrix twisted = g66.h(kAlpha2, twist);
  const auto report = conjugation_integrality_check(g66, twisted, diag, {{kAlpha1, z6->one()}, {kAlpha2, z6->one()}});
  EXPECT_FALSE(report[0].in_image);
  ASSERT_TRUE(report[0].offending.has_value());
  const Matrix m = twisted.conjugate(g66.x(kAlpha1, pair->one())).matrix();
  const auto [i, j] = *report[0].offending;
  const auto parts = pair.as<ProductRing>()->components(m(i, j));
  EXPECT_NE(parts[0], parts[1]);
  EXPECT_TRUE(report[1].in_image);
}

TEST(ProofKit, ExtractRho) {
  const Ring z5 = Ring::modular(5);
  const GeneratorRelations rel(table());
  {
    const Chevalley g(table(), z5);
    const auto spec = make_standard_spec(g, GroupMatrix::identity(z5), RingMap::identity(z5));
    const auto rho = extract_rho(spec, rel);
    for (const auto& t : z5->elements()) EXPECT_EQ(rho(t), t);
    const auto chk = check_rho(g, rho, rel);
    EXPECT_TRUE(chk.pass());
    for (const auto& s : z5->elements()) {
      for (const auto& t : z5->elements()) EXPECT_EQ(rho(z5->add(s, t)), z5->add(rho(s), rho(t)));
    }
  }
  {
    const Ring f4 = Ring::parse("gf:2^2");
    const Chevalley g(table(), f4);
    const auto frob = RingMap::frobenius(f4);
    const auto spec = make_standard_spec(g, GroupMatrix::identity(f4), frob);
    const auto rho = extract_rho(spec, rel);
    const Value w = f4.as<FiniteFieldRing>()->generator();
    EXPECT_EQ(rho(w), f4->mul(w, w));
    EXPECT_TRUE(check_rho(g, rho, rel).pass());
  }
}

TEST(ProofKit, ExtractRhoRejectsNonRootImages) {
  const Ring z5 = Ring::modular(5);
  const Chevalley g(table(), z5);
  const GeneratorRelations rel(table());
  auto spec = make_standard_spec(g, GroupMatrix::identity(z5), RingMap::identity(z5));
  (*spec.table)[0][2] = g.x(kAlpha1, 2).matrix() * g.x(kAlpha2, 1).matrix();
  try {
    extract_rho(spec, rel);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotOfRootForm);
  }
}

TEST(ProofKit, SpecRelations) {
  const Ring z7 = Ring::modular(7);
  const Chevalley g(table(), z7);
  const GeneratorRelations rel(table());
  EXPECT_EQ(rel.expansions().size(), 132u);
  EXPECT_EQ(characteristic(z7), 7);
  EXPECT_EQ(characteristic(Ring::parse("gf:2^2")), 2);
  const auto spec = make_standard_spec(g, g.h(kAlpha1, z7->from_int(3)) * g.x(kAlpha2, 2), RingMap::identity(z7));
  EXPECT_TRUE(check_spec_relations(spec, rel).pass);
  auto broken = spec;
  broken.images[0] = g.x(kAlpha2, 1).matrix();
  EXPECT_FALSE(check_spec_relations(broken, rel).pass);
}

TEST(ProofKit, CongruenceCheck) {
  const Ring z9 = Ring::modular(9);
  const Chevalley g(table(), z9);
  for (const auto& a : all_roots()) {
    EXPECT_TRUE(congruence_check(g, g.x(a, 1), a));
    EXPECT_TRUE(congruence_check(g, g.x(a, 4), a));
  }
  EXPECT_FALSE(congruence_check(g, g.x(kAlpha1, 1) * g.x(kAlpha2, 1), kAlpha1));
  const Ring z25 = Ring::modular(25);
  EXPECT_TRUE(congruence_check(Chevalley(table(), z25), Chevalley(table(), z25).x(kAlpha2, 6), kAlpha2));
  const Chevalley g6(table(), Ring::modular(6));
  EXPECT_THROW(congruence_check(g6, g6.x(kAlpha1, 1), kAlpha1), Error);
}

TEST(ProofKit, CentralizerGamma) {
  const Ring z5 = Ring::modular(5);
  const Chevalley g(table(), z5);
  for (const auto& a : all_roots()) {
    const auto rep = centralizer_gamma_check(g, a);
    EXPECT_TRUE(rep.pass);
    EXPECT_NE(std::find(rep.gamma.begin(), rep.gamma.end(), a), rep.gamma.end());
    EXPECT_EQ(std::find(rep.gamma.begin(), rep.gamma.end(), -a), rep.gamma.end());
    for (const auto& b : all_roots()) {
      const bool commute = (g.x(a, 1) * g.x(b, 1)).matrix() == (g.x(b, 1) * g.x(a, 1)).matrix();
      const bool listed = std::find(rep.gamma.begin(), rep.gamma.end(), b) != rep.gamma.end();
      EXPECT_EQ(commute, listed);
    }
  }
}
