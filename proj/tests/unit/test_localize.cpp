#include <gtest/gtest.h>

#include <set>

#include "g2/localize.hpp"
#include "g2/relations.hpp"

using namespace g2;

namespace {

Value v(const Ring& r, std::int64_t n) { return r->from_int(n); }

// Number of classes of r x Y under (a,s) ~ (b,t) iff (at - bs)u = 0 for some u in Y,
// by union-find over all pairs.
std::size_t class_count(const Ring& r, const std::vector<Value>& ys) {
  std::vector<std::pair<Value, Value>> fr;
  for (const auto& a : r->elements()) {
    for (const auto& s : ys) fr.push_back({a, s});
  }
  std::vector<std::size_t> parent(fr.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) { return parent[i] == i ? i : parent[i] = find(parent[i]); };
  for (std::size_t i = 0; i < fr.size(); ++i) {
    for (std::size_t j = i + 1; j < fr.size(); ++j) {
      const Value d = r->sub(r->mul(fr[i].first, fr[j].second), r->mul(fr[j].first, fr[i].second));
      for (const auto& u : ys) {
        if (r->is_zero(r->mul(d, u))) {
          parent[find(i)] = find(j);
          break;
        }
      }
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < fr.size(); ++i) roots.insert(find(i));
  return roots.size();
}

std::vector<Value> complement_of(const Ring& r, std::int64_t p) {
  std::vector<Value> out;
  for (std::int64_t a = 0; a < *r->size(); ++a) {
    if (a % p != 0) out.push_back(v(r, a));
  }
  return out;
}

}  // namespace

TEST(Localize, FractionEquality) {
  const Ring z6 = Ring::modular(6);
  const auto m3 = parse_ideal(z6, "3");
  const auto y = MultiplicativeSet::complement(m3);
  const auto eq = fraction_eq(y, {v(z6, 3), z6->one()}, {z6->zero(), z6->one()});
  EXPECT_TRUE(eq.equal);
  ASSERT_TRUE(eq.witness.has_value());
  EXPECT_EQ(*eq.witness, v(z6, 2));
  EXPECT_TRUE(fraction_eq(y, {v(z6, 5), v(z6, 2)}, {v(z6, 5), v(z6, 2)}).equal);
  EXPECT_FALSE(fraction_eq(y, {v(z6, 1), z6->one()}, {z6->zero(), z6->one()}).equal);
  EXPECT_THROW(fraction_eq(y, {v(z6, 1), v(z6, 3)}, {z6->zero(), z6->one()}), Error);

  const Ring z = Ring::integers();
  const auto y5 = MultiplicativeSet::integers_off_prime(5);
  EXPECT_TRUE(fraction_eq(y5, {v(z, 1), v(z, 2)}, {v(z, 2), v(z, 4)}).equal);
  EXPECT_FALSE(fraction_eq(y5, {v(z, 1), v(z, 2)}, {v(z, 1), v(z, 3)}).equal);
  EXPECT_THROW(MultiplicativeSet::from_elements(z6, {v(z6, 2), v(z6, 3)}), Error);
}

TEST(Localize, FractionEqualityIsAnEquivalence) {
  for (const auto& [d, p] : std::vector<std::pair<const char*, std::int64_t>>{{"zmod:4", 2}, {"zmod:6", 2}, {"zmod:6", 3}, {"zmod:12", 2}, {"zmod:12", 3}, {"zmod:9", 3}}) {
    const Ring r = Ring::parse(d);
    const auto y = MultiplicativeSet::complement(parse_ideal(r, std::to_string(p)));
    std::vector<FractionValue> fr;
    for (const auto& a : r->elements()) {
      for (const auto& s : y.elements()) fr.push_back({a, s});
    }
    const std::size_t n = fr.size();
    std::vector<std::vector<bool>> eq(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) eq[i][j] = fraction_eq(y, fr[i], fr[j]).equal;
    }
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_TRUE(eq[i][i]);
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(eq[i][j], eq[j][i]);
        if (!eq[i][j]) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (eq[j][k]) EXPECT_TRUE(eq[i][k]) << d;
        }
      }
    }
    if (*r->size() > 6) continue;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!eq[i][j]) continue;
        for (const auto& z : fr) {
          EXPECT_TRUE(fraction_eq(y, fraction_add(y, fr[i], z), fraction_add(y, fr[j], z)).equal);
          EXPECT_TRUE(fraction_eq(y, fraction_mul(y, fr[i], z), fraction_mul(y, fr[j], z)).equal);
        }
      }
    }
  }
}

TEST(Localize, ClassCounts) {
  const Ring z6 = Ring::modular(6);
  const auto l2 = localize_at(z6, parse_ideal(z6, "2"));
  const auto l3 = localize_at(z6, parse_ideal(z6, "3"));
  EXPECT_EQ(*l2.ring->size(), 2);
  EXPECT_EQ(*l3.ring->size(), 3);
  for (const auto& [d, p] : std::vector<std::pair<const char*, std::int64_t>>{{"zmod:6", 2}, {"zmod:6", 3}, {"zmod:12", 2}, {"zmod:12", 3}, {"zmod:4", 2}, {"zmod:9", 3}}) {
    const Ring r = Ring::parse(d);
    const auto loc = localize_at(r, parse_ideal(r, std::to_string(p)));
    EXPECT_EQ(static_cast<std::size_t>(*loc.ring->size()), class_count(r, complement_of(r, p))) << d << " at " << p;
    EXPECT_TRUE(is_local(loc.ring));
  }
  const Ring f4 = Ring::parse("gf:2^2");
  EXPECT_EQ(*localize_at(f4, parse_ideal(f4, "0")).ring->size(), 4);
  EXPECT_THROW(parse_ideal(Ring::modular(12), "6"), Error);
}

TEST(Localize, CanonicalMap) {
  const Ring z6 = Ring::modular(6);
  const auto loc = localize_at(z6, parse_ideal(z6, "3"));
  EXPECT_EQ(loc.canonical(v(z6, 3)), loc.ring->zero());
  EXPECT_EQ(loc.canonical(v(z6, 4)), loc.canonical(v(z6, 1)));
  EXPECT_NE(loc.canonical(v(z6, 2)), loc.canonical(v(z6, 1)));
}

TEST(Localize, MaximalIdeals) {
  auto labels = [](const Ring& r) {
    std::vector<std::string> out;
    for (const auto& m : maximal_ideals(r)) out.push_back(m.label());
    return out;
  };
  EXPECT_EQ(labels(Ring::modular(12)), (std::vector<std::string>{"(2)", "(3)"}));
  EXPECT_EQ(labels(Ring::modular(6)), (std::vector<std::string>{"(2)", "(3)"}));
  EXPECT_EQ(labels(Ring::modular(9)), (std::vector<std::string>{"(3)"}));
  EXPECT_EQ(labels(Ring::modular(30)).size(), 3u);
  EXPECT_EQ(labels(Ring::parse("gf:2^2")).size(), 1u);
}

TEST(Localize, Radicals) {
  auto nonunits = [](const Ring& r) {
    std::vector<Value> out;
    for (const auto& a : r->elements()) {
      if (!r->is_unit(a)) out.push_back(a);
    }
    return out;
  };
  const Ring z4 = Ring::modular(4), z9 = Ring::modular(9), f4 = Ring::parse("gf:2^2");
  EXPECT_EQ(radical_of_local(z4), (std::vector<Value>{v(z4, 0), v(z4, 2)}));
  EXPECT_EQ(radical_of_local(z9), (std::vector<Value>{v(z9, 0), v(z9, 3), v(z9, 6)}));
  EXPECT_EQ(radical_of_local(f4), (std::vector<Value>{f4->zero()}));
  for (const auto& r : {z4, z9, f4, Ring::modular(25), Ring::modular(8)}) EXPECT_EQ(radical_of_local(r), nonunits(r));
  EXPECT_THROW(radical_of_local(Ring::modular(6)), Error);
  EXPECT_FALSE(is_local(Ring::modular(6)));
}

TEST(Localize, ResidueMaps) {
  const Ring z4 = Ring::modular(4), z9 = Ring::modular(9), f4 = Ring::parse("gf:2^2");
  const auto r4 = residue_map(z4);
  EXPECT_EQ(*r4.target()->size(), 2);
  EXPECT_EQ(r4(v(z4, 3)), r4.target()->one());
  const auto r9 = residue_map(z9);
  EXPECT_EQ(*r9.target()->size(), 3);
  EXPECT_EQ(r9(v(z9, 4)), r9.target()->one());
  EXPECT_EQ(r9(v(z9, 5)), r9.target()->from_int(2));
  const auto rf = residue_map(f4);
  for (const auto& a : f4->elements()) EXPECT_EQ(rf(a), a);
  EXPECT_THROW(residue_map(Ring::modular(6)), Error);
}

TEST(Localize, DiagonalEmbedding) {
  for (const char* d : {"zmod:4", "zmod:6", "zmod:9", "zmod:12", "gf:2^2", "zmod:30"}) {
    const Ring r = Ring::parse(d);
    const auto e = diagonal_embed(r);
    EXPECT_TRUE(e.injective) << d;
    std::set<std::int64_t> seen;
    for (const auto& a : r->elements()) seen.insert(e.map.target()->index_of(e.map(a)));
    EXPECT_EQ(static_cast<std::int64_t>(seen.size()), *r->size()) << d;
  }
  EXPECT_EQ(diagonal_embed(Ring::modular(12)).ideals.size(), 2u);
  EXPECT_EQ(diagonal_embed(Ring::parse("gf:2^2")).ideals.size(), 1u);
}

TEST(Localize, ResidueSquares) {
  for (const char* d : {"zmod:4", "zmod:6", "zmod:9", "zmod:12", "gf:2^2"}) {
    const Ring r = Ring::parse(d);
    for (const auto& m : maximal_ideals(r)) {
      const auto rep = residue_square_check(r, m);
      EXPECT_TRUE(rep.commutes) << d << " " << m.label();
      EXPECT_EQ(*rep.quotient->size(), *rep.residue_field->size());
    }
  }
}

TEST(Localize, CongruenceSubgroup) {
  const Ring z6 = Ring::modular(6);
  const Chevalley g(calibrated_table(), z6);
  const IdealHandle two(z6, {v(z6, 2)});
  EXPECT_TRUE(in_congruence_subgroup(g.x(kAlpha1, 2), two));
  EXPECT_TRUE(in_congruence_subgroup(GroupMatrix::identity(z6), two));
  EXPECT_FALSE(in_congruence_subgroup(g.x(kAlpha1, 1), two));
}

TEST(Localize, ReductionIsMultiplicative) {
  const Ring z12 = Ring::modular(12);
  const Chevalley g(calibrated_table(), z12);
  const auto lam = quotient_map(IdealHandle(z12, {v(z12, 3)}));
  std::mt19937_64 rng(0);
  for (int n = 0; n < 20; ++n) {
    const Root a = all_roots()[rng() % kRootCount], b = all_roots()[rng() % kRootCount];
    const GroupMatrix x = g.x(a, static_cast<std::int64_t>(rng() % 12)), y = g.x(b, static_cast<std::int64_t>(rng() % 12));
    EXPECT_EQ((x * y).matrix().map(lam), x.matrix().map(lam) * y.matrix().map(lam));
  }
}
