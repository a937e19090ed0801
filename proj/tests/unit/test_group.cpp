#include <gtest/gtest.h>

#include <random>

#include "g2/group.hpp"
#include "g2/relations.hpp"

using namespace g2;

namespace {

const StructureTable& table() { return calibrated_table(); }

Value pw(const Ring& r, const Value& t, int e) {
  if (e >= 0) return r->pow(t, static_cast<std::uint64_t>(e));
  return r->pow(*r->inverse(t), static_cast<std::uint64_t>(-e));
}

// sum_k t^k X^k / k! from integer powers of ad x_r.
Matrix exp_oracle(const Ring& r, const Root& root, std::int64_t t) {
  const IntMatrix x = ad_matrix(table(), root);
  IntMatrix term = identity_int(), sum = identity_int();
  for (int k = 1; k <= 4; ++k) {
    term = divide_exact(scaled(term * x, t), k);
    sum = sum + term;
  }
  return Matrix::from_int(r, sum);
}

}  // namespace

TEST(Group, UnipotentMatchesExponentialSeries) {
  const Ring z = Ring::integers();
  const Chevalley g(table(), z);
  for (const auto& r : all_roots()) {
    for (std::int64_t t : {-3, -1, 0, 1, 2, 5}) EXPECT_EQ(g.x(r, t).matrix(), exp_oracle(z, r, t)) << root_key(r);
  }
  EXPECT_TRUE(g.x(kAlpha1, 0).matrix().is_identity());
}

TEST(Group, LongRootSquareTerm) {
  const Ring z = Ring::integers();
  const Chevalley g(table(), z);
  for (const auto& r : all_roots()) {
    if (!r.is_long()) continue;
    const Matrix d = g.x(r, 1).matrix() - Matrix::identity(z) - g.X(r);
    for (std::size_t i = 0; i < kDim; ++i) {
      for (std::size_t j = 0; j < kDim; ++j) {
        const bool spot = i == basis_index(r) && j == basis_index(-r);
        if (spot) {
          EXPECT_TRUE(d(i, j) == z->one() || d(i, j) == z->from_int(-1));
        } else {
          EXPECT_EQ(d(i, j), z->zero());
        }
      }
    }
  }
}

TEST(Group, ShortEntriesHaveDegreeAtMostThree) {
  const Ring p = Ring::parse("poly:int:t");
  const auto* poly = p.as<PolynomialRing>();
  const Chevalley g(table(), p);
  for (const auto& r : all_roots()) {
    const Matrix m = g.x(r, poly->variable("t")).matrix();
    unsigned top = 0;
    for (std::size_t i = 0; i < kDim; ++i) {
      for (std::size_t j = 0; j < kDim; ++j) top = std::max(top, poly->total_degree(m(i, j)));
    }
    EXPECT_EQ(top, r.is_long() ? 2u : 3u) << root_key(r);
  }
}

TEST(Group, AdditivityOverPolynomials) {
  const Ring p = Ring::parse("poly:int:t,u");
  const auto* poly = p.as<PolynomialRing>();
  const Chevalley g(table(), p);
  const Value t = poly->variable("t"), u = poly->variable("u");
  for (const auto& r : all_roots()) {
    const GroupMatrix a = g.x(r, t), b = g.x(r, u);
    EXPECT_EQ((a * b).matrix(), g.x(r, p->add(t, u)).matrix()) << root_key(r);
    EXPECT_TRUE(a.checked());
    const GroupWord w{{{Letter::Kind::X, r, t}, {Letter::Kind::X, r, u}}};
    EXPECT_EQ(g.eval(w).matrix(), g.x(r, p->add(t, u)).matrix());
  }
}

TEST(Group, WeylElements) {
  const Ring q = Ring::rationals();
  const Chevalley g(table(), q);
  for (const auto& r : all_roots()) {
    const GroupMatrix w1 = g.w(r, q->one());
    EXPECT_TRUE(w1.checked());
    Matrix p = Matrix::identity(q);
    int order = 0;
    for (int k = 1; k <= 8; ++k) {
      p = p * w1.matrix();
      if (p.is_identity()) {
        order = k;
        break;
      }
    }
    EXPECT_TRUE(order > 0 && 8 % order == 0) << root_key(r);
    for (std::int64_t t : {2, 3, 5}) {
      const Value tv = q->from_int(t);
      EXPECT_TRUE((g.w(r, tv).matrix() * g.w(r, q->neg(tv)).matrix()).is_identity());
    }
  }
  const Ring z5 = Ring::modular(5);
  EXPECT_NO_THROW(Chevalley(table(), z5).w(kAlpha2, z5->from_int(2)));
  EXPECT_THROW(Chevalley(table(), Ring::modular(6)).w(kAlpha2, Ring::modular(6)->from_int(2)), Error);
}

TEST(Group, TorusIsDiagonalWithCartanExponents) {
  for (const char* d : {"rat", "zmod:7", "gf:2^2"}) {
    const Ring r = Ring::parse(d);
    const Chevalley g(table(), r);
    std::vector<Value> ts;
    if (r->is_finite()) {
      ts = units_of(r);
    } else {
      ts = {r->from_int(2), r->from_int(3)};
    }
    for (const auto& a : all_roots()) {
      EXPECT_TRUE(g.h(a, r->one()).matrix().is_identity());
      for (const auto& t : ts) {
        const Matrix h = g.h(a, t).matrix();
        for (std::size_t i = 0; i < kDim; ++i) {
          for (std::size_t j = 0; j < kDim; ++j) {
            if (i != j) {
              EXPECT_EQ(h(i, j), r->zero());
            } else if (i < 2) {
              EXPECT_EQ(h(i, j), r->one());
            } else {
              const Root b = all_roots()[i - 2];
              EXPECT_EQ(h(i, j), pw(r, t, 2 * inner_product(b, a) / inner_product(a, a))) << d;
            }
          }
        }
        EXPECT_TRUE((h * g.h(a, *r->inverse(t)).matrix()).is_identity());
      }
    }
  }
}

TEST(Group, WordsAndInverses) {
  const Ring z7 = Ring::modular(7);
  const Chevalley g(table(), z7);
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<std::size_t> root(0, kRootCount - 1), len(0, 6), kind(0, 2), unit(1, 6);
  EXPECT_TRUE(g.eval(GroupWord{}).matrix().is_identity());
  for (int n = 0; n < 100; ++n) {
    GroupWord w;
    for (std::size_t k = len(rng); k > 0; --k) {
      const auto kd = static_cast<Letter::Kind>(kind(rng));
      w.letters.push_back({kd, all_roots()[root(rng)], z7->from_int(static_cast<std::int64_t>(unit(rng)))});
    }
    const GroupMatrix a = g.eval(w);
    EXPECT_TRUE(a.checked());
    EXPECT_TRUE((a.matrix() * g.eval(w.inverse(z7)).matrix()).is_identity());
  }
}

TEST(Group, Commutators) {
  const Ring p = Ring::parse("poly:int:t,u");
  const auto* poly = p.as<PolynomialRing>();
  const Chevalley g(table(), p);
  const Value t = poly->variable("t"), u = poly->variable("u");
  const GroupMatrix a = g.x(Root{0, 1}, t), b = g.x(Root{3, 1}, u);
  EXPECT_TRUE(commutator(GroupMatrix::identity(p), b).matrix().is_identity());
  EXPECT_TRUE(commutator(a, a).matrix().is_identity());
  const Matrix c = commutator(a, b).matrix();
  const Value tu = p->mul(t, u);
  EXPECT_TRUE(c == g.x(Root{3, 2}, tu).matrix() || c == g.x(Root{3, 2}, p->neg(tu)).matrix());
  EXPECT_THROW(commutator(a, Chevalley(table(), Ring::modular(5)).x(kAlpha1, 1)), Error);
}
