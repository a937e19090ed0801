#include <gtest/gtest.h>

#include <algorithm>
#include <array>

#include <nlohmann/json.hpp>

#include "g2/error.hpp"
#include "g2/rootsys.hpp"

using namespace g2;

namespace {

// alpha1 = e1 - e2, alpha2 = -2e1 + e2 + e3.
std::array<int, 3> euclid(const Root& r) { return {r.a - 2 * r.b, -r.a + r.b, r.b}; }

int dot(const Root& x, const Root& y) {
  const auto u = euclid(x), v = euclid(y);
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

bool member(int a, int b) {
  const auto& rs = all_roots();
  return std::find(rs.begin(), rs.end(), Root{a, b}) != rs.end();
}

}  // namespace

TEST(RootSystem, Counts) {
  const auto& rs = all_roots();
  EXPECT_EQ(rs.size(), 12u);
  EXPECT_EQ(std::count_if(rs.begin(), rs.end(), [](const Root& r) { return r.is_positive(); }), 6);
  EXPECT_EQ(std::count_if(rs.begin(), rs.end(), [](const Root& r) { return r.is_long(); }), 6);
  EXPECT_TRUE(Root::make(3, 2).is_long());
  EXPECT_EQ(dot(Root{3, 2}, Root{3, 2}), 6);
  EXPECT_THROW(Root::make(2, 2), Error);
}

TEST(RootSystem, LengthsFromEuclideanNorm) {
  for (const auto& r : all_roots()) EXPECT_EQ(r.is_long(), dot(r, r) == 6) << root_key(r);
}

TEST(RootSystem, CartanIntegers) {
  EXPECT_EQ(cartan_integer(kAlpha1, kAlpha1), 2);
  EXPECT_EQ(cartan_integer(kAlpha1, kAlpha2), -1);
  EXPECT_EQ(cartan_integer(kAlpha2, kAlpha1), -3);
  for (const auto& x : all_roots()) {
    for (const auto& y : all_roots()) {
      EXPECT_EQ(inner_product(x, y), dot(x, y));
      EXPECT_EQ(cartan_integer(y, x), 2 * dot(y, x) / dot(x, x));
      if (x != y && x != -y) {
        const int prod = cartan_integer(x, y) * cartan_integer(y, x);
        EXPECT_GE(prod, 0);
        EXPECT_LE(prod, 3);
      }
    }
  }
}

TEST(RootSystem, Reflections) {
  EXPECT_EQ(reflect(kAlpha1, kAlpha1), -kAlpha1);
  EXPECT_EQ(reflect(kAlpha2, kAlpha1), (Root{3, 1}));
  const Root x{1, 1}, a{3, 2};
  const int c = 2 * dot(x, a) / dot(a, a);
  EXPECT_EQ(reflect(x, a), (Root{x.a - c * a.a, x.b - c * a.b}));
  for (const auto& b : all_roots()) {
    for (const auto& al : all_roots()) {
      const Root r = reflect(b, al);
      EXPECT_TRUE(member(r.a, r.b));
      EXPECT_EQ(reflect(r, al), b);
    }
    EXPECT_TRUE(member(-b.a, -b.b));
  }
}

TEST(RootSystem, RootStrings) {
  auto oracle = [](const Root& b, const Root& a) {
    int p = 0, q = 0;
    while (member(b.a - (p + 1) * a.a, b.b - (p + 1) * a.b)) ++p;
    while (member(b.a + (q + 1) * a.a, b.b + (q + 1) * a.b)) ++q;
    return std::pair{p, q};
  };
  const auto s1 = root_string(kAlpha2, kAlpha1);
  EXPECT_EQ(s1.p, 0);
  EXPECT_EQ(s1.q, 3);
  const auto s2 = root_string(kAlpha1, kAlpha2);
  EXPECT_EQ(s2.p, 0);
  EXPECT_EQ(s2.q, 1);
  const auto s3 = root_string(Root{1, 1}, kAlpha1);
  EXPECT_EQ(s3.p, 1);
  EXPECT_EQ(s3.q, 2);
  for (const auto& b : all_roots()) {
    for (const auto& a : all_roots()) {
      if (a == b || a == -b) {
        EXPECT_THROW(root_string(b, a), Error);
        continue;
      }
      const auto s = root_string(b, a);
      EXPECT_EQ(std::pair(s.p, s.q), oracle(b, a));
    }
  }
}

TEST(RootSystem, KeysRoundTrip) {
  for (const auto& r : all_roots()) {
    EXPECT_EQ(parse_root(root_key(r)), r);
    EXPECT_EQ(root_from_json(to_json(r)), r);
    EXPECT_EQ(basis_index(r), 2 + root_index(r));
  }
  EXPECT_THROW(parse_root("1;0"), Error);
}
