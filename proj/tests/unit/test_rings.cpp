#include <gtest/gtest.h>

#include <numeric>

#include <nlohmann/json.hpp>

#include "g2/ring_map.hpp"
#include "g2/rings.hpp"

using namespace g2;

namespace {

Value v(const Ring& r, std::int64_t n) { return r->from_int(n); }

}  // namespace

TEST(Rings, ModularArithmetic) {
  const Ring z6 = Ring::parse("zmod:6");
  EXPECT_EQ(z6->mul(v(z6, 2), v(z6, 3)), z6->zero());
  const Ring z7 = Ring::parse("zmod:7");
  std::int64_t brute = -1;
  for (std::int64_t x = 0; x < 7; ++x) {
    if (3 * x % 7 == 1) brute = x;
  }
  EXPECT_EQ(z7->inverse(v(z7, 3)), v(z7, brute));
  EXPECT_FALSE(z6->inverse(v(z6, 3)).has_value());
}

TEST(Rings, ModularMatchesIntegerRemainder) {
  for (std::int64_t n : {4, 6, 9, 12, 25}) {
    const Ring r = Ring::modular(n);
    for (std::int64_t a = -n; a < 2 * n; ++a) {
      for (std::int64_t b = 0; b < n; ++b) {
        const auto m = [n](std::int64_t x) { return ((x % n) + n) % n; };
        EXPECT_EQ(r->add(v(r, a), v(r, b)), v(r, m(a + b)));
        EXPECT_EQ(r->mul(v(r, a), v(r, b)), v(r, m(a * b)));
      }
    }
  }
}

TEST(Rings, PolynomialAddAndMultiply) {
  const Ring p = Ring::parse("poly:int:t,u");
  const auto* poly = p.as<PolynomialRing>();
  const Value t = poly->variable("t"), u = poly->variable("u");
  EXPECT_EQ(p->format(p->add(t, u)), p->format(p->parse("t+u")));
  const Value sq = p->mul(p->add(t, u), p->add(t, u));
  EXPECT_EQ(sq, p->parse("t^2+2*t*u+u^2"));
  EXPECT_EQ(p->sub(sq, sq), p->zero());
  EXPECT_EQ(poly->total_degree(sq), 2u);
}

TEST(Rings, UnitsOf) {
  auto scan = [](std::int64_t n) {
    std::vector<Value> out;
    for (std::int64_t a = 0; a < n; ++a) {
      if (std::gcd(a, n) == 1) out.push_back(Value(a));
    }
    return out;
  };
  EXPECT_EQ(units_of(Ring::modular(6)), scan(6));
  EXPECT_EQ(units_of(Ring::modular(2)), scan(2));
  EXPECT_EQ(units_of(Ring::parse("gf:2^2")).size(), 3u);
  EXPECT_THROW(units_of(Ring::integers()), Error);
}

TEST(Rings, UnitsClosedUnderProductAndInverse) {
  for (const char* d : {"zmod:8", "zmod:25", "gf:3^2", "zmod:12"}) {
    const Ring r = Ring::parse(d);
    const auto us = units_of(r);
    for (const auto& a : us) {
      EXPECT_NE(std::find(us.begin(), us.end(), *r->inverse(a)), us.end());
      for (const auto& b : us) EXPECT_NE(std::find(us.begin(), us.end(), r->mul(a, b)), us.end());
    }
  }
}

TEST(Rings, UnitAnd2RGeneration) {
  for (const char* d : {"zmod:6", "gf:3^1", "gf:2^2", "zmod:8"}) {
    const Ring r = Ring::parse(d);
    const auto cert = check_unit_2R_generation(r);
    EXPECT_TRUE(cert.generates) << d;
    EXPECT_TRUE(replay_certificate(r, cert)) << d;
  }
}

TEST(Rings, HasInverseOf3) {
  EXPECT_FALSE(has_inverse_of_3(Ring::parse("zmod:6")));
  EXPECT_TRUE(has_inverse_of_3(Ring::parse("zmod:4")));
  EXPECT_TRUE(has_inverse_of_3(Ring::parse("gf:2^2")));
  EXPECT_FALSE(has_inverse_of_3(Ring::parse("gf:3^2")));
  EXPECT_FALSE(has_inverse_of_3(Ring::integers()));
  EXPECT_TRUE(has_inverse_of_3(Ring::rationals()));
}

TEST(Rings, FiniteTablesAreCommutativeRings) {
  for (const char* d : {"zmod:4", "zmod:6", "gf:2^2", "gf:2^3", "zmod:9", "prod:zmod:2,zmod:3"}) {
    const Ring r = Ring::parse(d);
    const auto es = r->elements();
    for (const auto& a : es) {
      EXPECT_EQ(r->add(a, r->neg(a)), r->zero());
      EXPECT_EQ(r->mul(a, r->one()), a);
      for (const auto& b : es) {
        EXPECT_EQ(r->add(a, b), r->add(b, a));
        EXPECT_EQ(r->mul(a, b), r->mul(b, a));
        for (const auto& c : es) {
          EXPECT_EQ(r->mul(a, r->mul(b, c)), r->mul(r->mul(a, b), c));
          EXPECT_EQ(r->add(a, r->add(b, c)), r->add(r->add(a, b), c));
          EXPECT_EQ(r->mul(a, r->add(b, c)), r->add(r->mul(a, b), r->mul(a, c)));
        }
      }
    }
  }
}

TEST(Rings, FieldsHaveAllNonzeroUnits) {
  for (const char* d : {"gf:2^2", "gf:2^3", "gf:3^2", "gf:5^2", "gf:7^1"}) {
    const Ring r = Ring::parse(d);
    EXPECT_TRUE(r.as<FiniteRing>()->is_field()) << d;
    const std::int64_t q = *r->size();
    for (const auto& a : r->elements()) EXPECT_EQ(r->pow(a, static_cast<std::uint64_t>(q)), a) << d;
  }
}

TEST(Rings, ParseFormatRoundTrip) {
  for (const char* d : {"zmod:12", "gf:2^2", "gf:5^2", "prod:zmod:2,zmod:3", "loc:zmod:6:2", "quot:zmod:9:3"}) {
    const Ring r = Ring::parse(d);
    EXPECT_EQ(Ring::parse(r.descriptor()).descriptor(), r.descriptor());
    for (const auto& a : r->elements()) {
      EXPECT_EQ(r->parse(r->format(a)), a);
      EXPECT_EQ(r->from_json(r->to_json(a)), a);
    }
  }
  const Ring q = Ring::rationals();
  EXPECT_EQ(q->format(q->parse("2/3")), "2/3");
  EXPECT_THROW(Ring::parse("zmod:"), Error);
  EXPECT_THROW(Ring::parse("banana"), Error);
}

TEST(Rings, RingElementChecksDescriptors) {
  const RingElement a(Ring::modular(5), Value(std::int64_t{2}));
  const RingElement b(Ring::modular(7), Value(std::int64_t{2}));
  EXPECT_THROW(a + b, Error);
  EXPECT_EQ((a * a).to_string(), "4");
  EXPECT_EQ(a.inverse().to_string(), "3");
}

TEST(RingMaps, Examples) {
  const Ring z = Ring::integers(), z5 = Ring::modular(5);
  const auto red = RingMap::reduction(z, z5);
  EXPECT_EQ(red(z->from_int(7)), z5->from_int(2));

  const Ring f4 = Ring::parse("gf:2^2");
  const Value w = f4.as<FiniteFieldRing>()->generator();
  EXPECT_EQ(RingMap::frobenius(f4)(w), f4->mul(w, w));

  const Ring q = Ring::rationals();
  EXPECT_EQ(RingMap::identity(q)(q->parse("2/3")), q->parse("2/3"));

  EXPECT_THROW(red.apply(RingElement(z5, z5->one())), Error);
}

TEST(RingMaps, JsonRoundTrip) {
  const Ring f4 = Ring::parse("gf:2^2");
  const auto frob = RingMap::frobenius(f4);
  const auto back = RingMap::from_json(frob.to_json());
  EXPECT_EQ(back.table(), frob.table());
  EXPECT_TRUE(frob.is_bijective());
}
