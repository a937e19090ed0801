#include <gtest/gtest.h>

#include "g2/liealg.hpp"
#include "g2/relations.hpp"

using namespace g2;

namespace {

IntMatrix power(const IntMatrix& m, int k) {
  IntMatrix out = identity_int();
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

}  // namespace

TEST(StructureConstants, Magnitudes) {
  const auto t = build_structure_table();
  EXPECT_EQ(std::abs(t.nconst(kAlpha1, kAlpha2)), 1);
  EXPECT_EQ(std::abs(t.nconst(kAlpha1, Root{1, 1})), 2);
  const auto mag = check_magnitudes(t);
  EXPECT_TRUE(mag.pass);
  for (const auto& x : all_roots()) {
    for (const auto& y : all_roots()) {
      if (!sum_is_root(x, y)) {
        EXPECT_EQ(t.nconst(x, y), 0);
        continue;
      }
      int p = 0;
      while (is_root(y.a - (p + 1) * x.a, y.b - (p + 1) * x.b)) ++p;
      EXPECT_EQ(std::abs(t.nconst(x, y)), p + 1);
    }
  }
}

TEST(StructureConstants, JacobiAndHomomorphism) {
  for (const auto& flips : {kNoFlips, SignFlips{1, -1, 1, -1, 1, -1}, calibrated_table().flips}) {
    const auto t = build_structure_table(flips);
    const auto j = check_jacobi(t);
    EXPECT_TRUE(j.pass);
    EXPECT_EQ(j.triples_checked, 14u * 14u * 14u);
    EXPECT_FALSE(check_ad_homomorphism(t).has_value());
  }
}

TEST(StructureConstants, SingleSignMutationBreaksJacobi) {
  const auto t = build_structure_table();
  for (const auto& [x, y] : special_pairs()) {
    EXPECT_FALSE(check_jacobi(with_sign_flipped(t, x, y)).pass) << root_key(x) << " " << root_key(y);
  }
}

TEST(StructureConstants, Antisymmetry) {
  const auto t = build_structure_table();
  for (const auto& x : all_roots()) {
    for (const auto& y : all_roots()) EXPECT_EQ(t.nconst(x, y), -t.nconst(y, x));
  }
}

TEST(AdMatrix, NilpotencyOrders) {
  const auto t = build_structure_table();
  for (const auto& r : all_roots()) {
    const IntMatrix x = ad_matrix(t, r);
    EXPECT_FALSE(is_zero(power(x, 2)));
    if (r.is_long()) {
      EXPECT_TRUE(is_zero(power(x, 3))) << root_key(r);
    } else {
      EXPECT_FALSE(is_zero(power(x, 3))) << root_key(r);
      EXPECT_TRUE(is_zero(power(x, 4))) << root_key(r);
    }
    for (std::size_t i = 0; i < kDim; ++i) EXPECT_EQ(x[i][basis_index(r)], 0);
  }
}

TEST(AdMatrix, LongSquareIsSingleMatrixUnit) {
  const auto t = build_structure_table();
  for (const auto& r : all_roots()) {
    if (!r.is_long()) continue;
    const IntMatrix half = divide_exact(power(ad_matrix(t, r), 2), 2);
    int nonzero = 0;
    for (std::size_t i = 0; i < kDim; ++i) {
      for (std::size_t j = 0; j < kDim; ++j) {
        if (half[i][j] == 0) continue;
        ++nonzero;
        EXPECT_EQ(i, basis_index(r));
        EXPECT_EQ(j, basis_index(-r));
        EXPECT_EQ(std::abs(half[i][j]), 1);
      }
    }
    EXPECT_EQ(nonzero, 1);
  }
}

TEST(AdMatrix, HBracketIsCoroot) {
  const auto t = build_structure_table();
  for (const auto& r : all_roots()) {
    const auto v = t.bracket(basis_index(r), basis_index(-r));
    const auto& h = t.hbracket[root_index(r)];
    EXPECT_EQ(v[0], h[0]);
    EXPECT_EQ(v[1], h[1]);
    for (std::size_t k = 2; k < kDim; ++k) EXPECT_EQ(v[k], 0);
    IntVector hv{};
    hv[0] = h[0];
    hv[1] = h[1];
    IntVector xr{};
    xr[basis_index(r)] = 1;
    EXPECT_EQ(t.bracket(hv, xr)[basis_index(r)], 2);
  }
}

TEST(AdMatrix, DividedPowersAreIntegral) {
  const auto t = build_structure_table();
  for (const auto& r : all_roots()) {
    const auto d = divided_powers(t, r);
    EXPECT_EQ(scaled(d.x2, 2), d.x * d.x);
    EXPECT_EQ(scaled(d.x3, 6), d.x * d.x * d.x);
  }
}

TEST(Calibration, SearchFindsBestRescaling) {
  const auto& cal = default_calibration();
  EXPECT_EQ(cal.total, 10);
  EXPECT_EQ(cal.matched, 9);
  EXPECT_FALSE(cal.found);
  EXPECT_THROW(calibrate_signs(build_structure_table()), CalibrationError);
  try {
    calibrate_signs(build_structure_table());
  } catch (const CalibrationError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoCalibrationFound);
    EXPECT_EQ(e.result().matched, 9);
  }
}

TEST(Calibration, StatedMagnitudes) {
  const auto& fs = r2_formulas();
  ASSERT_EQ(fs.size(), 5u);
  std::vector<int> second, third;
  for (const auto& term : fs[1].terms) second.push_back(std::abs(term.coeff));
  for (const auto& term : fs[2].terms) third.push_back(std::abs(term.coeff));
  EXPECT_EQ(second, (std::vector<int>{2, 3, 3}));
  EXPECT_EQ(third, (std::vector<int>{1}));
}
