#include "g2/liealg.hpp"

#include <algorithm>
#include <cstdlib>

namespace g2 {

namespace {

int sign_of(const SignFlips& flips, const Root& r) {
  return flips[root_index(r.is_positive() ? r : -r)];
}

StructureTable from_special_signs(const std::vector<int>& signs) {
  const auto& special = special_pairs();
  auto positive_n = [&](const Root& x, const Root& y) -> int {
    for (std::size_t k = 0; k < special.size(); ++k) {
      const auto& [px, py] = special[k];
      const int mag = root_string(py, px).p + 1;
      if (px == x && py == y) return signs[k] * mag;
      if (px == y && py == x) return -signs[k] * mag;
    }
    throw Error(ErrorCode::InconsistentSigns, "no special pair for " + root_key(x) + " + " + root_key(y));
  };
  // Same-sign pairs come from the special pairs; a mixed pair sits in a
  // zero-sum triple (x, y, z) with a same-sign pair, and
  // N_{x,y}/(z,z) = N_{y,z}/(x,x) = N_{z,x}/(y,y).
  auto same_sign = [&](const Root& x, const Root& y) -> int {
    return x.is_positive() ? positive_n(x, y) : -positive_n(-x, -y);
  };
  auto rescale = [](int n, int num, int den) {
    if ((n * num) % den != 0) throw Error(ErrorCode::InconsistentSigns, "non-integral structure constant");
    return n * num / den;
  };
  StructureTable t;
  const auto& roots = all_roots();
  for (std::size_t i = 0; i < kRootCount; ++i) {
    for (std::size_t j = 0; j < kRootCount; ++j) {
      const Root x = roots[i], y = roots[j];
      if (!sum_is_root(x, y)) continue;
      if (x.is_positive() == y.is_positive()) {
        t.n[i][j] = same_sign(x, y);
        continue;
      }
      const Root z = -(x + y);
      const int zz = inner_product(z, z);
      if (z.is_positive() == y.is_positive()) {
        t.n[i][j] = rescale(same_sign(y, z), zz, inner_product(x, x));
      } else {
        t.n[i][j] = rescale(same_sign(z, x), zz, inner_product(y, y));
      }
    }
  }
  for (std::size_t i = 0; i < kRootCount; ++i) {
    const Root r = roots[i];
    const int rr = inner_product(r, r);
    t.hbracket[i] = {2 * r.a / rr, 6 * r.b / rr};
  }
  return t;
}

const StructureTable& default_table() {
  static const StructureTable table = [] {
    const auto& special = special_pairs();
    const auto& extra = extraspecial_pairs();
    std::vector<int> signs(special.size(), 1);
    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < special.size(); ++k) {
      if (std::find(extra.begin(), extra.end(), special[k]) == extra.end()) free.push_back(k);
    }
    // Extraspecial signs are +1; the others are whatever Jacobi forces.
    for (std::uint32_t mask = 0; mask < (1U << free.size()); ++mask) {
      for (std::size_t f = 0; f < free.size(); ++f) signs[free[f]] = (mask >> f) & 1U ? -1 : 1;
      StructureTable t = from_special_signs(signs);
      if (check_jacobi(t).pass) return t;
    }
    throw Error(ErrorCode::InconsistentSigns, "no sign choice satisfies the Jacobi identity");
  }();
  return table;
}

}  // namespace

const std::vector<std::pair<Root, Root>>& special_pairs() {
  static const std::vector<std::pair<Root, Root>> pairs = [] {
    std::vector<std::pair<Root, Root>> out;
    const auto& roots = all_roots();
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = i + 1; j < 6; ++j) {
        if (sum_is_root(roots[i], roots[j])) out.emplace_back(roots[i], roots[j]);
      }
    }
    return out;
  }();
  return pairs;
}

const std::vector<std::pair<Root, Root>>& extraspecial_pairs() {
  static const std::vector<std::pair<Root, Root>> pairs = [] {
    std::vector<std::pair<Root, Root>> out;
    std::vector<Root> covered;
    for (const auto& p : special_pairs()) {
      const Root s = p.first + p.second;
      if (std::find(covered.begin(), covered.end(), s) != covered.end()) continue;
      covered.push_back(s);
      out.push_back(p);
    }
    return out;
  }();
  return pairs;
}

int StructureTable::coroot_pairing(const Root& r, int i) const { return cartan_integer(r, i == 0 ? kAlpha1 : kAlpha2); }

IntVector StructureTable::bracket(std::size_t i, std::size_t j) const {
  IntVector v{};
  if (i < 2 && j < 2) return v;
  const auto& roots = all_roots();
  if (i < 2) {
    v[j] = coroot_pairing(roots[j - 2], static_cast<int>(i));
    return v;
  }
  if (j < 2) {
    v[i] = -coroot_pairing(roots[i - 2], static_cast<int>(j));
    return v;
  }
  const Root x = roots[i - 2], y = roots[j - 2];
  if (x == -y) {
    v[0] = hbracket[i - 2][0];
    v[1] = hbracket[i - 2][1];
  } else if (sum_is_root(x, y)) {
    v[basis_index(x + y)] = n[i - 2][j - 2];
  }
  return v;
}

IntVector StructureTable::bracket(const IntVector& x, const IntVector& y) const {
  IntVector out{};
  for (std::size_t i = 0; i < kDim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < kDim; ++j) {
      if (y[j] == 0) continue;
      auto b = bracket(i, j);
      for (std::size_t k = 0; k < kDim; ++k) out[k] += x[i] * y[j] * b[k];
    }
  }
  return out;
}

StructureTable apply_flips(const StructureTable& table, const SignFlips& flips) {
  for (int s : flips) {
    if (s != 1 && s != -1) throw Error(ErrorCode::InconsistentSigns, "sign flips must be +1 or -1");
  }
  StructureTable t = table;
  const auto& roots = all_roots();
  for (std::size_t i = 0; i < kRootCount; ++i) {
    for (std::size_t j = 0; j < kRootCount; ++j) {
      if (!sum_is_root(roots[i], roots[j])) continue;
      t.n[i][j] *= sign_of(flips, roots[i]) * sign_of(flips, roots[j]) * sign_of(flips, roots[i] + roots[j]);
    }
  }
  for (std::size_t k = 0; k < 6; ++k) t.flips[k] = table.flips[k] * flips[k];
  return t;
}

StructureTable build_structure_table(std::optional<SignFlips> flips) {
  StructureTable t = flips ? apply_flips(default_table(), *flips) : default_table();
  if (!check_magnitudes(t).pass) throw Error(ErrorCode::InconsistentSigns, "rescaled table violates |N| = p+1");
  return t;
}

StructureTable with_sign_flipped(const StructureTable& table, const Root& x, const Root& y) {
  if (!sum_is_root(x, y)) {
    throw Error(ErrorCode::InvalidArgument, root_key(x) + " + " + root_key(y) + " is not a root");
  }
  StructureTable t = table;
  t.n[root_index(x)][root_index(y)] *= -1;
  t.n[root_index(y)][root_index(x)] *= -1;
  return t;
}

IntMatrix ad_basis(const StructureTable& table, std::size_t basis) {
  IntMatrix m{};
  for (std::size_t j = 0; j < kDim; ++j) {
    auto col = table.bracket(basis, j);
    for (std::size_t k = 0; k < kDim; ++k) m[k][j] = col[k];
  }
  return m;
}

IntMatrix ad_matrix(const StructureTable& table, const Root& r) { return ad_basis(table, basis_index(r)); }

IntMatrix identity_int() {
  IntMatrix m{};
  for (std::size_t i = 0; i < kDim; ++i) m[i][i] = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c{};
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t k = 0; k < kDim; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < kDim; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c{};
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) c[i][j] = a[i][j] + b[i][j];
  }
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + scaled(b, -1); }

IntMatrix scaled(const IntMatrix& a, std::int64_t k) {
  IntMatrix c{};
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) c[i][j] = a[i][j] * k;
  }
  return c;
}

bool is_zero(const IntMatrix& a) {
  for (const auto& row : a) {
    for (auto v : row) {
      if (v != 0) return false;
    }
  }
  return true;
}

IntMatrix divide_exact(const IntMatrix& a, std::int64_t d) {
  IntMatrix c{};
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      if (a[i][j] % d != 0) {
        throw Error(ErrorCode::NotExact, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                             std::to_string(a[i][j]) + " is not divisible by " + std::to_string(d));
      }
      c[i][j] = a[i][j] / d;
    }
  }
  return c;
}

DividedPowers divided_powers(const StructureTable& table, const Root& r) {
  DividedPowers d;
  d.x = ad_matrix(table, r);
  const IntMatrix sq = d.x * d.x;
  d.x2 = divide_exact(sq, 2);
  d.x3 = divide_exact(sq * d.x, 6);
  return d;
}

JacobiReport check_jacobi(const StructureTable& table) {
  std::array<std::array<IntVector, kDim>, kDim> b{};
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) b[i][j] = table.bracket(i, j);
  }
  auto ad_on = [&](std::size_t i, const IntVector& v) {
    IntVector out{};
    for (std::size_t m = 0; m < kDim; ++m) {
      if (v[m] == 0) continue;
      for (std::size_t k = 0; k < kDim; ++k) out[k] += v[m] * b[i][m][k];
    }
    return out;
  };
  JacobiReport rep;
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      for (std::size_t k = 0; k < kDim; ++k) {
        ++rep.triples_checked;
        auto x = ad_on(i, b[j][k]);
        auto y = ad_on(j, b[k][i]);
        auto z = ad_on(k, b[i][j]);
        for (std::size_t m = 0; m < kDim; ++m) {
          if (x[m] + y[m] + z[m] != 0) {
            rep.pass = false;
            if (!rep.first_failure) rep.first_failure = std::array<std::size_t, 3>{i, j, k};
            break;
          }
        }
      }
    }
  }
  return rep;
}

MagnitudeReport check_magnitudes(const StructureTable& table) {
  MagnitudeReport rep;
  for (const auto& x : all_roots()) {
    for (const auto& y : all_roots()) {
      if (!sum_is_root(x, y)) continue;
      ++rep.pairs_checked;
      const int n = table.nconst(x, y);
      const int expected = root_string(y, x).p + 1;
      if (std::abs(n) != expected) {
        rep.pass = false;
        rep.failures.push_back({x, y, n, expected});
      }
    }
  }
  return rep;
}

std::optional<std::pair<std::size_t, std::size_t>> check_ad_homomorphism(const StructureTable& table) {
  std::array<IntMatrix, kDim> ad{};
  for (std::size_t i = 0; i < kDim; ++i) ad[i] = ad_basis(table, i);
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      IntMatrix lhs{};
      auto v = table.bracket(i, j);
      for (std::size_t k = 0; k < kDim; ++k) {
        if (v[k] != 0) lhs = lhs + scaled(ad[k], v[k]);
      }
      if (lhs != ad[i] * ad[j] - ad[j] * ad[i]) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

CalibrationError::CalibrationError(CalibrationResult result)
    : Error(ErrorCode::NoCalibrationFound, "best rescaling matches " + std::to_string(result.matched) + " of " +
                                               std::to_string(result.total) + " stated signs"),
      result_(std::move(result)) {}

}  // namespace g2
