#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

namespace g2 {

enum class RootLength { Short, Long };

/// a*alpha1 + b*alpha2 in simple-root coordinates. alpha1 is short, alpha2 long.
struct Root {
  int a = 0;
  int b = 0;

  /// Throws InvalidArgument unless (a, b) is one of the 12 roots of G2.
  static Root make(int a, int b);

  RootLength length() const;
  bool is_long() const { return length() == RootLength::Long; }
  bool is_short() const { return length() == RootLength::Short; }
  bool is_positive() const { return a > 0 || (a == 0 && b > 0); }

  Root operator-() const { return {-a, -b}; }

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

inline constexpr std::size_t kRootCount = 12;

bool is_root(int a, int b);
inline bool is_root(const Root& r) { return is_root(r.a, r.b); }

/// The 6 positive roots in the order alpha1, alpha2, alpha1+alpha2,
/// 2alpha1+alpha2, 3alpha1+alpha2, 3alpha1+2alpha2, then their negatives.
const std::array<Root, kRootCount>& all_roots();

inline constexpr Root kAlpha1{1, 0};
inline constexpr Root kAlpha2{0, 1};

/// Position of r in all_roots().
std::size_t root_index(const Root& r);
/// Position of x_r in the 14-dimensional basis h1, h2, x_roots...
inline std::size_t basis_index(const Root& r) { return 2 + root_index(r); }

/// Euclidean inner product in the realization alpha1 = e1 - e2,
/// alpha2 = -2e1 + e2 + e3.
int inner_product(const Root& x, const Root& y);

/// <beta, alpha> = 2(beta, alpha)/(alpha, alpha).
int cartan_integer(const Root& beta, const Root& alpha);

/// beta - <beta, alpha> alpha.
Root reflect(const Root& beta, const Root& alpha);

struct RootString {
  int p = 0;  // largest p with beta - p*alpha a root
  int q = 0;  // largest q with beta + q*alpha a root
};

/// Throws AntipodalPair when beta = +-alpha.
RootString root_string(const Root& beta, const Root& alpha);

/// Optional root sum; false when alpha + beta is not a root.
bool sum_is_root(const Root& x, const Root& y);
inline Root operator+(const Root& x, const Root& y) { return {x.a + y.a, x.b + y.b}; }

/// "1,0" style key used in JSON maps and CLI flags.
std::string root_key(const Root& r);
Root parse_root(std::string_view text);
/// "a*a1+b*a2 (short|long)".
std::string to_string(const Root& r);

nlohmann::json to_json(const Root& r);
Root root_from_json(const nlohmann::json& j);

}  // namespace g2
