#include "g2/rootsys.hpp"

#include <nlohmann/json.hpp>

#include "g2/error.hpp"
#include "text.hpp"

namespace g2 {

namespace {

constexpr std::array<std::array<int, 3>, 2> kEuclid{{{1, -1, 0}, {-2, 1, 1}}};

std::array<int, 3> euclid(const Root& r) {
  std::array<int, 3> v{};
  for (std::size_t i = 0; i < 3; ++i) v[i] = r.a * kEuclid[0][i] + r.b * kEuclid[1][i];
  return v;
}

}  // namespace

const std::array<Root, kRootCount>& all_roots() {
  static const std::array<Root, kRootCount> roots{{{1, 0},
                                                   {0, 1},
                                                   {1, 1},
                                                   {2, 1},
                                                   {3, 1},
                                                   {3, 2},
                                                   {-1, 0},
                                                   {0, -1},
                                                   {-1, -1},
                                                   {-2, -1},
                                                   {-3, -1},
                                                   {-3, -2}}};
  return roots;
}

bool is_root(int a, int b) {
  for (const auto& r : all_roots()) {
    if (r.a == a && r.b == b) return true;
  }
  return false;
}

Root Root::make(int a, int b) {
  if (!is_root(a, b)) {
    throw Error(ErrorCode::InvalidArgument, "(" + std::to_string(a) + "," + std::to_string(b) + ") is not a root of G2");
  }
  return {a, b};
}

RootLength Root::length() const { return inner_product(*this, *this) == 6 ? RootLength::Long : RootLength::Short; }

std::size_t root_index(const Root& r) {
  const auto& roots = all_roots();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i] == r) return i;
  }
  throw Error(ErrorCode::InvalidArgument, root_key(r) + " is not a root of G2");
}

int inner_product(const Root& x, const Root& y) {
  auto u = euclid(x);
  auto v = euclid(y);
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

int cartan_integer(const Root& beta, const Root& alpha) {
  return 2 * inner_product(beta, alpha) / inner_product(alpha, alpha);
}

Root reflect(const Root& beta, const Root& alpha) {
  const int c = cartan_integer(beta, alpha);
  return {beta.a - c * alpha.a, beta.b - c * alpha.b};
}

RootString root_string(const Root& beta, const Root& alpha) {
  if (beta == alpha || beta == -alpha) {
    throw Error(ErrorCode::AntipodalPair, "root string of " + root_key(beta) + " through " + root_key(alpha));
  }
  RootString s;
  while (is_root(beta.a - (s.p + 1) * alpha.a, beta.b - (s.p + 1) * alpha.b)) ++s.p;
  while (is_root(beta.a + (s.q + 1) * alpha.a, beta.b + (s.q + 1) * alpha.b)) ++s.q;
  return s;
}

bool sum_is_root(const Root& x, const Root& y) { return is_root(x.a + y.a, x.b + y.b); }

std::string root_key(const Root& r) { return std::to_string(r.a) + "," + std::to_string(r.b); }

Root parse_root(std::string_view text) {
  auto parts = text::split(text, ',');
  if (parts.size() != 2) throw Error(ErrorCode::ParseError, "roots are written a,b; got '" + std::string(text) + "'");
  const auto a = text::parse_int64(parts[0]);
  const auto b = text::parse_int64(parts[1]);
  if (!is_root(static_cast<int>(a), static_cast<int>(b))) {
    throw Error(ErrorCode::InvalidArgument, "'" + std::string(text) + "' is not a root of G2");
  }
  return {static_cast<int>(a), static_cast<int>(b)};
}

std::string to_string(const Root& r) {
  return std::to_string(r.a) + "*a1+" + std::to_string(r.b) + "*a2 (" + (r.is_long() ? "long" : "short") + ")";
}

nlohmann::json to_json(const Root& r) { return {{"a", r.a}, {"b", r.b}}; }

Root root_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_root(j.get<std::string>());
  return Root::make(j.at("a").get<int>(), j.at("b").get<int>());
}

}  // namespace g2
