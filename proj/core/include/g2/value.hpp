#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace g2 {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::size_t kMaxVariables = 8;

/// Exponent vector of a monomial in at most kMaxVariables variables.
/// Ordered by total degree first, then lexicographically on exponents.
struct Monomial {
  std::array<std::uint8_t, kMaxVariables> exps{};

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned degree() const;
  bool is_constant() const { return degree() == 0; }
  bool divides(const Monomial& other) const;

  /// Throws InvalidArgument when an exponent would exceed 255.
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) on the divisor side.
  Monomial operator/(const Monomial& divisor) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
};

struct PolyData;

/// Canonical payload of a ring element. The payload alone does not know its
/// ring; pair it with a Ring (see RingElement) for checked arithmetic.
///
///  - finite rings store an index in [0, |R|)
///  - integers store Integer, rationals and Z_(p) store reduced Rational
///  - polynomial rings store a shared, immutable sorted term list
///    (a null pointer is the zero polynomial)
class Value {
 public:
  using PolyPtr = std::shared_ptr<const PolyData>;

  Value() : data_(std::int64_t{0}) {}
  explicit Value(std::int64_t v) : data_(v) {}
  explicit Value(Integer v) : data_(std::move(v)) {}
  explicit Value(Rational v) : data_(std::move(v)) {}
  explicit Value(PolyPtr p) : data_(std::move(p)) {}

  bool holds_index() const { return std::holds_alternative<std::int64_t>(data_); }
  bool holds_integer() const { return std::holds_alternative<Integer>(data_); }
  bool holds_rational() const { return std::holds_alternative<Rational>(data_); }
  bool holds_poly() const { return std::holds_alternative<PolyPtr>(data_); }

  std::int64_t index() const { return std::get<std::int64_t>(data_); }
  const Integer& integer() const { return std::get<Integer>(data_); }
  const Rational& rational() const { return std::get<Rational>(data_); }
  const PolyPtr& poly() const { return std::get<PolyPtr>(data_); }

  friend bool operator==(const Value& a, const Value& b);

 private:
  std::variant<std::int64_t, Integer, Rational, PolyPtr> data_;
};

using Term = std::pair<Monomial, Value>;

/// Terms sorted ascending by monomial order; coefficients are nonzero.
struct PolyData {
  std::vector<Term> terms;
};

}  // namespace g2
