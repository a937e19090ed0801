#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "g2/error.hpp"
#include "g2/value.hpp"

namespace g2 {

enum class RingKind {
  Integers,
  Rationals,
  Modular,
  FiniteField,
  Polynomial,
  Localization,
  Product,
  Quotient,
};

/// Runtime description and arithmetic of a commutative ring with 1.
///
/// Implementations are immutable once constructed. All operations take and
/// return canonical payloads, so structural equality of Values decides ring
/// equality.
class RingImpl {
 public:
  virtual ~RingImpl() = default;
  RingImpl(const RingImpl&) = delete;
  RingImpl& operator=(const RingImpl&) = delete;

  virtual RingKind kind() const = 0;
  const std::string& descriptor() const { return descriptor_; }

  virtual Value zero() const = 0;
  virtual Value one() const = 0;
  virtual Value from_int(std::int64_t n) const = 0;
  virtual Value from_integer(const Integer& n) const = 0;

  virtual Value add(const Value& a, const Value& b) const = 0;
  virtual Value neg(const Value& a) const = 0;
  virtual Value sub(const Value& a, const Value& b) const { return add(a, neg(b)); }
  virtual Value mul(const Value& a, const Value& b) const = 0;
  virtual std::optional<Value> inverse(const Value& a) const = 0;
  virtual bool is_zero(const Value& a) const { return a == zero(); }
  bool equal(const Value& a, const Value& b) const { return a == b; }
  bool is_unit(const Value& a) const { return inverse(a).has_value(); }
  bool is_one(const Value& a) const { return a == one(); }

  /// Returns q with b*q = a. Throws NotExact when no such q exists.
  virtual Value divide_exact(const Value& a, const Value& b) const;
  virtual bool is_nilpotent(const Value& a) const;
  virtual bool has_inverse_of_3() const { return is_unit(from_int(3)); }

  Value pow(const Value& a, std::uint64_t e) const;

  /// Number of elements for finite rings.
  virtual std::optional<std::int64_t> size() const { return std::nullopt; }
  bool is_finite() const { return size().has_value(); }
  /// Enumeration of a finite ring; throws NotFinite otherwise.
  virtual Value element(std::int64_t index) const;
  virtual std::int64_t index_of(const Value& a) const;
  std::vector<Value> elements() const;

  virtual std::string format(const Value& a) const = 0;
  virtual Value parse(std::string_view text) const = 0;
  virtual nlohmann::json to_json(const Value& a) const;
  virtual Value from_json(const nlohmann::json& j) const;

  virtual Value sample(std::mt19937_64& rng) const = 0;

 protected:
  explicit RingImpl(std::string descriptor) : descriptor_(std::move(descriptor)) {}

 private:
  std::string descriptor_;
};

/// Shared handle to an immutable ring. Handles built from the same
/// descriptor string resolve to the same implementation object.
class Ring {
 public:
  Ring() = default;
  explicit Ring(std::shared_ptr<const RingImpl> impl) : impl_(std::move(impl)) {}

  /// Accepts "int", "rat", "zmod:N", "gf:P^K", "poly:BASE:x,y",
  /// "loc:BASE:g1,g2", "prod:R1,R2,..." and "quot:BASE:g1,g2".
  static Ring parse(std::string_view descriptor);

  static Ring integers();
  static Ring rationals();
  static Ring modular(std::int64_t n);
  static Ring finite_field(int p, int k);
  static Ring polynomial(const Ring& base, std::vector<std::string> variables);
  static Ring product(std::vector<Ring> factors);
  /// Localization at the prime ideal generated by `generators`.
  static Ring localization(const Ring& base, const std::vector<Value>& generators);
  /// Quotient by the ideal generated by `generators` (finite base only).
  static Ring quotient(const Ring& base, const std::vector<Value>& generators);

  explicit operator bool() const { return impl_ != nullptr; }
  const RingImpl* operator->() const { return impl_.get(); }
  const RingImpl& operator*() const { return *impl_; }
  const RingImpl* get() const { return impl_.get(); }
  const std::string& descriptor() const { return impl_->descriptor(); }

  template <class T>
  const T* as() const {
    return dynamic_cast<const T*>(impl_.get());
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.impl_ == b.impl_ || (a.impl_ && b.impl_ && a.descriptor() == b.descriptor());
  }

 private:
  std::shared_ptr<const RingImpl> impl_;
};

/// A value together with its ring; arithmetic checks that descriptors agree.
class RingElement {
 public:
  RingElement(Ring ring, Value value) : ring_(std::move(ring)), value_(std::move(value)) {}
  static RingElement parse(const Ring& ring, std::string_view text) {
    return {ring, ring->parse(text)};
  }

  const Ring& ring() const { return ring_; }
  const Value& value() const { return value_; }

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator-() const;
  /// Throws NotAUnit.
  RingElement inverse() const;
  bool is_unit() const { return ring_->is_unit(value_); }
  bool is_zero() const { return ring_->is_zero(value_); }

  std::string to_string() const { return ring_->format(value_); }

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.ring_ == b.ring_ && a.value_ == b.value_;
  }

 private:
  void check_same(const RingElement& o) const;

  Ring ring_;
  Value value_;
};

enum class ArithOp { Add, Neg, Mul, Inv };

RingElement ring_arith(ArithOp op, const RingElement& a,
                       const std::optional<RingElement>& b = std::nullopt);

// ---------------------------------------------------------------------------
// Concrete rings

class IntegerRing final : public RingImpl {
 public:
  IntegerRing() : RingImpl("int") {}
  RingKind kind() const override { return RingKind::Integers; }
  Value zero() const override { return Value(Integer(0)); }
  Value one() const override { return Value(Integer(1)); }
  Value from_int(std::int64_t n) const override { return Value(Integer(n)); }
  Value from_integer(const Integer& n) const override { return Value(n); }
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value sub(const Value& a, const Value& b) const override;
  Value mul(const Value& a, const Value& b) const override;
  std::optional<Value> inverse(const Value& a) const override;
  Value divide_exact(const Value& a, const Value& b) const override;
  bool is_nilpotent(const Value& a) const override { return is_zero(a); }
  bool has_inverse_of_3() const override { return false; }
  std::string format(const Value& a) const override;
  Value parse(std::string_view text) const override;
  Value sample(std::mt19937_64& rng) const override;
};

class RationalRing final : public RingImpl {
 public:
  RationalRing() : RingImpl("rat") {}
  RingKind kind() const override { return RingKind::Rationals; }
  Value zero() const override { return Value(Rational(0)); }
  Value one() const override { return Value(Rational(1)); }
  Value from_int(std::int64_t n) const override { return Value(Rational(n)); }
  Value from_integer(const Integer& n) const override { return Value(Rational(n)); }
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value sub(const Value& a, const Value& b) const override;
  Value mul(const Value& a, const Value& b) const override;
  std::optional<Value> inverse(const Value& a) const override;
  bool is_nilpotent(const Value& a) const override { return is_zero(a); }
  bool has_inverse_of_3() const override { return true; }
  std::string format(const Value& a) const override;
  Value parse(std::string_view text) const override;
  Value sample(std::mt19937_64& rng) const override;
};

/// Z localized at the prime ideal (p): reduced fractions with denominators
/// prime to p.
class IntegerLocalizationRing final : public RingImpl {
 public:
  explicit IntegerLocalizationRing(std::int64_t p);
  RingKind kind() const override { return RingKind::Localization; }
  std::int64_t prime() const { return p_; }
  Value zero() const override { return Value(Rational(0)); }
  Value one() const override { return Value(Rational(1)); }
  Value from_int(std::int64_t n) const override { return Value(Rational(n)); }
  Value from_integer(const Integer& n) const override { return Value(Rational(n)); }
  /// Builds a/s; throws NotAUnit when p divides s.
  Value fraction(const Integer& a, const Integer& s) const;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  std::optional<Value> inverse(const Value& a) const override;
  bool is_nilpotent(const Value& a) const override { return is_zero(a); }
  bool has_inverse_of_3() const override { return p_ != 3; }
  std::string format(const Value& a) const override;
  Value parse(std::string_view text) const override;
  nlohmann::json to_json(const Value& a) const override;
  Value from_json(const nlohmann::json& j) const override;
  Value sample(std::mt19937_64& rng) const override;

 private:
  std::int64_t p_;
};

/// Common base of rings whose payload is an index in [0, size).
class FiniteRing : public RingImpl {
 public:
  std::optional<std::int64_t> size() const override { return size_; }
  std::int64_t cardinality() const { return size_; }
  Value element(std::int64_t index) const override;
  std::int64_t index_of(const Value& a) const override { return a.index(); }
  bool is_zero(const Value& a) const override { return a.index() == zero().index(); }
  Value divide_exact(const Value& a, const Value& b) const override;
  bool is_nilpotent(const Value& a) const override;
  Value from_integer(const Integer& n) const override;
  std::string format(const Value& a) const override;
  Value parse(std::string_view text) const override;
  Value sample(std::mt19937_64& rng) const override;
  /// True iff every nonzero element is a unit.
  bool is_field() const;

 protected:
  FiniteRing(std::string descriptor, std::int64_t size) : RingImpl(std::move(descriptor)), size_(size) {}

 private:
  std::int64_t size_;
};

class ModularRing final : public FiniteRing {
 public:
  explicit ModularRing(std::int64_t n);
  RingKind kind() const override { return RingKind::Modular; }
  std::int64_t modulus() const { return n_; }
  Value zero() const override { return Value(std::int64_t{0}); }
  Value one() const override { return Value(std::int64_t{n_ == 1 ? 0 : 1}); }
  Value from_int(std::int64_t n) const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value sub(const Value& a, const Value& b) const override;
  Value mul(const Value& a, const Value& b) const override;
  std::optional<Value> inverse(const Value& a) const override;
  bool has_inverse_of_3() const override;

 private:
  std::int64_t n_;
};

/// Finite ring with precomputed addition and multiplication tables.
/// Elements carry display labels.
class TableRing : public FiniteRing {
 public:
  struct Tables {
    std::int64_t size = 0;
    std::vector<std::int32_t> add;  // size*size, row-major
    std::vector<std::int32_t> mul;
    std::int32_t zero = 0;
    std::int32_t one = 0;
    std::vector<std::string> labels;
  };

  Value zero() const override { return Value(std::int64_t{tables_.zero}); }
  Value one() const override { return Value(std::int64_t{tables_.one}); }
  Value from_int(std::int64_t n) const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  std::optional<Value> inverse(const Value& a) const override;
  std::string format(const Value& a) const override;
  Value parse(std::string_view text) const override;
  nlohmann::json to_json(const Value& a) const override;

  const std::vector<std::string>& labels() const { return tables_.labels; }

 protected:
  TableRing(std::string descriptor, Tables tables);

 private:
  Tables tables_;
  std::vector<std::int32_t> neg_;
  std::vector<std::int32_t> inv_;  // -1 for non-units
};

/// GF(p^k) for p in {2,3,5,7}, k <= 3, with a stored Conway modulus.
/// Element sum c_i x^i is encoded as the integer sum c_i p^i.
class FiniteFieldRing final : public TableRing {
 public:
  FiniteFieldRing(int p, int k);
  RingKind kind() const override { return RingKind::FiniteField; }
  int characteristic() const { return p_; }
  int degree() const { return k_; }
  /// Coefficients of the monic modulus, lowest degree first.
  const std::vector<int>& modulus() const { return modulus_; }
  /// The class of x.
  Value generator() const;
  bool has_inverse_of_3() const override { return p_ != 3; }

 private:
  int p_;
  int k_;
  std::vector<int> modulus_;
};

/// Finite commutative ring materialized from another finite ring: the
/// classes of a localization or of a quotient. `representatives` holds one
/// base element (pair for fractions) per class.
class DerivedFiniteRing final : public TableRing {
 public:
  struct Build {
    std::string descriptor;
    RingKind kind = RingKind::Quotient;
    Ring base;
    std::vector<std::int64_t> ideal_generators;  // base indices
    std::vector<bool> ideal;                     // membership by base index
    Tables tables;
    std::vector<std::pair<std::int64_t, std::int64_t>> representatives;  // (a, s)
    std::vector<std::int32_t> class_of_base;  // image of a (or a/1) per base index
    /// class of a/s, indexed a * |base| + s; empty for quotients
    std::vector<std::int32_t> class_of_fraction;
  };

  explicit DerivedFiniteRing(Build build);

  RingKind kind() const override { return kind_; }
  const Ring& base() const { return base_; }
  const std::vector<std::int64_t>& ideal_generators() const { return generators_; }
  bool in_ideal(std::int64_t base_index) const { return ideal_[static_cast<std::size_t>(base_index)]; }
  std::int64_t ideal_size() const;
  /// Canonical image of a base element (a/1 for localizations, a+I for quotients).
  Value image_of(const Value& base_value) const;
  /// a/s for localizations. Throws DomainMismatch if s lies in the ideal.
  Value fraction(const Value& a, const Value& s) const;
  std::pair<Value, Value> representative(const Value& v) const;

  Value parse(std::string_view text) const override;
  nlohmann::json to_json(const Value& a) const override;
  Value from_json(const nlohmann::json& j) const override;

 private:
  RingKind kind_;
  Ring base_;
  std::vector<std::int64_t> generators_;
  std::vector<bool> ideal_;
  std::vector<std::pair<std::int64_t, std::int64_t>> reps_;
  std::vector<std::int32_t> class_of_base_;
  std::vector<std::int32_t> class_of_fraction_;
};

/// Direct product of finite rings, encoded in mixed radix (first factor
/// least significant).
class ProductRing final : public FiniteRing {
 public:
  explicit ProductRing(std::vector<Ring> factors);
  RingKind kind() const override { return RingKind::Product; }
  const std::vector<Ring>& factors() const { return factors_; }
  std::vector<Value> components(const Value& a) const;
  Value combine(const std::vector<Value>& components) const;

  Value zero() const override { return zero_; }
  Value one() const override { return one_; }
  Value from_int(std::int64_t n) const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  std::optional<Value> inverse(const Value& a) const override;
  bool has_inverse_of_3() const override;
  std::string format(const Value& a) const override;
  Value parse(std::string_view text) const override;
  nlohmann::json to_json(const Value& a) const override;
  Value from_json(const nlohmann::json& j) const override;

 private:
  std::vector<Ring> factors_;
  std::vector<std::int64_t> radix_;
  Value zero_;
  Value one_;
};

/// Multivariate polynomials over a base ring with total-degree-then-lex
/// term order.
class PolynomialRing final : public RingImpl {
 public:
  PolynomialRing(Ring base, std::vector<std::string> variables);
  RingKind kind() const override { return RingKind::Polynomial; }
  const Ring& base() const { return base_; }
  const std::vector<std::string>& variables() const { return vars_; }

  Value zero() const override { return Value(Value::PolyPtr{}); }
  Value one() const override { return constant(base_->one()); }
  Value from_int(std::int64_t n) const override { return constant(base_->from_int(n)); }
  Value from_integer(const Integer& n) const override { return constant(base_->from_integer(n)); }
  Value constant(const Value& c) const;
  Value variable(std::size_t index) const;
  Value variable(std::string_view name) const;
  Value monomial(const Monomial& m, const Value& coeff) const;
  /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
  Value from_terms(std::vector<Term> terms) const;
  static const std::vector<Term>& terms(const Value& p);
  /// Coefficient of monomial m (zero if absent).
  Value coefficient(const Value& p, const Monomial& m) const;
  unsigned total_degree(const Value& p) const;
  bool is_zero(const Value& a) const override { return a.poly() == nullptr; }

  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  std::optional<Value> inverse(const Value& a) const override;
  Value divide_exact(const Value& a, const Value& b) const override;
  bool is_nilpotent(const Value& a) const override;
  bool has_inverse_of_3() const override { return base_->has_inverse_of_3(); }

  std::string format(const Value& a) const override;
  std::string format_monomial(const Monomial& m) const;
  Monomial parse_monomial(std::string_view text) const;
  Value parse(std::string_view text) const override;
  nlohmann::json to_json(const Value& a) const override;
  Value from_json(const nlohmann::json& j) const override;
  Value sample(std::mt19937_64& rng) const override;

 private:
  Ring base_;
  std::vector<std::string> vars_;
};

// ---------------------------------------------------------------------------
// Ring-level queries

/// Exact unit group of a finite ring. Throws NotFinite.
std::vector<Value> units_of(const Ring& r);

/// One step of a subring generation chain.
struct GenerationStep {
  enum class Kind { Zero, One, Unit, TwoTimes, Sum, Product, Negation };
  Kind kind = Kind::Zero;
  Value value;
  /// Operand step indices for Sum/Product/Negation; for TwoTimes, operand
  /// holds the ring element x with value = 2x.
  std::int64_t left = -1;
  std::int64_t right = -1;
  Value operand;
};

struct GenerationCertificate {
  bool generates = false;
  std::vector<GenerationStep> steps;
  /// Present when generates is false.
  std::optional<Value> unreachable;
};

/// Decides whether the subring generated by the units and 2R is all of r.
GenerationCertificate check_unit_2R_generation(const Ring& r);

/// Recomputes every step of a certificate; true iff all values reproduce.
bool replay_certificate(const Ring& r, const GenerationCertificate& cert);

/// True iff 3 is a unit in r.
bool has_inverse_of_3(const Ring& r);

}  // namespace g2
