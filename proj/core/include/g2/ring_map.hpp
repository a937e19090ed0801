#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "g2/rings.hpp"

namespace g2 {

/// A ring homomorphism between two descriptors. Construction validates that
/// 0, 1, + and * are preserved: exhaustively when the source is finite, on a
/// fixed 64-point sample otherwise.
class RingMap {
 public:
  enum class Kind { Identity, Reduction, Frobenius, FractionEmbedding, Projection, Substitution, Table, Composite };

  static RingMap identity(const Ring& r);
  /// Canonical map source -> target: int -> anything, zmod:n -> zmod:m with
  /// m | n (or any ring whose characteristic divides n), base -> quotient or
  /// localization of it (a -> a/1), coefficients into a polynomial ring.
  static RingMap reduction(const Ring& source, const Ring& target);
  /// a -> a^(p^power) on gf:p^k.
  static RingMap frobenius(const Ring& field, int power = 1);
  /// a -> a/1 from the base of a localization.
  static RingMap fraction_embedding(const Ring& localization);
  /// Coordinate projection of a product ring.
  static RingMap projection(const Ring& product, std::size_t factor);
  /// Evaluates polynomials over B at the given images in target; the
  /// coefficients travel along reduction(B, target).
  static RingMap substitution(const Ring& source, const Ring& target, std::vector<Value> images);
  /// Explicit image of each element of a finite source, by index.
  static RingMap from_table(const Ring& source, const Ring& target, std::vector<Value> images);
  /// x -> second(first(x)).
  static RingMap compose(const RingMap& first, const RingMap& second);
  /// Componentwise map into a product ring.
  static RingMap into_product(const Ring& source, const Ring& product, const std::vector<RingMap>& components);

  const Ring& source() const { return source_; }
  const Ring& target() const { return target_; }
  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  /// Unchecked application to a payload of the source.
  Value operator()(const Value& a) const { return fn_(a); }
  /// Throws DomainMismatch when a does not belong to source.
  RingElement apply(const RingElement& a) const;

  /// Images of all source elements by index; throws NotFinite.
  std::vector<Value> table() const;
  bool is_bijective() const;

  nlohmann::json to_json() const;
  static RingMap from_json(const nlohmann::json& j);

 private:
  RingMap(Ring source, Ring target, Kind kind, std::string name, std::function<Value(const Value&)> fn);
  void validate() const;

  Ring source_;
  Ring target_;
  Kind kind_;
  std::string name_;
  std::function<Value(const Value&)> fn_;
};

/// Applies the map to a payload and returns an element of its target.
inline RingElement apply_ring_map(const RingMap& f, const RingElement& a) { return f.apply(a); }

std::string to_string(RingMap::Kind kind);

}  // namespace g2
