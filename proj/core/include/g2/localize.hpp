#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2/group.hpp"
#include "g2/ring_map.hpp"
#include "g2/rings.hpp"

namespace g2 {

/// Ideal of a finite ring, with its element set materialized.
class IdealHandle {
 public:
  /// Ideal generated by `generators`.
  IdealHandle(Ring ring, std::vector<Value> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Value>& generators() const { return generators_; }
  bool contains(const Value& v) const;
  const std::vector<bool>& members() const { return members_; }
  std::vector<Value> elements() const;
  std::size_t size() const;
  bool is_proper() const;
  /// Proper and no strictly larger proper ideal exists.
  bool is_maximal() const;
  /// "(2)", "(2,3)".
  std::string label() const;

 private:
  Ring ring_;
  std::vector<Value> generators_;
  std::vector<bool> members_;
};

/// An IdealHandle whose maximality has been verified.
class MaximalIdealHandle : public IdealHandle {
 public:
  /// Throws NotMaximal.
  MaximalIdealHandle(Ring ring, std::vector<Value> generators);
};

/// Parses "2" or "2,3" into generators of `ring`.
MaximalIdealHandle parse_ideal(const Ring& ring, std::string_view generators);

/// All maximal ideals of a finite ring (|R| <= 64), each with a minimal
/// generating set, ordered by their smallest generator index.
std::vector<MaximalIdealHandle> maximal_ideals(const Ring& r);

/// Multiplicatively closed subset Y of a ring: explicit for finite rings,
/// Z \ (p) for the integers.
class MultiplicativeSet {
 public:
  /// Validates 1 in Y and closure under products.
  static MultiplicativeSet from_elements(const Ring& r, const std::vector<Value>& elements);
  static MultiplicativeSet complement(const IdealHandle& prime);
  static MultiplicativeSet integers_off_prime(std::int64_t p);

  const Ring& base() const { return base_; }
  bool contains(const Value& v) const;
  /// Finite rings only.
  const std::vector<Value>& elements() const { return elements_; }

 private:
  Ring base_;
  std::vector<Value> elements_;
  std::vector<bool> members_;
  std::int64_t prime_ = 0;
};

struct FractionValue {
  Value numerator;
  Value denominator;
};

struct FractionEquality {
  bool equal = false;
  /// u in Y with (at - bs)u = 0 (finite bases).
  std::optional<Value> witness;
};

/// a/s ~ b/t iff (at - bs)u = 0 for some u in Y. Finite bases search Y
/// exhaustively; domains (int, rat) cross-multiply. Throws UndecidableBase
/// otherwise and DomainMismatch for denominators outside Y.
FractionEquality fraction_eq(const MultiplicativeSet& y, const FractionValue& x, const FractionValue& z);
FractionValue fraction_add(const MultiplicativeSet& y, const FractionValue& x, const FractionValue& z);
FractionValue fraction_mul(const MultiplicativeSet& y, const FractionValue& x, const FractionValue& z);

struct Localization {
  Ring ring;
  RingMap canonical;  // a -> a/1
};

/// R_m for a finite ring, with the locality of the result verified. Throws
/// NotMaximal, NotLocal.
Localization localize_at(const Ring& r, const MaximalIdealHandle& m);

/// Non-units of a local finite ring, by index order. Throws NotLocal.
std::vector<Value> radical_of_local(const Ring& r);
bool is_local(const Ring& r);

/// r -> r / Rad r, with the target checked to be a field. The identity when
/// the radical is zero. Throws NotLocal.
RingMap residue_map(const Ring& r);

/// r -> r / I for an ideal of a finite ring.
RingMap quotient_map(const IdealHandle& ideal);

struct DiagonalEmbedding {
  std::vector<MaximalIdealHandle> ideals;
  std::vector<Ring> localizations;
  RingMap map;  // into prod of localizations
  bool injective = false;
};

DiagonalEmbedding diagonal_embed(const Ring& r);

/// Entrywise reduction of x modulo I is the identity.
bool in_congruence_subgroup(const GroupMatrix& x, const IdealHandle& ideal);

struct ResidueSquareReport {
  std::string ideal;
  Ring quotient;       // R/I
  Ring residue_field;  // R_I / Rad R_I
  std::vector<std::pair<std::string, std::string>> mu;  // mu_I by element labels
  bool commutes = false;
  std::vector<std::string> failures;
};

/// Builds mu_I : R/I -> R_I/Rad R_I from images of a ring-generating set and
/// checks mu_I . lambda_I = res . (a -> a/1) on every element. Throws
/// NoIsomorphism when the generator matching is inconsistent or not bijective.
ResidueSquareReport residue_square_check(const Ring& r, const MaximalIdealHandle& ideal);

/// A minimal set whose generated subring is all of r (finite).
std::vector<Value> ring_generators(const Ring& r);

}  // namespace g2
