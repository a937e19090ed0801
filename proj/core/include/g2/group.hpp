#pragma once

#include <array>
#include <memory>
#include <vector>

#include "g2/liealg.hpp"
#include "g2/matrix.hpp"
#include "g2/rings.hpp"

namespace g2 {

/// An element of G_ad(G2, R) together with its exact inverse. Inverses are
/// assembled from generator inverses, never by elimination.
class GroupMatrix {
 public:
  static GroupMatrix identity(const Ring& ring);
  /// Trusts that m * inverse = E; use checked() to verify.
  GroupMatrix(Matrix m, Matrix inverse);

  const Ring& ring() const { return m_.ring(); }
  const Matrix& matrix() const { return m_; }
  const Matrix& inverse_matrix() const { return inv_; }
  GroupMatrix inverse() const { return GroupMatrix(inv_, m_); }
  /// True iff matrix() * inverse_matrix() is the identity.
  bool checked() const;

  GroupMatrix operator*(const GroupMatrix& o) const;
  /// Conjugate: this * x * this^-1.
  GroupMatrix conjugate(const GroupMatrix& x) const;

  friend bool operator==(const GroupMatrix& a, const GroupMatrix& b) { return a.m_ == b.m_; }

 private:
  Matrix m_;
  Matrix inv_;
};

/// A * B * A^-1 * B^-1.
GroupMatrix commutator(const GroupMatrix& a, const GroupMatrix& b);

struct Letter {
  enum class Kind { X, W, H };
  Kind kind = Kind::X;
  Root root;
  Value scalar;
};

struct GroupWord {
  std::vector<Letter> letters;

  /// Reversed word of inverse letters: x(-t), w(-t), h(t^-1).
  GroupWord inverse(const Ring& ring) const;
  GroupWord operator*(const GroupWord& o) const;
};

/// Generators of the adjoint Chevalley group over one ring, built from one
/// structure table. Holds the divided powers X, X^2/2, X^3/6 mapped into the
/// ring.
class Chevalley {
 public:
  Chevalley(const StructureTable& table, Ring ring);

  const Ring& ring() const { return ring_; }
  const StructureTable& table() const { return table_; }

  const Matrix& X(const Root& r) const { return powers_[root_index(r)].x; }
  const Matrix& X2(const Root& r) const { return powers_[root_index(r)].x2; }
  const Matrix& X3(const Root& r) const { return powers_[root_index(r)].x3; }

  /// E + tX + t^2 X^2/2 (+ t^3 X^3/6 for short roots), no inverse.
  Matrix unipotent_matrix(const Root& r, const Value& t) const;
  GroupMatrix x(const Root& r, const Value& t) const;
  GroupMatrix x(const Root& r, std::int64_t t) const { return x(r, ring_->from_int(t)); }
  /// x_r(t) x_{-r}(-t^-1) x_r(t); throws NotAUnit.
  GroupMatrix w(const Root& r, const Value& t) const;
  /// w_r(t) w_r(1)^-1; throws NotAUnit.
  GroupMatrix h(const Root& r, const Value& t) const;
  GroupMatrix letter(const Letter& l) const;
  GroupMatrix eval(const GroupWord& word) const;

 private:
  struct Powers {
    IntMatrix ix{}, ix2{}, ix3{};
    Matrix x, x2, x3;
  };
  Value unit_inverse(const Value& t) const;

  StructureTable table_;
  Ring ring_;
  std::vector<Powers> powers_;
};

// Free-function forms of the generator constructors.
GroupMatrix unipotent(const StructureTable& table, const Ring& r, const Root& alpha, const Value& t);
GroupMatrix weyl_w(const StructureTable& table, const Ring& r, const Root& alpha, const Value& t);
GroupMatrix torus_h(const StructureTable& table, const Ring& r, const Root& alpha, const Value& t);
GroupMatrix word_eval(const GroupWord& w, const StructureTable& table, const Ring& r);

std::string to_string(Letter::Kind kind);

}  // namespace g2
