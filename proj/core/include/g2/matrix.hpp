#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>

#include "g2/liealg.hpp"
#include "g2/rings.hpp"

namespace g2 {

class RingMap;

/// Dense 14x14 matrix over a ring, entries in canonical form.
class Matrix {
 public:
  static constexpr std::size_t kEntries = kDim * kDim;

  explicit Matrix(Ring ring);
  static Matrix identity(const Ring& ring);
  /// Integer matrix mapped into the ring entrywise.
  static Matrix from_int(const Ring& ring, const IntMatrix& m);

  const Ring& ring() const { return ring_; }
  const Value& operator()(std::size_t i, std::size_t j) const { return e_[i * kDim + j]; }
  void set(std::size_t i, std::size_t j, Value v) { e_[i * kDim + j] = std::move(v); }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Value& c) const;

  bool is_zero() const;
  bool is_identity() const;
  /// First (row, col) where the matrices differ.
  std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Matrix& o) const;

  /// Entrywise image under a ring map, or under an arbitrary payload map into `target`.
  Matrix map(const RingMap& f) const;
  Matrix map(const Ring& target, const std::function<Value(const Value&)>& f) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  void check_same(const Matrix& o) const;

  Ring ring_;
  std::array<Value, kEntries> e_;
};

}  // namespace g2
