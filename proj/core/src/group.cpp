#include "g2/group.hpp"

namespace g2 {

GroupMatrix::GroupMatrix(Matrix m, Matrix inverse) : m_(std::move(m)), inv_(std::move(inverse)) {
  if (!(m_.ring() == inv_.ring())) {
    throw Error(ErrorCode::DescriptorMismatch, m_.ring().descriptor() + " vs " + inv_.ring().descriptor());
  }
}

GroupMatrix GroupMatrix::identity(const Ring& ring) { return {Matrix::identity(ring), Matrix::identity(ring)}; }

bool GroupMatrix::checked() const { return (m_ * inv_).is_identity(); }

GroupMatrix GroupMatrix::operator*(const GroupMatrix& o) const { return {m_ * o.m_, o.inv_ * inv_}; }

GroupMatrix GroupMatrix::conjugate(const GroupMatrix& x) const { return *this * x * inverse(); }

GroupMatrix commutator(const GroupMatrix& a, const GroupMatrix& b) { return a * b * a.inverse() * b.inverse(); }

std::string to_string(Letter::Kind kind) {
  switch (kind) {
    case Letter::Kind::X: return "X";
    case Letter::Kind::W: return "W";
    case Letter::Kind::H: return "H";
  }
  return "?";
}

GroupWord GroupWord::inverse(const Ring& ring) const {
  GroupWord out;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    Letter l = *it;
    if (l.kind == Letter::Kind::H) {
      auto inv = ring->inverse(l.scalar);
      if (!inv) throw Error(ErrorCode::NotAUnit, ring->format(l.scalar) + " in " + ring.descriptor());
      l.scalar = *inv;
    } else {
      l.scalar = ring->neg(l.scalar);
    }
    out.letters.push_back(std::move(l));
  }
  return out;
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
  GroupWord out = *this;
  out.letters.insert(out.letters.end(), o.letters.begin(), o.letters.end());
  return out;
}

Chevalley::Chevalley(const StructureTable& table, Ring ring) : table_(table), ring_(std::move(ring)) {
  powers_.reserve(kRootCount);
  for (const auto& r : all_roots()) {
    auto d = divided_powers(table_, r);
    powers_.push_back({d.x, d.x2, d.x3, Matrix::from_int(ring_, d.x), Matrix::from_int(ring_, d.x2),
                       Matrix::from_int(ring_, d.x3)});
  }
}

Matrix Chevalley::unipotent_matrix(const Root& r, const Value& t) const {
  const RingImpl& R = *ring_;
  const auto& p = powers_[root_index(r)];
  const Value t2 = R.mul(t, t);
  const Value t3 = R.mul(t2, t);
  Matrix m = Matrix::identity(ring_);
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      const auto c1 = p.ix[i][j], c2 = p.ix2[i][j], c3 = p.ix3[i][j];
      if (c1 == 0 && c2 == 0 && c3 == 0) continue;
      Value v = m(i, j);
      if (c1 != 0) v = R.add(v, c1 == 1 ? t : R.mul(R.from_int(c1), t));
      if (c2 != 0) v = R.add(v, c2 == 1 ? t2 : R.mul(R.from_int(c2), t2));
      if (c3 != 0) v = R.add(v, c3 == 1 ? t3 : R.mul(R.from_int(c3), t3));
      m.set(i, j, std::move(v));
    }
  }
  return m;
}

GroupMatrix Chevalley::x(const Root& r, const Value& t) const {
  return {unipotent_matrix(r, t), unipotent_matrix(r, ring_->neg(t))};
}

Value Chevalley::unit_inverse(const Value& t) const {
  auto inv = ring_->inverse(t);
  if (!inv) throw Error(ErrorCode::NotAUnit, ring_->format(t) + " in " + ring_.descriptor());
  return *inv;
}

GroupMatrix Chevalley::w(const Root& r, const Value& t) const {
  const Value tinv = unit_inverse(t);
  const GroupMatrix a = x(r, t);
  return a * x(-r, ring_->neg(tinv)) * a;
}

GroupMatrix Chevalley::h(const Root& r, const Value& t) const { return w(r, t) * w(r, ring_->one()).inverse(); }

GroupMatrix Chevalley::letter(const Letter& l) const {
  switch (l.kind) {
    case Letter::Kind::X: return x(l.root, l.scalar);
    case Letter::Kind::W: return w(l.root, l.scalar);
    case Letter::Kind::H: return h(l.root, l.scalar);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown letter kind");
}

GroupMatrix Chevalley::eval(const GroupWord& word) const {
  GroupMatrix acc = GroupMatrix::identity(ring_);
  for (const auto& l : word.letters) acc = acc * letter(l);
  return acc;
}

GroupMatrix unipotent(const StructureTable& table, const Ring& r, const Root& alpha, const Value& t) {
  return Chevalley(table, r).x(alpha, t);
}

GroupMatrix weyl_w(const StructureTable& table, const Ring& r, const Root& alpha, const Value& t) {
  return Chevalley(table, r).w(alpha, t);
}

GroupMatrix torus_h(const StructureTable& table, const Ring& r, const Root& alpha, const Value& t) {
  return Chevalley(table, r).h(alpha, t);
}

GroupMatrix word_eval(const GroupWord& w, const StructureTable& table, const Ring& r) {
  return Chevalley(table, r).eval(w);
}

}  // namespace g2
