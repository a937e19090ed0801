#include "g2/matrix.hpp"

#include "g2/ring_map.hpp"

namespace g2 {

Matrix::Matrix(Ring ring) : ring_(std::move(ring)) { e_.fill(ring_->zero()); }

Matrix Matrix::identity(const Ring& ring) {
  Matrix m(ring);
  for (std::size_t i = 0; i < kDim; ++i) m.set(i, i, ring->one());
  return m;
}

Matrix Matrix::from_int(const Ring& ring, const IntMatrix& src) {
  Matrix m(ring);
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      if (src[i][j] != 0) m.set(i, j, ring->from_int(src[i][j]));
    }
  }
  return m;
}

void Matrix::check_same(const Matrix& o) const {
  if (!(ring_ == o.ring_)) {
    throw Error(ErrorCode::DescriptorMismatch, ring_.descriptor() + " vs " + o.ring_.descriptor());
  }
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same(o);
  Matrix r(ring_);
  for (std::size_t k = 0; k < kEntries; ++k) r.e_[k] = ring_->add(e_[k], o.e_[k]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same(o);
  Matrix r(ring_);
  for (std::size_t k = 0; k < kEntries; ++k) r.e_[k] = ring_->sub(e_[k], o.e_[k]);
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r(ring_);
  for (std::size_t k = 0; k < kEntries; ++k) r.e_[k] = ring_->neg(e_[k]);
  return r;
}

Matrix Matrix::scaled(const Value& c) const {
  Matrix r(ring_);
  for (std::size_t k = 0; k < kEntries; ++k) r.e_[k] = ring_->mul(c, e_[k]);
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_same(o);
  const RingImpl& R = *ring_;
  std::array<bool, kEntries> nz_a{}, nz_b{};
  for (std::size_t k = 0; k < kEntries; ++k) {
    nz_a[k] = !R.is_zero(e_[k]);
    nz_b[k] = !R.is_zero(o.e_[k]);
  }
  Matrix r(ring_);
  for (std::size_t i = 0; i < kDim; ++i) {
    std::array<std::optional<Value>, kDim> acc{};
    for (std::size_t k = 0; k < kDim; ++k) {
      if (!nz_a[i * kDim + k]) continue;
      const Value& a = e_[i * kDim + k];
      for (std::size_t j = 0; j < kDim; ++j) {
        if (!nz_b[k * kDim + j]) continue;
        Value p = R.mul(a, o.e_[k * kDim + j]);
        acc[j] = acc[j] ? R.add(*acc[j], p) : std::move(p);
      }
    }
    for (std::size_t j = 0; j < kDim; ++j) {
      if (acc[j]) r.e_[i * kDim + j] = std::move(*acc[j]);
    }
  }
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& v : e_) {
    if (!ring_->is_zero(v)) return false;
  }
  return true;
}

bool Matrix::is_identity() const { return *this == identity(ring_); }

std::optional<std::pair<std::size_t, std::size_t>> Matrix::first_difference(const Matrix& o) const {
  check_same(o);
  for (std::size_t k = 0; k < kEntries; ++k) {
    if (!(e_[k] == o.e_[k])) return std::make_pair(k / kDim, k % kDim);
  }
  return std::nullopt;
}

Matrix Matrix::map(const RingMap& f) const {
  if (!(f.source() == ring_)) {
    throw Error(ErrorCode::DomainMismatch, ring_.descriptor() + " is not the source " + f.source().descriptor());
  }
  return map(f.target(), [&f](const Value& v) { return f(v); });
}

Matrix Matrix::map(const Ring& target, const std::function<Value(const Value&)>& f) const {
  Matrix r(target);
  for (std::size_t k = 0; k < kEntries; ++k) r.e_[k] = f(e_[k]);
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) { return a.ring_ == b.ring_ && a.e_ == b.e_; }

}  // namespace g2
