#include "g2/localize.hpp"

#include <algorithm>
#include <map>

#include "materialize.hpp"

namespace g2 {

namespace {

constexpr std::int64_t kMaxLattice = 64;

std::int64_t finite_size(const Ring& r) {
  if (!r->is_finite()) throw Error(ErrorCode::NotFinite, r.descriptor() + " is infinite");
  return *r->size();
}

std::vector<std::int64_t> to_indices(const Ring& r, const std::vector<Value>& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v) out.push_back(r->index_of(x));
  return out;
}

std::vector<bool> closure(const Ring& r, const std::vector<Value>& gens) {
  return detail::ideal_closure(r, to_indices(r, gens));
}

std::size_t count(const std::vector<bool>& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), true)); }

/// Greedy generating set of the ideal with membership `target`.
std::vector<Value> minimal_generators(const Ring& r, const std::vector<bool>& target) {
  std::vector<Value> gens;
  std::vector<bool> have = closure(r, {});
  const auto n = finite_size(r);
  for (std::int64_t i = 0; i < n && have != target; ++i) {
    if (target[static_cast<std::size_t>(i)] && !have[static_cast<std::size_t>(i)]) {
      gens.push_back(r->element(i));
      have = closure(r, gens);
    }
  }
  if (gens.empty()) gens.push_back(r->zero());
  return gens;
}

std::vector<bool> subring_closure(const Ring& r, const std::vector<Value>& gens) {
  const auto n = finite_size(r);
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  std::vector<std::int64_t> list;
  auto push = [&](const Value& v) {
    auto i = r->index_of(v);
    if (!in[static_cast<std::size_t>(i)]) {
      in[static_cast<std::size_t>(i)] = true;
      list.push_back(i);
    }
  };
  push(r->zero());
  push(r->one());
  for (const auto& g : gens) push(g);
  for (std::size_t a = 0; a < list.size(); ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      const Value x = r->element(list[a]), y = r->element(list[b]);
      push(r->add(x, y));
      push(r->mul(x, y));
    }
    push(r->neg(r->element(list[a])));
  }
  return in;
}

}  // namespace

// ---------------------------------------------------------------------------

IdealHandle::IdealHandle(Ring ring, std::vector<Value> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  members_ = closure(ring_, generators_);
}

bool IdealHandle::contains(const Value& v) const { return members_[static_cast<std::size_t>(ring_->index_of(v))]; }

std::vector<Value> IdealHandle::elements() const {
  std::vector<Value> out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i]) out.push_back(ring_->element(static_cast<std::int64_t>(i)));
  }
  return out;
}

std::size_t IdealHandle::size() const { return count(members_); }

bool IdealHandle::is_proper() const { return !contains(ring_->one()); }

bool IdealHandle::is_maximal() const {
  if (!is_proper()) return false;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i]) continue;
    auto gens = generators_;
    gens.push_back(ring_->element(static_cast<std::int64_t>(i)));
    if (!closure(ring_, gens)[static_cast<std::size_t>(ring_->index_of(ring_->one()))]) return false;
  }
  return true;
}

std::string IdealHandle::label() const {
  std::string s = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) s += (i ? "," : "") + ring_->format(generators_[i]);
  return s + ")";
}

MaximalIdealHandle::MaximalIdealHandle(Ring ring, std::vector<Value> generators)
    : IdealHandle(std::move(ring), std::move(generators)) {
  if (!is_maximal()) throw Error(ErrorCode::NotMaximal, label() + " is not a maximal ideal of " + this->ring().descriptor());
}

MaximalIdealHandle parse_ideal(const Ring& ring, std::string_view generators) {
  finite_size(ring);
  std::vector<Value> gens;
  std::size_t start = 0;
  while (start <= generators.size()) {
    auto end = generators.find(',', start);
    if (end == std::string_view::npos) end = generators.size();
    gens.push_back(ring->parse(generators.substr(start, end - start)));
    start = end + 1;
  }
  return MaximalIdealHandle(ring, std::move(gens));
}

std::vector<MaximalIdealHandle> maximal_ideals(const Ring& r) {
  const auto n = finite_size(r);
  if (n > kMaxLattice) throw Error(ErrorCode::InvalidArgument, "ideal lattice walk is limited to rings of size <= 64");
  // every ideal of a finite ring is a finite sum of principal ideals
  std::vector<std::vector<bool>> ideals;
  auto known = [&](const std::vector<bool>& s) { return std::find(ideals.begin(), ideals.end(), s) != ideals.end(); };
  for (std::int64_t i = 0; i < n; ++i) {
    auto p = detail::ideal_closure(r, {i});
    if (!known(p)) ideals.push_back(std::move(p));
  }
  for (std::size_t a = 0; a < ideals.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      std::vector<std::int64_t> gens;
      for (std::size_t i = 0; i < ideals[a].size(); ++i) {
        if (ideals[a][i] || ideals[b][i]) gens.push_back(static_cast<std::int64_t>(i));
      }
      auto s = detail::ideal_closure(r, gens);
      if (!known(s)) ideals.push_back(std::move(s));
    }
  }
  const auto one = static_cast<std::size_t>(r->index_of(r->one()));
  auto contained = [](const std::vector<bool>& x, const std::vector<bool>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] && !y[i]) return false;
    }
    return true;
  };
  std::vector<MaximalIdealHandle> out;
  for (const auto& m : ideals) {
    if (m[one]) continue;
    bool maximal = true;
    for (const auto& o : ideals) {
      if (!o[one] && o != m && contained(m, o)) maximal = false;
    }
    if (maximal) out.emplace_back(r, minimal_generators(r, m));
  }
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    return r->index_of(x.generators().front()) < r->index_of(y.generators().front());
  });
  return out;
}

// ---------------------------------------------------------------------------

MultiplicativeSet MultiplicativeSet::from_elements(const Ring& r, const std::vector<Value>& elements) {
  const auto n = finite_size(r);
  MultiplicativeSet y;
  y.base_ = r;
  y.members_.assign(static_cast<std::size_t>(n), false);
  for (const auto& e : elements) {
    auto i = static_cast<std::size_t>(r->index_of(e));
    if (!y.members_[i]) {
      y.members_[i] = true;
      y.elements_.push_back(e);
    }
  }
  if (!y.contains(r->one())) throw Error(ErrorCode::InvalidArgument, "multiplicative set must contain 1");
  for (const auto& a : y.elements_) {
    for (const auto& b : y.elements_) {
      if (!y.contains(r->mul(a, b))) {
        throw Error(ErrorCode::InvalidArgument, "set is not multiplicatively closed: " + r->format(a) + "*" + r->format(b));
      }
    }
  }
  return y;
}

MultiplicativeSet MultiplicativeSet::complement(const IdealHandle& prime) {
  std::vector<Value> out;
  const auto& r = prime.ring();
  for (std::size_t i = 0; i < prime.members().size(); ++i) {
    if (!prime.members()[i]) out.push_back(r->element(static_cast<std::int64_t>(i)));
  }
  return from_elements(r, out);
}

MultiplicativeSet MultiplicativeSet::integers_off_prime(std::int64_t p) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "prime expected");
  MultiplicativeSet y;
  y.base_ = Ring::integers();
  y.prime_ = p;
  return y;
}

bool MultiplicativeSet::contains(const Value& v) const {
  if (prime_ != 0) return !v.integer().is_zero() && v.integer() % prime_ != 0;
  return members_[static_cast<std::size_t>(base_->index_of(v))];
}

namespace {

void check_fraction(const MultiplicativeSet& y, const FractionValue& x) {
  if (!y.contains(x.denominator)) {
    throw Error(ErrorCode::DomainMismatch, "denominator " + y.base()->format(x.denominator) + " is not in Y");
  }
}

}  // namespace

FractionEquality fraction_eq(const MultiplicativeSet& y, const FractionValue& x, const FractionValue& z) {
  const auto& r = y.base();
  check_fraction(y, x);
  check_fraction(y, z);
  const Value d = r->sub(r->mul(x.numerator, z.denominator), r->mul(z.numerator, x.denominator));
  if (r->is_finite()) {
    for (const auto& u : y.elements()) {
      if (r->is_zero(r->mul(d, u))) return {true, u};
    }
    return {false, std::nullopt};
  }
  const auto k = r->kind();
  if (k == RingKind::Integers || k == RingKind::Rationals) return {r->is_zero(d), std::nullopt};
  throw Error(ErrorCode::UndecidableBase, "fraction equality is decided over finite rings and domains only");
}

FractionValue fraction_add(const MultiplicativeSet& y, const FractionValue& x, const FractionValue& z) {
  check_fraction(y, x);
  check_fraction(y, z);
  const auto& r = y.base();
  return {r->add(r->mul(x.numerator, z.denominator), r->mul(z.numerator, x.denominator)),
          r->mul(x.denominator, z.denominator)};
}

FractionValue fraction_mul(const MultiplicativeSet& y, const FractionValue& x, const FractionValue& z) {
  check_fraction(y, x);
  check_fraction(y, z);
  const auto& r = y.base();
  return {r->mul(x.numerator, z.numerator), r->mul(x.denominator, z.denominator)};
}

// ---------------------------------------------------------------------------

bool is_local(const Ring& r) {
  const auto n = finite_size(r);
  std::vector<Value> nonunits;
  for (std::int64_t i = 0; i < n; ++i) {
    if (!r->is_unit(r->element(i))) nonunits.push_back(r->element(i));
  }
  for (const auto& a : nonunits) {
    for (const auto& b : nonunits) {
      if (r->is_unit(r->add(a, b))) return false;
    }
  }
  return true;
}

std::vector<Value> radical_of_local(const Ring& r) {
  if (!is_local(r)) throw Error(ErrorCode::NotLocal, r.descriptor() + " is not local: its non-units are not closed under +");
  std::vector<Value> out;
  for (std::int64_t i = 0; i < *r->size(); ++i) {
    if (!r->is_unit(r->element(i))) out.push_back(r->element(i));
  }
  return out;
}

Localization localize_at(const Ring& r, const MaximalIdealHandle& m) {
  if (!(m.ring() == r)) throw Error(ErrorCode::DescriptorMismatch, "ideal belongs to " + m.ring().descriptor());
  const Ring loc = Ring::localization(r, m.generators());
  if (!is_local(loc)) throw Error(ErrorCode::NotLocal, loc.descriptor() + " is not local");
  return {loc, RingMap::fraction_embedding(loc)};
}

RingMap quotient_map(const IdealHandle& ideal) {
  const auto& r = ideal.ring();
  if (ideal.size() == 1) return RingMap::identity(r);
  return RingMap::reduction(r, Ring::quotient(r, minimal_generators(r, ideal.members())));
}

RingMap residue_map(const Ring& r) {
  const auto rad = radical_of_local(r);
  const IdealHandle ideal(r, rad);
  RingMap map = quotient_map(ideal);
  const auto* f = map.target().as<FiniteRing>();
  if (!f || !f->is_field()) throw Error(ErrorCode::NotLocal, "residue ring of " + r.descriptor() + " is not a field");
  return map;
}

DiagonalEmbedding diagonal_embed(const Ring& r) {
  DiagonalEmbedding d{maximal_ideals(r), {}, RingMap::identity(r), false};
  std::vector<RingMap> parts;
  for (const auto& m : d.ideals) {
    auto loc = localize_at(r, m);
    d.localizations.push_back(loc.ring);
    parts.push_back(loc.canonical);
  }
  const Ring prod = Ring::product(d.localizations);
  d.map = RingMap::into_product(r, prod, parts);
  const auto images = d.map.table();
  std::vector<bool> seen(static_cast<std::size_t>(*prod->size()), false);
  d.injective = true;
  for (const auto& v : images) {
    auto i = static_cast<std::size_t>(prod->index_of(v));
    if (seen[i]) d.injective = false;
    seen[i] = true;
  }
  return d;
}

bool in_congruence_subgroup(const GroupMatrix& x, const IdealHandle& ideal) {
  const auto& r = ideal.ring();
  if (!(x.ring() == r)) throw Error(ErrorCode::DescriptorMismatch, "matrix over " + x.ring().descriptor());
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      const Value d = i == j ? r->sub(x.matrix()(i, j), r->one()) : x.matrix()(i, j);
      if (!ideal.contains(d)) return false;
    }
  }
  return true;
}

std::vector<Value> ring_generators(const Ring& r) {
  const auto n = finite_size(r);
  std::vector<Value> gens;
  auto have = subring_closure(r, gens);
  for (std::int64_t i = 0; i < n; ++i) {
    if (!have[static_cast<std::size_t>(i)]) {
      gens.push_back(r->element(i));
      have = subring_closure(r, gens);
    }
  }
  return gens;
}

ResidueSquareReport residue_square_check(const Ring& r, const MaximalIdealHandle& ideal) {
  const RingMap lambda = quotient_map(ideal);
  const Localization loc = localize_at(r, ideal);
  const RingMap res = residue_map(loc.ring);
  const Ring& q = lambda.target();
  const Ring& k = res.target();
  ResidueSquareReport rep{ideal.label(), q, k, {}, true, {}};

  auto down = [&](const Value& a) { return res(loc.canonical(a)); };
  // mu on 0, 1 and the generator images, then along + and * in R/I
  const auto qn = *q->size();
  std::vector<std::optional<Value>> mu(static_cast<std::size_t>(qn));
  std::vector<std::int64_t> list;
  auto assign = [&](const Value& x, const Value& image) {
    auto i = static_cast<std::size_t>(q->index_of(x));
    if (mu[i]) {
      if (!(*mu[i] == image)) {
        throw Error(ErrorCode::NoIsomorphism, "mu is inconsistent at " + q->format(x) + ": " + k->format(*mu[i]) +
                                                  " vs " + k->format(image));
      }
      return;
    }
    mu[i] = image;
    list.push_back(static_cast<std::int64_t>(i));
  };
  assign(q->zero(), k->zero());
  assign(q->one(), k->one());
  for (const auto& g : ring_generators(r)) assign(lambda(g), down(g));
  for (std::size_t a = 0; a < list.size(); ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      const Value x = q->element(list[a]), y = q->element(list[b]);
      const Value mx = *mu[static_cast<std::size_t>(list[a])], my = *mu[static_cast<std::size_t>(list[b])];
      assign(q->add(x, y), k->add(mx, my));
      assign(q->mul(x, y), k->mul(mx, my));
    }
  }
  std::vector<Value> table;
  std::vector<bool> hit(static_cast<std::size_t>(*k->size()), false);
  for (std::int64_t i = 0; i < qn; ++i) {
    if (!mu[static_cast<std::size_t>(i)]) throw Error(ErrorCode::NoIsomorphism, "generators do not reach " + q->format(q->element(i)));
    const Value v = *mu[static_cast<std::size_t>(i)];
    auto h = static_cast<std::size_t>(k->index_of(v));
    if (hit[h]) throw Error(ErrorCode::NoIsomorphism, "mu is not injective");
    hit[h] = true;
    table.push_back(v);
    rep.mu.emplace_back(q->format(q->element(i)), k->format(v));
  }
  if (qn != *k->size()) throw Error(ErrorCode::NoIsomorphism, "R/I and the residue field differ in size");
  const RingMap mu_map = RingMap::from_table(q, k, table);
  for (const auto& a : r->elements()) {
    const Value left = mu_map(lambda(a)), right = down(a);
    if (!(left == right)) {
      rep.commutes = false;
      rep.failures.push_back(r->format(a) + ": " + k->format(left) + " != " + k->format(right));
    }
  }
  return rep;
}

}  // namespace g2
