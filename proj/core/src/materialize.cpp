#include "materialize.hpp"

#include <functional>

namespace g2::detail {

namespace {

constexpr std::int64_t kMaxBase = 512;

std::int64_t checked_size(const Ring& base) {
  if (!base->is_finite()) throw Error(ErrorCode::NotFinite, base.descriptor() + " is infinite");
  auto n = *base->size();
  if (n > kMaxBase) throw Error(ErrorCode::InvalidArgument, "materialization is limited to bases of size <= 512");
  return n;
}

std::vector<std::int64_t> indices(const Ring& base, const std::vector<Value>& gens) {
  std::vector<std::int64_t> out;
  for (const auto& g : gens) out.push_back(base->index_of(g));
  return out;
}

TableRing::Tables tables_from_classes(const Ring& base, std::int64_t classes,
                                      const std::function<std::int32_t(std::int64_t, bool)>& combine) {
  TableRing::Tables t;
  t.size = classes;
  t.add.resize(static_cast<std::size_t>(classes * classes));
  t.mul.resize(static_cast<std::size_t>(classes * classes));
  for (std::int64_t x = 0; x < classes; ++x) {
    for (std::int64_t y = 0; y < classes; ++y) {
      const auto k = x * classes + y;
      t.add[static_cast<std::size_t>(k)] = combine(k, false);
      t.mul[static_cast<std::size_t>(k)] = combine(k, true);
    }
  }
  (void)base;
  return t;
}

}  // namespace

std::vector<bool> ideal_closure(const Ring& base, const std::vector<std::int64_t>& generators) {
  const auto n = *base->size();
  std::vector<std::int64_t> products;
  std::vector<bool> seen_product(static_cast<std::size_t>(n), false);
  for (auto g : generators) {
    const Value gv = base->element(g);
    for (std::int64_t r = 0; r < n; ++r) {
      auto p = base->index_of(base->mul(base->element(r), gv));
      if (!seen_product[static_cast<std::size_t>(p)]) {
        seen_product[static_cast<std::size_t>(p)] = true;
        products.push_back(p);
      }
    }
  }
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  const auto zero = base->index_of(base->zero());
  std::vector<std::int64_t> queue{zero};
  in[static_cast<std::size_t>(zero)] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Value m = base->element(queue[head]);
    for (auto p : products) {
      auto s = base->index_of(base->add(m, base->element(p)));
      if (!in[static_cast<std::size_t>(s)]) {
        in[static_cast<std::size_t>(s)] = true;
        queue.push_back(s);
      }
    }
  }
  return in;
}

bool is_prime_ideal(const Ring& base, const std::vector<bool>& ideal) {
  const auto n = *base->size();
  if (ideal[static_cast<std::size_t>(base->index_of(base->one()))]) return false;
  for (std::int64_t a = 0; a < n; ++a) {
    if (ideal[static_cast<std::size_t>(a)]) continue;
    for (std::int64_t b = a; b < n; ++b) {
      if (ideal[static_cast<std::size_t>(b)]) continue;
      if (ideal[static_cast<std::size_t>(base->index_of(base->mul(base->element(a), base->element(b))))]) return false;
    }
  }
  return true;
}

std::shared_ptr<const RingImpl> materialize_localization(const Ring& base, const std::vector<Value>& generators,
                                                         const std::string& descriptor) {
  const auto n = checked_size(base);
  DerivedFiniteRing::Build b;
  b.descriptor = descriptor;
  b.kind = RingKind::Localization;
  b.base = base;
  b.ideal_generators = indices(base, generators);
  b.ideal = ideal_closure(base, b.ideal_generators);
  // Over a finite ring prime ideals are maximal.
  if (!is_prime_ideal(base, b.ideal)) {
    throw Error(ErrorCode::NotMaximal, "the ideal generated in " + base.descriptor() + " is not maximal");
  }
  auto el = [&](std::int64_t i) { return base->element(i); };
  auto idx = [&](const Value& v) { return base->index_of(v); };
  const auto one = idx(base->one());

  std::vector<std::int64_t> denominators{one};
  for (std::int64_t s = 0; s < n; ++s) {
    if (!b.ideal[static_cast<std::size_t>(s)] && s != one) denominators.push_back(s);
  }
  // kernel of R -> R_m: elements killed by some denominator
  std::vector<bool> killed(static_cast<std::size_t>(n), false);
  for (std::int64_t x = 0; x < n; ++x) {
    for (auto u : denominators) {
      if (base->is_zero(base->mul(el(x), el(u)))) {
        killed[static_cast<std::size_t>(x)] = true;
        break;
      }
    }
  }
  auto equivalent = [&](std::int64_t a, std::int64_t s, std::int64_t c, std::int64_t t) {
    return killed[static_cast<std::size_t>(idx(base->sub(base->mul(el(a), el(t)), base->mul(el(c), el(s)))))];
  };

  b.class_of_fraction.assign(static_cast<std::size_t>(n * n), -1);
  for (auto s : denominators) {
    for (std::int64_t a = 0; a < n; ++a) {
      std::int32_t cls = -1;
      for (std::size_t c = 0; c < b.representatives.size(); ++c) {
        const auto& [ra, rs] = b.representatives[c];
        if (equivalent(a, s, ra, rs)) {
          cls = static_cast<std::int32_t>(c);
          break;
        }
      }
      if (cls < 0) {
        cls = static_cast<std::int32_t>(b.representatives.size());
        b.representatives.emplace_back(a, s);
      }
      b.class_of_fraction[static_cast<std::size_t>(a * n + s)] = cls;
    }
  }
  const auto classes = static_cast<std::int64_t>(b.representatives.size());
  b.class_of_base.resize(static_cast<std::size_t>(n));
  for (std::int64_t a = 0; a < n; ++a) {
    b.class_of_base[static_cast<std::size_t>(a)] = b.class_of_fraction[static_cast<std::size_t>(a * n + one)];
  }
  b.tables = tables_from_classes(base, classes, [&](std::int64_t k, bool product) {
    const auto& [a, s] = b.representatives[static_cast<std::size_t>(k / classes)];
    const auto& [c, t] = b.representatives[static_cast<std::size_t>(k % classes)];
    const auto den = idx(base->mul(el(s), el(t)));
    const auto num = product ? idx(base->mul(el(a), el(c)))
                             : idx(base->add(base->mul(el(a), el(t)), base->mul(el(c), el(s))));
    return b.class_of_fraction[static_cast<std::size_t>(num * n + den)];
  });
  b.tables.zero = b.class_of_base[static_cast<std::size_t>(idx(base->zero()))];
  b.tables.one = b.class_of_base[static_cast<std::size_t>(one)];
  for (const auto& [a, s] : b.representatives) {
    b.tables.labels.push_back(s == one ? base->format(el(a)) : base->format(el(a)) + "/" + base->format(el(s)));
  }
  return std::make_shared<const DerivedFiniteRing>(std::move(b));
}

std::shared_ptr<const RingImpl> materialize_quotient(const Ring& base, const std::vector<Value>& generators,
                                                     const std::string& descriptor) {
  const auto n = checked_size(base);
  DerivedFiniteRing::Build b;
  b.descriptor = descriptor;
  b.kind = RingKind::Quotient;
  b.base = base;
  b.ideal_generators = indices(base, generators);
  b.ideal = ideal_closure(base, b.ideal_generators);
  auto el = [&](std::int64_t i) { return base->element(i); };
  auto idx = [&](const Value& v) { return base->index_of(v); };
  if (b.ideal[static_cast<std::size_t>(idx(base->one()))]) {
    throw Error(ErrorCode::InvalidArgument, "quotient by the unit ideal of " + base.descriptor());
  }
  b.class_of_base.assign(static_cast<std::size_t>(n), -1);
  for (std::int64_t a = 0; a < n; ++a) {
    if (b.class_of_base[static_cast<std::size_t>(a)] >= 0) continue;
    const auto cls = static_cast<std::int32_t>(b.representatives.size());
    b.representatives.emplace_back(a, idx(base->one()));
    for (std::int64_t x = 0; x < n; ++x) {
      if (b.ideal[static_cast<std::size_t>(x)]) {
        b.class_of_base[static_cast<std::size_t>(idx(base->add(el(a), el(x))))] = cls;
      }
    }
  }
  const auto classes = static_cast<std::int64_t>(b.representatives.size());
  b.tables = tables_from_classes(base, classes, [&](std::int64_t k, bool product) {
    const auto x = el(b.representatives[static_cast<std::size_t>(k / classes)].first);
    const auto y = el(b.representatives[static_cast<std::size_t>(k % classes)].first);
    return b.class_of_base[static_cast<std::size_t>(idx(product ? base->mul(x, y) : base->add(x, y)))];
  });
  b.tables.zero = b.class_of_base[static_cast<std::size_t>(idx(base->zero()))];
  b.tables.one = b.class_of_base[static_cast<std::size_t>(idx(base->one()))];
  for (const auto& [a, s] : b.representatives) b.tables.labels.push_back("[" + base->format(el(a)) + "]");
  return std::make_shared<const DerivedFiniteRing>(std::move(b));
}

}  // namespace g2::detail
