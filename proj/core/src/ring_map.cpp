#include "g2/ring_map.hpp"

#include <nlohmann/json.hpp>

namespace g2 {

namespace {

constexpr std::int64_t kExhaustiveLimit = 1024;
constexpr int kSamplePoints = 64;

using Fn = std::function<Value(const Value&)>;

[[noreturn]] void no_map(const Ring& s, const Ring& t) {
  throw Error(ErrorCode::DomainMismatch, "no canonical map " + s.descriptor() + " -> " + t.descriptor());
}

Fn canonical(const Ring& src, const Ring& tgt) {
  if (src == tgt) return [](const Value& v) { return v; };
  if (auto derived = tgt.as<DerivedFiniteRing>(); derived && derived->base() == src) {
    return [derived](const Value& v) { return derived->image_of(v); };
  }
  if (auto poly = tgt.as<PolynomialRing>()) {
    Fn inner = canonical(src, poly->base());
    return [poly, inner](const Value& v) { return poly->constant(inner(v)); };
  }
  switch (src->kind()) {
    case RingKind::Integers:
      return [tgt](const Value& v) { return tgt->from_integer(v.integer()); };
    case RingKind::Modular: {
      const auto n = src.as<ModularRing>()->modulus();
      if (!tgt->is_finite() || !tgt->is_zero(tgt->from_int(n))) no_map(src, tgt);
      return [tgt](const Value& v) { return tgt->from_int(v.index()); };
    }
    case RingKind::Localization:
      if (src.as<IntegerLocalizationRing>()) {
        if (tgt->kind() == RingKind::Rationals) return [](const Value& v) { return v; };
        return [src, tgt](const Value& v) {
          const auto& q = v.rational();
          auto inv = tgt->inverse(tgt->from_integer(boost::multiprecision::denominator(q)));
          if (!inv) {
            throw Error(ErrorCode::DomainMismatch,
                        "denominator of " + src->format(v) + " is not invertible in " + tgt.descriptor());
          }
          return tgt->mul(tgt->from_integer(boost::multiprecision::numerator(q)), *inv);
        };
      }
      break;
    default:
      break;
  }
  no_map(src, tgt);
}

}  // namespace

std::string to_string(RingMap::Kind kind) {
  switch (kind) {
    case RingMap::Kind::Identity: return "identity";
    case RingMap::Kind::Reduction: return "reduction";
    case RingMap::Kind::Frobenius: return "frobenius";
    case RingMap::Kind::FractionEmbedding: return "fraction_embedding";
    case RingMap::Kind::Projection: return "projection";
    case RingMap::Kind::Substitution: return "substitution";
    case RingMap::Kind::Table: return "table";
    case RingMap::Kind::Composite: return "composite";
  }
  return "unknown";
}

RingMap::RingMap(Ring source, Ring target, Kind kind, std::string name, Fn fn)
    : source_(std::move(source)), target_(std::move(target)), kind_(kind), name_(std::move(name)), fn_(std::move(fn)) {
  validate();
}

void RingMap::validate() const {
  const auto& s = *source_;
  const auto& t = *target_;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::InvalidArgument, name_ + ": " + source_.descriptor() + " -> " + target_.descriptor() +
                                                " does not preserve " + what);
  };
  if (!(fn_(s.zero()) == t.zero())) fail("0");
  if (!(fn_(s.one()) == t.one())) fail("1");

  std::vector<Value> points;
  if (s.is_finite() && *s.size() <= kExhaustiveLimit) {
    points = s.elements();
  } else {
    std::mt19937_64 rng(0);
    for (int i = 0; i < kSamplePoints; ++i) points.push_back(s.sample(rng));
  }
  std::vector<Value> images;
  images.reserve(points.size());
  for (const auto& p : points) images.push_back(fn_(p));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i; j < points.size(); ++j) {
      if (!(fn_(s.add(points[i], points[j])) == t.add(images[i], images[j]))) {
        fail("+ at (" + s.format(points[i]) + ", " + s.format(points[j]) + ")");
      }
      if (!(fn_(s.mul(points[i], points[j])) == t.mul(images[i], images[j]))) {
        fail("* at (" + s.format(points[i]) + ", " + s.format(points[j]) + ")");
      }
    }
  }
}

RingMap RingMap::identity(const Ring& r) {
  return RingMap(r, r, Kind::Identity, "identity", [](const Value& v) { return v; });
}

RingMap RingMap::reduction(const Ring& source, const Ring& target) {
  return RingMap(source, target, Kind::Reduction, "reduction", canonical(source, target));
}

RingMap RingMap::frobenius(const Ring& field, int power) {
  const auto* f = field.as<FiniteFieldRing>();
  if (!f) throw Error(ErrorCode::DomainMismatch, "Frobenius needs a finite field, got " + field.descriptor());
  if (power < 0) throw Error(ErrorCode::InvalidArgument, "Frobenius power must be non-negative");
  std::uint64_t e = 1;
  for (int i = 0; i < power; ++i) e *= static_cast<std::uint64_t>(f->characteristic());
  return RingMap(field, field, Kind::Frobenius, "frobenius^" + std::to_string(power),
                 [f, e](const Value& v) { return f->pow(v, e); });
}

RingMap RingMap::fraction_embedding(const Ring& localization) {
  if (const auto* d = localization.as<DerivedFiniteRing>(); d && d->kind() == RingKind::Localization) {
    return RingMap(d->base(), localization, Kind::FractionEmbedding, "fraction_embedding",
                   [d](const Value& v) { return d->image_of(v); });
  }
  if (localization.as<IntegerLocalizationRing>()) {
    return RingMap(Ring::integers(), localization, Kind::FractionEmbedding, "fraction_embedding",
                   [](const Value& v) { return Value(Rational(v.integer())); });
  }
  throw Error(ErrorCode::DomainMismatch, localization.descriptor() + " is not a ring of fractions");
}

RingMap RingMap::projection(const Ring& product, std::size_t factor) {
  const auto* p = product.as<ProductRing>();
  if (!p) throw Error(ErrorCode::DomainMismatch, product.descriptor() + " is not a product ring");
  if (factor >= p->factors().size()) throw Error(ErrorCode::InvalidArgument, "projection index out of range");
  return RingMap(product, p->factors()[factor], Kind::Projection, "projection_" + std::to_string(factor),
                 [p, factor](const Value& v) { return p->components(v)[factor]; });
}

RingMap RingMap::substitution(const Ring& source, const Ring& target, std::vector<Value> images) {
  const auto* p = source.as<PolynomialRing>();
  if (!p) throw Error(ErrorCode::DomainMismatch, "substitution needs a polynomial source");
  if (images.size() != p->variables().size()) {
    throw Error(ErrorCode::InvalidArgument, "substitution needs one image per variable");
  }
  Fn coeff = canonical(p->base(), target);
  Ring tgt = target;
  return RingMap(source, target, Kind::Substitution, "substitution",
                 [tgt, coeff, images = std::move(images)](const Value& v) {
                   Value acc = tgt->zero();
                   for (const auto& [m, c] : PolynomialRing::terms(v)) {
                     Value term = coeff(c);
                     for (std::size_t i = 0; i < images.size(); ++i) {
                       if (m.exps[i]) term = tgt->mul(term, tgt->pow(images[i], m.exps[i]));
                     }
                     acc = tgt->add(acc, term);
                   }
                   return acc;
                 });
}

RingMap RingMap::from_table(const Ring& source, const Ring& target, std::vector<Value> images) {
  if (!source->is_finite()) throw Error(ErrorCode::NotFinite, "table maps need a finite source");
  if (static_cast<std::int64_t>(images.size()) != *source->size()) {
    throw Error(ErrorCode::InvalidArgument, "table map needs one image per source element");
  }
  const RingImpl* s = source.get();
  return RingMap(source, target, Kind::Table, "table",
                 [s, images = std::move(images)](const Value& v) { return images[static_cast<std::size_t>(s->index_of(v))]; });
}

RingMap RingMap::compose(const RingMap& first, const RingMap& second) {
  if (!(first.target() == second.source())) {
    throw Error(ErrorCode::DomainMismatch, "cannot compose " + first.target().descriptor() + " with " +
                                               second.source().descriptor());
  }
  Fn f = first.fn_, g = second.fn_;
  return RingMap(first.source(), second.target(), Kind::Composite, second.name() + " o " + first.name(),
                 [f, g](const Value& v) { return g(f(v)); });
}

RingMap RingMap::into_product(const Ring& source, const Ring& product, const std::vector<RingMap>& components) {
  const auto* p = product.as<ProductRing>();
  if (!p || p->factors().size() != components.size()) {
    throw Error(ErrorCode::DomainMismatch, "component maps do not match " + product.descriptor());
  }
  std::vector<Fn> fns;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (!(components[i].source() == source) || !(components[i].target() == p->factors()[i])) {
      throw Error(ErrorCode::DomainMismatch, "component " + std::to_string(i) + " has the wrong type");
    }
    fns.push_back(components[i].fn_);
  }
  return RingMap(source, product, Kind::Composite, "diagonal", [p, fns](const Value& v) {
    std::vector<Value> c;
    c.reserve(fns.size());
    for (const auto& f : fns) c.push_back(f(v));
    return p->combine(c);
  });
}

RingElement RingMap::apply(const RingElement& a) const {
  if (!(a.ring() == source_)) {
    throw Error(ErrorCode::DomainMismatch, a.ring().descriptor() + " is not the source " + source_.descriptor());
  }
  return {target_, fn_(a.value())};
}

std::vector<Value> RingMap::table() const {
  if (!source_->is_finite()) throw Error(ErrorCode::NotFinite, source_.descriptor() + " is infinite");
  std::vector<Value> out;
  for (const auto& v : source_->elements()) out.push_back(fn_(v));
  return out;
}

bool RingMap::is_bijective() const {
  if (!source_->is_finite() || !target_->is_finite() || *source_->size() != *target_->size()) return false;
  std::vector<bool> hit(static_cast<std::size_t>(*target_->size()), false);
  for (const auto& v : table()) {
    auto i = static_cast<std::size_t>(target_->index_of(v));
    if (hit[i]) return false;
    hit[i] = true;
  }
  return true;
}

nlohmann::json RingMap::to_json() const {
  nlohmann::json j = {{"source", source_.descriptor()}, {"target", target_.descriptor()}, {"kind", to_string(kind_)},
                      {"name", name_}};
  if (kind_ == Kind::Frobenius) j["power"] = std::stoi(name_.substr(name_.find('^') + 1));
  if (source_->is_finite()) {
    nlohmann::json t = nlohmann::json::array();
    for (const auto& v : table()) t.push_back(target_->to_json(v));
    j["table"] = t;
  }
  return j;
}

RingMap RingMap::from_json(const nlohmann::json& j) {
  Ring source = Ring::parse(j.at("source").get<std::string>());
  Ring target = Ring::parse(j.value("target", j.at("source").get<std::string>()));
  const std::string kind = j.value("kind", "table");
  std::optional<RingMap> named;
  if (kind == "identity" && source == target) named = identity(source);
  if (kind == "frobenius" && source == target) named = frobenius(source, j.value("power", 1));
  if (kind == "reduction") named = reduction(source, target);
  if (!j.contains("table")) {
    if (named) return *named;
    throw Error(ErrorCode::ParseError, "ring map JSON of kind " + kind + " needs a table");
  }
  std::vector<Value> images;
  for (const auto& v : j.at("table")) images.push_back(target->from_json(v));
  if (named) {
    if (named->table() != images) throw Error(ErrorCode::ParseError, "ring map table disagrees with its kind " + kind);
    return *named;
  }
  return from_table(source, target, std::move(images));
}

}  // namespace g2
