#include <numeric>

#include <nlohmann/json.hpp>

#include "g2/rings.hpp"
#include "text.hpp"

namespace g2 {

// ---------------------------------------------------------------------------
// FiniteRing

Value FiniteRing::element(std::int64_t index) const {
  if (index < 0 || index >= size_) {
    throw Error(ErrorCode::InvalidArgument, "element index out of range for " + descriptor());
  }
  return Value(index);
}

Value FiniteRing::divide_exact(const Value& a, const Value& b) const {
  if (auto inv = inverse(b)) return mul(a, *inv);
  for (std::int64_t i = 0; i < size_; ++i) {
    Value q(i);
    if (mul(b, q) == a) return q;
  }
  throw Error(ErrorCode::NotExact, format(a) + " / " + format(b) + " in " + descriptor());
}

bool FiniteRing::is_nilpotent(const Value& a) const {
  return is_zero(pow(a, static_cast<std::uint64_t>(size_)));
}

Value FiniteRing::from_integer(const Integer& n) const {
  // The characteristic divides |R|, so reducing modulo |R| is exact.
  Integer r = n % size_;
  if (r < 0) r += size_;
  return from_int(static_cast<std::int64_t>(r));
}

std::string FiniteRing::format(const Value& a) const { return std::to_string(a.index()); }

Value FiniteRing::parse(std::string_view text) const { return from_integer(text::parse_integer(text)); }

Value FiniteRing::sample(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::int64_t> d(0, size_ - 1);
  return Value(d(rng));
}

bool FiniteRing::is_field() const {
  if (size_ < 2) return false;
  for (std::int64_t i = 0; i < size_; ++i) {
    Value v(i);
    if (!is_zero(v) && !is_unit(v)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// ModularRing

ModularRing::ModularRing(std::int64_t n) : FiniteRing("zmod:" + std::to_string(n), n), n_(n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "zmod modulus must be >= 2");
  if (n > (std::int64_t{1} << 62)) throw Error(ErrorCode::InvalidArgument, "zmod modulus too large");
}

Value ModularRing::from_int(std::int64_t v) const {
  std::int64_t r = v % n_;
  if (r < 0) r += n_;
  return Value(r);
}

Value ModularRing::add(const Value& a, const Value& b) const {
  std::int64_t s = a.index() + b.index();
  if (s >= n_) s -= n_;
  return Value(s);
}

Value ModularRing::neg(const Value& a) const { return Value(a.index() == 0 ? 0 : n_ - a.index()); }

Value ModularRing::sub(const Value& a, const Value& b) const {
  std::int64_t s = a.index() - b.index();
  if (s < 0) s += n_;
  return Value(s);
}

__extension__ using Wide = __int128;

Value ModularRing::mul(const Value& a, const Value& b) const {
  auto p = static_cast<Wide>(a.index()) * b.index();
  return Value(static_cast<std::int64_t>(p % n_));
}

std::optional<Value> ModularRing::inverse(const Value& a) const {
  std::int64_t old_r = a.index(), r = n_;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  if (old_r != 1) return std::nullopt;
  return from_int(old_s);
}

bool ModularRing::has_inverse_of_3() const { return std::gcd(n_, std::int64_t{3}) == 1; }

// ---------------------------------------------------------------------------
// TableRing

TableRing::TableRing(std::string descriptor, Tables tables)
    : FiniteRing(std::move(descriptor), tables.size), tables_(std::move(tables)) {
  const auto n = tables_.size;
  neg_.assign(static_cast<std::size_t>(n), -1);
  inv_.assign(static_cast<std::size_t>(n), -1);
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) {
      const auto k = static_cast<std::size_t>(a * n + b);
      if (tables_.add[k] == tables_.zero) neg_[static_cast<std::size_t>(a)] = static_cast<std::int32_t>(b);
      if (tables_.mul[k] == tables_.one) inv_[static_cast<std::size_t>(a)] = static_cast<std::int32_t>(b);
    }
  }
  if (tables_.labels.empty()) {
    for (std::int64_t a = 0; a < n; ++a) tables_.labels.push_back(std::to_string(a));
  }
}

Value TableRing::from_int(std::int64_t n) const {
  const bool negative = n < 0;
  auto m = static_cast<std::uint64_t>(negative ? -(n % cardinality()) : n % cardinality());
  Value result = zero();
  Value step = one();
  while (m > 0) {
    if (m & 1U) result = add(result, step);
    step = add(step, step);
    m >>= 1U;
  }
  return negative ? neg(result) : result;
}

Value TableRing::add(const Value& a, const Value& b) const {
  return Value(std::int64_t{tables_.add[static_cast<std::size_t>(a.index() * tables_.size + b.index())]});
}

Value TableRing::neg(const Value& a) const { return Value(std::int64_t{neg_[static_cast<std::size_t>(a.index())]}); }

Value TableRing::mul(const Value& a, const Value& b) const {
  return Value(std::int64_t{tables_.mul[static_cast<std::size_t>(a.index() * tables_.size + b.index())]});
}

std::optional<Value> TableRing::inverse(const Value& a) const {
  auto i = inv_[static_cast<std::size_t>(a.index())];
  if (i < 0) return std::nullopt;
  return Value(std::int64_t{i});
}

std::string TableRing::format(const Value& a) const { return tables_.labels[static_cast<std::size_t>(a.index())]; }

Value TableRing::parse(std::string_view text) const {
  const std::string t = text::trim(text);
  for (std::size_t i = 0; i < tables_.labels.size(); ++i) {
    if (tables_.labels[i] == t) return Value(static_cast<std::int64_t>(i));
  }
  throw Error(ErrorCode::ParseError, "'" + t + "' is not an element of " + descriptor());
}

nlohmann::json TableRing::to_json(const Value& a) const { return format(a); }

// ---------------------------------------------------------------------------
// FiniteFieldRing

namespace {

std::vector<int> conway_modulus(int p, int k) {
  // Monic, lowest degree first.
  switch (p * 10 + k) {
    case 21: return {1, 1};
    case 22: return {1, 1, 1};
    case 23: return {1, 1, 0, 1};
    case 31: return {1, 1};
    case 32: return {2, 2, 1};
    case 33: return {1, 2, 0, 1};
    case 51: return {3, 1};
    case 52: return {2, 4, 1};
    case 53: return {3, 3, 0, 1};
    case 71: return {4, 1};
    case 72: return {3, 6, 1};
    case 73: return {4, 0, 6, 1};
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument,
              "finite fields are limited to p in {2,3,5,7}, k <= 3; got " + std::to_string(p) + "^" +
                  std::to_string(k));
}

std::vector<int> digits(std::int64_t v, int p, int k) {
  std::vector<int> d(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    d[static_cast<std::size_t>(i)] = static_cast<int>(v % p);
    v /= p;
  }
  return d;
}

std::int64_t encode(const std::vector<int>& d, int p) {
  std::int64_t v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
  return v;
}

/// Reduces a coefficient vector modulo the monic modulus, to k coefficients.
std::vector<int> reduce(std::vector<int> c, const std::vector<int>& modulus, int p) {
  const int k = static_cast<int>(modulus.size()) - 1;
  for (int deg = static_cast<int>(c.size()) - 1; deg >= k; --deg) {
    int lead = c[static_cast<std::size_t>(deg)] % p;
    if (lead == 0) continue;
    for (int i = 0; i <= k; ++i) {
      auto& slot = c[static_cast<std::size_t>(deg - k + i)];
      slot = ((slot - lead * modulus[static_cast<std::size_t>(i)]) % p + p) % p;
    }
  }
  c.resize(static_cast<std::size_t>(k));
  for (auto& x : c) x = ((x % p) + p) % p;
  return c;
}

bool has_root(const std::vector<int>& modulus, int p) {
  for (int x = 0; x < p; ++x) {
    int acc = 0;
    for (auto it = modulus.rbegin(); it != modulus.rend(); ++it) acc = (acc * x + *it) % p;
    if (acc == 0) return true;
  }
  return false;
}

TableRing::Tables field_tables(int p, int k, const std::vector<int>& modulus) {
  TableRing::Tables t;
  std::int64_t q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  t.size = q;
  t.add.resize(static_cast<std::size_t>(q * q));
  t.mul.resize(static_cast<std::size_t>(q * q));
  for (std::int64_t a = 0; a < q; ++a) {
    auto da = digits(a, p, k);
    for (std::int64_t b = 0; b < q; ++b) {
      auto db = digits(b, p, k);
      std::vector<int> sum(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) {
        sum[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p;
      }
      std::vector<int> prod(static_cast<std::size_t>(2 * k - 1), 0);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          prod[static_cast<std::size_t>(i + j)] += da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)];
        }
      }
      const auto idx = static_cast<std::size_t>(a * q + b);
      t.add[idx] = static_cast<std::int32_t>(encode(sum, p));
      t.mul[idx] = static_cast<std::int32_t>(encode(reduce(prod, modulus, p), p));
    }
  }
  t.zero = 0;
  t.one = 1;
  return t;
}

}  // namespace

FiniteFieldRing::FiniteFieldRing(int p, int k)
    : TableRing("gf:" + std::to_string(p) + "^" + std::to_string(k), field_tables(p, k, conway_modulus(p, k))),
      p_(p),
      k_(k),
      modulus_(conway_modulus(p, k)) {
  if (k_ > 1 && has_root(modulus_, p_)) {
    throw Error(ErrorCode::InvalidArgument, "stored modulus for " + descriptor() + " is reducible");
  }
}

Value FiniteFieldRing::generator() const { return Value(encode(reduce({0, 1}, modulus_, p_), p_)); }

// ---------------------------------------------------------------------------
// DerivedFiniteRing

DerivedFiniteRing::DerivedFiniteRing(Build build)
    : TableRing(build.descriptor, std::move(build.tables)),
      kind_(build.kind),
      base_(std::move(build.base)),
      generators_(std::move(build.ideal_generators)),
      ideal_(std::move(build.ideal)),
      reps_(std::move(build.representatives)),
      class_of_base_(std::move(build.class_of_base)),
      class_of_fraction_(std::move(build.class_of_fraction)) {}

std::int64_t DerivedFiniteRing::ideal_size() const {
  return static_cast<std::int64_t>(std::count(ideal_.begin(), ideal_.end(), true));
}

Value DerivedFiniteRing::image_of(const Value& base_value) const {
  return Value(std::int64_t{class_of_base_[static_cast<std::size_t>(base_value.index())]});
}

Value DerivedFiniteRing::fraction(const Value& a, const Value& s) const {
  if (kind_ != RingKind::Localization) {
    throw Error(ErrorCode::InvalidArgument, descriptor() + " is not a ring of fractions");
  }
  if (in_ideal(s.index())) {
    throw Error(ErrorCode::DomainMismatch, "denominator " + base_->format(s) + " lies in the localized ideal");
  }
  const auto n = *base_->size();
  return Value(std::int64_t{class_of_fraction_[static_cast<std::size_t>(a.index() * n + s.index())]});
}

std::pair<Value, Value> DerivedFiniteRing::representative(const Value& v) const {
  const auto& r = reps_[static_cast<std::size_t>(v.index())];
  return {Value(r.first), Value(r.second)};
}

Value DerivedFiniteRing::parse(std::string_view text) const {
  const std::string t = text::trim(text);
  for (std::size_t i = 0; i < labels().size(); ++i) {
    if (labels()[i] == t) return Value(static_cast<std::int64_t>(i));
  }
  if (kind_ == RingKind::Localization) {
    auto slash = t.find('/');
    if (slash != std::string::npos) return fraction(base_->parse(t.substr(0, slash)), base_->parse(t.substr(slash + 1)));
  }
  std::string inner = t;
  if (inner.size() >= 2 && inner.front() == '[' && inner.back() == ']') inner = inner.substr(1, inner.size() - 2);
  return image_of(base_->parse(inner));
}

nlohmann::json DerivedFiniteRing::to_json(const Value& a) const {
  auto [num, den] = representative(a);
  if (kind_ == RingKind::Localization) return nlohmann::json::array({base_->to_json(num), base_->to_json(den)});
  return base_->to_json(num);
}

Value DerivedFiniteRing::from_json(const nlohmann::json& j) const {
  if (j.is_array() && j.size() == 2 && kind_ == RingKind::Localization) {
    return fraction(base_->from_json(j[0]), base_->from_json(j[1]));
  }
  if (j.is_string()) return parse(j.get<std::string>());
  return image_of(base_->from_json(j));
}

// ---------------------------------------------------------------------------
// ProductRing

namespace {

std::string product_descriptor(const std::vector<Ring>& factors) {
  std::string d = "prod:";
  for (std::size_t i = 0; i < factors.size(); ++i) d += (i ? "," : "") + factors[i].descriptor();
  return d;
}

std::int64_t product_size(const std::vector<Ring>& factors) {
  if (factors.empty()) throw Error(ErrorCode::InvalidArgument, "product needs at least one factor");
  std::int64_t n = 1;
  for (const auto& f : factors) {
    auto s = f->size();
    if (!s) throw Error(ErrorCode::NotFinite, "product factors must be finite, got " + f.descriptor());
    if (n > (std::int64_t{1} << 40) / *s) throw Error(ErrorCode::InvalidArgument, "product ring too large");
    n *= *s;
  }
  return n;
}

}  // namespace

ProductRing::ProductRing(std::vector<Ring> factors)
    : FiniteRing(product_descriptor(factors), product_size(factors)), factors_(std::move(factors)) {
  std::int64_t r = 1;
  for (const auto& f : factors_) {
    radix_.push_back(r);
    r *= *f->size();
  }
  std::vector<Value> z, o;
  for (const auto& f : factors_) {
    z.push_back(f->zero());
    o.push_back(f->one());
  }
  zero_ = combine(z);
  one_ = combine(o);
}

std::vector<Value> ProductRing::components(const Value& a) const {
  std::vector<Value> out;
  out.reserve(factors_.size());
  std::int64_t v = a.index();
  for (const auto& f : factors_) {
    out.push_back(f->element(v % *f->size()));
    v /= *f->size();
  }
  return out;
}

Value ProductRing::combine(const std::vector<Value>& components) const {
  if (components.size() != factors_.size()) {
    throw Error(ErrorCode::InvalidArgument, "wrong number of components for " + descriptor());
  }
  std::int64_t v = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) v += factors_[i]->index_of(components[i]) * radix_[i];
  return Value(v);
}

Value ProductRing::from_int(std::int64_t n) const {
  std::vector<Value> c;
  for (const auto& f : factors_) c.push_back(f->from_int(n));
  return combine(c);
}

Value ProductRing::add(const Value& a, const Value& b) const {
  auto ca = components(a), cb = components(b);
  for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = factors_[i]->add(ca[i], cb[i]);
  return combine(ca);
}

Value ProductRing::neg(const Value& a) const {
  auto ca = components(a);
  for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = factors_[i]->neg(ca[i]);
  return combine(ca);
}

Value ProductRing::mul(const Value& a, const Value& b) const {
  auto ca = components(a), cb = components(b);
  for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = factors_[i]->mul(ca[i], cb[i]);
  return combine(ca);
}

std::optional<Value> ProductRing::inverse(const Value& a) const {
  auto ca = components(a);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    auto inv = factors_[i]->inverse(ca[i]);
    if (!inv) return std::nullopt;
    ca[i] = *inv;
  }
  return combine(ca);
}

bool ProductRing::has_inverse_of_3() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Ring& f) { return f->has_inverse_of_3(); });
}

std::string ProductRing::format(const Value& a) const {
  auto ca = components(a);
  std::string s = "(";
  for (std::size_t i = 0; i < ca.size(); ++i) s += (i ? "," : "") + factors_[i]->format(ca[i]);
  return s + ")";
}

Value ProductRing::parse(std::string_view text) const {
  std::string t = text::trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') {
    throw Error(ErrorCode::ParseError, "product elements are written (a,b,...), got '" + t + "'");
  }
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 1;
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    if (t[i] == '(' || t[i] == '[') ++depth;
    if (t[i] == ')' || t[i] == ']') --depth;
    if (t[i] == ',' && depth == 0) {
      parts.push_back(t.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(t.substr(start, t.size() - 1 - start));
  if (parts.size() != factors_.size()) throw Error(ErrorCode::ParseError, "wrong arity in '" + t + "'");
  std::vector<Value> c;
  for (std::size_t i = 0; i < parts.size(); ++i) c.push_back(factors_[i]->parse(parts[i]));
  return combine(c);
}

nlohmann::json ProductRing::to_json(const Value& a) const {
  auto ca = components(a);
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < ca.size(); ++i) arr.push_back(factors_[i]->to_json(ca[i]));
  return arr;
}

Value ProductRing::from_json(const nlohmann::json& j) const {
  if (j.is_string()) return parse(j.get<std::string>());
  if (!j.is_array() || j.size() != factors_.size()) {
    throw Error(ErrorCode::ParseError, "product element must be an array of " + std::to_string(factors_.size()));
  }
  std::vector<Value> c;
  for (std::size_t i = 0; i < factors_.size(); ++i) c.push_back(factors_[i]->from_json(j[i]));
  return combine(c);
}

}  // namespace g2
