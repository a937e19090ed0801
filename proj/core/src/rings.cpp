#include "g2/rings.hpp"

#include <map>
#include <mutex>

#include <nlohmann/json.hpp>

#include "materialize.hpp"
#include "text.hpp"

namespace g2 {

// ---------------------------------------------------------------------------
// Monomial / Value

Monomial Monomial::variable(std::size_t index, unsigned power) {
  if (index >= kMaxVariables || power > 255) {
    throw Error(ErrorCode::InvalidArgument, "monomial variable/power out of range");
  }
  Monomial m;
  m.exps[index] = static_cast<std::uint8_t>(power);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exps) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps[i] > other.exps[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = unsigned{exps[i]} + other.exps[i];
    if (e > 255) throw Error(ErrorCode::InvalidArgument, "monomial exponent overflow");
    r.exps[i] = static_cast<std::uint8_t>(e);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps[i] = static_cast<std::uint8_t>(exps[i] - divisor.exps[i]);
  }
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (auto c = a.exps[i] <=> b.exps[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool operator==(const Value& a, const Value& b) {
  if (a.data_.index() != b.data_.index()) return false;
  if (a.holds_poly()) {
    const auto& pa = a.poly();
    const auto& pb = b.poly();
    if (pa == pb) return true;
    if (!pa || !pb) return false;
    if (pa->terms.size() != pb->terms.size()) return false;
    for (std::size_t i = 0; i < pa->terms.size(); ++i) {
      if (pa->terms[i].first != pb->terms[i].first) return false;
      if (!(pa->terms[i].second == pb->terms[i].second)) return false;
    }
    return true;
  }
  return a.data_ == b.data_;
}

// ---------------------------------------------------------------------------
// RingImpl defaults

Value RingImpl::divide_exact(const Value& a, const Value& b) const {
  if (auto inv = inverse(b)) return mul(a, *inv);
  throw Error(ErrorCode::NotExact, format(a) + " / " + format(b) + " in " + descriptor());
}

bool RingImpl::is_nilpotent(const Value& a) const { return is_zero(a); }

Value RingImpl::pow(const Value& a, std::uint64_t e) const {
  Value result = one();
  Value base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

Value RingImpl::element(std::int64_t) const {
  throw Error(ErrorCode::NotFinite, descriptor() + " cannot be enumerated");
}

std::int64_t RingImpl::index_of(const Value&) const {
  throw Error(ErrorCode::NotFinite, descriptor() + " cannot be enumerated");
}

std::vector<Value> RingImpl::elements() const {
  auto n = size();
  if (!n) throw Error(ErrorCode::NotFinite, descriptor() + " is not finite");
  std::vector<Value> out;
  out.reserve(static_cast<std::size_t>(*n));
  for (std::int64_t i = 0; i < *n; ++i) out.push_back(element(i));
  return out;
}

nlohmann::json RingImpl::to_json(const Value& a) const { return format(a); }

Value RingImpl::from_json(const nlohmann::json& j) const {
  if (j.is_string()) return parse(j.get<std::string>());
  if (j.is_number_integer()) return from_int(j.get<std::int64_t>());
  throw Error(ErrorCode::ParseError, "unexpected JSON value for " + descriptor() + ": " + j.dump());
}

// ---------------------------------------------------------------------------
// Integers

Value IntegerRing::add(const Value& a, const Value& b) const { return Value(Integer(a.integer() + b.integer())); }
Value IntegerRing::neg(const Value& a) const { return Value(Integer(-a.integer())); }
Value IntegerRing::sub(const Value& a, const Value& b) const { return Value(Integer(a.integer() - b.integer())); }
Value IntegerRing::mul(const Value& a, const Value& b) const { return Value(Integer(a.integer() * b.integer())); }

std::optional<Value> IntegerRing::inverse(const Value& a) const {
  if (a.integer() == 1 || a.integer() == -1) return a;
  return std::nullopt;
}

Value IntegerRing::divide_exact(const Value& a, const Value& b) const {
  if (b.integer() == 0) throw Error(ErrorCode::NotExact, "division by zero");
  Integer q, r;
  boost::multiprecision::divide_qr(a.integer(), b.integer(), q, r);
  if (r != 0) throw Error(ErrorCode::NotExact, a.integer().str() + " / " + b.integer().str());
  return Value(std::move(q));
}

std::string IntegerRing::format(const Value& a) const { return a.integer().str(); }

Value IntegerRing::parse(std::string_view text) const { return Value(text::parse_integer(text)); }

Value IntegerRing::sample(std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> d(-20, 20);
  return from_int(d(rng));
}

// ---------------------------------------------------------------------------
// Rationals

Value RationalRing::add(const Value& a, const Value& b) const { return Value(Rational(a.rational() + b.rational())); }
Value RationalRing::neg(const Value& a) const { return Value(Rational(-a.rational())); }
Value RationalRing::sub(const Value& a, const Value& b) const { return Value(Rational(a.rational() - b.rational())); }
Value RationalRing::mul(const Value& a, const Value& b) const { return Value(Rational(a.rational() * b.rational())); }

std::optional<Value> RationalRing::inverse(const Value& a) const {
  if (a.rational() == 0) return std::nullopt;
  return Value(Rational(1 / a.rational()));
}

std::string RationalRing::format(const Value& a) const { return text::format_rational(a.rational()); }

Value RationalRing::parse(std::string_view text) const { return Value(text::parse_rational(text)); }

Value RationalRing::sample(std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 7);
  return Value(Rational(num(rng), den(rng)));
}

// ---------------------------------------------------------------------------
// Z_(p)

IntegerLocalizationRing::IntegerLocalizationRing(std::int64_t p)
    : RingImpl("loc:int:" + std::to_string(p)), p_(p) {}

Value IntegerLocalizationRing::fraction(const Integer& a, const Integer& s) const {
  if (s % p_ == 0) {
    throw Error(ErrorCode::NotAUnit, "denominator " + s.str() + " lies in (" + std::to_string(p_) + ")");
  }
  return Value(Rational(a, s));
}

Value IntegerLocalizationRing::add(const Value& a, const Value& b) const {
  return Value(Rational(a.rational() + b.rational()));
}
Value IntegerLocalizationRing::neg(const Value& a) const { return Value(Rational(-a.rational())); }
Value IntegerLocalizationRing::mul(const Value& a, const Value& b) const {
  return Value(Rational(a.rational() * b.rational()));
}

std::optional<Value> IntegerLocalizationRing::inverse(const Value& a) const {
  const Integer num = boost::multiprecision::numerator(a.rational());
  if (num % p_ == 0) return std::nullopt;
  return Value(Rational(1 / a.rational()));
}

std::string IntegerLocalizationRing::format(const Value& a) const {
  return text::format_rational(a.rational());
}

Value IntegerLocalizationRing::parse(std::string_view text) const {
  Rational q = text::parse_rational(text);
  return fraction(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

nlohmann::json IntegerLocalizationRing::to_json(const Value& a) const {
  return nlohmann::json::array({boost::multiprecision::numerator(a.rational()).str(),
                                boost::multiprecision::denominator(a.rational()).str()});
}

Value IntegerLocalizationRing::from_json(const nlohmann::json& j) const {
  if (j.is_array() && j.size() == 2) {
    return fraction(text::parse_integer(j[0].get<std::string>()), text::parse_integer(j[1].get<std::string>()));
  }
  return RingImpl::from_json(j);
}

Value IntegerLocalizationRing::sample(std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 9);
  int s = den(rng);
  while (s % p_ == 0) ++s;
  return fraction(num(rng), s);
}

// ---------------------------------------------------------------------------
// Ring registry and descriptor parsing

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, std::shared_ptr<const RingImpl>, std::less<>>& registry() {
  static std::map<std::string, std::shared_ptr<const RingImpl>, std::less<>> r;
  return r;
}

template <class Factory>
Ring intern(const std::string& key, Factory&& make) {
  {
    std::lock_guard lock(registry_mutex());
    auto it = registry().find(key);
    if (it != registry().end()) return Ring(it->second);
  }
  // Construction may recurse into the registry (bases, factors), so it runs
  // unlocked; the first inserted instance wins.
  std::shared_ptr<const RingImpl> made = make();
  std::lock_guard lock(registry_mutex());
  auto [it, inserted] = registry().emplace(key, std::move(made));
  return Ring(it->second);
}

bool is_ring_keyword_at(std::string_view s, std::size_t pos) {
  for (std::string_view kw : {"int", "rat", "zmod:", "gf:", "poly:", "loc:", "prod:", "quot:"}) {
    if (s.substr(pos, kw.size()) == kw) return true;
  }
  return false;
}

std::vector<std::string> split_factors(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == ',' && is_ring_keyword_at(s, i + 1)) {
      out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.emplace_back(s.substr(start));
  return out;
}

std::vector<Value> parse_generators(const Ring& base, std::string_view list) {
  std::vector<Value> gens;
  for (const auto& piece : text::split(list, ',')) gens.push_back(base->parse(text::trim(piece)));
  return gens;
}

std::string generator_key(const Ring& base, const std::vector<Value>& gens) {
  std::string key;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) key += ",";
    key += base->format(gens[i]);
  }
  return key;
}

}  // namespace

Ring Ring::integers() {
  return intern("int", [] { return std::make_shared<const IntegerRing>(); });
}

Ring Ring::rationals() {
  return intern("rat", [] { return std::make_shared<const RationalRing>(); });
}

Ring Ring::modular(std::int64_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "zmod modulus must be >= 2, got " + std::to_string(n));
  return intern("zmod:" + std::to_string(n), [n] { return std::make_shared<const ModularRing>(n); });
}

Ring Ring::finite_field(int p, int k) {
  std::string key = "gf:" + std::to_string(p) + "^" + std::to_string(k);
  return intern(key, [p, k] { return std::make_shared<const FiniteFieldRing>(p, k); });
}

Ring Ring::polynomial(const Ring& base, std::vector<std::string> variables) {
  std::string key = "poly:" + base.descriptor() + ":";
  for (std::size_t i = 0; i < variables.size(); ++i) key += (i ? "," : "") + variables[i];
  return intern(key, [&] { return std::make_shared<const PolynomialRing>(base, variables); });
}

Ring Ring::product(std::vector<Ring> factors) {
  std::string key = "prod:";
  for (std::size_t i = 0; i < factors.size(); ++i) key += (i ? "," : "") + factors[i].descriptor();
  return intern(key, [&] { return std::make_shared<const ProductRing>(factors); });
}

Ring Ring::localization(const Ring& base, const std::vector<Value>& generators) {
  if (base->kind() == RingKind::Integers) {
    if (generators.size() != 1) {
      throw Error(ErrorCode::InvalidArgument, "localization of int needs exactly one prime generator");
    }
    Integer p = boost::multiprecision::abs(generators[0].integer());
    if (!text::is_prime(p)) {
      throw Error(ErrorCode::NotMaximal, "(" + p.str() + ") is not a prime ideal of int");
    }
    auto pv = static_cast<std::int64_t>(p);
    return intern("loc:int:" + p.str(), [pv] { return std::make_shared<const IntegerLocalizationRing>(pv); });
  }
  if (!base->is_finite()) {
    throw Error(ErrorCode::UndecidableBase, "localization needs a finite base or int, got " + base.descriptor());
  }
  std::string key = "loc:" + base.descriptor() + ":" + generator_key(base, generators);
  return intern(key, [&] { return detail::materialize_localization(base, generators, key); });
}

Ring Ring::quotient(const Ring& base, const std::vector<Value>& generators) {
  if (!base->is_finite()) {
    throw Error(ErrorCode::NotFinite, "quotients are materialized for finite bases only");
  }
  std::string key = "quot:" + base.descriptor() + ":" + generator_key(base, generators);
  return intern(key, [&] { return detail::materialize_quotient(base, generators, key); });
}

Ring Ring::parse(std::string_view descriptor) {
  const std::string d = text::trim(descriptor);
  if (d == "int") return integers();
  if (d == "rat") return rationals();
  if (d.rfind("zmod:", 0) == 0) return modular(text::parse_int64(d.substr(5)));
  if (d.rfind("gf:", 0) == 0) {
    auto body = d.substr(3);
    auto caret = body.find('^');
    int p = static_cast<int>(text::parse_int64(body.substr(0, caret)));
    int k = caret == std::string::npos ? 1 : static_cast<int>(text::parse_int64(body.substr(caret + 1)));
    return finite_field(p, k);
  }
  if (d.rfind("poly:", 0) == 0) {
    auto body = d.substr(5);
    auto colon = body.rfind(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "poly descriptor needs variables: " + d);
    Ring base = parse(body.substr(0, colon));
    std::vector<std::string> vars;
    for (const auto& v : text::split(body.substr(colon + 1), ',')) vars.push_back(text::trim(v));
    return polynomial(base, std::move(vars));
  }
  if (d.rfind("loc:", 0) == 0 || d.rfind("quot:", 0) == 0) {
    const bool loc = d[0] == 'l';
    auto body = d.substr(loc ? 4 : 5);
    auto colon = body.rfind(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "missing ideal generators: " + d);
    Ring base = parse(body.substr(0, colon));
    auto gens = parse_generators(base, body.substr(colon + 1));
    return loc ? localization(base, gens) : quotient(base, gens);
  }
  if (d.rfind("prod:", 0) == 0) {
    std::vector<Ring> factors;
    for (const auto& f : split_factors(std::string_view(d).substr(5))) factors.push_back(parse(f));
    return product(std::move(factors));
  }
  throw Error(ErrorCode::ParseError, "unknown ring descriptor '" + d + "'");
}

// ---------------------------------------------------------------------------
// RingElement

void RingElement::check_same(const RingElement& o) const {
  if (!(ring_ == o.ring_)) {
    throw Error(ErrorCode::DescriptorMismatch, ring_.descriptor() + " vs " + o.ring_.descriptor());
  }
}

RingElement RingElement::operator+(const RingElement& o) const {
  check_same(o);
  return {ring_, ring_->add(value_, o.value_)};
}

RingElement RingElement::operator-(const RingElement& o) const {
  check_same(o);
  return {ring_, ring_->sub(value_, o.value_)};
}

RingElement RingElement::operator*(const RingElement& o) const {
  check_same(o);
  return {ring_, ring_->mul(value_, o.value_)};
}

RingElement RingElement::operator-() const { return {ring_, ring_->neg(value_)}; }

RingElement RingElement::inverse() const {
  auto inv = ring_->inverse(value_);
  if (!inv) throw Error(ErrorCode::NotAUnit, to_string() + " in " + ring_.descriptor());
  return {ring_, *inv};
}

RingElement ring_arith(ArithOp op, const RingElement& a, const std::optional<RingElement>& b) {
  auto need_b = [&]() -> const RingElement& {
    if (!b) throw Error(ErrorCode::InvalidArgument, "binary operation needs two operands");
    return *b;
  };
  switch (op) {
    case ArithOp::Add: return a + need_b();
    case ArithOp::Mul: return a * need_b();
    case ArithOp::Neg: return -a;
    case ArithOp::Inv: return a.inverse();
  }
  throw Error(ErrorCode::InvalidArgument, "unknown operation");
}

}  // namespace g2
