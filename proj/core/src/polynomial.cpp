#include <algorithm>
#include <cctype>
#include <set>

#include <nlohmann/json.hpp>

#include "g2/rings.hpp"
#include "text.hpp"

namespace g2 {

namespace {

const std::vector<Term>& empty_terms() {
  static const std::vector<Term> e;
  return e;
}

bool valid_name(const std::string& v) {
  if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0]))) return false;
  return std::all_of(v.begin(), v.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

PolynomialRing::PolynomialRing(Ring base, std::vector<std::string> variables)
    : RingImpl([&] {
        std::string d = "poly:" + base.descriptor() + ":";
        for (std::size_t i = 0; i < variables.size(); ++i) d += (i ? "," : "") + variables[i];
        return d;
      }()),
      base_(std::move(base)),
      vars_(std::move(variables)) {
  if (vars_.empty() || vars_.size() > kMaxVariables) {
    throw Error(ErrorCode::InvalidArgument, "polynomial rings take 1 to 8 variables");
  }
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (!valid_name(v)) throw Error(ErrorCode::InvalidArgument, "bad variable name '" + v + "'");
    if (!seen.insert(v).second) throw Error(ErrorCode::InvalidArgument, "duplicate variable '" + v + "'");
  }
}

const std::vector<Term>& PolynomialRing::terms(const Value& p) {
  const auto& ptr = p.poly();
  return ptr ? ptr->terms : empty_terms();
}

Value PolynomialRing::constant(const Value& c) const {
  if (base_->is_zero(c)) return zero();
  auto data = std::make_shared<PolyData>();
  data->terms.emplace_back(Monomial{}, c);
  return Value(Value::PolyPtr(std::move(data)));
}

Value PolynomialRing::variable(std::size_t index) const {
  if (index >= vars_.size()) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  return monomial(Monomial::variable(index), base_->one());
}

Value PolynomialRing::variable(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return variable(i);
  }
  throw Error(ErrorCode::ParseError, "unknown variable '" + std::string(name) + "' in " + descriptor());
}

Value PolynomialRing::monomial(const Monomial& m, const Value& coeff) const {
  for (std::size_t i = vars_.size(); i < kMaxVariables; ++i) {
    if (m.exps[i] != 0) throw Error(ErrorCode::InvalidArgument, "monomial uses an undeclared variable");
  }
  if (base_->is_zero(coeff)) return zero();
  auto data = std::make_shared<PolyData>();
  data->terms.emplace_back(m, coeff);
  return Value(Value::PolyPtr(std::move(data)));
}

Value PolynomialRing::from_terms(std::vector<Term> in) const {
  std::sort(in.begin(), in.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  auto data = std::make_shared<PolyData>();
  for (auto& t : in) {
    if (!data->terms.empty() && data->terms.back().first == t.first) {
      data->terms.back().second = base_->add(data->terms.back().second, t.second);
    } else {
      if (!data->terms.empty() && base_->is_zero(data->terms.back().second)) data->terms.pop_back();
      data->terms.push_back(std::move(t));
    }
  }
  if (!data->terms.empty() && base_->is_zero(data->terms.back().second)) data->terms.pop_back();
  if (data->terms.empty()) return zero();
  return Value(Value::PolyPtr(std::move(data)));
}

Value PolynomialRing::coefficient(const Value& p, const Monomial& m) const {
  for (const auto& [mono, c] : terms(p)) {
    if (mono == m) return c;
  }
  return base_->zero();
}

unsigned PolynomialRing::total_degree(const Value& p) const {
  const auto& t = terms(p);
  return t.empty() ? 0 : t.back().first.degree();
}

Value PolynomialRing::add(const Value& a, const Value& b) const {
  const auto& ta = terms(a);
  const auto& tb = terms(b);
  if (ta.empty()) return b;
  if (tb.empty()) return a;
  auto data = std::make_shared<PolyData>();
  data->terms.reserve(ta.size() + tb.size());
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size() || (i < ta.size() && ta[i].first < tb[j].first)) {
      data->terms.push_back(ta[i++]);
    } else if (i == ta.size() || tb[j].first < ta[i].first) {
      data->terms.push_back(tb[j++]);
    } else {
      Value s = base_->add(ta[i].second, tb[j].second);
      if (!base_->is_zero(s)) data->terms.emplace_back(ta[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  if (data->terms.empty()) return zero();
  return Value(Value::PolyPtr(std::move(data)));
}

Value PolynomialRing::neg(const Value& a) const {
  const auto& ta = terms(a);
  if (ta.empty()) return a;
  auto data = std::make_shared<PolyData>();
  data->terms.reserve(ta.size());
  for (const auto& [m, c] : ta) data->terms.emplace_back(m, base_->neg(c));
  return Value(Value::PolyPtr(std::move(data)));
}

Value PolynomialRing::mul(const Value& a, const Value& b) const {
  const auto& ta = terms(a);
  const auto& tb = terms(b);
  if (ta.empty() || tb.empty()) return zero();
  std::vector<Term> out;
  out.reserve(ta.size() * tb.size());
  for (const auto& [ma, ca] : ta) {
    for (const auto& [mb, cb] : tb) {
      Value c = base_->mul(ca, cb);
      if (!base_->is_zero(c)) out.emplace_back(ma * mb, std::move(c));
    }
  }
  return from_terms(std::move(out));
}

bool PolynomialRing::is_nilpotent(const Value& a) const {
  return std::all_of(terms(a).begin(), terms(a).end(), [&](const Term& t) { return base_->is_nilpotent(t.second); });
}

std::optional<Value> PolynomialRing::inverse(const Value& a) const {
  // A polynomial is a unit iff its constant term is a unit and the rest is nilpotent.
  Value c = coefficient(a, Monomial{});
  auto cinv = base_->inverse(c);
  if (!cinv) return std::nullopt;
  Value rest = sub(a, constant(c));
  if (!is_nilpotent(rest)) return std::nullopt;
  // a^{-1} = c^{-1} * sum_k (-c^{-1} rest)^k
  Value q = mul(constant(base_->neg(*cinv)), rest);
  Value sum = one();
  Value power = one();
  for (int k = 0; k < 4096; ++k) {
    power = mul(power, q);
    if (is_zero(power)) return mul(constant(*cinv), sum);
    sum = add(sum, power);
  }
  return std::nullopt;
}

Value PolynomialRing::divide_exact(const Value& a, const Value& b) const {
  if (is_zero(b)) throw Error(ErrorCode::NotExact, "division by zero in " + descriptor());
  const Term& lead_b = terms(b).back();
  Value rem = a;
  std::vector<Term> quotient;
  while (!is_zero(rem)) {
    const Term& lead = terms(rem).back();
    if (!lead_b.first.divides(lead.first)) {
      throw Error(ErrorCode::NotExact, format(a) + " is not divisible by " + format(b));
    }
    Value c;
    try {
      c = base_->divide_exact(lead.second, lead_b.second);
    } catch (const Error&) {
      throw Error(ErrorCode::NotExact, format(a) + " is not divisible by " + format(b));
    }
    Monomial m = lead.first / lead_b.first;
    quotient.emplace_back(m, c);
    Value before = rem;
    rem = sub(rem, mul(monomial(m, c), b));
    if (!is_zero(rem) && !(terms(rem).back().first < terms(before).back().first)) {
      throw Error(ErrorCode::NotExact, format(a) + " is not divisible by " + format(b));
    }
  }
  return from_terms(std::move(quotient));
}

std::string PolynomialRing::format_monomial(const Monomial& m) const {
  std::string s;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars_[i];
    if (m.exps[i] > 1) s += "^" + std::to_string(m.exps[i]);
  }
  return s.empty() ? "1" : s;
}

std::string PolynomialRing::format(const Value& a) const {
  const auto& t = terms(a);
  if (t.empty()) return base_->format(base_->zero());
  std::string out;
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    std::string c = base_->format(it->second);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (c.find_first_of("+-* ") != std::string::npos) c = "(" + c + ")";
    std::string body;
    if (it->first.is_constant()) {
      body = c;
    } else if (c == "1") {
      body = format_monomial(it->first);
    } else {
      body = c + "*" + format_monomial(it->first);
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

namespace {

/// Recursive-descent parser for polynomial expressions with + - * ^ and
/// parentheses. Numeric literals (digits, optionally "/digits") go to the
/// base ring's parser.
class PolyParser {
 public:
  PolyParser(const PolynomialRing& ring, std::string_view text) : ring_(ring), s_(text) {}

  Value run() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) fail();
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail() const {
    throw Error(ErrorCode::ParseError, "cannot parse '" + std::string(s_) + "' in " + ring_.descriptor());
  }

  Value expr() {
    Value v = eat('-') ? ring_.neg(term()) : (eat('+'), term());
    for (;;) {
      if (eat('+')) {
        v = ring_.add(v, term());
      } else if (eat('-')) {
        v = ring_.sub(v, term());
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = factor();
    while (eat('*')) v = ring_.mul(v, factor());
    return v;
  }

  Value factor() {
    Value v = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail();
      v = ring_.pow(v, static_cast<std::uint64_t>(text::parse_int64(s_.substr(start, pos_ - start))));
    }
    return v;
  }

  Value atom() {
    skip();
    if (pos_ >= s_.size()) fail();
    if (eat('(')) {
      Value v = expr();
      if (!eat(')')) fail();
      return v;
    }
    if (eat('-')) return ring_.neg(atom());
    char c = s_[pos_];
    std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
      return ring_.constant(ring_.base()->parse(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return ring_.variable(s_.substr(start, pos_ - start));
    }
    fail();
  }

  const PolynomialRing& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Value PolynomialRing::parse(std::string_view text) const { return PolyParser(*this, text).run(); }

Monomial PolynomialRing::parse_monomial(std::string_view text) const {
  Value v = parse(text);
  const auto& t = terms(v);
  if (t.size() != 1 || !base_->is_one(t[0].second)) {
    throw Error(ErrorCode::ParseError, "'" + std::string(text) + "' is not a monomial");
  }
  return t[0].first;
}

nlohmann::json PolynomialRing::to_json(const Value& a) const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [m, c] : terms(a)) j[format_monomial(m)] = base_->to_json(c);
  return j;
}

Value PolynomialRing::from_json(const nlohmann::json& j) const {
  if (j.is_string()) return parse(j.get<std::string>());
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "polynomial JSON must be an object of monomial: coefficient");
  std::vector<Term> t;
  for (const auto& [key, coeff] : j.items()) t.emplace_back(parse_monomial(key), base_->from_json(coeff));
  return from_terms(std::move(t));
}

Value PolynomialRing::sample(std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> nterms(0, 3);
  std::uniform_int_distribution<int> exp(0, 2);
  std::vector<Term> t;
  for (int k = nterms(rng); k > 0; --k) {
    Monomial m;
    for (std::size_t i = 0; i < vars_.size(); ++i) m.exps[i] = static_cast<std::uint8_t>(exp(rng));
    t.emplace_back(m, base_->sample(rng));
  }
  return from_terms(std::move(t));
}

}  // namespace g2
