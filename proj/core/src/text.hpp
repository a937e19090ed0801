#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "g2/error.hpp"
#include "g2/value.hpp"

namespace g2::text {

inline std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

inline std::int64_t parse_int64(std::string_view s) {
  std::string t = trim(s);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw Error(ErrorCode::ParseError, "expected an integer, got '" + t + "'");
  }
  return v;
}

inline Integer parse_integer(std::string_view s) {
  std::string t = trim(s);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  std::size_t digits_from = (!t.empty() && t[0] == '-') ? 1 : 0;
  if (t.size() == digits_from) throw Error(ErrorCode::ParseError, "expected an integer, got '" + t + "'");
  for (std::size_t i = digits_from; i < t.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
      throw Error(ErrorCode::ParseError, "expected an integer, got '" + t + "'");
    }
  }
  return Integer(t);
}

inline Rational parse_rational(std::string_view s) {
  std::string t = trim(s);
  auto slash = t.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(t));
  Integer den = parse_integer(t.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + t + "'");
  return Rational(parse_integer(t.substr(0, slash)), den);
}

inline std::string format_rational(const Rational& q) {
  const Integer& den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

inline bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (Integer d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace g2::text
