#include "petal/exact.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace petal::exact {

std::optional<Rational> rational_from_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool neg = false;
  size_t i = 0;
  if (text[0] == '+' || text[0] == '-') {
    neg = text[0] == '-';
    i = 1;
  }
  boost::multiprecision::cpp_int num = 0;
  boost::multiprecision::cpp_int den = 1;
  bool seen_digit = false, seen_dot = false;
  long exponent = 0;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (ch >= '0' && ch <= '9') {
      num = num * 10 + (ch - '0');
      if (seen_dot) den *= 10;
      seen_digit = true;
    } else if (ch == '.' && !seen_dot) {
      seen_dot = true;
    } else if ((ch == 'e' || ch == 'E') && seen_digit) {
      auto rest = text.substr(i + 1);
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), exponent);
      if (ec != std::errc() || ptr != rest.data() + rest.size()) return std::nullopt;
      break;
    } else {
      return std::nullopt;
    }
  }
  if (!seen_digit) return std::nullopt;
  if (neg) num = -num;
  Rational r(num, den);
  for (long k = 0; k < exponent; ++k) r *= 10;
  for (long k = 0; k > exponent; --k) r /= 10;
  return r;
}

Rational rational_from_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) return Rational(0);
  auto r = rational_from_decimal(std::string_view(buf, ptr - buf));
  return r ? *r : Rational(0);
}

int sign(const Rational& r) { return r.sign(); }

int orient2d(const RPoint2& p, const RPoint2& q, const RPoint2& r) {
  Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return det.sign();
}

int corner_dot_sign(const RPoint3& v, const RPoint3& p, const RPoint3& q) {
  Rational d = (p.x - v.x) * (q.x - v.x) + (p.y - v.y) * (q.y - v.y) +
               (p.z - v.z) * (q.z - v.z);
  return d.sign();
}

}  // namespace petal::exact
