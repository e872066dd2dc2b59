#pragma once

// Exact rational arithmetic for predicates whose inputs are rational:
// validation (convexity, coplanarity) and obtuseness via dot products.
// Doubles are converted through their shortest decimal representation, so
// table coordinates given to a few decimal digits are handled exactly.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace petal::exact {

using Rational = boost::multiprecision::cpp_rational;

// "-1.5633" -> -15633/10000; returns nullopt on malformed input
std::optional<Rational> rational_from_decimal(std::string_view text);

// Shortest round-trip decimal of x, then exact: double(0.0299) -> 299/10000.
Rational rational_from_double(double x);

int sign(const Rational& r);

struct RPoint2 {
  Rational x, y;
};
struct RPoint3 {
  Rational x, y, z;
};

inline RPoint2 from_xy(double x, double y) {
  return {rational_from_double(x), rational_from_double(y)};
}

// sign of cross(q - p, r - p); exact
int orient2d(const RPoint2& p, const RPoint2& q, const RPoint2& r);

// sign of dot(p - v, q - v); exact. Angle at v is obtuse iff negative.
int corner_dot_sign(const RPoint3& v, const RPoint3& p, const RPoint3& q);

}  // namespace petal::exact
