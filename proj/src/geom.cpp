#include "petal/geom.hpp"

#include <algorithm>
#include <array>
#include <numbers>

#include "petal/exact.hpp"

namespace petal {

namespace {
constexpr double kPi = std::numbers::pi;
// LP box: far beyond any geometry these modules produce, so unbounded wedges
// still report a finite interior witness.
constexpr double kLpBox = 1e7;
}  // namespace

int orient2d(Point2 p, Point2 q, Point2 r, const TolerancePolicy& policy) {
  if (policy.mode == ArithmeticMode::Rational) {
    return exact::orient2d(exact::from_xy(p.x, p.y), exact::from_xy(q.x, q.y),
                           exact::from_xy(r.x, r.y));
  }
  Vec2 u = q - p, v = r - p;
  double det = cross(u, v);
  double scale = norm(u) * norm(v);
  if (std::abs(det) <= policy.eps_predicate * scale) return 0;
  return det > 0 ? 1 : -1;
}

double angle_at(Point2 v, Point2 p, Point2 q) {
  Vec2 u1 = p - v, u2 = q - v;
  if (norm(u1) == 0.0 || norm(u2) == 0.0) throw GeometryError("zero-length ray");
  return std::atan2(std::abs(cross(u1, u2)), dot(u1, u2));
}

double angle_at(Point3 v, Point3 p, Point3 q) {
  Vec3 u1 = p - v, u2 = q - v;
  if (norm(u1) == 0.0 || norm(u2) == 0.0) throw GeometryError("zero-length ray");
  return std::atan2(norm(cross(u1, u2)), dot(u1, u2));
}

Point2 develop_across_hinge(const Point3 face[3], Point3 hinge0, Point3 hinge1,
                            Point2 placed0, Point2 placed1, Side side) {
  const Point3* third = nullptr;
  int hits = 0;
  for (int i = 0; i < 3; ++i) {
    const Point3& v = face[i];
    bool is0 = norm(v - hinge0) == 0.0;
    bool is1 = norm(v - hinge1) == 0.0;
    if (is0 || is1)
      ++hits;
    else
      third = &face[i];
  }
  if (hits != 2 || third == nullptr) throw GeometryError("hinge not on face");

  double len3 = norm(hinge1 - hinge0);
  double len2 = norm(placed1 - placed0);
  if (len3 == 0.0 || std::abs(len2 - len3) > 1e-9 * std::max(1.0, len3))
    throw GeometryError("non-isometric placement");

  double d0 = norm(*third - hinge0);
  double d1 = norm(*third - hinge1);
  double area2 = norm(cross(hinge1 - hinge0, *third - hinge0));
  if (area2 <= 1e-12 * len3 * std::max(d0, d1)) throw GeometryError("degenerate face");

  double x = (d0 * d0 - d1 * d1 + len2 * len2) / (2.0 * len2);
  double y2 = d0 * d0 - x * x;
  double y = std::sqrt(std::max(y2, 0.0));
  Vec2 ex = normalized(placed1 - placed0);
  Vec2 ey = perp(ex);
  double s = side == Side::Left ? 1.0 : -1.0;
  return placed0 + x * ex + (s * y) * ey;
}

HalfPlane HalfPlane::left_of(Point2 p, Point2 q) {
  Vec2 d = q - p;
  // left side satisfies cross(d, x - p) >= 0  ->  (d.y)x - (d.x)y <= d.y*p.x - d.x*p.y
  return {d.y, -d.x, d.y * p.x - d.x * p.y};
}

HalfPlane HalfPlane::right_of(Point2 p, Point2 q) {
  Vec2 d = q - p;
  return {-d.y, d.x, -d.y * p.x + d.x * p.y};
}

HalfPlane HalfPlane::outward(Point2 p, Vec2 n) { return {n.x, n.y, dot(n, {p.x, p.y})}; }

bool ConvexRegion::contains(Point2 p, double eps) const {
  for (const auto& h : halfplanes)
    if (!h.contains(p, eps)) return false;
  return true;
}

bool ConvexRegion::recedes(Vec2 d, double eps) const {
  for (const auto& h : halfplanes) {
    double n = std::hypot(h.a, h.b);
    if ((h.a * d.x + h.b * d.y) / n > eps) return false;
  }
  return true;
}

MarginResult region_margin(const std::vector<HalfPlane>& halfplanes) {
  // Maximize t s.t. a_i.x + |a_i| t <= c_i, solved by enumerating basic
  // solutions of constraint triples (constraint counts here are tiny).
  struct Row {
    double a, b, c;  // unit normal (a,b), offset c
  };
  std::vector<Row> rows;
  rows.reserve(halfplanes.size() + 4);
  for (const auto& h : halfplanes) {
    double n = std::hypot(h.a, h.b);
    rows.push_back({h.a / n, h.b / n, h.c / n});
  }
  rows.push_back({1, 0, kLpBox});
  rows.push_back({-1, 0, kLpBox});
  rows.push_back({0, 1, kLpBox});
  rows.push_back({0, -1, kLpBox});

  auto eval = [&](Point2 p) {
    double m = 1e300;
    for (const auto& r : rows) m = std::min(m, r.c - r.a * p.x - r.b * p.y);
    return m;
  };

  MarginResult best{-1e300, {0, 0}};
  auto consider = [&](Point2 p) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) return;
    double m = eval(p);
    if (m > best.margin) best = {m, p};
  };

  consider({0, 0});
  const size_t k = rows.size();
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i + 1; j < k; ++j) {
      for (size_t l = j + 1; l < k; ++l) {
        // solve a.x + t = c for the triple
        double m[3][3] = {{rows[i].a, rows[i].b, 1},
                          {rows[j].a, rows[j].b, 1},
                          {rows[l].a, rows[l].b, 1}};
        double rhs[3] = {rows[i].c, rows[j].c, rows[l].c};
        double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (std::abs(det) < 1e-14) continue;
        double x = (rhs[0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                    m[0][1] * (rhs[1] * m[2][2] - m[1][2] * rhs[2]) +
                    m[0][2] * (rhs[1] * m[2][1] - m[1][1] * rhs[2])) /
                   det;
        double y = (m[0][0] * (rhs[1] * m[2][2] - m[1][2] * rhs[2]) -
                    rhs[0] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                    m[0][2] * (m[1][0] * rhs[2] - rhs[1] * m[2][0])) /
                   det;
        consider({x, y});
      }
    }
  }
  return best;
}

namespace {

RegionIntersection classify(const MarginResult& m, const TolerancePolicy& policy) {
  RegionIntersection out;
  out.margin = m.margin;
  out.witness = m.witness;
  if (m.margin > policy.eps_predicate)
    out.status = RegionStatus::Overlapping;
  else if (m.margin >= -policy.eps_predicate)
    out.status = RegionStatus::Touching;
  else
    out.status = RegionStatus::Disjoint;
  return out;
}

RegionIntersection better(RegionIntersection a, RegionIntersection b) {
  return a.margin >= b.margin ? a : b;
}

}  // namespace

RegionIntersection region_intersects(const ConvexRegion& r1, const ConvexRegion& r2,
                                     const TolerancePolicy& policy) {
  std::vector<HalfPlane> all = r1.halfplanes;
  all.insert(all.end(), r2.halfplanes.begin(), r2.halfplanes.end());
  return classify(region_margin(all), policy);
}

Sector Sector::from_directions(Point2 apex, Vec2 u, Vec2 v) {
  Sector s;
  s.apex = apex;
  s.dirU = normalized(u);
  s.dirV = normalized(v);
  double a = std::atan2(s.dirU.y, s.dirU.x);
  double b = std::atan2(s.dirV.y, s.dirV.x);
  s.span = b - a;
  while (s.span < 0) s.span += 2 * kPi;
  while (s.span >= 2 * kPi) s.span -= 2 * kPi;
  return s;
}

std::vector<ConvexRegion> Sector::convex_parts() const {
  auto cone = [&](Vec2 u, Vec2 v) {
    ConvexRegion r;
    r.halfplanes.push_back(HalfPlane::left_of(apex, apex + u));
    r.halfplanes.push_back(HalfPlane::right_of(apex, apex + v));
    for (const auto& h : extra) r.halfplanes.push_back(h);
    return r;
  };
  if (!reflex()) return {cone(dirU, dirV)};
  double a = std::atan2(dirU.y, dirU.x) + span / 2;
  Vec2 mid{std::cos(a), std::sin(a)};
  return {cone(dirU, mid), cone(mid, dirV)};
}

bool Sector::contains(Point2 p, double eps) const {
  for (const auto& h : extra)
    if (!h.contains(p, eps)) return false;
  Vec2 r = p - apex;
  double n = norm(r);
  if (n <= eps) return true;
  double a = std::atan2(dirU.y, dirU.x);
  double th = std::atan2(r.y, r.x) - a;
  while (th < 0) th += 2 * kPi;
  while (th >= 2 * kPi) th -= 2 * kPi;
  double slack = eps / std::max(n, eps);  // angular tolerance from linear eps
  return th <= span + slack || th >= 2 * kPi - slack;
}

RegionIntersection region_intersects(const Sector& s1, const Sector& s2,
                                     const TolerancePolicy& policy) {
  RegionIntersection best;
  best.margin = -1e300;
  for (const auto& p1 : s1.convex_parts())
    for (const auto& p2 : s2.convex_parts())
      best = better(best, region_intersects(p1, p2, policy));
  return best;
}

RegionIntersection region_intersects(const Sector& s, const ConvexRegion& r,
                                     const TolerancePolicy& policy) {
  RegionIntersection best;
  best.margin = -1e300;
  for (const auto& p : s.convex_parts()) best = better(best, region_intersects(p, r, policy));
  return best;
}

double polygon_area(const std::vector<Point2>& poly) {
  double s = 0;
  for (size_t i = 0; i < poly.size(); ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % poly.size()];
    s += p.x * q.y - q.x * p.y;
  }
  return s / 2;
}

bool polygon_is_ccw(const std::vector<Point2>& poly) { return polygon_area(poly) > 0; }

Point2 polygon_centroid(const std::vector<Point2>& poly) {
  double a = 0, cx = 0, cy = 0;
  for (size_t i = 0; i < poly.size(); ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % poly.size()];
    double w = p.x * q.y - q.x * p.y;
    a += w;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  if (std::abs(a) < 1e-300) return poly.empty() ? Point2{0, 0} : poly[0];
  return {cx / (3 * a), cy / (3 * a)};
}

std::vector<Point2> clip_polygon(std::vector<Point2> poly,
                                 const std::vector<HalfPlane>& halfplanes) {
  for (const auto& h : halfplanes) {
    if (poly.empty()) break;
    std::vector<Point2> out;
    out.reserve(poly.size() + 2);
    for (size_t i = 0; i < poly.size(); ++i) {
      Point2 cur = poly[i];
      Point2 nxt = poly[(i + 1) % poly.size()];
      double fc = h.a * cur.x + h.b * cur.y - h.c;
      double fn = h.a * nxt.x + h.b * nxt.y - h.c;
      if (fc <= 0) out.push_back(cur);
      if ((fc < 0 && fn > 0) || (fc > 0 && fn < 0)) {
        double t = fc / (fc - fn);
        out.push_back(cur + t * (nxt - cur));
      }
    }
    poly = std::move(out);
  }
  return poly;
}

double polygon_separation(const std::vector<Point2>& p, const std::vector<Point2>& q) {
  double best = -1e300;
  auto axes_of = [&](const std::vector<Point2>& poly) {
    for (size_t i = 0; i < poly.size(); ++i) {
      Vec2 e = poly[(i + 1) % poly.size()] - poly[i];
      double n = norm(e);
      if (n == 0) continue;
      Vec2 axis = {e.y / n, -e.x / n};
      double pmin = 1e300, pmax = -1e300, qmin = 1e300, qmax = -1e300;
      for (const auto& v : p) {
        double d = dot(axis, v);
        pmin = std::min(pmin, d);
        pmax = std::max(pmax, d);
      }
      for (const auto& v : q) {
        double d = dot(axis, v);
        qmin = std::min(qmin, d);
        qmax = std::max(qmax, d);
      }
      best = std::max(best, std::max(qmin - pmax, pmin - qmax));
    }
  };
  axes_of(p);
  axes_of(q);
  return best;
}

}  // namespace petal
