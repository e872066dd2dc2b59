#include "petal/prismatoid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "petal/exact.hpp"

namespace petal {

namespace {

constexpr double kPi = std::numbers::pi;

double poly_scale(const std::vector<Point3>& pts) {
  double s = 1.0;
  for (const auto& p : pts) s = std::max({s, std::abs(p.x), std::abs(p.y), std::abs(p.z)});
  return s;
}

// Newell normal of a (near-)planar polygon.
Vec3 newell_normal(const std::vector<Point3>& pts) {
  Vec3 n{0, 0, 0};
  for (size_t i = 0; i < pts.size(); ++i) {
    const Point3& p = pts[i];
    const Point3& q = pts[(i + 1) % pts.size()];
    n.x += (p.y - q.y) * (p.z + q.z);
    n.y += (p.z - q.z) * (p.x + q.x);
    n.z += (p.x - q.x) * (p.y + q.y);
  }
  return n;
}

void check_polygon(const std::vector<Point3>& pts, const TolerancePolicy& policy,
                   bool rational_ok) {
  if (pts.size() < 3) throw ValidationError("fewer than 3 vertices");
  double scale = poly_scale(pts);
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (norm(pts[i] - pts[j]) <= policy.eps_predicate * scale)
        throw ValidationError("repeated vertex");
  // strict convexity of the projected polygon, all turns the same way
  int want = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    Point2 a = project(pts[i]);
    Point2 b = project(pts[(i + 1) % pts.size()]);
    Point2 c = project(pts[(i + 2) % pts.size()]);
    int s;
    if (rational_ok) {
      s = exact::orient2d(exact::from_xy(a.x, a.y), exact::from_xy(b.x, b.y),
                          exact::from_xy(c.x, c.y));
    } else {
      s = orient2d(a, b, c, policy);
    }
    if (s == 0) throw ValidationError("nonconvex polygon");
    if (want == 0) want = s;
    if (s != want) throw ValidationError("nonconvex polygon");
  }
}

void make_ccw(std::vector<Point3>& pts) {
  std::vector<Point2> proj;
  proj.reserve(pts.size());
  for (const auto& p : pts) proj.push_back(project(p));
  if (!polygon_is_ccw(proj)) std::reverse(pts.begin() + 1, pts.end());
}

}  // namespace

Prismatoid validate(const std::vector<Point3>& top_in, const std::vector<Point3>& base_in,
                    const TolerancePolicy& policy) {
  if (top_in.size() < 3 || base_in.size() < 3)
    throw ValidationError("fewer than 3 vertices");

  std::vector<Point3> top = top_in, base = base_in;
  double scale = std::max(poly_scale(top), poly_scale(base));
  double eps = policy.eps_predicate * scale;

  // planarity and parallelism; normalize arbitrary parallel planes to
  // z-constant ones by a rigid motion
  Vec3 nt = newell_normal(top), nb = newell_normal(base);
  if (norm(nt) <= eps * eps || norm(nb) <= eps * eps)
    throw ValidationError("nonconvex polygon");
  Vec3 ut = (1.0 / norm(nt)) * nt, ub = (1.0 / norm(nb)) * nb;
  if (norm(cross(ut, ub)) > policy.eps_predicate)
    throw ValidationError("planes not parallel");
  for (const auto& p : top)
    if (std::abs(dot(p - top[0], ut)) > eps) throw ValidationError("planes not parallel");
  for (const auto& p : base)
    if (std::abs(dot(p - base[0], ub)) > eps) throw ValidationError("planes not parallel");

  if (std::abs(std::abs(ub.z) - 1.0) > policy.eps_predicate) {
    // rotate the common normal onto +z
    Vec3 axis = cross(ub, Vec3{0, 0, 1});
    double s = norm(axis), c = ub.z;
    axis = (1.0 / s) * axis;
    auto rotate = [&](Point3 p) {
      // Rodrigues
      Vec3 kxp = cross(axis, p);
      return c * p + s * kxp + (dot(axis, p) * (1 - c)) * axis;
    };
    for (auto& p : top) p = rotate(p);
    for (auto& p : base) p = rotate(p);
  }

  double zb = base[0].z, zt = top[0].z;
  if (std::abs(zt - zb) <= eps) throw ValidationError("coplanar polygons");
  if (zt < zb) {
    // flip upside down (rotation by pi about the x axis), keeping rigidity
    for (auto& p : top) p = {p.x, -p.y, -p.z};
    for (auto& p : base) p = {p.x, -p.y, -p.z};
    zb = base[0].z;
  }
  for (auto& p : top) p.z -= zb;
  for (auto& p : base) p.z = 0.0;

  // exact checks are available only when no rigid motion was applied
  bool exact_ok = policy.mode == ArithmeticMode::Rational &&
                  std::abs(std::abs(ub.z) - 1.0) <= policy.eps_predicate;
  check_polygon(top, policy, exact_ok);
  check_polygon(base, policy, exact_ok);
  make_ccw(top);
  make_ccw(base);

  Prismatoid p;
  p.top = std::move(top);
  p.base = std::move(base);
  p.z = p.top[0].z;
  return p;
}

Band build_band(const Prismatoid& p, const TolerancePolicy& policy) {
  const size_t n = p.n(), m = p.m();

  struct Entry {
    double angle;
    SideFace face;
  };
  std::vector<Entry> entries;
  entries.reserve(n + m);

  // apex of a base edge = top vertex extremal along the edge's outward
  // normal; ties mean a quadrilateral side face
  auto apex_of = [&](Point2 e0, Point2 e1, const std::vector<Point3>& other,
                     double scale) -> int {
    Vec2 nrm = {e1.y - e0.y, -(e1.x - e0.x)};
    int best = 0;
    double bestd = -1e300, second = -1e300;
    for (size_t k = 0; k < other.size(); ++k) {
      double d = dot(nrm, project(other[k]));
      if (d > bestd) {
        second = bestd;
        bestd = d;
        best = static_cast<int>(k);
      } else if (d > second) {
        second = d;
      }
    }
    if (bestd - second <= policy.eps_predicate * scale * norm(nrm))
      throw GeometryError("non-simplicial side face");
    return best;
  };

  double scale = 1.0;
  for (const auto& q : p.base) scale = std::max({scale, std::abs(q.x), std::abs(q.y)});
  for (const auto& q : p.top) scale = std::max({scale, std::abs(q.x), std::abs(q.y)});

  for (size_t i = 0; i < n; ++i) {
    Point2 e0 = p.base2(i), e1 = p.base2(i + 1);
    Vec2 nrm = {e1.y - e0.y, -(e1.x - e0.x)};
    entries.push_back({std::atan2(nrm.y, nrm.x),
                       {FaceKind::BTriangle, static_cast<int>(i),
                        apex_of(e0, e1, p.top, scale)}});
  }
  for (size_t j = 0; j < m; ++j) {
    Point2 e0 = p.top2(j), e1 = p.top2(j + 1);
    Vec2 nrm = {e1.y - e0.y, -(e1.x - e0.x)};
    entries.push_back({std::atan2(nrm.y, nrm.x),
                       {FaceKind::ATriangle, static_cast<int>(j),
                        apex_of(e0, e1, p.base, scale)}});
  }

  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.angle < b.angle; });
  for (size_t k = 0; k < entries.size(); ++k) {
    size_t l = (k + 1) % entries.size();
    double gap = entries[l].angle - entries[k].angle;
    if (l == 0) gap += 2 * kPi;
    if (std::abs(gap) <= policy.eps_predicate)
      throw GeometryError("non-simplicial side face");
  }

  Band band;
  band.faces.reserve(entries.size());
  for (const auto& e : entries) band.faces.push_back(e.face);

  // consistency: consecutive faces must share a lateral edge
  band.bface.assign(n, -1);
  for (size_t k = 0; k < band.faces.size(); ++k) {
    const SideFace& f = band.faces[k];
    const SideFace& g = band.faces[(k + 1) % band.faces.size()];
    auto ends = [&](const SideFace& sf) -> std::pair<int, int> {
      // lateral edges (base vertex, top vertex) at the ccw end of the face
      if (sf.kind == FaceKind::BTriangle)
        return {(sf.edge + 1) % static_cast<int>(n), sf.apex};
      return {sf.apex, (sf.edge + 1) % static_cast<int>(m)};
    };
    auto starts = [&](const SideFace& sf) -> std::pair<int, int> {
      if (sf.kind == FaceKind::BTriangle) return {sf.edge, sf.apex};
      return {sf.apex, sf.edge};
    };
    if (ends(f) != starts(g))
      throw GeometryError("top/base face reconstruction failed");
    if (f.kind == FaceKind::BTriangle) band.bface[f.edge] = static_cast<int>(k);
  }
  for (size_t i = 0; i < n; ++i)
    if (band.bface[i] < 0) throw GeometryError("top/base face reconstruction failed");

  band.fan.assign(n, {});
  // fan triangles at base vertex i sit between B_{i-1} (edge i-1) and B_i
  // (edge i) in the cyclic order; collect by apex, preserving band order
  // starting after B-face of edge i-1
  for (size_t i = 0; i < n; ++i) {
    size_t start = static_cast<size_t>(band.bface[(i + n - 1) % n]);
    for (size_t step = 1; step < band.faces.size(); ++step) {
      const SideFace& f = band.faces[(start + step) % band.faces.size()];
      if (f.kind == FaceKind::BTriangle) break;
      if (f.apex != static_cast<int>(i))
        throw GeometryError("top/base face reconstruction failed");
      band.fan[i].push_back(static_cast<int>((start + step) % band.faces.size()));
    }
  }
  size_t total = 0;
  for (const auto& f : band.fan) total += f.size();
  if (total != m) throw GeometryError("top/base face reconstruction failed");
  return band;
}

std::array<Point3, 3> face_points(const Prismatoid& p, const SideFace& f) {
  if (f.kind == FaceKind::BTriangle)
    return {p.base[f.edge], p.base[(f.edge + 1) % p.n()], p.top[f.apex]};
  return {p.top[f.edge], p.top[(f.edge + 1) % p.m()], p.base[f.apex]};
}

std::string face_name(const SideFace& f) {
  return (f.kind == FaceKind::BTriangle ? "B" : "A") + std::to_string(f.edge + 1);
}

std::vector<std::array<double, 3>> face_angles(const Prismatoid& p, const Band& band) {
  std::vector<std::array<double, 3>> out;
  out.reserve(band.faces.size());
  for (const auto& f : band.faces) {
    auto pts = face_points(p, f);
    std::array<double, 3> a{};
    for (int k = 0; k < 3; ++k) a[k] = angle_at(pts[k], pts[(k + 1) % 3], pts[(k + 2) % 3]);
    out.push_back(a);
  }
  return out;
}

double max_face_angle(const Prismatoid& p, const Band& band) {
  double mx = 0;
  for (const auto& a : face_angles(p, band))
    mx = std::max({mx, a[0], a[1], a[2]});
  return mx;
}

NonobtuseReport is_nonobtuse_sides(const Prismatoid& p, const Band& band, double eps,
                                   const TolerancePolicy& policy) {
  NonobtuseReport rep;
  auto angles = face_angles(p, band);
  for (size_t k = 0; k < band.faces.size(); ++k) {
    auto pts = face_points(p, band.faces[k]);
    for (int c = 0; c < 3; ++c) {
      bool obtuse;
      if (policy.mode == ArithmeticMode::Rational) {
        auto rp = [&](const Point3& q) {
          return exact::RPoint3{exact::rational_from_double(q.x),
                                exact::rational_from_double(q.y),
                                exact::rational_from_double(q.z)};
        };
        obtuse = exact::corner_dot_sign(rp(pts[c]), rp(pts[(c + 1) % 3]),
                                        rp(pts[(c + 2) % 3])) < 0;
      } else {
        obtuse = angles[k][c] > kPi / 2 + eps;
      }
      if (obtuse) {
        rep.nonobtuse = false;
        rep.violations.push_back({static_cast<int>(k), c, angles[k][c]});
      }
    }
  }
  return rep;
}

}  // namespace petal
