#pragma once

// Planar/spatial primitives, predicates, hinge development, and the
// half-plane region machinery shared by all higher-level modules.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace petal {

struct Vec2 {
  double x = 0, y = 0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline Vec2 operator*(Vec2 a, double s) { return s * a; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }  // rotate +90 deg
inline Vec2 normalized(Vec2 a) {
  double n = norm(a);
  return {a.x / n, a.y / n};
}

struct Vec3 {
  double x = 0, y = 0, z = 0;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

using Point2 = Vec2;
using Point3 = Vec3;

inline Point2 project(Point3 p) { return {p.x, p.y}; }

struct Ray2 {
  Point2 origin;
  Vec2 direction;  // unit length
};

enum class ArithmeticMode { Float, Rational };

struct TolerancePolicy {
  double eps_predicate = 1e-9;
  double eps_area = 1e-12;
  ArithmeticMode mode = ArithmeticMode::Float;
};

class GeometryError : public std::runtime_error {
 public:
  explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

// Sign of twice the signed area of (p,q,r). Zero within the predicate slab in
// float mode; the rational mode (exact.hpp) decides zero exactly.
int orient2d(Point2 p, Point2 q, Point2 r, const TolerancePolicy& policy = {});

// Angle at v between rays v->p and v->q, in [0, pi]. atan2-based.
double angle_at(Point2 v, Point2 p, Point2 q);
double angle_at(Point3 v, Point3 p, Point3 q);

enum class Side { Left, Right };

// Develop the third vertex of a 3D triangle into the plane: the hinge edge
// (hinge0,hinge1) is already placed at (placed0,placed1) and the image of the
// remaining vertex is returned on the requested side of the placed hinge.
// All three pairwise distances are preserved.
Point2 develop_across_hinge(const Point3 face[3], Point3 hinge0, Point3 hinge1,
                            Point2 placed0, Point2 placed1, Side side);

// Closed half-plane a*x + b*y <= c.
struct HalfPlane {
  double a = 0, b = 0, c = 0;

  double margin(Point2 p) const {  // signed distance, positive inside
    return (c - a * p.x - b * p.y) / std::hypot(a, b);
  }
  bool contains(Point2 p, double eps = 0.0) const { return margin(p) >= -eps; }

  // through points p->q, interior on the left of the directed line
  static HalfPlane left_of(Point2 p, Point2 q);
  // through points p->q, interior on the right
  static HalfPlane right_of(Point2 p, Point2 q);
  // boundary through p with outward normal n: dot(x - p, n) <= 0
  static HalfPlane outward(Point2 p, Vec2 n);
};

// Intersection of half-planes; may be unbounded or empty.
struct ConvexRegion {
  std::vector<HalfPlane> halfplanes;

  bool contains(Point2 p, double eps = 0.0) const;
  // direction d lies in the recession cone (region unbounded along d)
  bool recedes(Vec2 d, double eps = 0.0) const;
};

// max over x of the minimum signed distance to all half-planes; the LP is
// solved over a large box so unbounded regions still yield a finite witness.
// > 0: common interior point exists (witness), = 0: touching, < 0: disjoint.
struct MarginResult {
  double margin = 0;
  Point2 witness;
};
MarginResult region_margin(const std::vector<HalfPlane>& halfplanes);

enum class RegionStatus { Disjoint, Touching, Overlapping };

struct RegionIntersection {
  RegionStatus status = RegionStatus::Disjoint;
  Point2 witness;  // interior point of both, when overlapping
  double margin = 0;
};

RegionIntersection region_intersects(const ConvexRegion& r1, const ConvexRegion& r2,
                                     const TolerancePolicy& policy = {});

// Angular sector at an apex spanning ccw from dirU to dirV (possibly reflex),
// further cut by optional global half-planes. Diamonds and wedges are
// sectors: convex when the span is <= pi, otherwise split into two convex
// parts at the internal bisector.
struct Sector {
  Point2 apex;
  Vec2 dirU, dirV;  // unit boundary directions, ccw span from U to V
  double span = 0;  // radians in [0, 2pi)
  std::vector<HalfPlane> extra;

  static Sector from_directions(Point2 apex, Vec2 u, Vec2 v);

  bool reflex() const { return span > 3.14159265358979323846 + 1e-15; }
  std::vector<ConvexRegion> convex_parts() const;
  bool contains(Point2 p, double eps = 0.0) const;
};

RegionIntersection region_intersects(const Sector& s1, const Sector& s2,
                                     const TolerancePolicy& policy = {});
RegionIntersection region_intersects(const Sector& s, const ConvexRegion& r,
                                     const TolerancePolicy& policy = {});

// --- small polygon helpers used across modules ---

double polygon_area(const std::vector<Point2>& poly);  // signed, ccw positive
bool polygon_is_ccw(const std::vector<Point2>& poly);
Point2 polygon_centroid(const std::vector<Point2>& poly);

// Sutherland-Hodgman clip of a convex polygon against a half-plane list.
std::vector<Point2> clip_polygon(std::vector<Point2> poly,
                                 const std::vector<HalfPlane>& halfplanes);

// Separating-axis test between two convex polygons: the largest separation
// over both polygons' edge normals. > 0 disjoint, < 0 overlapping interiors.
double polygon_separation(const std::vector<Point2>& p, const std::vector<Point2>& q);

}  // namespace petal
