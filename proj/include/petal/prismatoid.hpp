#pragma once

// Prismatoid model: two parallel convex polygons plus the lateral triangle
// band of the convex hull, organized as per-base-vertex fans.

#include <string>
#include <vector>

#include "petal/geom.hpp"

namespace petal {

// Validated prismatoid. Both polygons are stored ccw (seen from +z), the base
// in the plane z = 0, the top at z > 0.
struct Prismatoid {
  std::vector<Point3> top;   // a_1..a_m
  std::vector<Point3> base;  // b_1..b_n
  double z = 0;              // plane separation

  size_t m() const { return top.size(); }
  size_t n() const { return base.size(); }
  Point2 base2(size_t i) const { return project(base[i % base.size()]); }
  Point2 top2(size_t j) const { return project(top[j % top.size()]); }
};

enum class FaceKind { ATriangle, BTriangle };

// Lateral hull face. A B-triangle sits on base edge (b_e, b_{e+1}) with one
// top vertex as apex; an A-triangle sits on top edge (a_e, a_{e+1}) with a
// base vertex as apex.
struct SideFace {
  FaceKind kind;
  int edge;  // edge index in its own polygon
  int apex;  // vertex index in the other polygon
};

struct Band {
  std::vector<SideFace> faces;        // cyclic order around the band
  std::vector<std::vector<int>> fan;  // per base vertex: A-face indices, in order
  std::vector<int> bface;             // base edge index -> face index

  size_t fan_size(size_t i) const { return fan[i].size(); }
};

class ValidationError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

// Validates and normalizes raw vertex lists. Throws ValidationError with one
// of: "fewer than 3 vertices", "repeated vertex", "planes not parallel",
// "coplanar polygons", "nonconvex polygon".
Prismatoid validate(const std::vector<Point3>& top, const std::vector<Point3>& base,
                    const TolerancePolicy& policy = {});

// Lateral faces via the tangent-plane merge of the two polygons' edge
// normals. Throws "non-simplicial side face" on prism-like degeneracies and
// "top/base face reconstruction failed" if the merged sequence is
// inconsistent.
Band build_band(const Prismatoid& p, const TolerancePolicy& policy = {});

// 3D triangle of a side face, ordered (edge start, edge end, apex).
std::array<Point3, 3> face_points(const Prismatoid& p, const SideFace& f);

std::string face_name(const SideFace& f);  // "B1".."Bn" / "A1".."Am" (1-based)

// Interior angles per face, in face_points order; they sum to pi.
std::vector<std::array<double, 3>> face_angles(const Prismatoid& p, const Band& band);
double max_face_angle(const Prismatoid& p, const Band& band);

struct ObtuseViolation {
  int face;  // index into band.faces
  int corner;
  double angle;
};

struct NonobtuseReport {
  bool nonobtuse = true;
  std::vector<ObtuseViolation> violations;
};

// Every side-face angle <= pi/2 + eps. In rational mode the comparison is an
// exact dot-product sign test (eps ignored).
NonobtuseReport is_nonobtuse_sides(const Prismatoid& p, const Band& band, double eps,
                                   const TolerancePolicy& policy = {});

}  // namespace petal
