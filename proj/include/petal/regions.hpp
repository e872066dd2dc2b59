#pragma once

// Interior-overlap detection on layouts, the diamond/wedge regions around
// developed fans, and the certificate checks behind the rectangle-base
// theorem. Wedges and diamonds are angular sectors at a base vertex; for
// wide-open vertices the span exceeds pi, so they are handled as sectors
// rather than plain half-plane intersections.

#include <optional>
#include <string>
#include <vector>

#include "petal/geom.hpp"
#include "petal/petal.hpp"
#include "petal/prismatoid.hpp"

namespace petal {

struct OverlapWitness {
  std::string face1, face2;
  Point2 point;  // strictly inside both faces
  double area;   // approximate overlap area
};

struct OverlapReport {
  bool overlapping = false;
  std::vector<OverlapWitness> witnesses;
  // angle of the intersection wedge where face boundaries cross, when a
  // crossing exists (0 otherwise)
  double maxPenetrationAngle = 0;
};

OverlapReport check_overlap(const Layout& layout, const TolerancePolicy& policy = {});

// Diamond D_i: bounded by the developed segments b_i a_j, b_i a_k and the
// rays perpendicular to them at a_j and a_k.
struct DiamondRegion {
  int vertex;      // base vertex index i
  Point2 apex;     // b_i
  Point2 ajDev;    // developed apex of B_{i-1}
  Point2 akDev;    // developed apex of B_i
  Sector region;   // cone at b_i cut by the two perpendicular half-planes
  Ray2 perpAj, perpAk;
};

// Wedge V_i: the angular region at b_i between the rays through the
// developed a_j and a_k, away from B.
struct WedgeRegion {
  int vertex;
  Point2 apex;
  Point2 ajDev;
  Point2 akDev;
  Sector region;
};

WedgeRegion wedge(const Prismatoid& p, const Band& band, int i,
                  const TolerancePolicy& policy = {});
DiamondRegion diamond(const Prismatoid& p, const Band& band, int i,
                      const TolerancePolicy& policy = {});

// Developed B-triangle (base edge fixed, apex folded outward); the
// development regions are all built over these.
std::vector<Point2> developed_b_triangle(const Prismatoid& p, const Band& band, int edge);

struct CertificateWitness {
  int wedge;                  // i of the violating V_i
  bool against_diamond;       // otherwise a B-triangle
  int target;                 // j of D_j or of B-face
  Point2 point;               // interior point of both regions
  double penetrationAngle;    // boundary-crossing angle, for diamond hits
};

struct CertificateResult {
  bool holds = true;
  std::optional<CertificateWitness> witness;              // first failure
  std::vector<CertificateWitness> failures;               // all failures
};

// O'Rourke sufficiency: every V_i disjoint from all developed B-triangles
// and all diamonds D_j (j != i). Assumes nonobtuse side faces.
CertificateResult orourke_certificate(const Prismatoid& p, const Band& band,
                                      const TolerancePolicy& policy = {});

// crossing angle between the boundary lines of V and D at a feasible
// boundary crossing; the "angle formed at the intersection point"
double penetration_angle(const WedgeRegion& v, const DiamondRegion& d,
                         const TolerancePolicy& policy = {});

struct SContainment {
  bool contained = true;
  std::string violation;  // "segment b{i+2}-ak", "segment b{i+2}-aj",
                          // "ray d1", "ray d2", "wedge-S"
};

// The rectangle-base proof steps for index i, checked computationally:
// segments and perpendicular rays of D_{i+2} stay in the quarter-plane S at
// b_i, and V_i meets S only at b_i. Throws "base not rectangle".
SContainment rectangle_S_containment(const Prismatoid& p, const Band& band, int i,
                                     const TolerancePolicy& policy = {});

}  // namespace petal
