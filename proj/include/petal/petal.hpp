#pragma once

// Petal cut choices and their planar developments. A petal unfolding keeps
// every base edge, cuts all top edges but one, and cuts exactly one lateral
// edge per base-vertex fan; the base stays fixed and every petal unfolds
// outward across its base edge.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "petal/geom.hpp"
#include "petal/prismatoid.hpp"

namespace petal {

struct PetalChoice {
  // fanSplit[i] in 0..|fan[i]|: triangles of fan i that unfold on the
  // B_{i-1} side; the rest chain off B_i. The lateral edge between the two
  // chunks is the cut.
  std::vector<int> fanSplit;
  int topEdge = 0;  // index j of the single uncut top edge (a_j, a_{j+1})

  std::string to_string() const;  // "fanSplit=k1,...,kn;topEdge=J" (J 1-based)
  static PetalChoice parse(const std::string& text);
};

// face ids in a layout
constexpr int kBaseFace = -1;
constexpr int kTopFace = -2;  // band faces use their band index

struct PlacedFace {
  int face;  // kBaseFace, kTopFace or band face index
  std::string name;
  std::vector<Point2> poly;
  int parent;       // index into Layout::placed, -1 for the base
  Point2 hinge[2];  // shared segment with the parent
};

struct Layout {
  std::vector<PlacedFace> placed;

  const PlacedFace* find(const std::string& name) const;
};

uint64_t count_choices(const Band& band);  // m * prod(|fan[i]| + 1)

class ChoiceEnumerator {
 public:
  explicit ChoiceEnumerator(const Band& band);
  bool done() const { return done_; }
  const PetalChoice& current() const { return cur_; }
  void advance();  // lexicographic in fanSplit, then topEdge

 private:
  std::vector<int> fan_sizes_;
  PetalChoice cur_;
  size_t m_;
  bool done_ = false;
};

// uniform over the full choice space
PetalChoice sample_choice(const Band& band, uint64_t& rng_state);

// Develop one petal choice. Throws GeometryError("choice/band mismatch") if
// the choice does not fit the band.
Layout develop(const Prismatoid& p, const Band& band, const PetalChoice& choice);

// Stream all layouts in enumeration order.
void for_each_layout(const Prismatoid& p, const Band& band,
                     const std::function<void(const PetalChoice&, const Layout&)>& fn);

}  // namespace petal
