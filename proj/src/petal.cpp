#include "petal/petal.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace petal {

std::string PetalChoice::to_string() const {
  std::string s = "fanSplit=";
  for (size_t i = 0; i < fanSplit.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(fanSplit[i]);
  }
  s += ";topEdge=" + std::to_string(topEdge + 1);
  return s;
}

PetalChoice PetalChoice::parse(const std::string& text) {
  PetalChoice c;
  auto semi = text.find(';');
  auto fs = text.find("fanSplit=");
  auto te = text.find("topEdge=");
  if (fs == std::string::npos || te == std::string::npos || semi == std::string::npos)
    throw GeometryError("bad choice spec: " + text);
  std::string list = text.substr(fs + 9, semi - (fs + 9));
  size_t pos = 0;
  while (pos <= list.size()) {
    auto comma = list.find(',', pos);
    std::string tok = list.substr(pos, comma == std::string::npos ? std::string::npos
                                                                  : comma - pos);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw GeometryError("bad choice spec: " + text);
    c.fanSplit.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  std::string tet = text.substr(te + 8);
  int v = 0;
  auto [p, ec] = std::from_chars(tet.data(), tet.data() + tet.size(), v);
  if (ec != std::errc() || p != tet.data() + tet.size() || v < 1)
    throw GeometryError("bad choice spec: " + text);
  c.topEdge = v - 1;
  return c;
}

const PlacedFace* Layout::find(const std::string& name) const {
  for (const auto& f : placed)
    if (f.name == name) return &f;
  return nullptr;
}

uint64_t count_choices(const Band& band) {
  uint64_t count = band.fan.empty() ? 0 : 1;
  size_t m = 0;
  for (const auto& f : band.fan) {
    m += f.size();
    uint64_t factor = f.size() + 1;
    if (count > UINT64_MAX / factor) throw GeometryError("choice count overflow");
    count *= factor;
  }
  return count * m;
}

ChoiceEnumerator::ChoiceEnumerator(const Band& band) {
  m_ = 0;
  for (const auto& f : band.fan) {
    fan_sizes_.push_back(static_cast<int>(f.size()));
    m_ += f.size();
  }
  cur_.fanSplit.assign(fan_sizes_.size(), 0);
  cur_.topEdge = 0;
  done_ = m_ == 0;
}

void ChoiceEnumerator::advance() {
  if (done_) return;
  if (cur_.topEdge + 1 < static_cast<int>(m_)) {
    ++cur_.topEdge;
    return;
  }
  cur_.topEdge = 0;
  // increment fanSplit as a mixed-radix number, last digit fastest
  for (int i = static_cast<int>(cur_.fanSplit.size()) - 1; i >= 0; --i) {
    if (cur_.fanSplit[i] < fan_sizes_[i]) {
      ++cur_.fanSplit[i];
      return;
    }
    cur_.fanSplit[i] = 0;
  }
  done_ = true;
}

namespace {
// splitmix64; the enumeration order is fixed, sampling just needs a
// reproducible stream
uint64_t next_u64(uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
}  // namespace

PetalChoice sample_choice(const Band& band, uint64_t& rng_state) {
  PetalChoice c;
  size_t m = 0;
  for (const auto& f : band.fan) {
    c.fanSplit.push_back(static_cast<int>(next_u64(rng_state) % (f.size() + 1)));
    m += f.size();
  }
  c.topEdge = static_cast<int>(next_u64(rng_state) % m);
  return c;
}

namespace {

Side opposite_of(Point2 h0, Point2 h1, Point2 other) {
  return cross(h1 - h0, other - h0) > 0 ? Side::Right : Side::Left;
}

}  // namespace

Layout develop(const Prismatoid& p, const Band& band, const PetalChoice& choice) {
  const size_t n = p.n(), m = p.m();
  if (choice.fanSplit.size() != n || choice.topEdge < 0 ||
      choice.topEdge >= static_cast<int>(m))
    throw GeometryError("choice/band mismatch");
  for (size_t i = 0; i < n; ++i)
    if (choice.fanSplit[i] < 0 ||
        choice.fanSplit[i] > static_cast<int>(band.fan[i].size()))
      throw GeometryError("choice/band mismatch");

  Layout layout;
  layout.placed.reserve(n + m + 2);

  PlacedFace base;
  base.face = kBaseFace;
  base.name = "B";
  base.parent = -1;
  for (size_t i = 0; i < n; ++i) base.poly.push_back(p.base2(i));
  layout.placed.push_back(std::move(base));

  // B-triangles across their base edges
  std::vector<int> bplaced(n);           // placed index of B-face on edge i
  std::vector<Point2> bapex(n);          // developed apex image
  for (size_t i = 0; i < n; ++i) {
    const SideFace& f = band.faces[band.bface[i]];
    auto pts = face_points(p, f);
    Point2 h0 = p.base2(i), h1 = p.base2(i + 1);
    Point2 apex = develop_across_hinge(pts.data(), pts[0], pts[1], h0, h1, Side::Right);
    PlacedFace pf;
    pf.face = band.bface[i];
    pf.name = face_name(f);
    pf.poly = {h0, h1, apex};
    pf.parent = 0;
    pf.hinge[0] = h0;
    pf.hinge[1] = h1;
    bplaced[i] = static_cast<int>(layout.placed.size());
    bapex[i] = apex;
    layout.placed.push_back(std::move(pf));
  }

  // fan chains; remember placed location of every A-face
  std::vector<int> aplaced(m, -1);  // top edge index -> placed index
  for (size_t i = 0; i < n; ++i) {
    const auto& fan = band.fan[i];
    int split = choice.fanSplit[i];
    Point2 bi = p.base2(i);
    Point3 bi3 = p.base[i];

    // left chunk: chains off B_{i-1} starting at its lateral edge (b_i, apex)
    {
      int prev_face = band.bface[(i + n - 1) % n];
      int hinge_top = band.faces[prev_face].apex;
      Point2 hinge_img = bapex[(i + n - 1) % n];
      Point2 parent_other = p.base2(i + n - 1);
      int parent_idx = bplaced[(i + n - 1) % n];
      for (int k = 0; k < split; ++k) {
        const SideFace& f = band.faces[fan[k]];
        int other_top = (f.edge + 1) % static_cast<int>(m);
        if (f.edge != hinge_top) throw GeometryError("choice/band mismatch");
        Point3 tri[3] = {p.top[f.edge], p.top[other_top], bi3};
        Side side = opposite_of(bi, hinge_img, parent_other);
        Point2 img = develop_across_hinge(tri, bi3, p.top[hinge_top], bi, hinge_img, side);
        PlacedFace pf;
        pf.face = fan[k];
        pf.name = face_name(f);
        pf.poly = {hinge_img, img, bi};
        pf.parent = parent_idx;
        pf.hinge[0] = bi;
        pf.hinge[1] = hinge_img;
        aplaced[f.edge] = static_cast<int>(layout.placed.size());
        parent_idx = static_cast<int>(layout.placed.size());
        layout.placed.push_back(std::move(pf));
        parent_other = hinge_img;
        hinge_top = other_top;
        hinge_img = img;
      }
    }

    // right chunk: chains off B_i, walking the fan backwards
    {
      int next_face = band.bface[i];
      int hinge_top = band.faces[next_face].apex;
      Point2 hinge_img = bapex[i];
      Point2 parent_other = p.base2(i + 1);
      int parent_idx = bplaced[i];
      for (int k = static_cast<int>(fan.size()) - 1; k >= split; --k) {
        const SideFace& f = band.faces[fan[k]];
        int fwd = (f.edge + 1) % static_cast<int>(m);
        if (fwd != hinge_top) throw GeometryError("choice/band mismatch");
        int other_top = f.edge;
        Point3 tri[3] = {p.top[f.edge], p.top[fwd], bi3};
        Side side = opposite_of(bi, hinge_img, parent_other);
        Point2 img = develop_across_hinge(tri, bi3, p.top[hinge_top], bi, hinge_img, side);
        PlacedFace pf;
        pf.face = fan[k];
        pf.name = face_name(f);
        pf.poly = {img, hinge_img, bi};
        pf.parent = parent_idx;
        pf.hinge[0] = bi;
        pf.hinge[1] = hinge_img;
        aplaced[f.edge] = static_cast<int>(layout.placed.size());
        parent_idx = static_cast<int>(layout.placed.size());
        layout.placed.push_back(std::move(pf));
        parent_other = hinge_img;
        hinge_top = other_top;
        hinge_img = img;
      }
    }
  }

  // top polygon across the one uncut top edge
  {
    int te = choice.topEdge;
    if (aplaced[te] < 0) throw GeometryError("choice/band mismatch");
    const PlacedFace& carrier = layout.placed[aplaced[te]];
    Point2 d0 = carrier.poly[0];  // image of a_te
    Point2 d1 = carrier.poly[1];  // image of a_te+1
    Point2 apex_img = carrier.poly[2];
    Point2 s0 = p.top2(te), s1 = p.top2(te + 1);

    double rot = std::atan2((d1 - d0).y, (d1 - d0).x);
    PlacedFace top;
    top.face = kTopFace;
    top.name = "A";
    top.parent = aplaced[te];
    top.hinge[0] = d0;
    top.hinge[1] = d1;
    for (int refl = 0; refl < 2; ++refl) {
      top.poly.clear();
      double src = std::atan2((s1 - s0).y, (s1 - s0).x);
      double ang = rot - (refl ? -src : src);
      double ca = std::cos(ang), sa = std::sin(ang);
      for (size_t j = 0; j < m; ++j) {
        Vec2 w = p.top2(j) - s0;
        if (refl) w.y = -w.y;
        top.poly.push_back({d0.x + ca * w.x - sa * w.y, d0.y + sa * w.x + ca * w.y});
      }
      Point2 c = polygon_centroid(top.poly);
      if (cross(d1 - d0, c - d0) * cross(d1 - d0, apex_img - d0) < 0) break;
    }
    layout.placed.push_back(std::move(top));
  }

  return layout;
}

void for_each_layout(const Prismatoid& p, const Band& band,
                     const std::function<void(const PetalChoice&, const Layout&)>& fn) {
  for (ChoiceEnumerator e(band); !e.done(); e.advance())
    fn(e.current(), develop(p, band, e.current()));
}

}  // namespace petal
