#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "arrangeo/geometry.hpp"

namespace arrangeo {

// Reference fiber: the vertical line x = u with u right of every event.
// Lines contribute one strand each; a conic contributes two slots, either two
// real strands or a fused marker at the midline h(u) when the fiber pair is
// complex there. Slots are numbered 1..n bottom to top and carry the
// generators of the base free group.
struct Fiber {
  int n = 0;
  Rat u = 0;
  std::vector<int> slot_component;  // size n
  bool has_conic = false;
  bool complex_at_u = false;
  int marker_low = 0;  // lowest marker slot when complex_at_u, else 0
};

inline Fiber build_fiber(const Arrangement& arr, const std::vector<PointXY>& pts) {
  if (arr.conics.size() > 1)
    throw std::invalid_argument("fiber model supports at most one conic");
  Fiber f;
  f.has_conic = !arr.conics.empty();

  Rat u(1);
  if (!pts.empty()) {
    const ExactScalar& mx = pts.back().x;  // pts sorted by (x, y)
    long long guess = 2;
    try {
      guess = static_cast<long long>(mx.approx()) + 2;
    } catch (...) {
    }
    u = Rat(guess);
    while (!(ExactScalar(u) > mx)) u += 1;
  }

  if (f.has_conic) {
    const Conic& c = arr.conics[0];
    if (c.yy == 0) throw std::invalid_argument("fiber needs yy != 0; shear first");
    // All events lie left of u, so the fiber-pair state at u is fixed; ties
    // between the fused marker and a line are broken by bumping u.
    for (bool moved = true; moved;) {
      moved = false;
      if (c.disc_y_at(ExactScalar(u)).sign() < 0) {
        ExactScalar h = c.h_at(ExactScalar(u));
        for (const auto& l : arr.lines)
          if (l.y_at(ExactScalar(u)) == h) {
            u += 1;
            moved = true;
            break;
          }
      }
    }
  }
  f.u = u;

  struct Strand {
    ExactScalar y;
    int comp;
    int marker_half;  // 0 none, 1 low half, 2 high half
  };
  std::vector<Strand> strands;
  for (const auto& l : arr.lines)
    strands.push_back({l.y_at(ExactScalar(u)), l.id, 0});
  if (f.has_conic) {
    const Conic& c = arr.conics[0];
    ExactScalar disc = c.disc_y_at(ExactScalar(u));
    int s = disc.sign();
    if (s == 0) throw std::logic_error("fiber at u touches a branch point");
    if (s < 0) {
      f.complex_at_u = true;
      ExactScalar h = c.h_at(ExactScalar(u));
      strands.push_back({h, c.id, 1});
      strands.push_back({h, c.id, 2});
    } else {
      ExactScalar root = sqrt_of_rational(disc.as_rational());
      ExactScalar mid = c.h_at(ExactScalar(u));
      ExactScalar half = root / ExactScalar(2 * c.yy);
      ExactScalar y1 = mid - half, y2 = mid + half;
      if (compare(y1, y2) > 0) std::swap(y1, y2);
      strands.push_back({y1, c.id, 0});
      strands.push_back({y2, c.id, 0});
    }
  }
  std::stable_sort(strands.begin(), strands.end(),
                   [](const Strand& a, const Strand& b) {
                     int cc = compare(a.y, b.y);
                     if (cc != 0) return cc < 0;
                     return a.marker_half < b.marker_half;
                   });
  for (size_t i = 0; i + 1 < strands.size(); ++i)
    if (compare(strands[i].y, strands[i + 1].y) == 0 &&
        !(strands[i].marker_half == 1 && strands[i + 1].marker_half == 2))
      throw std::logic_error("strand tie in the reference fiber");

  f.n = static_cast<int>(strands.size());
  f.slot_component.resize(f.n);
  for (int i = 0; i < f.n; ++i) {
    f.slot_component[i] = strands[i].comp;
    if (strands[i].marker_half == 1) f.marker_low = i + 1;
  }
  return f;
}

}  // namespace arrangeo
