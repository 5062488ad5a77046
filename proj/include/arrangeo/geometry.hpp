#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arrangeo/exact.hpp"

namespace arrangeo {

struct IdenticalLines : std::runtime_error {
  IdenticalLines() : std::runtime_error("identical lines") {}
};
struct UnsupportedTangency : std::runtime_error {
  UnsupportedTangency() : std::runtime_error("tangential intersection") {}
};
struct UnsupportedParabola : std::runtime_error {
  UnsupportedParabola() : std::runtime_error("parabola: one finite branch point") {}
};
// Line/conic pair sharing a point on the line at infinity; shear-invariant,
// so rejected rather than repaired.
struct InfiniteIntersection : std::runtime_error {
  InfiniteIntersection() : std::runtime_error("components meet at infinity") {}
};
struct ComplexBranchPoints : std::runtime_error {
  ComplexBranchPoints() : std::runtime_error("branch points are not real") {}
};

// ax + by + c = 0, primitive integer coefficients, first nonzero of (a,b) > 0.
struct Line {
  Rat a, b, c;
  int id = -1;

  Line(Rat a_, Rat b_, Rat c_, int id_ = -1)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), id(id_) {
    if (a == 0 && b == 0) throw std::invalid_argument("degenerate line");
    normalize();
  }

  bool is_vertical() const { return b == 0; }
  Rat slope() const { return -a / b; }

  ExactScalar y_at(const ExactScalar& x) const {
    return (ExactScalar(-a) * x - ExactScalar(c)) / ExactScalar(b);
  }
  ExactScalar eval(const ExactScalar& x, const ExactScalar& y) const {
    return ExactScalar(a) * x + ExactScalar(b) * y + ExactScalar(c);
  }
  bool same_line(const Line& o) const { return a == o.a && b == o.b && c == o.c; }

 private:
  void normalize() {
    Int l = boost::multiprecision::lcm(rat_den(a), boost::multiprecision::lcm(rat_den(b), rat_den(c)));
    Rat s(l);
    Int g = boost::multiprecision::gcd(rat_num(a * s),
            boost::multiprecision::gcd(rat_num(b * s), rat_num(c * s)));
    if (g != 0) s /= Rat(abs(g));
    if ((a != 0 ? a : b) * s < 0) s = -s;
    a *= s; b *= s; c *= s;
  }
};

// xx*x^2 + xy*x*y + yy*y^2 + cx*x + cy*y + c0 = 0, primitive, canonical sign.
struct Conic {
  Rat xx, xy, yy, cx, cy, c0;
  int id = -1;

  Conic(Rat xx_, Rat xy_, Rat yy_, Rat cx_, Rat cy_, Rat c0_, int id_ = -1)
      : xx(std::move(xx_)), xy(std::move(xy_)), yy(std::move(yy_)),
        cx(std::move(cx_)), cy(std::move(cy_)), c0(std::move(c0_)), id(id_) {
    if (xx == 0 && xy == 0 && yy == 0) throw std::invalid_argument("degree < 2");
    normalize();
  }

  ExactScalar eval(const ExactScalar& x, const ExactScalar& y) const {
    return ExactScalar(xx) * x * x + ExactScalar(xy) * x * y + ExactScalar(yy) * y * y +
           ExactScalar(cx) * x + ExactScalar(cy) * y + ExactScalar(c0);
  }

  // det of the symmetric matrix of the quadratic form; 0 iff degenerate.
  Rat det3() const {
    Rat m00 = xx, m01 = xy / 2, m02 = cx / 2;
    Rat m11 = yy, m12 = cy / 2, m22 = c0;
    return m00 * (m11 * m22 - m12 * m12) - m01 * (m01 * m22 - m12 * m02) +
           m02 * (m01 * m12 - m11 * m02);
  }
  bool is_degenerate() const { return det3() == 0; }

  // xy^2 - 4*xx*yy; zero iff parabola. Invariant under shears.
  Rat parabola_invariant() const { return xy * xy - 4 * xx * yy; }
  bool is_parabola() const { return parabola_invariant() == 0; }

  // Empty real locus iff the form is definite (Sylvester minors).
  bool empty_real_locus() const {
    Rat m1 = xx;
    Rat m2 = xx * yy - xy * xy / 4;
    Rat m3 = det3();
    if (m1 == 0 || m2 == 0 || m3 == 0) return false;
    bool pos = m1 > 0 && m2 > 0 && m3 > 0;
    bool neg = m1 < 0 && m2 > 0 && m3 < 0;
    return pos || neg;
  }

  // Discriminant of the fiber quadratic yy*y^2 + (xy*x+cy)*y + (xx*x^2+cx*x+c0),
  // as A*x^2 + B*x + C. Real fiber pair iff positive.
  void disc_y_coeffs(Rat& A, Rat& B, Rat& C) const {
    A = xy * xy - 4 * yy * xx;
    B = 2 * xy * cy - 4 * yy * cx;
    C = cy * cy - 4 * yy * c0;
  }
  ExactScalar disc_y_at(const ExactScalar& x) const {
    Rat A, B, C;
    disc_y_coeffs(A, B, C);
    return ExactScalar(A) * x * x + ExactScalar(B) * x + ExactScalar(C);
  }

  // Midline of the fiber pair: the polar line of the vertical direction.
  ExactScalar h_at(const ExactScalar& x) const {
    if (yy == 0) throw std::logic_error("h undefined: yy == 0");
    return (ExactScalar(-xy) * x - ExactScalar(cy)) / ExactScalar(2 * yy);
  }
  Rat h_slope() const { return -xy / (2 * yy); }

  std::pair<Rat, Rat> center() const {
    Rat den = 4 * xx * yy - xy * xy;
    if (den == 0) throw std::logic_error("parabola has no center");
    return {(xy * cy - 2 * yy * cx) / den, (xy * cx - 2 * xx * cy) / den};
  }

  bool same_conic(const Conic& o) const {
    return xx == o.xx && xy == o.xy && yy == o.yy && cx == o.cx && cy == o.cy && c0 == o.c0;
  }

 private:
  void normalize() {
    Rat* cs[6] = {&xx, &xy, &yy, &cx, &cy, &c0};
    Int l = 1;
    for (auto* r : cs) l = boost::multiprecision::lcm(l, rat_den(*r));
    Rat s(l);
    Int g = 0;
    for (auto* r : cs) g = boost::multiprecision::gcd(g, rat_num(*r * s));
    if (g != 0) s /= Rat(abs(g));
    for (auto* r : cs)
      if (*r != 0) { if (*r * s < 0) s = -s; break; }
    for (auto* r : cs) *r *= s;
  }
};

struct Arrangement {
  std::vector<Line> lines;
  std::vector<Conic> conics;

  // Component ids: lines 0..k-1 in declaration order, then conics.
  void assign_ids() {
    for (size_t i = 0; i < lines.size(); ++i) lines[i].id = static_cast<int>(i);
    for (size_t j = 0; j < conics.size(); ++j)
      conics[j].id = static_cast<int>(lines.size() + j);
  }
  int component_count() const { return static_cast<int>(lines.size() + conics.size()); }
  bool is_conic_id(int id) const { return id >= static_cast<int>(lines.size()); }
};

struct PointXY {
  ExactScalar x, y;
  std::vector<int> ids;      // incident components, sorted
  int multiplicity = 0;      // local branches through the point
  bool is_branch = false;    // conic branch point (exactly one incident id)
};

inline bool point_less(const PointXY& p, const PointXY& q) {
  int cx = compare(p.x, q.x);
  if (cx != 0) return cx < 0;
  return compare(p.y, q.y) < 0;
}
inline bool point_equal(const PointXY& p, const PointXY& q) {
  return compare(p.x, q.x) == 0 && compare(p.y, q.y) == 0;
}

inline std::optional<PointXY> line_line(const Line& l1, const Line& l2) {
  Rat det = l1.a * l2.b - l2.a * l1.b;
  if (det == 0) {
    if (l1.same_line(l2)) throw IdenticalLines();
    return std::nullopt;  // parallel
  }
  Rat x = (l1.b * l2.c - l2.b * l1.c) / det;
  Rat y = (l2.a * l1.c - l1.a * l2.c) / det;
  PointXY p;
  p.x = ExactScalar(x);
  p.y = ExactScalar(y);
  p.ids = {l1.id, l2.id};
  std::sort(p.ids.begin(), p.ids.end());
  p.multiplicity = 2;
  return p;
}

// Both intersection points of an admissible conic with a line; empty when the
// pair is complex-conjugate. The two points share one radicand and are
// exchanged by its conjugation.
inline std::vector<PointXY> conic_line(const Conic& c, const Line& l) {
  Rat A, B, C;
  bool vertical = l.is_vertical();
  if (!vertical) {
    Rat m = l.slope(), k = -l.c / l.b;
    A = c.xx + c.xy * m + c.yy * m * m;
    B = c.xy * k + 2 * c.yy * m * k + c.cx + c.cy * m;
    C = c.yy * k * k + c.cy * k + c.c0;
  } else {
    Rat x0 = -l.c / l.a;
    A = c.yy;
    B = c.xy * x0 + c.cy;
    C = c.xx * x0 * x0 + c.cx * x0 + c.c0;
  }
  if (A == 0) throw InfiniteIntersection();
  Rat disc = B * B - 4 * A * C;
  if (disc < 0) return {};
  if (disc == 0) throw UnsupportedTangency();
  ExactScalar root = sqrt_of_rational(disc);
  std::vector<PointXY> out;
  for (int s : {-1, 1}) {
    ExactScalar r = (ExactScalar(-B) + (s < 0 ? -root : root)) / ExactScalar(2 * A);
    PointXY p;
    if (!vertical) { p.x = r; p.y = l.y_at(r); }
    else { p.x = ExactScalar(-l.c / l.a); p.y = r; }
    p.ids = {l.id, c.id};
    std::sort(p.ids.begin(), p.ids.end());
    p.multiplicity = 2;
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), point_less);
  return out;
}

// x-critical points of the projection restricted to the conic.
inline std::pair<PointXY, PointXY> branch_points(const Conic& c) {
  if (c.is_parabola()) throw UnsupportedParabola();
  if (c.yy == 0)
    throw std::logic_error("branch points undefined while yy == 0; shear first");
  Rat A, B, C;
  c.disc_y_coeffs(A, B, C);
  Rat disc = B * B - 4 * A * C;
  if (disc < 0) throw ComplexBranchPoints();
  if (disc == 0)
    throw std::logic_error("coincident branch points on a smooth conic");
  ExactScalar root = sqrt_of_rational(disc);
  auto mk = [&](int s) {
    ExactScalar xb = (ExactScalar(-B) + (s < 0 ? -root : root)) / ExactScalar(2 * A);
    PointXY p;
    p.x = xb;
    p.y = c.h_at(xb);
    p.ids = {c.id};
    p.multiplicity = 1;
    p.is_branch = true;
    return p;
  };
  PointXY p1 = mk(-1), p2 = mk(1);
  if (!point_less(p1, p2)) std::swap(p1, p2);
  return {p1, p2};
}

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind {
  DuplicateComponent,
  TooManyConics,
  DegenerateConic,
  EmptyRealLocus,
  UnsupportedParabola,
  UnsupportedTangency,
  ComplexIntersection,
  InfiniteIntersection,
  ComplexBranchPoints,
  LineThroughBranchPoint,
};

inline const char* violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::DuplicateComponent: return "DuplicateComponent";
    case ViolationKind::TooManyConics: return "TooManyConics";
    case ViolationKind::DegenerateConic: return "DegenerateConic";
    case ViolationKind::EmptyRealLocus: return "EmptyRealLocus";
    case ViolationKind::UnsupportedParabola: return "UnsupportedParabola";
    case ViolationKind::UnsupportedTangency: return "UnsupportedTangency";
    case ViolationKind::ComplexIntersection: return "ComplexIntersection";
    case ViolationKind::InfiniteIntersection: return "InfiniteIntersection";
    case ViolationKind::ComplexBranchPoints: return "ComplexBranchPoints";
    case ViolationKind::LineThroughBranchPoint: return "LineThroughBranchPoint";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  std::vector<int> ids;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool passes() const { return violations.empty(); }
  // The structure module's combinatorial path accepts exactly-two-conic
  // inputs whose only violation is the conic count.
  bool passes_two_conic() const {
    if (violations.empty()) return true;
    for (const auto& v : violations)
      if (v.kind != ViolationKind::TooManyConics) return false;
    return true;
  }
  bool has(ViolationKind k) const {
    for (const auto& v : violations)
      if (v.kind == k) return true;
    return false;
  }
};

// --- small rational polynomial kit (two-conic certificates only) ---
namespace detail {

using Poly = std::vector<Rat>;  // coefficients, degree order; no trailing zeros

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
inline int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }
inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}
inline Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  poly_trim(a);
  return a;
}
inline Poly poly_deriv(const Poly& p) {
  Poly r;
  for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rat(static_cast<long>(i)));
  return r;
}
inline Poly poly_rem(Poly a, const Poly& b) {
  while (poly_deg(a) >= poly_deg(b) && !a.empty()) {
    Rat f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    poly_trim(a);
    if (static_cast<int>(a.size()) == 0) break;
    if (poly_deg(a) < poly_deg(b)) break;
  }
  return a;
}
inline bool poly_squarefree(const Poly& p) {
  Poly a = p, b = poly_deriv(p);
  while (!b.empty()) {
    Poly r = poly_rem(a, b);
    a = b;
    b = r;
  }
  return poly_deg(a) == 0;
}
// Number of distinct real roots via Sturm chains (signs at -inf / +inf).
inline int sturm_real_roots(const Poly& p) {
  std::vector<Poly> chain{p, poly_deriv(p)};
  while (!chain.back().empty() && poly_deg(chain.back()) > 0) {
    Poly r = poly_rem(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    chain.push_back(r);
  }
  auto changes = [&](int at_inf) {
    int prev = 0, n = 0;
    for (const auto& q : chain) {
      if (q.empty()) continue;
      int s = q.back().sign();
      if (at_inf < 0 && poly_deg(q) % 2 == 1) s = -s;
      if (s != 0 && prev != 0 && s != prev) ++n;
      if (s != 0) prev = s;
    }
    return n;
  };
  return changes(-1) - changes(+1);
}

// Res_y of two quadratics in y whose coefficients are polynomials in x.
inline Poly conic_resultant_y(const Conic& c1, const Conic& c2) {
  Poly a1{c1.yy}, a2{c2.yy};
  Poly b1{c1.cy, c1.xy}, b2{c2.cy, c2.xy};
  Poly cc1{c1.c0, c1.cx, c1.xx}, cc2{c2.c0, c2.cx, c2.xx};
  Poly u = poly_sub(poly_mul(a1, cc2), poly_mul(a2, cc1));
  Poly v = poly_sub(poly_mul(a1, b2), poly_mul(a2, b1));
  Poly w = poly_sub(poly_mul(b1, cc2), poly_mul(b2, cc1));
  return poly_sub(poly_mul(u, u), poly_mul(v, w));
}

}  // namespace detail

inline Line apply_shear(const Line& l, const Rat& t) {
  return Line(l.a, l.b - l.a * t, l.c, l.id);
}
inline Conic apply_shear(const Conic& c, const Rat& t) {
  return Conic(c.xx, c.xy - 2 * c.xx * t, c.yy - c.xy * t + c.xx * t * t,
               c.cx, c.cy - c.cx * t, c.c0, c.id);
}
inline Arrangement apply_shear(const Arrangement& arr, const Rat& t) {
  Arrangement out;
  for (const auto& l : arr.lines) out.lines.push_back(apply_shear(l, t));
  for (const auto& c : arr.conics) out.conics.push_back(apply_shear(c, t));
  return out;
}

// Certificate that two conics meet in 4 distinct real transversal points.
// Decided on the y-resultant after a shear scan: tangency and shared infinite
// points are shear-invariant, x-collisions are not.
enum class ConicConicOutcome { FourRealTransversal, Tangent, Complex, AtInfinity };
inline ConicConicOutcome conic_conic_certify(const Conic& c1, const Conic& c2) {
  bool saw_deg4 = false;
  for (int k = 0; k <= 32; ++k) {
    Rat t = (k == 0) ? Rat(0) : Rat(1, k);
    Conic s1 = apply_shear(c1, t), s2 = apply_shear(c2, t);
    if (s1.yy == 0 || s2.yy == 0) continue;
    detail::Poly r = detail::conic_resultant_y(s1, s2);
    if (detail::poly_deg(r) < 4) continue;  // x-degenerate under this shear
    saw_deg4 = true;
    if (!detail::poly_squarefree(r)) continue;
    int real = detail::sturm_real_roots(r);
    return (real == 4) ? ConicConicOutcome::FourRealTransversal
                       : ConicConicOutcome::Complex;
  }
  return saw_deg4 ? ConicConicOutcome::Tangent : ConicConicOutcome::AtInfinity;
}

inline ValidationReport validate(const Arrangement& arr) {
  ValidationReport rep;
  auto add = [&rep](ViolationKind k, std::vector<int> ids, std::string d) {
    rep.violations.push_back({k, std::move(ids), std::move(d)});
  };

  for (size_t i = 0; i < arr.lines.size(); ++i)
    for (size_t j = i + 1; j < arr.lines.size(); ++j)
      if (arr.lines[i].same_line(arr.lines[j]))
        add(ViolationKind::DuplicateComponent,
            {arr.lines[i].id, arr.lines[j].id}, "identical lines");
  for (size_t i = 0; i < arr.conics.size(); ++i)
    for (size_t j = i + 1; j < arr.conics.size(); ++j)
      if (arr.conics[i].same_conic(arr.conics[j]))
        add(ViolationKind::DuplicateComponent,
            {arr.conics[i].id, arr.conics[j].id}, "identical conics");

  if (arr.conics.size() > 1)
    add(ViolationKind::TooManyConics, {},
        "exact pipeline supports at most one conic");

  std::vector<char> conic_ok(arr.conics.size(), 1);
  for (size_t j = 0; j < arr.conics.size(); ++j) {
    const Conic& c = arr.conics[j];
    if (c.is_degenerate()) {
      add(ViolationKind::DegenerateConic, {c.id}, "singular quadratic form");
      conic_ok[j] = 0;
      continue;
    }
    if (c.empty_real_locus()) {
      add(ViolationKind::EmptyRealLocus, {c.id}, "no real points");
      conic_ok[j] = 0;
      continue;
    }
    if (c.is_parabola()) {
      add(ViolationKind::UnsupportedParabola, {c.id},
          "second branch point at infinity");
      conic_ok[j] = 0;
    }
  }

  for (size_t j = 0; j < arr.conics.size(); ++j) {
    if (!conic_ok[j]) continue;
    const Conic& c = arr.conics[j];
    for (const Line& l : arr.lines) {
      try {
        auto pts = conic_line(c, l);
        if (pts.empty())
          add(ViolationKind::ComplexIntersection, {l.id, c.id},
              "conic and line meet in a complex pair");
      } catch (const UnsupportedTangency&) {
        add(ViolationKind::UnsupportedTangency, {l.id, c.id}, "double root");
      } catch (const InfiniteIntersection&) {
        add(ViolationKind::InfiniteIntersection, {l.id, c.id},
            "line meets the conic at infinity");
      }
    }
  }

  if (arr.conics.size() == 2 && conic_ok[0] && conic_ok[1]) {
    switch (conic_conic_certify(arr.conics[0], arr.conics[1])) {
      case ConicConicOutcome::FourRealTransversal: break;
      case ConicConicOutcome::Tangent:
        add(ViolationKind::UnsupportedTangency, {arr.conics[0].id, arr.conics[1].id},
            "conic pair tangency");
        break;
      case ConicConicOutcome::Complex:
        add(ViolationKind::ComplexIntersection, {arr.conics[0].id, arr.conics[1].id},
            "fewer than four real conic-conic intersections");
        break;
      case ConicConicOutcome::AtInfinity:
        add(ViolationKind::InfiniteIntersection, {arr.conics[0].id, arr.conics[1].id},
            "conics share a point at infinity");
        break;
    }
  }

  // Branch-point conditions are decidable only once yy != 0; with yy == 0 the
  // pipeline shears first and re-validates.
  for (size_t j = 0; j < arr.conics.size(); ++j) {
    if (!conic_ok[j]) continue;
    const Conic& c = arr.conics[j];
    if (c.yy == 0) continue;
    try {
      auto [b1, b2] = branch_points(c);
      for (const Line& l : arr.lines)
        for (const PointXY* bp : {&b1, &b2})
          if (l.eval(bp->x, bp->y) == ExactScalar(0))
            add(ViolationKind::LineThroughBranchPoint, {l.id, c.id},
                "line passes through a branch point");
    } catch (const ComplexBranchPoints&) {
      add(ViolationKind::ComplexBranchPoints, {c.id},
          "projection has no real critical values on the conic");
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Singular points & genericity

// All pairwise intersections grouped by coincidence; sorted by (x, y).
inline std::vector<PointXY> intersection_points(const Arrangement& arr) {
  std::vector<PointXY> raw;
  for (size_t i = 0; i < arr.lines.size(); ++i)
    for (size_t j = i + 1; j < arr.lines.size(); ++j)
      if (auto p = line_line(arr.lines[i], arr.lines[j])) raw.push_back(*p);
  for (const auto& c : arr.conics)
    for (const auto& l : arr.lines)
      for (auto& p : conic_line(c, l)) raw.push_back(std::move(p));

  std::sort(raw.begin(), raw.end(), point_less);
  std::vector<PointXY> out;
  for (auto& p : raw) {
    if (!out.empty() && point_equal(out.back(), p)) {
      auto& ids = out.back().ids;
      ids.insert(ids.end(), p.ids.begin(), p.ids.end());
    } else {
      out.push_back(std::move(p));
    }
  }
  for (auto& p : out) {
    std::sort(p.ids.begin(), p.ids.end());
    p.ids.erase(std::unique(p.ids.begin(), p.ids.end()), p.ids.end());
    p.multiplicity = static_cast<int>(p.ids.size());
  }
  return out;
}

// Intersection points plus the conic's branch points; sorted by (x, y).
// Requires a validated arrangement with at most one conic.
inline std::vector<PointXY> singular_points(const Arrangement& arr) {
  std::vector<PointXY> out = intersection_points(arr);
  for (const auto& c : arr.conics) {
    auto [b1, b2] = branch_points(c);
    out.push_back(b1);
    out.push_back(b2);
  }
  std::sort(out.begin(), out.end(), point_less);
  return out;
}

// Incidence profile: multiset of incident-id sets over intersection points.
// Invariant under shears; the oracle for lattice preservation.
inline std::vector<std::vector<int>> incidence_profile(const Arrangement& arr) {
  std::vector<std::vector<int>> prof;
  for (const auto& p : intersection_points(arr)) prof.push_back(p.ids);
  std::sort(prof.begin(), prof.end());
  return prof;
}

// Projection-genericity for the monodromy sweep: no vertical line, conic has
// two fiber slots (yy != 0) and real branch points avoiding all lines, all
// singular values at pairwise distinct x, and no intersection point sits on
// the conic's vertical-direction polar while the fiber pair is complex there
// (the positional model cannot order that configuration).
inline bool is_generic(const Arrangement& arr) {
  for (const auto& l : arr.lines)
    if (l.is_vertical()) return false;
  for (const auto& c : arr.conics) {
    if (c.yy == 0) return false;
    try {
      auto [b1, b2] = branch_points(c);
      for (const auto& l : arr.lines)
        for (const PointXY* bp : {&b1, &b2})
          if (l.eval(bp->x, bp->y) == ExactScalar(0)) return false;
    } catch (const ComplexBranchPoints&) {
      return false;
    }
  }
  auto pts = singular_points(arr);
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    if (compare(pts[i].x, pts[i + 1].x) == 0) return false;
  for (const auto& c : arr.conics)
    for (const auto& p : pts)
      if (!p.is_branch && c.disc_y_at(p.x).sign() < 0 &&
          c.h_at(p.x) == p.y)
        return false;
  return true;
}

// Smallest t in {0, 1, 1/2, 1/3, ...} with is_generic(shear_t(arr)).
inline Rat find_shear_parameter(const Arrangement& arr) {
  for (int k = 0; k <= 512; ++k) {
    Rat t = (k == 0) ? Rat(0) : Rat(1, k);
    if (is_generic(apply_shear(arr, t))) return t;
  }
  throw std::runtime_error("no generic shear of the form 1/k found");
}

inline Arrangement shear_to_generic(const Arrangement& arr) {
  Rat t = find_shear_parameter(arr);
  Arrangement out = apply_shear(arr, t);
  if (incidence_profile(arr) != incidence_profile(out))
    throw std::logic_error("shear changed the intersection lattice");
  return out;
}

}  // namespace arrangeo
