#include "support/polyline_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace platdist::oracle_support {

namespace {

constexpr double kPi = std::numbers::pi;

// Concrete axis position for crossing i of the diagram.  Crossings in gap
// g < 2m spread inside (g, g+1); infinity-gap crossings go left of
// puncture 1 inside (0, 1), keeping their circular order.
std::vector<double> crossing_positions(const CurveDiagram& c) {
  std::vector<double> pos(c.size());
  const int tm = c.punctures();
  for (int g = 1; g <= tm; ++g) {
    auto [a, b] = c.gap_range(g);
    int cnt = b - a;
    double base = (g == tm) ? 0.0 : static_cast<double>(g);
    for (int i = a; i < b; ++i)
      pos[i] = base + static_cast<double>(i - a + 1) / (cnt + 1);
  }
  return pos;
}

void append_semicircle(Polyline& out, double x0, double x1, int side) {
  // From (x0, 0) to (x1, 0) through the half-plane `side` (+1 above).
  const int steps = 48;
  double cx = 0.5 * (x0 + x1), r = 0.5 * std::abs(x1 - x0);
  double a0 = x0 < x1 ? kPi : 0.0, a1 = x0 < x1 ? 0.0 : kPi;
  for (int s = 1; s < steps; ++s) {
    double t = a0 + (a1 - a0) * s / steps;
    out.push_back({cx + r * std::cos(t), side * r * std::sin(t)});
  }
}

}  // namespace

Polyline draw_curve(const CurveDiagram& c) {
  if (c.is_empty()) return {};
  auto pos = crossing_positions(c);
  Polyline out;
  // Walk the curve: start at crossing 0, alternate upper and lower arcs.
  int at = 0;
  bool use_upper = true;
  do {
    out.push_back({pos[at], 0.0});
    int nxt = use_upper ? c.upper(at) : c.lower(at);
    append_semicircle(out, pos[at], pos[nxt], use_upper ? +1 : -1);
    at = nxt;
    use_upper = !use_upper;
  } while (at != 0);
  return out;
}

Polyline twist(const Polyline& poly, int k, int sign) {
  const double cx = k + 0.5;
  const double r_full = 0.62, r_supp = 0.93;
  auto map_point = [&](Point p) {
    double dx = p.x - cx, dy = p.y;
    double r = std::hypot(dx, dy);
    if (r >= r_supp) return p;
    double f = r <= r_full ? 1.0 : (r_supp - r) / (r_supp - r_full);
    double ang = sign * kPi * f;
    double ca = std::cos(ang), sa = std::sin(ang);
    return Point{cx + dx * ca - dy * sa, dx * sa + dy * ca};
  };
  // Subdivide so the piecewise rotation stays faithful.
  Polyline fine;
  const double max_len = 0.01;
  int n = static_cast<int>(poly.size());
  for (int i = 0; i < n; ++i) {
    Point a = poly[i], b = poly[(i + 1) % n];
    double len = std::hypot(b.x - a.x, b.y - a.y);
    int pieces = std::max(1, static_cast<int>(std::ceil(len / max_len)));
    for (int s = 0; s < pieces; ++s) {
      double t = static_cast<double>(s) / pieces;
      fine.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
    }
  }
  Polyline out;
  out.reserve(fine.size());
  for (const Point& p : fine) out.push_back(map_point(p));
  return out;
}

CurveDiagram extract_diagram(const Polyline& poly, int punctures) {
  const int n = static_cast<int>(poly.size());
  struct Crossing {
    double x;
    int traversal;  // order along the loop
  };
  std::vector<Crossing> cr;
  std::vector<int> side_after;  // +1 if the arc after crossing t runs above
  // Vertices exactly on the axis count as lying just above it, so each
  // crossing registers exactly once.
  auto above = [](const Point& p) { return p.y >= 0; };
  for (int i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    if (above(a) == above(b)) continue;
    double t = a.y / (a.y - b.y);
    double x = a.x + t * (b.x - a.x);
    cr.push_back({x, static_cast<int>(cr.size())});
    side_after.push_back(above(b) ? +1 : -1);
  }
  const int cn = static_cast<int>(cr.size());
  if (cn == 0) return CurveDiagram::empty_diagram(punctures);
  // Circular axis order: tags 1..2m-1 by position, infinity gap (x > 2m
  // then x < 1) last.
  std::vector<int> order(cn);
  for (int i = 0; i < cn; ++i) order[i] = i;
  auto key = [&](int i) {
    double x = cr[i].x;
    if (x > punctures) return std::pair<int, double>(1, x);
    if (x < 1) return std::pair<int, double>(2, x);
    return std::pair<int, double>(0, x);
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
  std::vector<int> pos_of(cn);  // traversal index -> axis index
  for (int axis = 0; axis < cn; ++axis) pos_of[order[axis]] = axis;
  std::vector<int> gap(cn), upper(cn, -1), lower(cn, -1);
  for (int axis = 0; axis < cn; ++axis) {
    double x = cr[order[axis]].x;
    int g;
    if (x < 1 || x > punctures)
      g = punctures;
    else
      g = static_cast<int>(std::floor(x));
    gap[axis] = g;
  }
  for (int t = 0; t < cn; ++t) {
    int u = pos_of[t], v = pos_of[(t + 1) % cn];
    if (side_after[t] > 0) {
      upper[u] = v;
      upper[v] = u;
    } else {
      lower[u] = v;
      lower[v] = u;
    }
  }
  return reduce(CurveDiagram::make(punctures, std::move(gap), std::move(upper),
                                   std::move(lower)));
}

CurveDiagram oracle_apply_generator(const CurveDiagram& c, int k, int sign) {
  return extract_diagram(twist(draw_curve(c), k, sign), c.punctures());
}

int drawn_crossings(const CurveDiagram& a, const CurveDiagram& b) {
  Polyline pa = draw_curve(a), pb = draw_curve(b);
  // Nudge b off a to keep crossings transverse.
  for (Point& p : pb) {
    p.x += 1e-4;
    p.y += 3e-5;
  }
  int count = 0;
  int na = static_cast<int>(pa.size()), nb = static_cast<int>(pb.size());
  auto cross2 = [](Point o, Point p, Point q) {
    return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
  };
  for (int i = 0; i < na; ++i) {
    Point a0 = pa[i], a1 = pa[(i + 1) % na];
    for (int j = 0; j < nb; ++j) {
      Point b0 = pb[j], b1 = pb[(j + 1) % nb];
      double d1 = cross2(a0, a1, b0), d2 = cross2(a0, a1, b1);
      double d3 = cross2(b0, b1, a0), d4 = cross2(b0, b1, a1);
      if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0))) ++count;
    }
  }
  return count;
}

}  // namespace platdist::oracle_support
