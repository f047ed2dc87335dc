#include "coxtile/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace coxtile {

namespace {

constexpr double kPi = 3.14159265358979323846;

double angle_from_horizontal(double theta) {
  return std::min(theta - kPi, 2.0 * kPi - theta);
}

}  // namespace

Point realize_point(const EdgeBasis& basis, Mask m) {
  Point p{0.0, 0.0};
  for (int L = 0; L < basis.symbols; ++L)
    if (m >> L & 1u) {
      const auto d = basis.dir(L);
      p[0] += d[0];
      p[1] += d[1];
    }
  return p;
}

std::vector<Point> realize_loop(const EdgeBasis& basis, const Loop& loop) {
  std::vector<Point> out;
  out.reserve(loop.size());
  for (Mask m : loop) out.push_back(realize_point(basis, m));
  return out;
}

double polygon_area(const std::vector<Point>& poly) {
  double s = 0.0;
  for (size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % poly.size()];
    s += a[0] * b[1] - b[0] * a[1];
  }
  return s / 2.0;
}

double convex_overlap_area(const std::vector<Point>& subject,
                           const std::vector<Point>& clip) {
  std::vector<Point> poly = subject;
  if (polygon_area(poly) < 0.0) std::reverse(poly.begin(), poly.end());
  std::vector<Point> clipper = clip;
  if (polygon_area(clipper) < 0.0) std::reverse(clipper.begin(), clipper.end());

  for (size_t i = 0; i < clipper.size() && !poly.empty(); ++i) {
    const Point& ca = clipper[i];
    const Point& cb = clipper[(i + 1) % clipper.size()];
    auto side = [&](const Point& p) {
      return (cb[0] - ca[0]) * (p[1] - ca[1]) - (cb[1] - ca[1]) * (p[0] - ca[0]);
    };
    std::vector<Point> next;
    for (size_t j = 0; j < poly.size(); ++j) {
      const Point& a = poly[j];
      const Point& b = poly[(j + 1) % poly.size()];
      const double sa = side(a);
      const double sb = side(b);
      if (sa >= 0.0) next.push_back(a);
      if ((sa < 0.0) != (sb < 0.0)) {
        const double t = sa / (sa - sb);
        next.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
      }
    }
    poly = std::move(next);
  }
  return poly.size() < 3 ? 0.0 : std::abs(polygon_area(poly));
}

std::vector<Point> region_boundary(const EdgeBasis& basis, const Tiling& t) {
  if (basis.symbols != t.symbols || basis.family != t.family)
    throw BasisMismatch("basis does not match the tiling");
  const int N = t.symbols;
  Loop loop;
  Mask m = 0;
  for (int k = 0; k < N; ++k) {
    loop.push_back(m);
    m |= 1u << k;
  }
  loop.push_back(m);
  m = 0;
  Loop right;
  for (int k = 0; k < N; ++k) {
    right.push_back(m);
    m |= 1u << t.border[k];
  }
  for (size_t k = right.size(); k-- > 1;) loop.push_back(right[k]);
  return realize_loop(basis, loop);
}

GeometryReport check_geometry(const EdgeBasis& basis, const Tiling& t, double tol) {
  GeometryReport rep;
  rep.region_area = polygon_area(region_boundary(basis, t));

  std::vector<std::pair<size_t, std::vector<Point>>> pieces;  // tile idx, quad
  for (size_t i = 0; i < t.tiles.size(); ++i) {
    const Tile& tile = t.tiles[i];
    for (const Loop& loop : tile.outline)
      rep.tiles_area += polygon_area(realize_loop(basis, loop));
    for (const RhombusPiece& p : tile.pieces) {
      const Mask lo = 1u << p.lo, hi = 1u << p.hi;
      pieces.emplace_back(
          i, realize_loop(basis, {p.base, p.base | lo, p.base | lo | hi, p.base | hi}));
    }
  }

  for (size_t a = 0; a < pieces.size(); ++a)
    for (size_t b = a + 1; b < pieces.size(); ++b) {
      if (pieces[a].first == pieces[b].first) continue;
      rep.max_overlap =
          std::max(rep.max_overlap,
                   convex_overlap_area(pieces[a].second, pieces[b].second));
    }

  if (basis.family == Family::D)
    for (double a : basis.angles)
      rep.steep = rep.steep && angle_from_horizontal(a) > kPi / 3.0;

  const double scale = std::max(1.0, std::abs(rep.region_area));
  const bool area_ok = std::abs(rep.tiles_area - rep.region_area) <= tol * scale;
  const bool overlap_ok = rep.max_overlap <= tol * scale;
  rep.ok = area_ok && (overlap_ok || (basis.family == Family::D && !basis.strict));
  return rep;
}

}  // namespace coxtile
