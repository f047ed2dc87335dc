#include "coxtile/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace coxtile {

std::string RenderConfig::fill_for(TileKind k) const {
  if (mono) {
    switch (k) {
      case TileKind::Rhombus: return "#ffffff";
      case TileKind::HexagonMegatile: return "#e6e6e6";
      case TileKind::OctagonMegatile: return "#cccccc";
      case TileKind::GroupedMegatile: return "#d9d9d9";
    }
  }
  switch (k) {
    case TileKind::Rhombus: return "#dce8f7";
    case TileKind::HexagonMegatile: return "#f7e6c4";
    case TileKind::OctagonMegatile: return "#e6d5f0";
    case TileKind::GroupedMegatile: return "#d8ecd4";
  }
  return "#ffffff";
}

std::vector<RealizedTile> realize(const Tiling& t, const EdgeBasis& basis) {
  if (basis.symbols != t.symbols || basis.family != t.family)
    throw BasisMismatch("basis does not match the tiling");
  std::vector<RealizedTile> out;
  out.reserve(t.tiles.size());
  for (const Tile& tile : t.tiles) {
    RealizedTile rt;
    rt.tile = &tile;
    for (const Loop& loop : tile.outline) rt.polygons.push_back(realize_loop(basis, loop));
    out.push_back(std::move(rt));
  }
  return out;
}

namespace {

std::string fmt_num(double v) {
  if (std::abs(v) < 5e-7) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// Region boundary as lattice masks, with coincident border segments (shared
// prefixes of the two borders) cancelled so the drawn outline has no spikes.
Loop region_masks(const Tiling& t) {
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

  bool changed = true;
  while (changed && loop.size() > 2) {
    changed = false;
    for (size_t i = 0; i < loop.size(); ++i) {
      const size_t prev = (i + loop.size() - 1) % loop.size();
      const size_t next = (i + 1) % loop.size();
      if (loop[prev] == loop[next]) {
        loop.erase(loop.begin() + static_cast<ptrdiff_t>(std::max(i, next)));
        loop.erase(loop.begin() + static_cast<ptrdiff_t>(std::min(i, next)));
        changed = true;
        break;
      }
    }
  }
  return loop;
}

int display_symbol(Family family, int symbols, int strand) {
  if (family == Family::D) {
    const int n = symbols / 2;
    return strand < n ? n - strand : -(strand - n + 1);
  }
  return strand + 1;
}

}  // namespace

std::string to_svg(const Tiling& t, const EdgeBasis& basis, const RenderConfig& cfg) {
  const std::vector<RealizedTile> tiles = realize(t, basis);
  const Loop region = region_masks(t);
  std::vector<Point> region_pts = realize_loop(basis, region);

  double minx = 0.0, maxx = 0.0, miny = 0.0, maxy = 0.0;
  bool first = true;
  auto grow = [&](const Point& p) {
    if (first) {
      minx = maxx = p[0];
      miny = maxy = p[1];
      first = false;
    } else {
      minx = std::min(minx, p[0]);
      maxx = std::max(maxx, p[0]);
      miny = std::min(miny, p[1]);
      maxy = std::max(maxy, p[1]);
    }
  };
  for (const Point& p : region_pts) grow(p);
  for (const RealizedTile& rt : tiles)
    for (const auto& poly : rt.polygons)
      for (const Point& p : poly) grow(p);
  if (first) grow({0.0, 0.0});

  auto sx = [&](double x) { return (x - minx) * cfg.scale + cfg.margin; };
  auto sy = [&](double y) { return (maxy - y) * cfg.scale + cfg.margin; };
  const double width = (maxx - minx) * cfg.scale + 2.0 * cfg.margin;
  const double height = (maxy - miny) * cfg.scale + 2.0 * cfg.margin;
  const std::string stroke = cfg.mono ? "#000000" : "#333333";

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt_num(width) +
         "\" height=\"" + fmt_num(height) + "\" viewBox=\"0 0 " + fmt_num(width) +
         " " + fmt_num(height) + "\">\n";

  svg += "<polygon points=\"";
  for (size_t i = 0; i < region_pts.size(); ++i) {
    if (i) svg += " ";
    svg += fmt_num(sx(region_pts[i][0])) + "," + fmt_num(sy(region_pts[i][1]));
  }
  svg += "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" +
         fmt_num(cfg.stroke_width * 1.5) + "\"/>\n";

  for (const RealizedTile& rt : tiles) {
    svg += "<path d=\"";
    for (size_t li = 0; li < rt.polygons.size(); ++li) {
      const auto& poly = rt.polygons[li];
      for (size_t i = 0; i < poly.size(); ++i) {
        svg += i == 0 ? (li == 0 ? "M " : " M ") : " L ";
        svg += fmt_num(sx(poly[i][0])) + " " + fmt_num(sy(poly[i][1]));
      }
      svg += " Z";
    }
    svg += "\" fill=\"" + cfg.fill_for(rt.tile->kind) + "\" stroke=\"" + stroke +
           "\" stroke-width=\"" + fmt_num(cfg.stroke_width) + "\"/>\n";
  }

  if (cfg.show_labels) {
    Mask m = 0;
    for (int k = 0; k < t.symbols; ++k) {
      const Point a = realize_point(basis, m);
      m |= 1u << t.border[k];
      const Point b = realize_point(basis, m);
      const double tx = sx((a[0] + b[0]) / 2.0) + 6.0;
      const double ty = sy((a[1] + b[1]) / 2.0) + 4.0;
      svg += "<text x=\"" + fmt_num(tx) + "\" y=\"" + fmt_num(ty) +
             "\" font-family=\"monospace\" font-size=\"12\">" +
             std::to_string(display_symbol(t.family, t.symbols, t.border[k])) +
             "</text>\n";
    }
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace coxtile
