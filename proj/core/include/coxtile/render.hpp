#pragma once

#include <string>
#include <vector>

#include "coxtile/geometry.hpp"
#include "coxtile/tilings.hpp"

namespace coxtile {

struct RenderConfig {
  double scale = 60.0;       // pixels per unit edge
  double stroke_width = 1.0;
  bool mono = false;         // monochrome palette
  bool show_labels = false;  // border strand labels
  bool regular_mode = false;
  double margin = 12.0;

  std::string fill_for(TileKind k) const;
};

struct RealizedTile {
  const Tile* tile;
  std::vector<std::vector<Point>> polygons;  // one per outline loop
};

// Realizes every tile outline; BasisMismatch when the basis does not match
// the tiling's family/strand count.
std::vector<RealizedTile> realize(const Tiling& t, const EdgeBasis& basis);

// Deterministic SVG 1.1 text: fixed 6-decimal coordinates, stable ordering,
// one <path> element per tile over a <polygon> region outline.
std::string to_svg(const Tiling& t, const EdgeBasis& basis,
                   const RenderConfig& cfg = {});

}  // namespace coxtile
