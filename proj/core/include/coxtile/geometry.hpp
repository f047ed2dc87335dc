#pragma once

#include <array>
#include <vector>

#include "coxtile/tilings.hpp"

namespace coxtile {

using Point = std::array<double, 2>;

Point realize_point(const EdgeBasis& basis, Mask m);
std::vector<Point> realize_loop(const EdgeBasis& basis, const Loop& loop);

double polygon_area(const std::vector<Point>& poly);  // signed, CCW positive

// Area of the intersection of two convex polygons (Sutherland–Hodgman).
double convex_overlap_area(const std::vector<Point>& subject,
                           const std::vector<Point>& clip);

// The boundary of Y(w): down the identity border, back up the right border.
std::vector<Point> region_boundary(const EdgeBasis& basis, const Tiling& t);

struct GeometryReport {
  double region_area = 0.0;
  double tiles_area = 0.0;
  double max_overlap = 0.0;   // largest pairwise piece intersection
  bool steep = true;          // type D strict steepness satisfied
  bool ok = false;
};

// Checks that realized tile areas sum to the region area and tile interiors
// are pairwise disjoint, within `tol` relative error.  In non-strict (regular)
// type D mode overlap failures are reported via the fields but do not clear
// `ok`.
GeometryReport check_geometry(const EdgeBasis& basis, const Tiling& t,
                              double tol = 1e-9);

}  // namespace coxtile
