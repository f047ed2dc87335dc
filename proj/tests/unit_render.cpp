#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "coxtile/geometry.hpp"
#include "coxtile/render.hpp"

using namespace coxtile;

namespace {

constexpr double kPi = 3.14159265358979323846;

// A half-polygon region closed by its reversed border is the full regular
// 2n-gon with unit sides.
double regular_2ngon_area(int n) { return n / (2.0 * std::tan(kPi / (2.0 * n))); }

size_t count_occurrences(const std::string& text, const std::string& needle) {
  size_t count = 0;
  for (size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size()))
    ++count;
  return count;
}

Tiling longest_tiling(const CoxeterSystem& sys, const LengthTable& table) {
  WordEnumerator enumerator(table);
  const Word w = enumerator.enumerate(table.longest())[0];
  return tile_word(sys, table, w);
}

}  // namespace

TEST_CASE("points and areas") {
  const EdgeBasis basis = edge_basis_A(2);
  const Point origin = realize_point(basis, 0);
  CHECK(origin[0] == 0.0);
  CHECK(origin[1] == 0.0);
  const Point both = realize_point(basis, 3);
  CHECK(both[0] == doctest::Approx(basis.dir(0)[0] + basis.dir(1)[0]));
  CHECK(both[1] == doctest::Approx(basis.dir(0)[1] + basis.dir(1)[1]));

  const std::vector<Point> square = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(polygon_area(square) == doctest::Approx(1.0));
  const std::vector<Point> clockwise = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  CHECK(polygon_area(clockwise) == doctest::Approx(-1.0));

  // A unit rhombus spanned by strands a,b has area sin(angle difference).
  const std::vector<Point> rhombus =
      realize_loop(basis, {0u, 1u, 3u, 2u});
  CHECK(polygon_area(rhombus) ==
        doctest::Approx(std::sin(basis.angles[1] - basis.angles[0])));
}

TEST_CASE("convex overlaps") {
  const std::vector<Point> square = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const std::vector<Point> shifted = {{0.5, 0}, {1.5, 0}, {1.5, 1}, {0.5, 1}};
  const std::vector<Point> apart = {{2, 2}, {3, 2}, {3, 3}, {2, 3}};
  CHECK(convex_overlap_area(square, shifted) == doctest::Approx(0.5));
  CHECK(convex_overlap_area(square, apart) == doctest::Approx(0.0));
  CHECK(convex_overlap_area(square, square) == doctest::Approx(1.0));
}

TEST_CASE("region areas match the closed form") {
  for (int m = 2; m <= 4; ++m) {
    const CoxeterSystem sys = build_system({Family::A, m});
    const LengthTable table = LengthTable::build(sys.gens, 1000000);
    const Tiling t = longest_tiling(sys, table);
    const EdgeBasis basis = edge_basis_A(m + 1);
    const double region = polygon_area(region_boundary(basis, t));
    CHECK(region == doctest::Approx(regular_2ngon_area(m + 1)).epsilon(1e-12));
  }
}

TEST_CASE("geometry check on type A tilings") {
  const CoxeterSystem sys = build_system({Family::A, 4});
  const LengthTable table = LengthTable::build(sys.gens, 1000000);
  const EdgeBasis basis = edge_basis_A(5);
  WordEnumerator enumerator(table);
  for (const Word& w : enumerator.enumerate(table.longest())) {
    const GeometryReport report = check_geometry(basis, tile_word(sys, table, w));
    CHECK(report.ok);
    CHECK(report.max_overlap <= 1e-9);
    CHECK(report.tiles_area == doctest::Approx(report.region_area).epsilon(1e-12));
  }
}

TEST_CASE("geometry check on type D tilings") {
  const CoxeterSystem sys = build_system({Family::D, 4});
  const LengthTable table = LengthTable::build(sys.gens, 1000000);
  const EdgeBasis steep = edge_basis_D(4);

  // A longest-element word that crosses the axis only twice keeps every
  // strand pair to a single crossing and realizes cleanly.
  WordEnumerator enumerator(table);
  Word unfolded;
  for (const Word& w : enumerator.enumerate(table.longest()))
    if (std::count(w.begin(), w.end(), 0) == 2) {
      unfolded = w;
      break;
    }
  REQUIRE_FALSE(unfolded.empty());
  CHECK(check_geometry(steep, tile_word(sys, table, unfolded)).ok);

  // This element has two commutation classes; the class through "1 2 1"
  // folds a strand pair across the axis twice, so its tiles must overlap.
  const Perm folded = sys.element_from_string("-3 2 -1 4");
  REQUIRE(table.length(folded) == 3);
  CHECK(evaluate(sys, {0, 1, 0}) == folded);
  const GeometryReport bad = check_geometry(steep, tile_word(sys, table, {0, 1, 0}));
  CHECK_FALSE(bad.ok);
  CHECK(bad.max_overlap > 0.1);
  const GeometryReport good = check_geometry(steep, tile_word(sys, table, {1, 0, 1}));
  CHECK(good.ok);
  CHECK(good.max_overlap <= 1e-9);

  // The regular-polygon basis never fails the check on a fold-free word:
  // overlaps there are reported but only warn.
  const EdgeBasis flat = edge_basis_D(4, true);
  const GeometryReport warned =
      check_geometry(flat, tile_word(sys, table, unfolded));
  CHECK(warned.ok);
  CHECK(warned.tiles_area == doctest::Approx(warned.region_area).epsilon(1e-9));
}

TEST_CASE("realized vertex counts per kind") {
  const CoxeterSystem d4 = build_system({Family::D, 4});
  const LengthTable td = LengthTable::build(d4.gens, 1000000);
  const EdgeBasis basis = edge_basis_D(4);
  for (const RealizedTile& rt : realize(tile_word(d4, td, {0, 1}), basis)) {
    REQUIRE(rt.polygons.size() == 1);
    if (rt.tile->kind == TileKind::OctagonMegatile)
      CHECK(rt.polygons[0].size() == 8);
    else
      CHECK(rt.polygons[0].size() == 4);
  }

  const AdmissiblePartition a6 = table_row("A6-B3");
  WordEnumerator words(a6.sub_table);
  const Word x_word = words.enumerate(a6.sub_table.index_of(x_longest(a6)))[0];
  const EdgeBasis host_basis = edge_basis_A(7);
  for (const RealizedTile& rt : realize(subtiling(a6, x_word), host_basis))
    if (rt.tile->kind == TileKind::HexagonMegatile) {
      REQUIRE(rt.polygons.size() == 1);
      CHECK(rt.polygons[0].size() == 6);
    }
}

TEST_CASE("realize validates the basis") {
  const CoxeterSystem a2 = build_system({Family::A, 2});
  const LengthTable table = LengthTable::build(a2.gens, 1000000);
  const Tiling t = tile_word(a2, table, {0, 1, 0});
  CHECK_THROWS_AS(realize(t, edge_basis_A(4)), BasisMismatch);
  CHECK_THROWS_AS(realize(t, edge_basis_D(4)), BasisMismatch);
  CHECK(realize(Tiling{Family::A, 3, Perm::identity(3), {}}, edge_basis_A(3)).empty());
}

TEST_CASE("fill palette") {
  const RenderConfig plain;
  const RenderConfig mono{.scale = 60.0, .stroke_width = 1.0, .mono = true};
  for (TileKind k : {TileKind::Rhombus, TileKind::HexagonMegatile,
                     TileKind::OctagonMegatile, TileKind::GroupedMegatile}) {
    CHECK_FALSE(plain.fill_for(k).empty());
    CHECK_FALSE(mono.fill_for(k).empty());
    CHECK(plain.fill_for(k) != mono.fill_for(k));
  }
}

TEST_CASE("svg structure") {
  const CoxeterSystem a2 = build_system({Family::A, 2});
  const LengthTable table = LengthTable::build(a2.gens, 1000000);
  const Tiling t = tile_word(a2, table, {0, 1, 0});
  const EdgeBasis basis = edge_basis_A(3);
  const std::string svg = to_svg(t, basis);

  CHECK(svg.rfind("<?xml version=\"1.0\" encoding=\"UTF-8\"?>", 0) == 0);
  CHECK(count_occurrences(svg, "<svg") == 1);
  CHECK(count_occurrences(svg, "</svg>") == 1);
  CHECK(count_occurrences(svg, "<polygon") == 1);
  CHECK(count_occurrences(svg, "<path") == 3);
  // Fixed-point coordinates use six decimals.
  CHECK(svg.find("12.000000") != std::string::npos);
  CHECK(svg.find("nan") == std::string::npos);

  CHECK(to_svg(t, basis) == svg);

  const std::string mono =
      to_svg(t, basis, RenderConfig{.scale = 60.0, .stroke_width = 1.0, .mono = true});
  CHECK(mono != svg);
  CHECK(count_occurrences(mono, "<path") == 3);
}

TEST_CASE("svg of an empty tiling") {
  const Tiling empty{Family::A, 3, Perm::identity(3), {}};
  const std::string svg = to_svg(empty, edge_basis_A(3));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count_occurrences(svg, "</svg>") == 1);
  CHECK(count_occurrences(svg, "<path") == 0);
}

TEST_CASE("svg determinism across tile families") {
  const CoxeterSystem d4 = build_system({Family::D, 4});
  const LengthTable td = LengthTable::build(d4.gens, 1000000);
  const Tiling t = longest_tiling(d4, td);
  const EdgeBasis basis = edge_basis_D(4);
  CHECK(to_svg(t, basis) == to_svg(t, basis));

  const AdmissiblePartition h3 = table_row("D6-H3");
  WordEnumerator words(h3.sub_table);
  const Word x_word = words.enumerate(h3.sub_table.index_of(x_longest(h3)))[0];
  const Tiling sub = subtiling(h3, x_word);
  const EdgeBasis host_basis = edge_basis_D(6);
  CHECK(to_svg(sub, host_basis) == to_svg(sub, host_basis));
}
