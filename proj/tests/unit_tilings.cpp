#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "coxtile/tilings.hpp"

using namespace coxtile;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Inversions of the border as strand pairs: (a,b) with a < b whose order is
// reversed relative to the identity border.
std::multiset<std::pair<int, int>> border_inversions(const Tiling& t) {
  const Perm inv = t.border.inverse();
  std::multiset<std::pair<int, int>> pairs;
  for (int a = 0; a < t.symbols; ++a)
    for (int b = a + 1; b < t.symbols; ++b)
      if (inv[a] > inv[b]) pairs.insert({a, b});
  return pairs;
}

std::multiset<std::pair<int, int>> rhombus_labels(const Tiling& t) {
  std::multiset<std::pair<int, int>> pairs;
  for (const Tile& tile : t.tiles) pairs.insert({tile.labels[0], tile.labels[1]});
  return pairs;
}

}  // namespace

TEST_CASE("edge bases") {
  const EdgeBasis a = edge_basis_A(4);
  REQUIRE(a.angles.size() == 4);
  CHECK(a.symmetric());
  CHECK(a.strict);
  for (size_t k = 0; k < a.angles.size(); ++k) {
    CHECK(a.angles[k] > kPi);
    CHECK(a.angles[k] < 2 * kPi);
    if (k) CHECK(a.angles[k] > a.angles[k - 1]);
    CHECK(a.angles[k] == doctest::Approx(kPi + (2.0 * k + 1.0) * kPi / 8.0));
  }

  const EdgeBasis d = edge_basis_D(4);
  REQUIRE(d.angles.size() == 8);
  CHECK(d.symmetric());
  CHECK(d.strict);
  for (double angle : d.angles) {
    const double from_horizontal = std::min(angle - kPi, 2 * kPi - angle);
    CHECK(from_horizontal > kPi / 3);
  }

  const EdgeBasis flat = edge_basis_D(4, true);
  CHECK_FALSE(flat.strict);
  CHECK(flat.symmetric());
}

TEST_CASE("custom basis validation") {
  CHECK_NOTHROW(custom_basis(Family::A, 2, {3.5, 4.5}));
  CHECK_THROWS_AS(custom_basis(Family::A, 2, {3.5}), InvalidAngles);
  CHECK_THROWS_AS(custom_basis(Family::A, 2, {4.5, 3.5}), InvalidAngles);
  CHECK_THROWS_AS(custom_basis(Family::A, 2, {1.0, 4.5}), InvalidAngles);
  CHECK_THROWS_AS(custom_basis(Family::A, 2, {3.5, 7.0}), InvalidAngles);
  // Strict type D refuses shallow angles.
  CHECK_THROWS_AS(custom_basis(Family::D, 2, {3.3, 4.5}), InvalidAngles);
  CHECK_NOTHROW(custom_basis(Family::D, 2, {3.3, 4.5}, false));
}

TEST_CASE("canonical loops") {
  const Loop square = {0u, 1u, 3u, 2u};
  CHECK(canonical_loop(square) == square);
  CHECK(canonical_loop({3u, 2u, 0u, 1u}) == square);
  // Clockwise input is reversed.
  CHECK(canonical_loop({0u, 2u, 3u, 1u}) == square);
  CHECK_THROWS_AS(canonical_loop({0u, 1u}), Error);
}

TEST_CASE("union outlines") {
  const Loop r1 = {0u, 1u, 3u, 2u};          // strands {0,1} at the basepoint
  const Loop r2 = {2u, 3u, 7u, 6u};          // strands {0,2} one step down
  const auto merged = union_outline({r1, r2});
  REQUIRE(merged.size() == 1);
  CHECK(merged[0] == Loop{0u, 1u, 3u, 7u, 6u, 2u});

  // Disjoint tiles stay separate loops.
  const Loop far = {8u, 9u, 25u, 24u};       // strands {0,4} at bit-3 offset
  CHECK(union_outline({r1, far}).size() == 2);

  CHECK_THROWS_AS(union_outline({r1, r1}), Error);
}

TEST_CASE("hexagon sweep") {
  const CoxeterSystem sys = build_system({Family::A, 2});
  const LengthTable table = LengthTable::build(sys.gens, 1000000);
  const Tiling t = tile_word(sys, table, {0, 1, 0});
  REQUIRE(t.tiles.size() == 3);
  for (const Tile& tile : t.tiles) {
    CHECK(tile.kind == TileKind::Rhombus);
    CHECK(tile.outline.size() == 1);
    CHECK(tile.outline[0].size() == 4);
    CHECK(tile.pieces.size() == 1);
  }
  CHECK(sys.element_to_string(t.border) == "3 2 1");

  // The other class gives a different tiling of the same border.
  const Tiling u = tile_word(sys, table, {1, 0, 1});
  CHECK(u.border == t.border);
  CHECK(u.key() != t.key());

  // Commutation does not change the tiling.
  const CoxeterSystem a3 = build_system({Family::A, 3});
  const LengthTable t3 = LengthTable::build(a3.gens, 1000000);
  CHECK(tile_word(a3, t3, {0, 2}).key() == tile_word(a3, t3, {2, 0}).key());
}

TEST_CASE("sweep input validation") {
  const CoxeterSystem sys = build_system({Family::A, 2});
  const LengthTable table = LengthTable::build(sys.gens, 1000000);
  CHECK_THROWS_AS(tile_word(sys, table, {0, 0}), NotReduced);
  CHECK_THROWS_AS(tile_word(sys, table, {5}), ParseError);
}

TEST_CASE("rhombi carry the border inversions across the full A4 host") {
  const CoxeterSystem sys = build_system({Family::A, 4});
  const LengthTable table = LengthTable::build(sys.gens, 1000000);
  WordEnumerator enumerator(table);
  uint64_t words = 0;
  for (uint32_t e = 0; e < table.size(); ++e)
    for (const Word& w : enumerator.enumerate(e)) {
      const Tiling t = tile_word(sys, table, w);
      CHECK(t.tiles.size() == w.size());
      CHECK(t.border == table.element(e));
      CHECK(rhombus_labels(t) == border_inversions(t));
      ++words;
    }
  CHECK(words == 3061);
}

TEST_CASE("type D sweep") {
  const CoxeterSystem sys = build_system({Family::D, 4});
  const LengthTable table = LengthTable::build(sys.gens, 1000000);

  const Tiling crossing = tile_word(sys, table, {0});
  REQUIRE(crossing.tiles.size() == 1);
  const Tile& oct = crossing.tiles[0];
  CHECK(oct.kind == TileKind::OctagonMegatile);
  CHECK(oct.outline.size() == 1);
  CHECK(oct.outline[0].size() == 8);
  CHECK(oct.labels == std::vector<int>{2, 3, 4, 5});
  CHECK(oct.pieces.size() == 4);

  const Tiling plain = tile_word(sys, table, {1});
  REQUIRE(plain.tiles.size() == 2);
  for (const Tile& tile : plain.tiles) {
    CHECK(tile.kind == TileKind::Rhombus);
    CHECK(tile.pieces.size() == 1);
  }

  // One octagon per crossing letter, one mirrored rhombus pair otherwise.
  WordEnumerator enumerator(table);
  const Perm w0 = table.element(table.longest());
  for (const Word& w : enumerator.enumerate(table.index_of(w0))) {
    const Tiling t = tile_word(sys, table, w);
    const size_t crossings =
        static_cast<size_t>(std::count(w.begin(), w.end(), 0));
    size_t octagons = 0;
    for (const Tile& tile : t.tiles)
      if (tile.kind == TileKind::OctagonMegatile) ++octagons;
    CHECK(octagons == crossings);
    CHECK(t.tiles.size() == crossings + 2 * (w.size() - crossings));
  }
}

TEST_CASE("octagon pieces cover the crossing") {
  const CoxeterSystem sys = build_system({Family::D, 4});
  const LengthTable table = LengthTable::build(sys.gens, 1000000);
  const Tiling crossing = tile_word(sys, table, {0});
  const Tile& oct = crossing.tiles[0];
  // Pieces are the four crossing pairs of the central window.
  std::multiset<std::pair<int, int>> spans;
  for (const RhombusPiece& piece : oct.pieces) spans.insert({piece.lo, piece.hi});
  CHECK(spans == std::multiset<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 4}, {3, 5}});
  // Their union is the octagon outline.
  std::vector<Loop> loops;
  for (const RhombusPiece& piece : oct.pieces)
    loops.push_back(canonical_loop({piece.base, piece.base | (1u << piece.lo),
                                    piece.base | (1u << piece.lo) | (1u << piece.hi),
                                    piece.base | (1u << piece.hi)}));
  CHECK(union_outline(loops) == oct.outline);
}

TEST_CASE("tiling relations") {
  const CoxeterSystem a3 = build_system({Family::A, 3});
  CHECK(tiling_relations(a3).pairs() == std::vector<std::pair<int, int>>{{0, 2}});
  const CoxeterSystem d4 = build_system({Family::D, 4});
  CHECK(tiling_relations(d4).pairs() ==
        std::vector<std::pair<int, int>>{{0, 3}, {2, 3}});
}

TEST_CASE("verification counts") {
  const CoxeterSystem a4 = build_system({Family::A, 4});
  const LengthTable table = LengthTable::build(a4.gens, 1000000);
  WordEnumerator enumerator(table);
  const Perm w0 = table.element(table.longest());
  const VerifyResult r =
      verify_bijection(a4, table, enumerator, w0, tiling_relations(a4));
  CHECK(r.words == 768);
  CHECK(r.classes == 62);
  CHECK(r.tilings == 62);
  CHECK(r.ok);

  const CoxeterSystem a3 = build_system({Family::A, 3});
  const LengthTable t3 = LengthTable::build(a3.gens, 1000000);
  const VerifyResult all = verify_all_elements(a3, t3, tiling_relations(a3));
  CHECK(all.words == 66);
  CHECK(all.classes == 43);
  CHECK(all.tilings == 43);
  CHECK(all.ok);

  const VerifyResult parallel = verify_all_elements(a3, t3, tiling_relations(a3), 4);
  CHECK(parallel.words == all.words);
  CHECK(parallel.classes == all.classes);
  CHECK(parallel.tilings == all.tilings);
  CHECK(parallel.ok == all.ok);
}

TEST_CASE("subtiling megatiles") {
  const AdmissiblePartition a5 = table_row("A5-B3");
  WordEnumerator words(a5.sub_table);
  const Word x_word = words.enumerate(a5.sub_table.index_of(x_longest(a5)))[0];
  REQUIRE(x_word.size() == 9);
  const Tiling t = subtiling(a5, x_word);
  CHECK(t.tiles.size() == 9);
  std::map<TileKind, int> kinds;
  for (const Tile& tile : t.tiles) ++kinds[tile.kind];
  CHECK(kinds[TileKind::Rhombus] == 3);          // singleton block t1
  CHECK(kinds[TileKind::GroupedMegatile] == 6);  // commuting pairs t2, t3

  // A braid block produces hexagons.
  const AdmissiblePartition a6 = table_row("A6-B3");
  const Tiling braid = subtiling(a6, x_word);
  std::map<TileKind, int> braid_kinds;
  for (const Tile& tile : braid.tiles) ++braid_kinds[tile.kind];
  CHECK(braid_kinds[TileKind::HexagonMegatile] == 3);
  CHECK(braid_kinds[TileKind::GroupedMegatile] == 6);
  for (const Tile& tile : braid.tiles)
    if (tile.kind == TileKind::HexagonMegatile) {
      CHECK(tile.outline.size() == 1);
      CHECK(tile.outline[0].size() == 6);
      CHECK(tile.pieces.size() == 3);
    }

  // The D fork block merges an octagon with its rhombus pair.
  const AdmissiblePartition d4 = table_row("D4-B3");
  const Tiling forked = subtiling(d4, x_word);
  CHECK(forked.tiles.size() == 9);
  for (size_t i = 0; i < x_word.size(); ++i)
    if (x_word[i] == 0) {
      const auto it = std::find_if(forked.tiles.begin(), forked.tiles.end(),
                                   [&](const Tile& tile) {
                                     return tile.origin == static_cast<int>(i);
                                   });
      REQUIRE(it != forked.tiles.end());
      CHECK(it->kind == TileKind::GroupedMegatile);
      CHECK(it->pieces.size() == 6);  // octagon pieces plus two rhombi
    }
}

TEST_CASE("subtiling validation") {
  const AdmissiblePartition p = table_row("A5-B3");
  CHECK_THROWS_AS(subtiling(p, {0, 0}), NotReducedInX);
  CHECK_THROWS_AS(subtiling(p, {7}), ParseError);
}

TEST_CASE("subtiling bijection counts") {
  const AdmissiblePartition a5 = table_row("A5-B3");
  const RelationSet k5 = induced_relation_set(a5, tiling_relations(*a5.host));
  const VerifyResult r5 = verify_bijection(a5, x_longest(a5), k5);
  CHECK(r5.words == 42);
  CHECK(r5.classes == 14);
  CHECK(r5.tilings == 14);
  CHECK(r5.ok);

  // With the full induced relation set the D4 host agrees.
  const AdmissiblePartition d4 = table_row("D4-B3");
  const RelationSet k4 = induced_relation_set(d4, tiling_relations(*d4.host));
  const VerifyResult r4 = verify_bijection(d4, x_longest(d4), k4);
  CHECK(r4.words == 42);
  CHECK(r4.classes == 14);
  CHECK(r4.tilings == 14);
  CHECK(r4.ok);

  // Dropping the {t1,t3} commutation splits classes apart from tilings.
  const VerifyResult minus = verify_bijection(d4, x_longest(d4), k4.without(0, 2));
  CHECK(minus.words == 42);
  CHECK(minus.classes == 42);
  CHECK(minus.tilings == 14);
  CHECK_FALSE(minus.ok);
}

TEST_CASE("mirror images") {
  const CoxeterSystem a3 = build_system({Family::A, 3});
  const LengthTable table = LengthTable::build(a3.gens, 1000000);
  const EdgeBasis basis = edge_basis_A(4);

  // Reflecting a single crossing moves it to the mirrored strand pair.
  CHECK(mirror_A(a3, basis, tile_word(a3, table, {0})) ==
        tile_word(a3, table, {2}));
  CHECK(mirror_A(a3, basis, tile_word(a3, table, {1})) ==
        tile_word(a3, table, {1}));

  // Involution on every tiling of the longest element, which is mirror
  // symmetric as an element.
  WordEnumerator enumerator(table);
  for (const Word& w : enumerator.enumerate(table.longest())) {
    const Tiling t = tile_word(a3, table, w);
    const Tiling m = mirror_A(a3, basis, t);
    CHECK(mirror_A(a3, basis, m) == t);
    CHECK(m.border == t.border);
    CHECK(m.tiles.size() == t.tiles.size());
  }
}

TEST_CASE("mirror validation") {
  const CoxeterSystem a3 = build_system({Family::A, 3});
  const LengthTable table = LengthTable::build(a3.gens, 1000000);
  const Tiling t = tile_word(a3, table, {0});
  CHECK_THROWS_AS(mirror_A(a3, edge_basis_A(5), t), BasisMismatch);
  CHECK_THROWS_AS(
      mirror_A(a3, custom_basis(Family::A, 4, {3.2, 3.3, 3.4, 3.5}), t),
      AsymmetricBasis);

  const CoxeterSystem d4 = build_system({Family::D, 4});
  const LengthTable td = LengthTable::build(d4.gens, 1000000);
  CHECK_THROWS_AS(mirror_A(d4, edge_basis_D(4), tile_word(d4, td, {1})),
                  UnsupportedType);
}
