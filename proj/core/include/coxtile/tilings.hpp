#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxtile/embeddings.hpp"
#include "coxtile/words.hpp"

namespace coxtile {

// Edge directions for the strand diagram: one unit vector per strand, all
// descending (angles in (pi, 2pi)) and strictly monotone across strands.
struct EdgeBasis {
  Family family = Family::A;
  int symbols = 0;
  bool strict = true;                // type D steepness enforced
  std::vector<double> angles;        // radians, strictly increasing

  std::array<double, 2> dir(int strand) const;
  // angle[k] + angle[N-1-k] == 3*pi for all k (vertical mirror symmetry)
  bool symmetric(double eps = 1e-9) const;
};

// Half of a regular 2n-gon: angle_k = pi + (2k+1)pi/(2n), 0-based.
EdgeBasis edge_basis_A(int n);
// Type D basis on 2n strands.  Strict mode uses steep, mirror-symmetric
// angles inside (4pi/3, 5pi/3); regular mode reuses the regular-polygon
// spread (not steep, overlap checks become warnings).
EdgeBasis edge_basis_D(int n, bool regular = false,
                       double min_steepness = 1.0471975511965976);
// Any angle set satisfying the invariants; InvalidAngles otherwise.
EdgeBasis custom_basis(Family family, int symbols, std::vector<double> angles,
                       bool strict = true,
                       double min_steepness = 1.0471975511965976);

EdgeBasis default_basis(const CoxeterSystem& sys, bool regular = false,
                        double min_steepness = 1.0471975511965976);

// A lattice point is the strand set summed to reach it: bit L set means one
// unit step along strand L's edge vector.
using Mask = uint32_t;
using Loop = std::vector<Mask>;  // closed CCW vertex cycle

enum class TileKind : int {
  Rhombus = 0,
  HexagonMegatile = 1,
  OctagonMegatile = 2,
  GroupedMegatile = 3,
};
std::string kind_name(TileKind k);

// Unit rhombus spanned by strands lo < hi based at a lattice point.
struct RhombusPiece {
  Mask base = 0;
  int lo = 0;
  int hi = 0;
};

struct Tile {
  TileKind kind = TileKind::Rhombus;
  std::vector<Loop> outline;          // canonical boundary loops
  Mask anchor = 0;                    // lexicographically least outline vertex
  std::vector<int> labels;            // strands spanning the tile
  int origin = -1;                    // word letter index that emitted it
  std::vector<RhombusPiece> pieces;   // exact unit-rhombus cover

  // Tile identity is (kind, outline): exact, independent of angles.
  friend bool operator==(const Tile& a, const Tile& b) {
    return a.kind == b.kind && a.outline == b.outline;
  }
  friend bool operator<(const Tile& a, const Tile& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.outline < b.outline;
  }
};

struct Tiling {
  Family family = Family::A;
  int symbols = 0;
  Perm border;                 // right border, top to bottom
  std::vector<Tile> tiles;     // canonically sorted

  // Stable identity key over tile kinds and outlines.
  std::vector<uint64_t> key() const;
  friend bool operator==(const Tiling& a, const Tiling& b) {
    return a.family == b.family && a.symbols == b.symbols && a.border == b.border &&
           a.tiles == b.tiles;
  }
};

// Canonicalizes a vertex cycle: CCW orientation, least vertex first.
Loop canonical_loop(Loop loop);
// Boundary of a union of CCW loops with shared edges cancelled.
std::vector<Loop> union_outline(const std::vector<Loop>& loops);

// Sweep tiling of a reduced word.  Type A emits one rhombus per letter;
// type D emits a mirrored rhombus pair per non-crossing letter and one
// octagon megatile per crossing letter.
Tiling tile_word(const CoxeterSystem& sys, const LengthTable& table, const Word& w);

// Subtiling: expand the X-word into the host, tile, and merge each
// x-letter's tiles into one megatile (hexagon for a braid block expansion,
// the plain tile for a single-letter footprint, grouped otherwise).
Tiling subtiling(const AdmissiblePartition& p, const Word& x_word);

// Allowed commutation moves for the host's tiling bijection: all commuting
// pairs for type A; all commuting pairs except the {s1,s3} fork for type D.
RelationSet tiling_relations(const CoxeterSystem& sys);

// Vertical reflection of a type-A tiling (strand i <-> n+1-i).  The basis is
// consulted only for the symmetry requirement.
Tiling mirror_A(const CoxeterSystem& sys, const EdgeBasis& basis, const Tiling& t);

struct VerifyResult {
  uint64_t words = 0;
  uint64_t classes = 0;
  uint64_t tilings = 0;
  bool ok = false;
};

// words/classes/distinct-tilings for one element; ok requires the
// class -> tiling map to be constant on classes and injective across them.
VerifyResult verify_bijection(const CoxeterSystem& sys, const LengthTable& table,
                              WordEnumerator& enumerator, const Perm& w,
                              const RelationSet& rels);

// Same check over subtilings of an element of X.
VerifyResult verify_bijection(const AdmissiblePartition& p, const Perm& x,
                              const RelationSet& rels);

// Aggregates verify_bijection over every element of the group, in parallel.
VerifyResult verify_all_elements(const CoxeterSystem& sys, const LengthTable& table,
                                 const RelationSet& rels, int jobs = 1,
                                 uint64_t word_cap = 10000000);

}  // namespace coxtile
