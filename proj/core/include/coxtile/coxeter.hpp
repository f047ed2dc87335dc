#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxtile/config.hpp"
#include "coxtile/errors.hpp"
#include "coxtile/perm.hpp"

namespace coxtile {

enum class Family : char { A = 'A', B = 'B', D = 'D', H = 'H' };

struct CoxeterType {
  Family family = Family::A;
  int rank = 0;

  std::string name() const;
  static CoxeterType parse(const std::string& text);  // "A5", "d4"; ParseError

  friend bool operator==(const CoxeterType&, const CoxeterType&) = default;
};

// How one generator permutes the slot contents of the wiring diagram:
// a list of disjoint slot transpositions.  `crossing` marks the type-D
// generator whose two transpositions straddle the horizontal axis.
struct SlotAction {
  std::vector<std::pair<int, int>> swaps;
  bool crossing = false;
};

// A finite Coxeter system realized as a permutation group on "slots".
//
// Type A_m acts on m+1 slots whose initial contents read 1..m+1 top to
// bottom; generator s_i transposes the symbols i, i+1.  Type D_n acts on 2n
// slots initially reading n,...,1,-1,...,-n; s_1 = (1,-2)(2,-1),
// s_2 = (2,3)(-2,-3), s_3 = (1,2)(-1,-2), and s_i = (i-1,i)(-(i-1),-i) for
// i >= 4.  The Coxeter matrix is computed from the permutations, and
// diagram_labels records the conventional diagram node for each generator
// (for type D the computed commuting fork is {s1,s3}, drawn as nodes 1,2).
class CoxeterSystem {
 public:
  CoxeterType type;
  int rank = 0;
  int symbols = 0;
  std::vector<Perm> gens;
  std::vector<SlotAction> actions;
  std::vector<std::vector<int>> matrix;
  std::vector<int> diagram_labels;

  bool commutes(int i, int j) const { return matrix[i][j] == 2; }

  // Slot <-> displayed symbol value (type A: 1..n+1; type D: signed).
  int display_of_slot(int slot) const;
  int slot_of_display(int value) const;  // ParseError on invalid symbol
  std::string slot_name(int slot) const;

  // One-line element text, e.g. "3 1 2" (type A) or "-2 1 3 4" (type D,
  // images of 1..n).  Parsing validates membership in the group.
  std::string element_to_string(const Perm& w) const;
  Perm element_from_string(const std::string& text) const;
};

// Builds a supported host system (A_m with 1 <= m <= 7, D_n with
// 4 <= n <= 6).  B/H/E/F types have no direct host realization here and
// raise UnsupportedType.
CoxeterSystem build_system(CoxeterType type);

// Orders of pairwise generator products.
std::vector<std::vector<int>> coxeter_matrix(const std::vector<Perm>& gens);

// Element list in BFS order from the identity with word lengths, the right
// multiplication table, and right-descent bitmasks, for any finite
// permutation group generated by involutions.
class LengthTable {
 public:
  LengthTable() = default;

  static LengthTable build(const std::vector<Perm>& gens, uint64_t group_cap);

  uint32_t size() const { return static_cast<uint32_t>(elems_.size()); }
  int num_gens() const { return ngens_; }
  const Perm& element(uint32_t e) const { return elems_[e]; }

  std::optional<uint32_t> find(const Perm& w) const;
  uint32_t index_of(const Perm& w) const;  // NotInSubgroup

  int length(uint32_t e) const { return len_[e]; }
  int length(const Perm& w) const { return len_[index_of(w)]; }
  uint32_t right(uint32_t e, int g) const {
    return right_[e * static_cast<uint32_t>(ngens_) + static_cast<uint32_t>(g)];
  }
  uint32_t descent_mask(uint32_t e) const { return desc_[e]; }
  bool has_descent(uint32_t e, int g) const { return desc_[e] >> g & 1u; }

  uint32_t longest() const;  // index of the unique maximal-length element
  int max_length() const { return max_len_; }

 private:
  std::vector<Perm> elems_;
  std::unordered_map<Perm, uint32_t, PermHash> index_;
  std::vector<uint8_t> len_;
  std::vector<uint32_t> desc_;
  std::vector<uint32_t> right_;
  int ngens_ = 0;
  int max_len_ = 0;
};

LengthTable length_and_descents(const CoxeterSystem& sys, const Config& cfg = {});

Perm longest_element(const CoxeterSystem& sys, const LengthTable& table);

// Longest element of the parabolic subgroup generated by `block`
// (0-based generator indices).
Perm parabolic_longest(const CoxeterSystem& sys, const std::vector<int>& block,
                       const Config& cfg = {});

}  // namespace coxtile
