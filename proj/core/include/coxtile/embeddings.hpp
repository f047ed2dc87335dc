#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coxtile/coxeter.hpp"
#include "coxtile/words.hpp"

namespace coxtile {

struct TableRowInfo {
  std::string key;   // "A5-B3", "D6-H3", ...
  std::string host;
  std::string sub;
  bool constructible;
};

// The catalogued partition rows, including the E-host rows that are recorded
// as data only.
const std::vector<TableRowInfo>& table_rows();

// A partition of a host system's generators into blocks realizing a smaller
// Coxeter system (X,T): t_i is the longest element of the parabolic subgroup
// generated by block i.  X is materialized as the closure of the image
// permutations, so lengths and descents in X come from its own Cayley table.
class AdmissiblePartition {
 public:
  std::shared_ptr<const CoxeterSystem> host;
  std::shared_ptr<const LengthTable> host_table;
  CoxeterType sub_type;
  std::vector<std::vector<int>> blocks;       // 0-based host generator indices
  std::vector<Perm> images;
  std::vector<Word> expansions;               // canonical host word per t_i
  std::vector<std::vector<Word>> block_words; // accepted expansions per t_i
  LengthTable sub_table;
  std::vector<std::vector<int>> induced;      // orders of image products

  int block_of_letter(int host_gen) const;    // -1 when uncovered
};

// Builds a catalogued row.  Keys follow host-sub naming ("A5-B3", "A6-B3",
// "D4-B3", "D5-B4", "D6-H3").  E-host rows raise UnsupportedHost; unknown
// keys raise ParseError.
AdmissiblePartition table_row(const std::string& key, const Config& cfg = {});
AdmissiblePartition table_row(CoxeterType host, CoxeterType sub, const Config& cfg = {});

// The Coxeter matrix the declared sub-type must induce.
std::vector<std::vector<int>> expected_matrix(CoxeterType t);

// Recomputes image-product orders and checks them against the declared
// sub-type; returns the matrix or throws MatrixMismatch naming the pair.
std::vector<std::vector<int>> verify_induced_matrix(const AdmissiblePartition& p);

// Expands a reduced X-word letter by letter using the canonical block
// expansions; the result is reduced in the host (checked).
Word embed_word(const AdmissiblePartition& p, const Word& x_word);  // NotReducedInX

int x_length(const AdmissiblePartition& p, const Perm& x);  // NotInSubgroup
Perm x_longest(const AdmissiblePartition& p);

struct SigmaParse {
  std::vector<std::pair<int, Word>> parts;  // (block index, consumed letters)
  Word x_word;
};

// Factors a reduced host word into consecutive block expansions.  Returns
// nullopt when no factorization exists; NotReducedInW for non-reduced input.
std::optional<SigmaParse> parse_sigma_consistent(const AdmissiblePartition& p,
                                                 const Word& s_word);

/// K = { {t_i,t_j} : every cross pair (a in block_i, b in block_j) lies in J }.
RelationSet induced_relation_set(const AdmissiblePartition& p, const RelationSet& J);

}  // namespace coxtile
