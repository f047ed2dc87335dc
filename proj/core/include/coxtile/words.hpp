#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxtile/coxeter.hpp"

namespace coxtile {

// A word is a sequence of 0-based generator indices.  Text form is
// space-separated 1-based indices ("2 1 3"), with an optional s prefix per
// letter ("s2 s1 s3").
using Word = std::vector<int>;

std::string word_to_string(const Word& w);
Word word_from_string(const std::string& text, int rank);  // ParseError

Perm evaluate(const CoxeterSystem& sys, const Word& w);
bool is_reduced(const LengthTable& table, const Word& w);

// Unordered generator pairs whose braid relation is an allowed rewriting
// move.  Pairs are stored 0-based with i < j.
class RelationSet {
 public:
  static RelationSet none();
  static RelationSet all_commuting(const CoxeterSystem& sys);
  // Validates that pairs are distinct in-range generators; ParseError.
  static RelationSet of_pairs(int rank, std::vector<std::pair<int, int>> pairs);

  RelationSet without(int i, int j) const;
  bool contains(int i, int j) const {
    return i >= 0 && j >= 0 && (row_[i] >> j & 1u) != 0;
  }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }
  std::string to_string() const;  // "(1,3) (2,4)", 1-based

 private:
  std::vector<std::pair<int, int>> pairs_;
  uint32_t row_[Perm::kMaxSize] = {};
};

// Parses "1:3,2:4" (1-based pairs) as used by --relations custom:<pairs>.
RelationSet relations_from_string(const CoxeterSystem& sys, const std::string& text);

// Applies the braid move for `rel` = {r,s} at `pos`: the window
// w[pos .. pos+m(r,s)) must alternate r,s,... or s,r,...; it is replaced by
// the opposite alternation.  Returns nullopt when the window does not match.
std::optional<Word> apply_move(const std::vector<std::vector<int>>& matrix,
                               const Word& w, size_t pos, std::pair<int, int> rel);
std::optional<Word> apply_move(const CoxeterSystem& sys, const Word& w, size_t pos,
                               std::pair<int, int> rel);

// Reduced-word counting and enumeration by memoized recursion on right
// descents.  Counts saturate at kCountCap; enumerate refuses (ExplosionGuard)
// when the count exceeds the configured cap.
class WordEnumerator {
 public:
  static constexpr uint64_t kCountCap = 1000000000000000000ull;

  explicit WordEnumerator(const LengthTable& table, uint64_t word_cap = 10000000);

  uint64_t count(uint32_t e);
  uint64_t count(const Perm& w);
  std::vector<Word> enumerate(uint32_t e);
  std::vector<Word> enumerate(const Perm& w);

 private:
  const LengthTable* table_;
  uint64_t cap_;
  std::vector<uint64_t> memo_;
};

struct EquivalencePartition {
  // Indices into the input word list; classes and members in canonical order.
  std::vector<std::vector<uint32_t>> classes;
};

// Connected components of the move graph on `words` under the relations.
// The word list must be closed under the moves (any full reduced-word set
// is).
EquivalencePartition partition_words(const std::vector<std::vector<int>>& matrix,
                                     const std::vector<Word>& words,
                                     const RelationSet& rels);
EquivalencePartition partition_words(const CoxeterSystem& sys,
                                     const std::vector<Word>& words,
                                     const RelationSet& rels);

EquivalencePartition equivalence_classes(const CoxeterSystem& sys,
                                         const LengthTable& table,
                                         WordEnumerator& enumerator,
                                         const Perm& w, const RelationSet& rels);

}  // namespace coxtile
