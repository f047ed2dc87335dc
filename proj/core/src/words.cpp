#include "coxtile/words.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace coxtile {

std::string word_to_string(const Word& w) {
  std::ostringstream out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << w[i] + 1;
  }
  return out.str();
}

Word word_from_string(const std::string& text, int rank) {
  std::istringstream in(text);
  Word w;
  std::string tok;
  while (in >> tok) {
    std::string digits = tok;
    if (digits.size() >= 2 && (digits[0] == 's' || digits[0] == 'S'))
      digits.erase(0, 1);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
      throw ParseError("bad word letter '" + tok + "'");
    const int v = std::stoi(digits);
    if (v < 1 || v > rank)
      throw ParseError("word letter " + tok + " out of range 1.." + std::to_string(rank));
    w.push_back(v - 1);
  }
  return w;
}

Perm evaluate(const CoxeterSystem& sys, const Word& w) {
  Perm p = Perm::identity(sys.symbols);
  for (int g : w) {
    if (g < 0 || g >= sys.rank)
      throw ParseError("word letter out of range for " + sys.type.name());
    p = p * sys.gens[static_cast<size_t>(g)];
  }
  return p;
}

bool is_reduced(const LengthTable& table, const Word& w) {
  uint32_t e = 0;
  int len = 0;
  for (int g : w) {
    const uint32_t next = table.right(e, g);
    if (table.length(next) != len + 1) return false;
    e = next;
    ++len;
  }
  return true;
}

RelationSet RelationSet::none() { return {}; }

RelationSet RelationSet::all_commuting(const CoxeterSystem& sys) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < sys.rank; ++i)
    for (int j = i + 1; j < sys.rank; ++j)
      if (sys.commutes(i, j)) pairs.emplace_back(i, j);
  return of_pairs(sys.rank, std::move(pairs));
}

RelationSet RelationSet::of_pairs(int rank, std::vector<std::pair<int, int>> pairs) {
  RelationSet r;
  for (auto& [i, j] : pairs) {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= rank || i == j)
      throw ParseError("bad relation pair (" + std::to_string(i + 1) + "," +
                       std::to_string(j + 1) + ")");
    r.row_[i] |= 1u << j;
    r.row_[j] |= 1u << i;
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  r.pairs_ = std::move(pairs);
  return r;
}

RelationSet RelationSet::without(int i, int j) const {
  if (i > j) std::swap(i, j);
  RelationSet r;
  for (const auto& p : pairs_) {
    if (p.first == i && p.second == j) continue;
    r.row_[p.first] |= 1u << p.second;
    r.row_[p.second] |= 1u << p.first;
    r.pairs_.push_back(p);
  }
  return r;
}

std::string RelationSet::to_string() const {
  if (pairs_.empty()) return "(none)";
  std::ostringstream out;
  for (size_t k = 0; k < pairs_.size(); ++k) {
    if (k) out << ' ';
    out << '(' << pairs_[k].first + 1 << ',' << pairs_[k].second + 1 << ')';
  }
  return out.str();
}

RelationSet relations_from_string(const CoxeterSystem& sys, const std::string& text) {
  std::vector<std::pair<int, int>> pairs;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw ParseError("bad relation '" + item + "' (expected i:j)");
    try {
      const int i = std::stoi(item.substr(0, colon));
      const int j = std::stoi(item.substr(colon + 1));
      pairs.emplace_back(i - 1, j - 1);
    } catch (const std::exception&) {
      throw ParseError("bad relation '" + item + "' (expected i:j)");
    }
  }
  return RelationSet::of_pairs(sys.rank, std::move(pairs));
}

std::optional<Word> apply_move(const std::vector<std::vector<int>>& matrix,
                               const Word& w, size_t pos, std::pair<int, int> rel) {
  auto [r, s] = rel;
  const int rank = static_cast<int>(matrix.size());
  if (r < 0 || s < 0 || r >= rank || s >= rank || r == s)
    throw ParseError("bad relation pair");
  const int m = matrix[static_cast<size_t>(r)][static_cast<size_t>(s)];
  if (pos + static_cast<size_t>(m) > w.size()) return std::nullopt;
  const int a = w[pos];
  if (a != r && a != s) return std::nullopt;
  const int b = a == r ? s : r;
  for (int k = 0; k < m; ++k)
    if (w[pos + static_cast<size_t>(k)] != (k % 2 == 0 ? a : b)) return std::nullopt;
  Word out = w;
  for (int k = 0; k < m; ++k) out[pos + static_cast<size_t>(k)] = k % 2 == 0 ? b : a;
  return out;
}

std::optional<Word> apply_move(const CoxeterSystem& sys, const Word& w, size_t pos,
                               std::pair<int, int> rel) {
  return apply_move(sys.matrix, w, pos, rel);
}

WordEnumerator::WordEnumerator(const LengthTable& table, uint64_t word_cap)
    : table_(&table), cap_(word_cap), memo_(table.size(), UINT64_MAX) {}

uint64_t WordEnumerator::count(uint32_t e) {
  if (memo_[e] != UINT64_MAX) return memo_[e];
  const uint32_t mask = table_->descent_mask(e);
  uint64_t total = 0;
  if (mask == 0) {
    total = 1;  // identity
  } else {
    for (int g = 0; g < table_->num_gens(); ++g) {
      if (!(mask >> g & 1u)) continue;
      const uint64_t sub = count(table_->right(e, g));
      total = total > kCountCap - sub ? kCountCap : total + sub;
    }
  }
  memo_[e] = total;
  return total;
}

uint64_t WordEnumerator::count(const Perm& w) { return count(table_->index_of(w)); }

std::vector<Word> WordEnumerator::enumerate(uint32_t e) {
  const uint64_t n = count(e);
  if (n > cap_)
    throw ExplosionGuard("reduced word count " +
                         (n >= kCountCap ? std::string(">= 10^18") : std::to_string(n)) +
                         " exceeds cap " + std::to_string(cap_));
  std::vector<Word> out;
  out.reserve(static_cast<size_t>(n));
  Word suffix;
  auto rec = [&](auto&& self, uint32_t at) -> void {
    const uint32_t mask = table_->descent_mask(at);
    if (mask == 0) {
      out.emplace_back(suffix.rbegin(), suffix.rend());
      return;
    }
    for (int g = 0; g < table_->num_gens(); ++g) {
      if (!(mask >> g & 1u)) continue;
      suffix.push_back(g);
      self(self, table_->right(at, g));
      suffix.pop_back();
    }
  };
  rec(rec, e);
  return out;
}

std::vector<Word> WordEnumerator::enumerate(const Perm& w) {
  return enumerate(table_->index_of(w));
}

namespace {

struct WordKeyHash {
  size_t operator()(const Word& w) const {
    uint64_t h = 1469598103934665603ull;
    for (int g : w) {
      h ^= static_cast<uint64_t>(g) + 1;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

struct Dsu {
  std::vector<uint32_t> parent;
  explicit Dsu(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  uint32_t find(uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

EquivalencePartition partition_words(const std::vector<std::vector<int>>& matrix,
                                     const std::vector<Word>& words,
                                     const RelationSet& rels) {
  std::unordered_map<Word, uint32_t, WordKeyHash> index;
  index.reserve(words.size() * 2);
  for (uint32_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
  Dsu dsu(words.size());
  for (uint32_t i = 0; i < words.size(); ++i) {
    const Word& w = words[i];
    for (const auto& rel : rels.pairs()) {
      const auto m = static_cast<size_t>(
          matrix[static_cast<size_t>(rel.first)][static_cast<size_t>(rel.second)]);
      if (w.size() < m) continue;
      for (size_t pos = 0; pos + m <= w.size(); ++pos) {
        const auto moved = apply_move(matrix, w, pos, rel);
        if (!moved) continue;
        const auto it = index.find(*moved);
        if (it == index.end())
          throw Error("word list is not closed under the relation moves");
        dsu.unite(i, it->second);
      }
    }
  }
  std::unordered_map<uint32_t, uint32_t> root_class;
  EquivalencePartition part;
  for (uint32_t i = 0; i < words.size(); ++i) {
    const uint32_t r = dsu.find(i);
    auto [it, fresh] = root_class.emplace(r, static_cast<uint32_t>(part.classes.size()));
    if (fresh) part.classes.emplace_back();
    part.classes[it->second].push_back(i);
  }
  return part;
}

EquivalencePartition partition_words(const CoxeterSystem& sys,
                                     const std::vector<Word>& words,
                                     const RelationSet& rels) {
  return partition_words(sys.matrix, words, rels);
}

EquivalencePartition equivalence_classes(const CoxeterSystem& sys,
                                         const LengthTable& table,
                                         WordEnumerator& enumerator, const Perm& w,
                                         const RelationSet& rels) {
  (void)table;
  return partition_words(sys, enumerator.enumerate(w), rels);
}

}  // namespace coxtile
