#include "coxtile/embeddings.hpp"

#include <algorithm>
#include <sstream>

namespace coxtile {

const std::vector<TableRowInfo>& table_rows() {
  static const std::vector<TableRowInfo> rows = {
      {"A5-B3", "A5", "B3", true},  {"A6-B3", "A6", "B3", true},
      {"D4-B3", "D4", "B3", true},  {"D5-B4", "D5", "B4", true},
      {"D6-H3", "D6", "H3", true},  {"E6-F4", "E6", "F4", false},
      {"E8-H4", "E8", "H4", false},
  };
  return rows;
}

int AdmissiblePartition::block_of_letter(int host_gen) const {
  for (size_t b = 0; b < blocks.size(); ++b)
    for (int g : blocks[b])
      if (g == host_gen) return static_cast<int>(b);
  return -1;
}

std::vector<std::vector<int>> expected_matrix(CoxeterType t) {
  const int r = t.rank;
  std::vector<std::vector<int>> m(static_cast<size_t>(r),
                                  std::vector<int>(static_cast<size_t>(r), 2));
  for (int i = 0; i < r; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  auto edge = [&](int i, int j, int v) {
    m[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
    m[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < r; ++i) edge(i, i + 1, 3);
      break;
    case Family::B:
      if (r < 2) throw UnsupportedType("B_n needs n >= 2");
      edge(0, 1, 4);
      for (int i = 1; i + 1 < r; ++i) edge(i, i + 1, 3);
      break;
    case Family::H:
      if (r != 3) throw UnsupportedType("only H_3 is supported");
      edge(0, 1, 5);
      edge(1, 2, 3);
      break;
    default:
      throw UnsupportedType("no expected matrix for " + t.name());
  }
  return m;
}

namespace {

std::vector<std::vector<int>> blocks_for(const CoxeterType host, const CoxeterType sub) {
  std::vector<std::vector<int>> blocks;
  if (host.family == Family::A && sub.family == Family::B) {
    const int m = host.rank;
    const int n = sub.rank;
    if (m == 2 * n - 1) {
      blocks.push_back({n - 1});
      for (int i = 2; i <= n; ++i) blocks.push_back({n - i, n + i - 2});
      return blocks;
    }
    if (m == 2 * n) {
      blocks.push_back({n - 1, n});
      for (int i = 2; i <= n; ++i) blocks.push_back({n - i, n - 1 + i});
      return blocks;
    }
    throw UnsupportedHost("host " + host.name() + " does not embed " + sub.name() +
                          " (need A_{2n-1} or A_{2n})");
  }
  if (host.family == Family::D && sub.family == Family::B && sub.rank == host.rank - 1) {
    const int n = sub.rank;
    blocks.push_back({0, 2});
    blocks.push_back({1});
    for (int i = 3; i <= n; ++i) blocks.push_back({i});
    return blocks;
  }
  if (host.family == Family::D && host.rank == 6 && sub.family == Family::H &&
      sub.rank == 3) {
    return {{0, 3}, {1, 4}, {2, 5}};
  }
  throw UnsupportedHost("no catalogued partition of " + host.name() + " into " +
                        sub.name());
}

}  // namespace

AdmissiblePartition table_row(CoxeterType host_type, CoxeterType sub_type,
                              const Config& cfg) {
  AdmissiblePartition p;
  p.host = std::make_shared<CoxeterSystem>(build_system(host_type));
  p.host_table = std::make_shared<LengthTable>(length_and_descents(*p.host, cfg));
  p.sub_type = sub_type;
  p.blocks = blocks_for(host_type, sub_type);

  uint32_t covered = 0;
  for (const auto& block : p.blocks)
    for (int g : block) {
      if (g < 0 || g >= p.host->rank || (covered >> g & 1u))
        throw Error("blocks do not partition the generator set");
      covered |= 1u << g;
    }
  if (covered != (1u << p.host->rank) - 1u)
    throw Error("blocks do not cover the generator set");

  for (const auto& block : p.blocks) {
    p.images.push_back(parabolic_longest(*p.host, block, cfg));
    if (block.size() == 1) {
      p.expansions.push_back({block[0]});
      p.block_words.push_back({Word{block[0]}});
    } else {
      const int g = std::min(block[0], block[1]);
      const int h = std::max(block[0], block[1]);
      const int m = p.host->matrix[static_cast<size_t>(g)][static_cast<size_t>(h)];
      if (m == 2) {
        p.expansions.push_back({g, h});
        p.block_words.push_back({Word{g, h}, Word{h, g}});
      } else if (m == 3) {
        p.expansions.push_back({g, h, g});
        p.block_words.push_back({Word{g, h, g}, Word{h, g, h}});
      } else {
        throw Error("block {" + std::to_string(g + 1) + "," + std::to_string(h + 1) +
                    "} generates an unsupported parabolic");
      }
    }
  }

  p.sub_table = LengthTable::build(p.images, cfg.group_cap);
  p.induced = coxeter_matrix(p.images);

  const auto want = expected_matrix(sub_type);
  for (int i = 0; i < sub_type.rank; ++i)
    for (int j = i + 1; j < sub_type.rank; ++j)
      if (p.induced[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
          want[static_cast<size_t>(i)][static_cast<size_t>(j)])
        throw MatrixMismatch(
            "induced order of (t" + std::to_string(i + 1) + ", t" + std::to_string(j + 1) +
            ") is " + std::to_string(p.induced[static_cast<size_t>(i)][static_cast<size_t>(j)]) +
            ", " + sub_type.name() + " requires " +
            std::to_string(want[static_cast<size_t>(i)][static_cast<size_t>(j)]));
  return p;
}

AdmissiblePartition table_row(const std::string& key, const Config& cfg) {
  for (const auto& row : table_rows())
    if (row.key == key && !row.constructible)
      throw UnsupportedHost("row " + key +
                            " is catalogued as data only; E-series hosts have no "
                            "permutation realization here");
  const size_t dash = key.find('-');
  if (dash == std::string::npos)
    throw ParseError("bad row '" + key + "' (expected host-sub, e.g. A5-B3)");
  return table_row(CoxeterType::parse(key.substr(0, dash)),
                   CoxeterType::parse(key.substr(dash + 1)), cfg);
}

std::vector<std::vector<int>> verify_induced_matrix(const AdmissiblePartition& p) {
  const auto got = coxeter_matrix(p.images);
  const auto want = expected_matrix(p.sub_type);
  for (int i = 0; i < p.sub_type.rank; ++i)
    for (int j = i + 1; j < p.sub_type.rank; ++j)
      if (got[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
          want[static_cast<size_t>(i)][static_cast<size_t>(j)])
        throw MatrixMismatch("pair (t" + std::to_string(i + 1) + ", t" +
                             std::to_string(j + 1) + ") has order " +
                             std::to_string(got[static_cast<size_t>(i)][static_cast<size_t>(j)]) +
                             ", expected " +
                             std::to_string(want[static_cast<size_t>(i)][static_cast<size_t>(j)]));
  return got;
}

Word embed_word(const AdmissiblePartition& p, const Word& x_word) {
  for (int t : x_word)
    if (t < 0 || t >= static_cast<int>(p.blocks.size()))
      throw ParseError("x-word letter out of range");
  if (!is_reduced(p.sub_table, x_word))
    throw NotReducedInX("x-word '" + word_to_string(x_word) + "' is not reduced in " +
                        p.sub_type.name());
  Word out;
  for (int t : x_word)
    out.insert(out.end(), p.expansions[static_cast<size_t>(t)].begin(),
               p.expansions[static_cast<size_t>(t)].end());
  if (!is_reduced(*p.host_table, out))
    throw Error("internal: expansion of a reduced x-word is not reduced in the host");
  return out;
}

int x_length(const AdmissiblePartition& p, const Perm& x) {
  return p.sub_table.length(p.sub_table.index_of(x));
}

Perm x_longest(const AdmissiblePartition& p) {
  return p.sub_table.element(p.sub_table.longest());
}

std::optional<SigmaParse> parse_sigma_consistent(const AdmissiblePartition& p,
                                                 const Word& s_word) {
  for (int g : s_word)
    if (g < 0 || g >= p.host->rank) throw ParseError("host word letter out of range");
  if (!is_reduced(*p.host_table, s_word))
    throw NotReducedInW("word '" + word_to_string(s_word) + "' is not reduced in " +
                        p.host->type.name());
  SigmaParse parse;
  size_t pos = 0;
  while (pos < s_word.size()) {
    const int b = p.block_of_letter(s_word[pos]);
    bool matched = false;
    for (const Word& candidate : p.block_words[static_cast<size_t>(b)]) {
      if (pos + candidate.size() > s_word.size()) continue;
      if (std::equal(candidate.begin(), candidate.end(), s_word.begin() + static_cast<long>(pos))) {
        parse.parts.emplace_back(b, candidate);
        parse.x_word.push_back(b);
        pos += candidate.size();
        matched = true;
        break;
      }
    }
    if (!matched) return std::nullopt;
  }
  return parse;
}

RelationSet induced_relation_set(const AdmissiblePartition& p, const RelationSet& J) {
  std::vector<std::pair<int, int>> pairs;
  const int k = static_cast<int>(p.blocks.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool all = true;
      for (int a : p.blocks[static_cast<size_t>(i)])
        for (int b : p.blocks[static_cast<size_t>(j)])
          if (!J.contains(std::min(a, b), std::max(a, b))) all = false;
      if (all) pairs.emplace_back(i, j);
    }
  return RelationSet::of_pairs(k, std::move(pairs));
}

}  // namespace coxtile
