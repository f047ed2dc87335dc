#include "coxtile/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace coxtile {

std::string CoxeterType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

CoxeterType CoxeterType::parse(const std::string& text) {
  if (text.size() < 2) throw ParseError("bad type '" + text + "' (expected e.g. A5, D4)");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  Family fam;
  switch (f) {
    case 'A': fam = Family::A; break;
    case 'B': fam = Family::B; break;
    case 'D': fam = Family::D; break;
    case 'H': fam = Family::H; break;
    default: throw ParseError("bad type family '" + text + "'");
  }
  int rank = 0;
  for (size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("bad type rank '" + text + "'");
    rank = rank * 10 + (text[i] - '0');
    if (rank > 99) throw ParseError("bad type rank '" + text + "'");
  }
  if (rank < 1) throw ParseError("bad type rank '" + text + "'");
  return {fam, rank};
}

namespace {

Perm perm_of_swaps(int symbols, const std::vector<std::pair<int, int>>& swaps) {
  std::vector<int> img(static_cast<size_t>(symbols));
  for (int i = 0; i < symbols; ++i) img[static_cast<size_t>(i)] = i;
  for (auto [a, b] : swaps) std::swap(img[static_cast<size_t>(a)], img[static_cast<size_t>(b)]);
  return Perm::from_images(img);
}

std::vector<std::vector<int>> expected_host_matrix(CoxeterType t) {
  const int r = t.rank;
  std::vector<std::vector<int>> m(static_cast<size_t>(r), std::vector<int>(static_cast<size_t>(r), 2));
  for (int i = 0; i < r; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  auto edge = [&](int i, int j, int v) {
    m[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
    m[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
  };
  if (t.family == Family::A) {
    for (int i = 0; i + 1 < r; ++i) edge(i, i + 1, 3);
  } else {  // Family::D, generators in permutation labels: fork {s1,s3} on s2
    edge(0, 1, 3);
    edge(1, 2, 3);
    if (r >= 4) edge(1, 3, 3);
    for (int i = 3; i + 1 < r; ++i) edge(i, i + 1, 3);
  }
  return m;
}

}  // namespace

CoxeterSystem build_system(CoxeterType type) {
  CoxeterSystem sys;
  sys.type = type;
  sys.rank = type.rank;
  switch (type.family) {
    case Family::A: {
      if (type.rank < 1 || type.rank > 7)
        throw UnsupportedType("host A_m supports 1 <= m <= 7, got " + type.name());
      sys.symbols = type.rank + 1;
      for (int i = 0; i < type.rank; ++i) {
        SlotAction act;
        act.swaps = {{i, i + 1}};
        sys.actions.push_back(act);
        sys.gens.push_back(perm_of_swaps(sys.symbols, act.swaps));
        sys.diagram_labels.push_back(i + 1);
      }
      break;
    }
    case Family::D: {
      const int n = type.rank;
      if (n < 4 || n > 6)
        throw UnsupportedType("host D_n supports 4 <= n <= 6, got " + type.name());
      sys.symbols = 2 * n;
      for (int i = 1; i <= n; ++i) {
        SlotAction act;
        if (i == 1) {
          act.swaps = {{n - 2, n}, {n - 1, n + 1}};
          act.crossing = true;
        } else if (i == 2) {
          act.swaps = {{n - 3, n - 2}, {n + 1, n + 2}};
        } else if (i == 3) {
          act.swaps = {{n - 2, n - 1}, {n, n + 1}};
        } else {
          act.swaps = {{n - i, n - i + 1}, {n + i - 2, n + i - 1}};
        }
        sys.actions.push_back(act);
        sys.gens.push_back(perm_of_swaps(sys.symbols, act.swaps));
      }
      sys.diagram_labels = {1, 3, 2};
      for (int i = 4; i <= n; ++i) sys.diagram_labels.push_back(i);
      break;
    }
    default:
      throw UnsupportedType("type " + type.name() +
                            " has no direct host realization (B/H arise as embedded "
                            "sub-systems; E/F hosts are out of scope)");
  }
  sys.matrix = coxeter_matrix(sys.gens);
  const auto expected = expected_host_matrix(type);
  for (int i = 0; i < sys.rank; ++i)
    for (int j = 0; j < sys.rank; ++j)
      if (sys.matrix[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
          expected[static_cast<size_t>(i)][static_cast<size_t>(j)])
        throw RelationMismatch("computed order of s" + std::to_string(i + 1) + " s" +
                               std::to_string(j + 1) + " is " +
                               std::to_string(sys.matrix[static_cast<size_t>(i)][static_cast<size_t>(j)]) +
                               ", diagram says " +
                               std::to_string(expected[static_cast<size_t>(i)][static_cast<size_t>(j)]));
  return sys;
}

std::vector<std::vector<int>> coxeter_matrix(const std::vector<Perm>& gens) {
  const int r = static_cast<int>(gens.size());
  std::vector<std::vector<int>> m(static_cast<size_t>(r), std::vector<int>(static_cast<size_t>(r), 1));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      const int o = (gens[static_cast<size_t>(i)] * gens[static_cast<size_t>(j)]).order();
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] = o;
      m[static_cast<size_t>(j)][static_cast<size_t>(i)] = o;
    }
  return m;
}

int CoxeterSystem::display_of_slot(int slot) const {
  if (type.family == Family::D) {
    const int n = rank;
    return slot < n ? n - slot : -(slot - n + 1);
  }
  return slot + 1;
}

int CoxeterSystem::slot_of_display(int value) const {
  if (type.family == Family::D) {
    const int n = rank;
    if (value >= 1 && value <= n) return n - value;
    if (value <= -1 && value >= -n) return n - 1 - value;
    throw ParseError("symbol " + std::to_string(value) + " out of range for " + type.name());
  }
  if (value < 1 || value > symbols)
    throw ParseError("symbol " + std::to_string(value) + " out of range for " + type.name());
  return value - 1;
}

std::string CoxeterSystem::slot_name(int slot) const {
  return std::to_string(display_of_slot(slot));
}

std::string CoxeterSystem::element_to_string(const Perm& w) const {
  std::ostringstream out;
  if (type.family == Family::D) {
    for (int j = 1; j <= rank; ++j) {
      if (j > 1) out << ' ';
      out << display_of_slot(w[slot_of_display(j)]);
    }
  } else {
    for (int i = 0; i < symbols; ++i) {
      if (i > 0) out << ' ';
      out << w[i] + 1;
    }
  }
  return out.str();
}

Perm CoxeterSystem::element_from_string(const std::string& text) const {
  std::istringstream in(text);
  std::vector<int> vals;
  int v;
  while (in >> v) vals.push_back(v);
  if (!in.eof()) throw ParseError("bad element text '" + text + "'");
  if (type.family == Family::D) {
    const int n = rank;
    if (static_cast<int>(vals.size()) != n)
      throw ParseError("type D one-line form needs " + std::to_string(n) + " signed images");
    std::vector<int> img(static_cast<size_t>(symbols), -1);
    uint32_t seen = 0;
    int negatives = 0;
    for (int j = 1; j <= n; ++j) {
      const int w = vals[static_cast<size_t>(j - 1)];
      const int a = w < 0 ? -w : w;
      if (a < 1 || a > n || (seen >> a & 1u))
        throw ParseError("bad signed one-line form '" + text + "'");
      seen |= 1u << a;
      if (w < 0) ++negatives;
      img[static_cast<size_t>(slot_of_display(j))] = slot_of_display(w);
      img[static_cast<size_t>(slot_of_display(-j))] = slot_of_display(-w);
    }
    if (negatives % 2 != 0)
      throw ParseError("not an element of " + type.name() + ": odd number of sign changes");
    return Perm::from_images(img);
  }
  if (static_cast<int>(vals.size()) != symbols)
    throw ParseError("type A one-line form needs " + std::to_string(symbols) + " images");
  std::vector<int> img(static_cast<size_t>(symbols));
  for (int i = 0; i < symbols; ++i) {
    if (vals[static_cast<size_t>(i)] < 1 || vals[static_cast<size_t>(i)] > symbols)
      throw ParseError("bad one-line form '" + text + "'");
    img[static_cast<size_t>(i)] = vals[static_cast<size_t>(i)] - 1;
  }
  return Perm::from_images(img);
}

LengthTable LengthTable::build(const std::vector<Perm>& gens, uint64_t group_cap) {
  if (gens.empty()) throw Error("length table needs at least one generator");
  LengthTable t;
  t.ngens_ = static_cast<int>(gens.size());
  const Perm id = Perm::identity(gens[0].size());
  t.elems_.push_back(id);
  t.len_.push_back(0);
  t.index_.emplace(id, 0);
  std::deque<uint32_t> queue{0};
  while (!queue.empty()) {
    const uint32_t e = queue.front();
    queue.pop_front();
    for (int g = 0; g < t.ngens_; ++g) {
      const Perm ws = t.elems_[e] * gens[static_cast<size_t>(g)];
      if (t.index_.find(ws) == t.index_.end()) {
        if (t.elems_.size() >= group_cap)
          throw GroupTooLarge("group exceeds configured cap of " + std::to_string(group_cap));
        const auto idx = static_cast<uint32_t>(t.elems_.size());
        t.index_.emplace(ws, idx);
        t.elems_.push_back(ws);
        t.len_.push_back(static_cast<uint8_t>(t.len_[e] + 1));
        queue.push_back(idx);
      }
    }
  }
  const auto count = static_cast<uint32_t>(t.elems_.size());
  t.right_.resize(static_cast<size_t>(count) * static_cast<size_t>(t.ngens_));
  t.desc_.resize(count, 0);
  for (uint32_t e = 0; e < count; ++e) {
    for (int g = 0; g < t.ngens_; ++g) {
      const uint32_t ws = t.index_.at(t.elems_[e] * gens[static_cast<size_t>(g)]);
      t.right_[e * static_cast<uint32_t>(t.ngens_) + static_cast<uint32_t>(g)] = ws;
      if (t.len_[ws] < t.len_[e]) t.desc_[e] |= 1u << g;
    }
    t.max_len_ = std::max(t.max_len_, static_cast<int>(t.len_[e]));
  }
  return t;
}

std::optional<uint32_t> LengthTable::find(const Perm& w) const {
  const auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

uint32_t LengthTable::index_of(const Perm& w) const {
  const auto it = index_.find(w);
  if (it == index_.end()) throw NotInSubgroup("element is not in the generated group");
  return it->second;
}

uint32_t LengthTable::longest() const {
  uint32_t best = 0;
  int count = 0;
  for (uint32_t e = 0; e < size(); ++e)
    if (len_[e] == max_len_) {
      best = e;
      ++count;
    }
  if (count != 1) throw Error("longest element is not unique");
  return best;
}

LengthTable length_and_descents(const CoxeterSystem& sys, const Config& cfg) {
  return LengthTable::build(sys.gens, cfg.group_cap);
}

Perm longest_element(const CoxeterSystem& sys, const LengthTable& table) {
  (void)sys;
  return table.element(table.longest());
}

Perm parabolic_longest(const CoxeterSystem& sys, const std::vector<int>& block,
                       const Config& cfg) {
  if (block.empty()) throw Error("parabolic block must be nonempty");
  std::vector<Perm> gens;
  uint32_t seen = 0;
  for (int g : block) {
    if (g < 0 || g >= sys.rank)
      throw Error("generator index " + std::to_string(g + 1) + " out of range");
    if (seen >> g & 1u) throw Error("repeated generator in block");
    seen |= 1u << g;
    gens.push_back(sys.gens[static_cast<size_t>(g)]);
  }
  const LengthTable sub = LengthTable::build(gens, cfg.group_cap);
  return sub.element(sub.longest());
}

}  // namespace coxtile
