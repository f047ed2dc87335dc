#include "coxtile/tilings.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

namespace coxtile {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Orientation and turn decisions only need some strictly increasing angle
// assignment over (pi, 2pi); every valid basis induces the same combinatorial
// order, so a fixed 32-label reference works for all of them.
double reference_angle(int label) { return kPi + (2 * label + 1) * kPi / 64.0; }

std::array<double, 2> reference_dir(int label) {
  return {std::cos(reference_angle(label)), std::sin(reference_angle(label))};
}

std::array<double, 2> reference_point(Mask m) {
  std::array<double, 2> p{0.0, 0.0};
  for (int L = 0; L < 32; ++L)
    if (m >> L & 1u) {
      const auto d = reference_dir(L);
      p[0] += d[0];
      p[1] += d[1];
    }
  return p;
}

double reference_signed_area(const Loop& loop) {
  double s = 0.0;
  for (size_t i = 0; i < loop.size(); ++i) {
    const auto a = reference_point(loop[i]);
    const auto b = reference_point(loop[(i + 1) % loop.size()]);
    s += a[0] * b[1] - b[0] * a[1];
  }
  return s / 2.0;
}

}  // namespace

std::string kind_name(TileKind k) {
  switch (k) {
    case TileKind::Rhombus: return "rhombus";
    case TileKind::HexagonMegatile: return "hexagon_megatile";
    case TileKind::OctagonMegatile: return "octagon_megatile";
    case TileKind::GroupedMegatile: return "grouped_megatile";
  }
  return "?";
}

std::array<double, 2> EdgeBasis::dir(int strand) const {
  const double a = angles[static_cast<size_t>(strand)];
  return {std::cos(a), std::sin(a)};
}

bool EdgeBasis::symmetric(double eps) const {
  for (int k = 0; k < symbols; ++k)
    if (std::abs(angles[static_cast<size_t>(k)] +
                 angles[static_cast<size_t>(symbols - 1 - k)] - 3.0 * kPi) > eps)
      return false;
  return true;
}

namespace {

double angle_from_horizontal(double theta) {
  return std::min(theta - kPi, 2.0 * kPi - theta);
}

void validate_basis(const EdgeBasis& b, double min_steepness) {
  if (static_cast<int>(b.angles.size()) != b.symbols)
    throw InvalidAngles("angle count does not match strand count");
  for (int k = 0; k < b.symbols; ++k) {
    const double a = b.angles[static_cast<size_t>(k)];
    if (!(a > kPi && a < 2.0 * kPi))
      throw InvalidAngles("edge angles must descend (lie strictly inside (pi, 2pi))");
    if (k > 0 && !(a > b.angles[static_cast<size_t>(k - 1)]))
      throw InvalidAngles("edge angles must be strictly increasing");
  }
  if (b.family == Family::D && b.strict)
    for (int k = 0; k < b.symbols; ++k)
      if (!(angle_from_horizontal(b.angles[static_cast<size_t>(k)]) > min_steepness))
        throw InvalidAngles("type D strict mode requires every edge steeper than the "
                            "configured threshold");
}

}  // namespace

EdgeBasis edge_basis_A(int n) {
  if (n < 2) throw InvalidAngles("type A basis needs at least 2 strands");
  EdgeBasis b;
  b.family = Family::A;
  b.symbols = n;
  b.strict = true;
  for (int k = 0; k < n; ++k)
    b.angles.push_back(kPi + (2 * k + 1) * kPi / (2.0 * n));
  validate_basis(b, 0.0);
  return b;
}

EdgeBasis edge_basis_D(int n, bool regular, double min_steepness) {
  if (n < 2) throw InvalidAngles("type D basis needs rank at least 2");
  EdgeBasis b;
  b.family = Family::D;
  b.symbols = 2 * n;
  b.strict = !regular;
  if (regular) {
    for (int k = 0; k < 2 * n; ++k)
      b.angles.push_back(kPi + (2 * k + 1) * kPi / (4.0 * n));
  } else {
    for (int k = 0; k < 2 * n; ++k)
      b.angles.push_back(4.0 * kPi / 3.0 + (k + 1) * kPi / (3.0 * (2 * n + 1)));
  }
  validate_basis(b, min_steepness);
  return b;
}

EdgeBasis custom_basis(Family family, int symbols, std::vector<double> angles,
                       bool strict, double min_steepness) {
  EdgeBasis b;
  b.family = family;
  b.symbols = symbols;
  b.strict = strict;
  b.angles = std::move(angles);
  validate_basis(b, min_steepness);
  return b;
}

EdgeBasis default_basis(const CoxeterSystem& sys, bool regular, double min_steepness) {
  if (sys.type.family == Family::A) return edge_basis_A(sys.symbols);
  if (sys.type.family == Family::D) return edge_basis_D(sys.rank, regular, min_steepness);
  throw UnsupportedType("no edge basis for " + sys.type.name());
}

Loop canonical_loop(Loop loop) {
  if (loop.size() < 3) throw Error("degenerate outline loop");
  if (reference_signed_area(loop) < 0.0) std::reverse(loop.begin(), loop.end());
  const auto min_it = std::min_element(loop.begin(), loop.end());
  std::rotate(loop.begin(), min_it, loop.end());
  return loop;
}

std::vector<Loop> union_outline(const std::vector<Loop>& loops) {
  // Directed lattice edges with opposite pairs cancelled.
  struct Edge {
    Mask from, to;
    bool operator<(const Edge& o) const {
      return from != o.from ? from < o.from : to < o.to;
    }
  };
  std::map<Edge, int> edges;
  for (const Loop& loop : loops)
    for (size_t i = 0; i < loop.size(); ++i) {
      const Mask a = loop[i];
      const Mask b = loop[(i + 1) % loop.size()];
      const auto rev = edges.find(Edge{b, a});
      if (rev != edges.end()) {
        if (--rev->second == 0) edges.erase(rev);
      } else {
        ++edges[Edge{a, b}];
      }
    }

  // Direction key in counterclockwise angle order: removals (upward edges)
  // sort before additions (downward), each by label.
  auto dir_key = [](Mask from, Mask to) {
    const Mask diff = from ^ to;
    const int label = std::countr_zero(diff);
    const bool add = (to & diff) != 0;
    return (add ? 32 : 0) + label;
  };

  std::map<Mask, std::vector<std::pair<int, Mask>>> out;  // key -> target
  for (const auto& [e, count] : edges) {
    if (count != 1) throw Error("tile union traverses an edge twice");
    out[e.from].emplace_back(dir_key(e.from, e.to), e.to);
  }
  for (auto& [v, list] : out) std::sort(list.begin(), list.end());

  std::map<Edge, bool> used;
  std::vector<Loop> result;
  for (const auto& [start, count] : edges) {
    if (used[start]) continue;
    Loop loop;
    Edge cur = start;
    while (true) {
      used[cur] = true;
      loop.push_back(cur.from);
      const auto& cands = out.at(cur.to);
      // Successor = first edge clockwise from the reversed incoming
      // direction: the predecessor of the back-key in ascending key order.
      const int back = dir_key(cur.to, cur.from);
      const std::pair<int, Mask> probe{back, 0};
      auto it = std::lower_bound(cands.begin(), cands.end(), probe);
      if (it == cands.begin()) it = cands.end();
      --it;
      cur = Edge{cur.to, it->second};
      if (cur.from == start.from && cur.to == start.to) break;
    }
    if (reference_signed_area(loop) <= 0.0)
      throw Error("tile union produced a hole or degenerate boundary");
    result.push_back(canonical_loop(std::move(loop)));
  }
  std::sort(result.begin(), result.end());
  return result;
}

namespace {

Tile make_rhombus(Mask base, int a, int b, int origin) {
  Tile t;
  t.kind = TileKind::Rhombus;
  const int lo = std::min(a, b);
  const int hi = std::max(a, b);
  t.outline = {canonical_loop({base, base | (1u << lo), base | (1u << lo) | (1u << hi),
                               base | (1u << hi)})};
  t.anchor = base;
  t.labels = {lo, hi};
  t.origin = origin;
  t.pieces = {{base, lo, hi}};
  return t;
}

Tile make_octagon(Mask base, const std::array<int, 4>& w, int origin) {
  Tile t;
  t.kind = TileKind::OctagonMegatile;
  const Mask b0 = 1u << w[0], b1 = 1u << w[1], b2 = 1u << w[2], b3 = 1u << w[3];
  Loop loop = {base,
               base | b0,
               base | b0 | b1,
               base | b0 | b1 | b2,
               base | b0 | b1 | b2 | b3,
               base | b2 | b3 | b0,
               base | b2 | b3,
               base | b2};
  t.outline = {canonical_loop(std::move(loop))};
  t.anchor = t.outline[0][0];
  t.labels = {w[0], w[1], w[2], w[3]};
  t.origin = origin;
  t.pieces = {{base | b0, std::min(w[1], w[2]), std::max(w[1], w[2])},
              {base, std::min(w[0], w[2]), std::max(w[0], w[2])},
              {base | b0 | b2, std::min(w[1], w[3]), std::max(w[1], w[3])},
              {base | b2, std::min(w[0], w[3]), std::max(w[0], w[3])}};
  return t;
}

}  // namespace

std::vector<uint64_t> Tiling::key() const {
  std::vector<uint64_t> out;
  out.push_back(static_cast<uint64_t>(symbols));
  for (const Tile& t : tiles) {
    out.push_back((1ull << 40) | static_cast<uint64_t>(t.kind));
    for (const Loop& loop : t.outline) {
      out.push_back((2ull << 40) | loop.size());
      for (Mask v : loop) out.push_back(v);
    }
  }
  return out;
}

Tiling tile_word(const CoxeterSystem& sys, const LengthTable& table, const Word& w) {
  if (sys.type.family != Family::A && sys.type.family != Family::D)
    throw UnsupportedType("tilings exist for type A and D hosts only");
  for (int g : w)
    if (g < 0 || g >= sys.rank) throw ParseError("word letter out of range");
  if (!is_reduced(table, w))
    throw NotReduced("word '" + word_to_string(w) + "' is not reduced in " +
                     sys.type.name());

  const int N = sys.symbols;
  std::vector<int> contents(static_cast<size_t>(N));
  for (int k = 0; k < N; ++k) contents[static_cast<size_t>(k)] = k;
  std::vector<Mask> rows(static_cast<size_t>(N) + 1, 0);
  for (int k = 0; k < N; ++k)
    rows[static_cast<size_t>(k) + 1] =
        rows[static_cast<size_t>(k)] | (1u << contents[static_cast<size_t>(k)]);

  Tiling tiling;
  tiling.family = sys.type.family;
  tiling.symbols = N;

  for (size_t pos = 0; pos < w.size(); ++pos) {
    const SlotAction& act = sys.actions[static_cast<size_t>(w[pos])];
    if (act.crossing) {
      const int m = act.swaps[0].first;
      const std::array<int, 4> window = {
          contents[static_cast<size_t>(m)], contents[static_cast<size_t>(m + 1)],
          contents[static_cast<size_t>(m + 2)], contents[static_cast<size_t>(m + 3)]};
      if (window[3] != N - 1 - window[0] || window[2] != N - 1 - window[1])
        throw MegatileViolation("central window lost its mirror symmetry");
      tiling.tiles.push_back(
          make_octagon(rows[static_cast<size_t>(m)], window, static_cast<int>(pos)));
      std::swap(contents[static_cast<size_t>(m)], contents[static_cast<size_t>(m + 2)]);
      std::swap(contents[static_cast<size_t>(m + 1)], contents[static_cast<size_t>(m + 3)]);
      for (int k = m; k < m + 3; ++k)
        rows[static_cast<size_t>(k) + 1] =
            rows[static_cast<size_t>(k)] | (1u << contents[static_cast<size_t>(k)]);
    } else {
      for (const auto& [k, k2] : act.swaps) {
        if (k2 != k + 1) throw Error("internal: non-adjacent slot swap");
        tiling.tiles.push_back(make_rhombus(rows[static_cast<size_t>(k)],
                                            contents[static_cast<size_t>(k)],
                                            contents[static_cast<size_t>(k + 1)],
                                            static_cast<int>(pos)));
        std::swap(contents[static_cast<size_t>(k)], contents[static_cast<size_t>(k + 1)]);
        rows[static_cast<size_t>(k) + 1] =
            rows[static_cast<size_t>(k)] | (1u << contents[static_cast<size_t>(k)]);
      }
    }
  }

  tiling.border = Perm::from_images(contents);
  std::sort(tiling.tiles.begin(), tiling.tiles.end());
  return tiling;
}

RelationSet tiling_relations(const CoxeterSystem& sys) {
  if (sys.type.family == Family::A) return RelationSet::all_commuting(sys);
  if (sys.type.family == Family::D)
    return RelationSet::all_commuting(sys).without(0, 2);
  throw UnsupportedType("no tiling relation set for " + sys.type.name());
}

Tiling subtiling(const AdmissiblePartition& p, const Word& x_word) {
  const Word host_word = embed_word(p, x_word);
  Tiling base = tile_word(*p.host, *p.host_table, host_word);

  std::vector<int> origin_of_pos(host_word.size());
  size_t off = 0;
  for (size_t j = 0; j < x_word.size(); ++j) {
    const size_t len = p.expansions[static_cast<size_t>(x_word[j])].size();
    for (size_t k = 0; k < len; ++k) origin_of_pos[off + k] = static_cast<int>(j);
    off += len;
  }

  std::vector<std::vector<Tile>> groups(x_word.size());
  for (Tile& t : base.tiles)
    groups[static_cast<size_t>(origin_of_pos[static_cast<size_t>(t.origin)])]
        .push_back(std::move(t));

  Tiling out;
  out.family = base.family;
  out.symbols = base.symbols;
  out.border = base.border;
  for (size_t j = 0; j < groups.size(); ++j) {
    auto& members = groups[j];
    if (members.empty()) throw Error("internal: x-letter produced no tiles");
    if (members.size() == 1) {
      members[0].origin = static_cast<int>(j);
      out.tiles.push_back(std::move(members[0]));
      continue;
    }
    Tile merged;
    const bool braid = p.expansions[static_cast<size_t>(x_word[j])].size() == 3;
    merged.kind = braid ? TileKind::HexagonMegatile : TileKind::GroupedMegatile;
    std::vector<Loop> all;
    uint32_t label_mask = 0;
    for (const Tile& m : members) {
      all.insert(all.end(), m.outline.begin(), m.outline.end());
      for (int L : m.labels) label_mask |= 1u << L;
      merged.pieces.insert(merged.pieces.end(), m.pieces.begin(), m.pieces.end());
    }
    merged.outline = union_outline(all);
    if (braid && (merged.outline.size() != 1 || merged.outline[0].size() != 6))
      throw MegatileViolation("braid-block footprint is not a hexagon");
    for (int L = 0; L < out.symbols; ++L)
      if (label_mask >> L & 1u) merged.labels.push_back(L);
    merged.anchor = merged.outline[0][0];
    for (const Loop& loop : merged.outline) merged.anchor = std::min(merged.anchor, loop[0]);
    merged.origin = static_cast<int>(j);
    out.tiles.push_back(std::move(merged));
  }
  std::sort(out.tiles.begin(), out.tiles.end());
  return out;
}

Tiling mirror_A(const CoxeterSystem& sys, const EdgeBasis& basis, const Tiling& t) {
  if (sys.type.family != Family::A)
    throw UnsupportedType("mirror is defined for type A tilings");
  if (basis.symbols != t.symbols || basis.family != t.family)
    throw BasisMismatch("basis does not match the tiling");
  if (!basis.symmetric())
    throw AsymmetricBasis("edge basis is not mirror-symmetric");

  const int N = t.symbols;
  const Mask full = N == 32 ? 0xFFFFFFFFu : (1u << N) - 1u;
  auto mirror_label = [N](int L) { return N - 1 - L; };
  auto mirror_mask = [&](Mask m) {
    Mask rev = 0;
    for (int L = 0; L < N; ++L)
      if (m >> L & 1u) rev |= 1u << (N - 1 - L);
    return static_cast<Mask>(~rev & full);
  };

  Tiling out;
  out.family = t.family;
  out.symbols = N;
  std::vector<int> border_img(static_cast<size_t>(N));
  for (int k = 0; k < N; ++k)
    border_img[static_cast<size_t>(k)] = mirror_label(t.border[N - 1 - k]);
  out.border = Perm::from_images(border_img);

  for (const Tile& tile : t.tiles) {
    Tile m;
    m.kind = tile.kind;
    m.origin = tile.origin;
    for (const Loop& loop : tile.outline) {
      Loop ml;
      for (auto it = loop.rbegin(); it != loop.rend(); ++it)
        ml.push_back(mirror_mask(*it));
      m.outline.push_back(canonical_loop(std::move(ml)));
    }
    std::sort(m.outline.begin(), m.outline.end());
    for (int L : tile.labels) m.labels.push_back(mirror_label(L));
    if (tile.kind == TileKind::OctagonMegatile)
      std::reverse(m.labels.begin(), m.labels.end());
    else
      std::sort(m.labels.begin(), m.labels.end());
    for (const RhombusPiece& piece : tile.pieces) {
      const Mask far = piece.base | (1u << piece.lo) | (1u << piece.hi);
      const int a = mirror_label(piece.lo);
      const int b = mirror_label(piece.hi);
      m.pieces.push_back({mirror_mask(far), std::min(a, b), std::max(a, b)});
    }
    m.anchor = m.outline[0][0];
    for (const Loop& loop : m.outline) m.anchor = std::min(m.anchor, loop[0]);
    out.tiles.push_back(std::move(m));
  }
  std::sort(out.tiles.begin(), out.tiles.end());
  return out;
}

namespace {

VerifyResult check_class_tiling_bijection(
    const std::vector<Word>& words, const EquivalencePartition& part,
    const std::function<std::vector<uint64_t>(const Word&)>& tiling_key) {
  VerifyResult r;
  r.words = words.size();
  r.classes = part.classes.size();
  std::map<std::vector<uint64_t>, size_t> seen;  // key -> class index
  bool ok = true;
  size_t distinct = 0;
  for (size_t c = 0; c < part.classes.size(); ++c) {
    bool first = true;
    std::vector<uint64_t> class_key;
    for (uint32_t wi : part.classes[c]) {
      auto key = tiling_key(words[wi]);
      if (first) {
        class_key = std::move(key);
        first = false;
        auto [it, fresh] = seen.emplace(class_key, c);
        if (fresh)
          ++distinct;
        else
          ok = false;  // two classes share a tiling
      } else if (key != class_key) {
        ok = false;  // class maps to more than one tiling
        auto [it2, fresh2] = seen.emplace(std::move(key), c);
        if (fresh2) ++distinct;
      }
    }
  }
  r.tilings = distinct;
  r.ok = ok && r.classes == r.tilings;
  return r;
}

}  // namespace

VerifyResult verify_bijection(const CoxeterSystem& sys, const LengthTable& table,
                              WordEnumerator& enumerator, const Perm& w,
                              const RelationSet& rels) {
  const std::vector<Word> words = enumerator.enumerate(w);
  const EquivalencePartition part = partition_words(sys, words, rels);
  return check_class_tiling_bijection(words, part, [&](const Word& word) {
    return tile_word(sys, table, word).key();
  });
}

VerifyResult verify_bijection(const AdmissiblePartition& p, const Perm& x,
                              const RelationSet& rels) {
  WordEnumerator enumerator(p.sub_table);
  const std::vector<Word> words = enumerator.enumerate(p.sub_table.index_of(x));
  const EquivalencePartition part = partition_words(p.induced, words, rels);
  return check_class_tiling_bijection(words, part, [&](const Word& word) {
    return subtiling(p, word).key();
  });
}

VerifyResult verify_all_elements(const CoxeterSystem& sys, const LengthTable& table,
                                 const RelationSet& rels, int jobs,
                                 uint64_t word_cap) {
  const uint32_t count = table.size();
  if (jobs < 1) jobs = 1;
  jobs = std::min<int>(jobs, static_cast<int>(std::thread::hardware_concurrency() > 0
                                                  ? std::thread::hardware_concurrency()
                                                  : 1));
  std::mutex mu;
  VerifyResult total;
  total.ok = true;
  std::atomic<uint32_t> next{0};
  auto worker = [&]() {
    WordEnumerator enumerator(table, word_cap);
    VerifyResult local;
    local.ok = true;
    while (true) {
      const uint32_t e = next.fetch_add(1);
      if (e >= count) break;
      const VerifyResult r =
          verify_bijection(sys, table, enumerator, table.element(e), rels);
      local.words += r.words;
      local.classes += r.classes;
      local.tilings += r.tilings;
      local.ok = local.ok && r.ok;
    }
    std::lock_guard<std::mutex> lock(mu);
    total.words += local.words;
    total.classes += local.classes;
    total.tilings += local.tilings;
    total.ok = total.ok && local.ok;
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int i = 0; i < jobs; ++i) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }
  return total;
}

}  // namespace coxtile
