#include <doctest.h>

#include <set>
#include <vector>

#include "coxtile/coxeter.hpp"
#include "coxtile/words.hpp"

using namespace coxtile;

namespace {

uint64_t factorial(int n) {
  uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<uint64_t>(k);
  return f;
}

// Type A length oracle: inversions of the one-line form.
int inversions_A(const Perm& w) {
  int inv = 0;
  for (int i = 0; i < w.size(); ++i)
    for (int j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

// Type D length oracle over signed images d(1..n):
// inv(d) + #{i < j : d(i) + d(j) < 0}.
int signed_length_D(const CoxeterSystem& sys, const Perm& w) {
  const int n = sys.rank;
  std::vector<int> d(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j)
    d[static_cast<size_t>(j - 1)] = sys.display_of_slot(w[sys.slot_of_display(j)]);
  int len = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (d[static_cast<size_t>(i)] > d[static_cast<size_t>(j)]) ++len;
      if (d[static_cast<size_t>(i)] + d[static_cast<size_t>(j)] < 0) ++len;
    }
  return len;
}

}  // namespace

TEST_CASE("type parsing") {
  CHECK(CoxeterType::parse("A5").name() == "A5");
  CHECK(CoxeterType::parse("d4").family == Family::D);
  CHECK(CoxeterType::parse("B3").rank == 3);
  CHECK(CoxeterType::parse("H3").family == Family::H);
  CHECK_THROWS_AS(CoxeterType::parse("Q3"), ParseError);
  CHECK_THROWS_AS(CoxeterType::parse("A"), ParseError);
  CHECK_THROWS_AS(CoxeterType::parse("A0"), ParseError);
}

TEST_CASE("type A systems") {
  for (int m = 1; m <= 5; ++m) {
    const CoxeterSystem sys = build_system({Family::A, m});
    CHECK(sys.rank == m);
    CHECK(sys.symbols == m + 1);
    const LengthTable table = LengthTable::build(sys.gens, 1000000);
    CHECK(table.size() == factorial(m + 1));
    CHECK(table.max_length() == m * (m + 1) / 2);
  }
  const CoxeterSystem a3 = build_system({Family::A, 3});
  CHECK(a3.matrix == std::vector<std::vector<int>>{{1, 3, 2}, {3, 1, 3}, {2, 3, 1}});
  CHECK(a3.diagram_labels == std::vector<int>{1, 2, 3});
  for (const Perm& g : a3.gens) CHECK(g.order() == 2);
}

TEST_CASE("type D systems") {
  for (int n = 4; n <= 6; ++n) {
    const CoxeterSystem sys = build_system({Family::D, n});
    CHECK(sys.rank == n);
    CHECK(sys.symbols == 2 * n);
    const LengthTable table = LengthTable::build(sys.gens, 1000000);
    CHECK(table.size() == factorial(n) * (1ull << (n - 1)));
    CHECK(table.max_length() == n * (n - 1));
  }
  const CoxeterSystem d4 = build_system({Family::D, 4});
  CHECK(d4.matrix == std::vector<std::vector<int>>{
                         {1, 3, 2, 2}, {3, 1, 3, 3}, {2, 3, 1, 2}, {2, 3, 2, 1}});
  CHECK(d4.diagram_labels == std::vector<int>{1, 3, 2, 4});
  CHECK(d4.actions[0].crossing);
  for (int g = 1; g < 4; ++g) CHECK_FALSE(d4.actions[static_cast<size_t>(g)].crossing);
}

TEST_CASE("unsupported hosts") {
  CHECK_THROWS_AS(build_system({Family::B, 3}), UnsupportedType);
  CHECK_THROWS_AS(build_system({Family::H, 3}), UnsupportedType);
  CHECK_THROWS_AS(build_system({Family::A, 8}), UnsupportedType);
  CHECK_THROWS_AS(build_system({Family::D, 3}), UnsupportedType);
  CHECK_THROWS_AS(build_system({Family::D, 7}), UnsupportedType);
}

TEST_CASE("group cap") {
  const CoxeterSystem a4 = build_system({Family::A, 4});
  CHECK_THROWS_AS(LengthTable::build(a4.gens, 100), GroupTooLarge);
}

TEST_CASE("BFS length equals inversion count on the full A4 host") {
  const CoxeterSystem sys = build_system({Family::A, 4});
  const LengthTable table = LengthTable::build(sys.gens, 1000000);
  for (uint32_t e = 0; e < table.size(); ++e)
    CHECK(table.length(e) == inversions_A(table.element(e)));
}

TEST_CASE("BFS length equals the signed-permutation formula on the full D4 host") {
  const CoxeterSystem sys = build_system({Family::D, 4});
  const LengthTable table = LengthTable::build(sys.gens, 1000000);
  for (uint32_t e = 0; e < table.size(); ++e)
    CHECK(table.length(e) == signed_length_D(sys, table.element(e)));
}

TEST_CASE("right multiplication and descents") {
  const CoxeterSystem sys = build_system({Family::A, 3});
  const LengthTable table = LengthTable::build(sys.gens, 1000000);
  for (uint32_t e = 0; e < table.size(); ++e)
    for (int g = 0; g < sys.rank; ++g) {
      const uint32_t f = table.right(e, g);
      CHECK(table.element(f) == table.element(e) * sys.gens[static_cast<size_t>(g)]);
      CHECK(table.has_descent(e, g) == (table.length(f) < table.length(e)));
    }
}

TEST_CASE("longest elements") {
  const CoxeterSystem a4 = build_system({Family::A, 4});
  const LengthTable t4 = LengthTable::build(a4.gens, 1000000);
  CHECK(a4.element_to_string(longest_element(a4, t4)) == "5 4 3 2 1");

  const CoxeterSystem d4 = build_system({Family::D, 4});
  const LengthTable td = LengthTable::build(d4.gens, 1000000);
  const Perm w0 = longest_element(d4, td);
  CHECK(td.length(w0) == 12);
  CHECK(d4.element_to_string(w0) == "-1 -2 -3 -4");
}

TEST_CASE("parabolic longest elements") {
  const CoxeterSystem a5 = build_system({Family::A, 5});
  CHECK(parabolic_longest(a5, {2}) == a5.gens[2]);
  const Perm t2 = parabolic_longest(a5, {1, 3});
  CHECK(t2 == a5.gens[1] * a5.gens[3]);
  const Perm braid = parabolic_longest(a5, {2, 3});
  CHECK(braid == a5.gens[2] * a5.gens[3] * a5.gens[2]);
  CHECK(braid == a5.gens[3] * a5.gens[2] * a5.gens[3]);
}

TEST_CASE("display symbols") {
  const CoxeterSystem a3 = build_system({Family::A, 3});
  for (int k = 0; k < 4; ++k) {
    CHECK(a3.display_of_slot(k) == k + 1);
    CHECK(a3.slot_of_display(k + 1) == k);
  }
  const CoxeterSystem d4 = build_system({Family::D, 4});
  const std::vector<int> expect = {4, 3, 2, 1, -1, -2, -3, -4};
  for (int k = 0; k < 8; ++k) {
    CHECK(d4.display_of_slot(k) == expect[static_cast<size_t>(k)]);
    CHECK(d4.slot_of_display(expect[static_cast<size_t>(k)]) == k);
  }
  CHECK_THROWS_AS(d4.slot_of_display(0), ParseError);
  CHECK_THROWS_AS(d4.slot_of_display(5), ParseError);
}

TEST_CASE("element text round trips") {
  const CoxeterSystem a3 = build_system({Family::A, 3});
  const LengthTable t3 = LengthTable::build(a3.gens, 1000000);
  for (uint32_t e = 0; e < t3.size(); ++e) {
    const Perm w = t3.element(e);
    CHECK(a3.element_from_string(a3.element_to_string(w)) == w);
  }
  CHECK_THROWS_AS(a3.element_from_string("1 2 3"), ParseError);
  CHECK_THROWS_AS(a3.element_from_string("1 1 2 2"), ParseError);
  CHECK_THROWS_AS(a3.element_from_string("junk"), ParseError);

  const CoxeterSystem d4 = build_system({Family::D, 4});
  const LengthTable td = LengthTable::build(d4.gens, 1000000);
  for (uint32_t e = 0; e < td.size(); ++e) {
    const Perm w = td.element(e);
    CHECK(d4.element_from_string(d4.element_to_string(w)) == w);
  }
  CHECK(td.find(d4.element_from_string("-2 -1 3 4")).has_value());
  // An odd number of sign changes lands outside D4.
  CHECK_THROWS_AS(d4.element_from_string("-1 2 3 4"), ParseError);
  CHECK_THROWS_AS(d4.element_from_string("1 2 3"), ParseError);
  CHECK_THROWS_AS(d4.element_from_string("5 2 3 4"), ParseError);
}

TEST_CASE("coxeter matrix from permutations") {
  const CoxeterSystem d5 = build_system({Family::D, 5});
  const auto m = coxeter_matrix(d5.gens);
  CHECK(m == d5.matrix);
  // Fork {s1,s3} commutes; the chain runs s2-s4-s5.
  CHECK(m[0][2] == 2);
  CHECK(m[0][1] == 3);
  CHECK(m[2][1] == 3);
  CHECK(m[1][3] == 3);
  CHECK(m[3][4] == 3);
  CHECK(m[0][3] == 2);
}
