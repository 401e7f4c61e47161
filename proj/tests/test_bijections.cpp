#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "springer/bijections.hpp"

using namespace springer;

namespace {

Domino vert(int label, int col) { return {label, {1, col}, {2, col}}; }
Domino horiz(int label, int row, int col) { return {label, {row, col}, {row, col + 1}}; }

SignedDominoTableau tableau53_verticals(Sign s4, Sign s2) {
  SignedDominoTableau t;
  t.flavor = Flavor::D;
  t.shape = Partition({5, 3});
  t.dominoes = {horiz(1, 1, 4), vert(2, 3), vert(3, 2), vert(4, 1)};
  t.signs = {{4, s4}, {2, s2}};
  validate_tableau(t);
  return t;
}

SignedDominoTableau tableau53_one_vertical(Sign s4) {
  SignedDominoTableau t;
  t.flavor = Flavor::D;
  t.shape = Partition({5, 3});
  t.dominoes = {horiz(1, 1, 4), horiz(2, 2, 2), horiz(3, 1, 2), vert(4, 1)};
  t.signs = {{4, s4}};
  validate_tableau(t);
  return t;
}

}  // namespace

TEST_CASE("psi on the five SYT(3,2) tableaux reproduces the known diagrams") {
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::string> expected = {
      {{{5, 4, 3}, {2, 1}}, "(1,4) (2,3) |5"}, {{{5, 4, 2}, {3, 1}}, "(1,2) (3,4) |5"},
      {{{5, 3, 2}, {4, 1}}, "(1,2) |3 (4,5)"}, {{{5, 3, 1}, {4, 2}}, "|1 (2,3) (4,5)"},
      {{{5, 4, 1}, {3, 2}}, "|1 (2,5) (3,4)"}};
  for (const auto& t : enumerate_syt(Partition({3, 2}))) {
    auto it = expected.find({t.row1, t.row2});
    REQUIRE(it != expected.end());
    CHECK(to_string(psi(t)) == it->second);
  }
}

TEST_CASE("psi basics") {
  // One-row tableau: all rays, no cups.
  StandardYoungTableau one_row;
  one_row.row1 = {3, 2, 1};
  CupDiagram d = psi(one_row);
  CHECK(d.cup_count() == 0);
  CHECK(d.ray_count() == 3);

  // Lower-row entries are exactly the left endpoints; validate() enforces the
  // non-crossing property on every image.
  for (auto shape : {Partition({3, 2}), Partition({4, 4}), Partition({5, 1}), Partition({3, 3})}) {
    for (const auto& t : enumerate_syt(shape)) {
      CupDiagram image = psi(t);
      std::set<int> left;
      for (const auto& c : image.cups) left.insert(c.from);
      CHECK(left == std::set<int>(t.row2.begin(), t.row2.end()));
      CHECK(psi_inverse(image) == t);
    }
  }
}

TEST_CASE("Psi on the signed (5,3) tableaux hits the eight diagrams") {
  // Dot on the ray at vertex 2 <-> sign of domino 2; dot on the cup (3,4) <->
  // sign of domino 4.
  CHECK(to_string(Psi(tableau53_verticals(Sign::plus, Sign::plus))) == "|1 |2 (3,4)");
  CHECK(to_string(Psi(tableau53_verticals(Sign::plus, Sign::minus))) == "|1 |2* (3,4)");
  CHECK(to_string(Psi(tableau53_verticals(Sign::minus, Sign::plus))) == "|1 |2 (3,4)*");
  CHECK(to_string(Psi(tableau53_verticals(Sign::minus, Sign::minus))) == "|1 |2* (3,4)*");
  CHECK(to_string(Psi(tableau53_one_vertical(Sign::plus))) == "|1 (2,3) |4");
  CHECK(to_string(Psi(tableau53_one_vertical(Sign::minus))) == "|1 (2,3) |4*");

  // Third tableau family: (1,2) |3 |4 with the ray dotted iff the sign is -.
  SignedDominoTableau t3;
  t3.flavor = Flavor::D;
  t3.shape = Partition({5, 3});
  t3.dominoes = {horiz(1, 2, 2), horiz(2, 1, 4), horiz(3, 1, 2), vert(4, 1)};
  t3.signs = {{4, Sign::plus}};
  CHECK(to_string(Psi(t3)) == "(1,2) |3 |4");
  t3.signs = {{4, Sign::minus}};
  CHECK(to_string(Psi(t3)) == "(1,2) |3 |4*");
}

TEST_CASE("Psi of a single signed vertical domino") {
  SignedDominoTableau t;
  t.flavor = Flavor::D;
  t.shape = Partition({1, 1});
  t.dominoes = {vert(1, 1)};
  t.signs = {{1, Sign::minus}};
  CHECK(to_string(Psi(t)) == "|1*");
  t.signs = {{1, Sign::plus}};
  CHECK(to_string(Psi(t)) == "|1");
}

TEST_CASE("Psi of the 19-domino example") {
  SignedDominoTableau t;
  t.flavor = Flavor::D;
  t.shape = Partition({21, 17});
  t.dominoes = {vert(19, 1),     horiz(18, 1, 2),  horiz(16, 2, 2), horiz(17, 1, 4),
                horiz(15, 2, 4), vert(14, 6),      vert(13, 7),     vert(12, 8),
                vert(11, 9),     horiz(10, 1, 10), horiz(9, 2, 10), horiz(8, 1, 12),
                horiz(7, 2, 12), vert(6, 14),      vert(5, 15),     horiz(4, 1, 16),
                horiz(2, 2, 16), horiz(3, 1, 18),  horiz(1, 1, 20)};
  std::sort(t.dominoes.begin(), t.dominoes.end(),
            [](const Domino& a, const Domino& b) { return a.label < b.label; });
  t.signs = {{19, Sign::minus}, {13, Sign::minus}, {11, Sign::plus}, {5, Sign::minus}};
  CupDiagram d = Psi(t);
  CHECK(to_string(d) ==
        "|1 (2,3) |4 |5* (6,11) (7,8) (9,10) (12,13)* (14,19)* (15,18) (16,17)");
  CHECK(Psi_inverse(d) == t);
}

TEST_CASE("Psi_inverse golden values") {
  CupDiagram d = parse_cup_diagram("|1 |2* (3,4)*");
  SignedDominoTableau t = Psi_inverse(d);
  CHECK(t == tableau53_verticals(Sign::minus, Sign::minus));

  CupDiagram ray = parse_cup_diagram("|1*");
  SignedDominoTableau single = Psi_inverse(ray);
  CHECK(single.m() == 1);
  CHECK(single.dominoes == std::vector<Domino>{vert(1, 1)});
  CHECK(single.signs == std::map<int, Sign>{{1, Sign::minus}});
}

TEST_CASE("Psi round trips over B^{5,3} and parity is preserved") {
  auto diagrams = enumerate_cup_diagrams(4, 1);
  REQUIRE(diagrams.size() == 8);
  std::set<std::string> images;
  for (const auto& d : diagrams) {
    SignedDominoTableau t = Psi_inverse(d);
    CHECK(Psi(t) == d);
    CHECK(minus_count(t) == d.dot_count());
    images.insert(to_string(t));
  }
  CHECK(images.size() == 8);

  for (const auto& t : enumerate_signed(Partition({5, 3}), Flavor::D))
    CHECK(Psi_inverse(Psi(t)) == t);
}

TEST_CASE("Psi bijection counts on small shapes") {
  for (auto [n, k] : admissible_two_row_shapes(12)) {
    const int m = n / 2;
    auto diagrams = enumerate_cup_diagrams(m, k / 2);
    auto signed_tabs = enumerate_signed(Partition({n - k, k}), Flavor::D);
    CHECK(diagrams.size() == signed_tabs.size());
    std::set<std::string> images;
    for (const auto& t : signed_tabs) {
      CupDiagram d = Psi(t);
      CHECK(k_of(d) == k);
      CHECK(Psi_inverse(d) == t);
      images.insert(to_string(d));
    }
    CHECK(images.size() == signed_tabs.size());
  }
}

TEST_CASE("Psi_inverse rejects malformed input") {
  CupDiagram bad;
  bad.m = 2;
  bad.cups.push_back({1, 2, false});
  bad.cups.push_back({1, 2, false});
  CHECK_THROWS_AS(Psi_inverse(bad), std::invalid_argument);
}
