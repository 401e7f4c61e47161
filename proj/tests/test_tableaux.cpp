#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "springer/domino.hpp"
#include "springer/partition.hpp"
#include "springer/syt.hpp"

using namespace springer;

namespace {

Domino vert(int label, int col) { return {label, {1, col}, {2, col}}; }
Domino horiz(int label, int row, int col) { return {label, {row, col}, {row, col + 1}}; }

SignedDominoTableau make_tableau(Flavor flavor, std::vector<int> shape,
                                 std::vector<Domino> dominoes,
                                 std::map<int, Sign> signs = {}) {
  SignedDominoTableau t;
  t.flavor = flavor;
  t.shape = Partition(std::move(shape));
  t.dominoes = std::move(dominoes);
  std::sort(t.dominoes.begin(), t.dominoes.end(),
            [](const Domino& a, const Domino& b) { return a.label < b.label; });
  t.signs = std::move(signs);
  validate_tableau(t);
  return t;
}

// The three admissible domino tableaux of shape (5,3), in reading-word order.
std::vector<SignedDominoTableau> adt53() {
  return {
      make_tableau(Flavor::D, {5, 3}, {vert(4, 1), vert(3, 2), vert(2, 3), horiz(1, 1, 4)}),
      make_tableau(Flavor::D, {5, 3}, {vert(4, 1), horiz(3, 1, 2), horiz(2, 2, 2), horiz(1, 1, 4)}),
      make_tableau(Flavor::D, {5, 3}, {vert(4, 1), horiz(3, 1, 2), horiz(1, 2, 2), horiz(2, 1, 4)}),
  };
}

std::vector<SignedDominoTableau> adt42() {
  return {
      make_tableau(Flavor::C, {4, 2}, {vert(3, 1), vert(2, 2), horiz(1, 1, 3)}),
      make_tableau(Flavor::C, {4, 2}, {horiz(3, 1, 1), horiz(2, 2, 1), horiz(1, 1, 3)}),
      make_tableau(Flavor::C, {4, 2}, {horiz(3, 1, 1), horiz(1, 2, 1), horiz(2, 1, 3)}),
  };
}

}  // namespace

TEST_CASE("admissibility") {
  CHECK(is_admissible(Partition({5, 3}), Flavor::D));
  CHECK(is_admissible(Partition({4, 2}), Flavor::C));
  CHECK_FALSE(is_admissible(Partition({6, 2}), Flavor::D));  // k = 2 even, k != m
  CHECK(is_admissible(Partition({4, 4}), Flavor::D));
  CHECK(is_admissible(Partition({3, 3}), Flavor::D));
  CHECK(is_admissible(Partition({3, 3}), Flavor::C));
  CHECK_FALSE(is_admissible(Partition({5, 3}), Flavor::C));
  CHECK(is_admissible(Partition(std::vector<int>{}), Flavor::D));
  // Two-row type D: k = m or k odd, over the shape list helper.
  for (auto [n, k] : admissible_two_row_shapes(16)) {
    CHECK(is_admissible(Partition({n - k, k}), Flavor::D));
    CHECK((k == n / 2 || k % 2 == 1));
  }
}

TEST_CASE("SYT(3,2) matches the known list of five") {
  auto tabs = enumerate_syt(Partition({3, 2}));
  REQUIRE(tabs.size() == 5);
  std::set<std::pair<std::vector<int>, std::vector<int>>> got;
  for (const auto& t : tabs) got.insert({t.row1, t.row2});
  std::set<std::pair<std::vector<int>, std::vector<int>>> expected = {
      {{5, 4, 3}, {2, 1}}, {{5, 4, 2}, {3, 1}}, {{5, 3, 2}, {4, 1}},
      {{5, 3, 1}, {4, 2}}, {{5, 4, 1}, {3, 2}}};
  CHECK(got == expected);
  // Deterministic order: ascending lexicographic row-1 word.
  for (size_t i = 1; i < tabs.size(); ++i) CHECK(tabs[i - 1].row1 < tabs[i].row1);
}

TEST_CASE("SYT edge cases and brute-force oracle for (2,2)") {
  CHECK(enumerate_syt(Partition({1})).size() == 1);

  // Oracle: all 4! fillings of the (2,2) grid, filtered by validity.
  int count = 0;
  std::vector<int> perm = {1, 2, 3, 4};
  std::sort(perm.begin(), perm.end());
  do {
    StandardYoungTableau t;
    t.row1 = {perm[0], perm[1]};
    t.row2 = {perm[2], perm[3]};
    if (valid_syt(t)) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(count == 2);
  CHECK(enumerate_syt(Partition({2, 2})).size() == 2);
}

TEST_CASE("ADT(5,3) is exactly the paper-order list of three") {
  auto got = enumerate_adt(Partition({5, 3}), Flavor::D);
  auto expected = adt53();
  REQUIRE(got.size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    CHECK(got[i].dominoes == expected[i].dominoes);
    CHECK(got[i].shape == expected[i].shape);
  }
}

TEST_CASE("ADT(4,2) type C is exactly the list of three") {
  auto got = enumerate_adt(Partition({4, 2}), Flavor::C);
  auto expected = adt42();
  REQUIRE(got.size() == 3);
  for (size_t i = 0; i < 3; ++i) CHECK(got[i].dominoes == expected[i].dominoes);
}

TEST_CASE("ADT edge cases") {
  auto single = enumerate_adt(Partition({1, 1}), Flavor::D);
  REQUIRE(single.size() == 1);
  CHECK(single[0].dominoes == std::vector<Domino>{vert(1, 1)});
  CHECK_THROWS_AS(enumerate_adt(Partition({6, 2}), Flavor::D), std::invalid_argument);
}

TEST_CASE("signed enumeration counts and parity filter") {
  CHECK(enumerate_signed(Partition({5, 3}), Flavor::D).size() == 8);
  CHECK(enumerate_signed(Partition({4, 2}), Flavor::C).size() == 4);
  CHECK(enumerate_signed(Partition({5, 3}), Flavor::D, Parity::odd).size() == 4);
  CHECK(enumerate_signed(Partition({5, 3}), Flavor::D, Parity::even).size() == 4);
  CHECK(enumerate_signed(Partition({2, 2}), Flavor::D).size() == 2);

  // Type D signs live on odd-column verticals, type C on even columns.
  auto d53 = enumerate_adt(Partition({5, 3}), Flavor::D);
  CHECK(signable_labels(d53[0]) == std::vector<int>{4, 2});
  CHECK(signable_labels(d53[1]) == std::vector<int>{4});
  auto c42 = enumerate_adt(Partition({4, 2}), Flavor::C);
  CHECK(signable_labels(c42[0]) == std::vector<int>{2});
  CHECK(signable_labels(c42[1]).empty());
}

TEST_CASE("clusters of the 19-domino tableau") {
  SignedDominoTableau t = make_tableau(
      Flavor::D, {21, 17},
      {vert(19, 1),     horiz(18, 1, 2), horiz(16, 2, 2), horiz(17, 1, 4), horiz(15, 2, 4),
       vert(14, 6),     vert(13, 7),     vert(12, 8),     vert(11, 9),     horiz(10, 1, 10),
       horiz(9, 2, 10), horiz(8, 1, 12), horiz(7, 2, 12), vert(6, 14),     vert(5, 15),
       horiz(4, 1, 16), horiz(2, 2, 16), horiz(3, 1, 18), horiz(1, 1, 20)},
      {{19, Sign::minus}, {13, Sign::minus}, {11, Sign::plus}, {5, Sign::minus}});

  auto cs = clusters(t);
  REQUIRE(cs.size() == 4);
  CHECK(cs[0].kind == Cluster::Kind::open);
  CHECK(cs[0].all_labels() == std::vector<int>{5, 4, 3, 2, 1});
  CHECK(cs[1].kind == Cluster::Kind::closed);
  CHECK(cs[1].all_labels() == std::vector<int>{11, 10, 9, 8, 7, 6});
  CHECK(cs[2].all_labels() == std::vector<int>{13, 12});
  CHECK(cs[3].all_labels() == std::vector<int>{19, 18, 17, 16, 15, 14});
  CHECK(cs[0].left_sign == Sign::minus);
  CHECK(cs[1].left_sign == Sign::plus);
  CHECK(cs[1].vertical_labels == std::vector<int>{11, 6});
}

TEST_CASE("cluster edge cases") {
  // A single vertical domino is one open cluster with no horizontals.
  auto t = make_tableau(Flavor::D, {1, 1}, {vert(1, 1)});
  auto cs = clusters(t);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].kind == Cluster::Kind::open);
  CHECK(cs[0].horizontal_labels.empty());

  // First (5,3) tableau: open cluster {2,1}, closed cluster {4,3}.
  auto cs53 = clusters(adt53()[0]);
  REQUIRE(cs53.size() == 2);
  CHECK(cs53[0].kind == Cluster::Kind::open);
  CHECK(cs53[0].all_labels() == std::vector<int>{2, 1});
  CHECK(cs53[1].kind == Cluster::Kind::closed);
  CHECK(cs53[1].all_labels() == std::vector<int>{4, 3});
}

TEST_CASE("d_to_c deletes the leftmost vertical and keeps signs") {
  auto t1 = adt53()[0];
  t1.signs = {{4, Sign::minus}, {2, Sign::plus}};
  auto image = d_to_c(t1);
  CHECK(image.flavor == Flavor::C);
  CHECK(image.shape == Partition({4, 2}));
  CHECK(image.dominoes == adt42()[0].dominoes);
  CHECK(image.signs == std::map<int, Sign>{{2, Sign::plus}});

  // forget_signs . d_to_c of the first (5,3) tableau.
  CHECK(forget_signs(d_to_c(adt53()[0])).dominoes == adt42()[0].dominoes);

  // Single signed vertical -> empty type C tableau.
  auto single = make_tableau(Flavor::D, {1, 1}, {vert(1, 1)}, {{1, Sign::minus}});
  auto empty = d_to_c(single);
  CHECK(empty.m() == 0);
  CHECK(empty.shape == Partition(std::vector<int>{}));
}

TEST_CASE("d_to_c is a bijection odd->all and even->all (small shapes)") {
  for (auto [n, k] : admissible_two_row_shapes(10)) {
    Partition shape({n - k, k});
    std::vector<int> c_parts;
    if (n - k - 1 > 0) c_parts.push_back(n - k - 1);
    if (k - 1 > 0) c_parts.push_back(k - 1);
    Partition c_shape(c_parts);
    auto c_all = c_shape.n() == 0 ? std::vector<SignedDominoTableau>{}
                                  : enumerate_signed(c_shape, Flavor::C);
    for (Parity p : {Parity::odd, Parity::even}) {
      auto part = enumerate_signed(shape, Flavor::D, p);
      std::set<std::string> images;
      for (const auto& t : part) images.insert(to_string(d_to_c(t)));
      if (c_shape.n() == 0) {
        CHECK(part.size() == 1);  // the lone vertical with one sign choice
        continue;
      }
      CHECK(images.size() == part.size());
      CHECK(part.size() == c_all.size());
      std::set<std::string> expected;
      for (const auto& t : c_all) expected.insert(to_string(t));
      CHECK(images == expected);
    }
  }
}

TEST_CASE("truncation re-check rejects a bad tableau") {
  // Horizontal dominoes stacked in both rows of a type D (4,2) would make the
  // truncation after deleting label 1 the inadmissible shape (2).
  SignedDominoTableau t;
  t.flavor = Flavor::D;
  t.shape = Partition({4, 2});
  t.dominoes = {horiz(1, 1, 3), horiz(2, 2, 1), horiz(3, 1, 1)};
  CHECK_THROWS_AS(validate_tableau(t), std::invalid_argument);
}
