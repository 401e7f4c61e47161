#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "springer/partition.hpp"

namespace springer {

enum class Sign { plus, minus };
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

struct Domino {
  int label = 0;
  // Two adjacent 1-based (row, col) cells, sorted (row, then col).
  std::pair<int, int> cell_a;
  std::pair<int, int> cell_b;

  bool vertical() const { return cell_a.second == cell_b.second; }
  int column() const { return cell_a.second; }  // leftmost column
  int row() const { return cell_a.first; }      // top row

  friend bool operator==(const Domino&, const Domino&) = default;
};

/// Admissible domino tableau of two-row shape, optionally signed. Signs live
/// on vertical dominoes in odd columns (flavor D) resp. even columns
/// (flavor C); an unsigned tableau has an empty sign map.
struct SignedDominoTableau {
  Flavor flavor = Flavor::D;
  Partition shape;
  std::vector<Domino> dominoes;  // sorted by label ascending
  std::map<int, Sign> signs;     // label -> sign, keys exactly the signable labels when signed

  int m() const { return static_cast<int>(dominoes.size()); }
  const Domino& domino(int label) const;

  friend bool operator==(const SignedDominoTableau&, const SignedDominoTableau&) = default;
};

/// Labels of vertical dominoes eligible for a sign under the tableau's flavor.
std::vector<int> signable_labels(const SignedDominoTableau& t);

int minus_count(const SignedDominoTableau& t);
SignedDominoTableau forget_signs(SignedDominoTableau t);

/// Row-major label word (row 1 then row 2) used for deterministic ordering.
std::vector<int> reading_word(const SignedDominoTableau& t);

/// Independent re-check of (ADT1)-(ADT3) plus sign-position validity.
/// Throws std::invalid_argument naming the violated condition.
void validate_tableau(const SignedDominoTableau& t);

/// All admissible domino tableaux of the given two-row shape, unsigned,
/// ordered by ascending reading word. Throws if the shape is not admissible
/// for the flavor.
std::vector<SignedDominoTableau> enumerate_adt(const Partition& shape, Flavor flavor);

/// All sign assignments over enumerate_adt, + before -, sign positions in
/// column order.
std::vector<SignedDominoTableau> enumerate_signed(const Partition& shape, Flavor flavor);
std::vector<SignedDominoTableau> enumerate_signed(const Partition& shape, Flavor flavor,
                                                  std::optional<Parity> parity_filter);

/// Maximal building blocks of a two-row tableau, numbered right to left
/// (element 0 is the rightmost cluster, which is the only one that may be
/// open).
struct Cluster {
  enum class Kind { open, closed };
  Kind kind = Kind::open;
  // open: {vertical}; closed: {left vertical (largest label), right vertical}.
  std::vector<int> vertical_labels;
  std::vector<int> horizontal_labels;  // ascending
  std::optional<Sign> left_sign;

  std::vector<int> all_labels() const;  // descending
};

std::vector<Cluster> clusters(const SignedDominoTableau& t);

/// Deletes the leftmost vertical domino (the one labelled m) and shifts the
/// rest one column left; type D (n-k,k) -> type C (n-k-1,k-1), signs kept.
SignedDominoTableau d_to_c(const SignedDominoTableau& t);

std::string to_string(const SignedDominoTableau& t);

}  // namespace springer
