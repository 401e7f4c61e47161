#pragma once

#include <vector>

#include "springer/partition.hpp"

namespace springer {

/// Two-row standard Young tableau in the decreasing convention: entries
/// 1..n each once, strictly decreasing along rows and down columns.
struct StandardYoungTableau {
  std::vector<int> row1;  // decreasing
  std::vector<int> row2;  // decreasing, len(row2) <= len(row1)

  Partition shape() const {
    std::vector<int> parts;
    if (!row1.empty()) parts.push_back(static_cast<int>(row1.size()));
    if (!row2.empty()) parts.push_back(static_cast<int>(row2.size()));
    return Partition(parts);
  }
  int n() const { return static_cast<int>(row1.size() + row2.size()); }

  friend bool operator==(const StandardYoungTableau& a, const StandardYoungTableau& b) {
    return a.row1 == b.row1 && a.row2 == b.row2;
  }
};

bool valid_syt(const StandardYoungTableau& t);

/// All tableaux of two-row shape (p, q), sorted by ascending lexicographic
/// order of the row-1 reading word.
std::vector<StandardYoungTableau> enumerate_syt(const Partition& shape);

}  // namespace springer
