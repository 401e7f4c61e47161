#include "springer/syt.hpp"

#include <algorithm>
#include <stdexcept>

namespace springer {

bool valid_syt(const StandardYoungTableau& t) {
  if (t.row2.size() > t.row1.size()) return false;
  std::vector<bool> seen(static_cast<size_t>(t.n()) + 1, false);
  for (const auto* row : {&t.row1, &t.row2}) {
    for (size_t j = 0; j < row->size(); ++j) {
      int e = (*row)[j];
      if (e < 1 || e > t.n() || seen[static_cast<size_t>(e)]) return false;
      seen[static_cast<size_t>(e)] = true;
      if (j > 0 && (*row)[j - 1] <= e) return false;
    }
  }
  for (size_t j = 0; j < t.row2.size(); ++j)
    if (t.row1[j] <= t.row2[j]) return false;
  return true;
}

std::vector<StandardYoungTableau> enumerate_syt(const Partition& shape) {
  if (shape.rows() > 2) throw std::invalid_argument("enumerate_syt: more than two rows");
  const int p = shape.part(1), q = shape.part(2);
  const int n = p + q;

  std::vector<StandardYoungTableau> out;
  std::vector<int> lower(static_cast<size_t>(q));
  // Choose the lower-row entry set; rows are then forced (descending sorts).
  auto emit = [&]() {
    StandardYoungTableau t;
    t.row2 = lower;
    std::sort(t.row2.rbegin(), t.row2.rend());
    std::vector<bool> in_lower(static_cast<size_t>(n) + 1, false);
    for (int e : t.row2) in_lower[static_cast<size_t>(e)] = true;
    for (int e = n; e >= 1; --e)
      if (!in_lower[static_cast<size_t>(e)]) t.row1.push_back(e);
    if (valid_syt(t)) out.push_back(std::move(t));
  };
  // Iterate q-subsets of 1..n.
  std::vector<int> idx(static_cast<size_t>(q));
  for (int i = 0; i < q; ++i) idx[static_cast<size_t>(i)] = i + 1;
  if (q == 0) {
    emit();
  } else {
    while (true) {
      lower.assign(idx.begin(), idx.end());
      emit();
      int i = q - 1;
      while (i >= 0 && idx[static_cast<size_t>(i)] == n - (q - 1 - i)) --i;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
      for (int j = i + 1; j < q; ++j)
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
  }
  std::sort(out.begin(), out.end(), [](const StandardYoungTableau& a,
                                       const StandardYoungTableau& b) { return a.row1 < b.row1; });
  return out;
}

}  // namespace springer
