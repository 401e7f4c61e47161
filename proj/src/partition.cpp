#include "springer/partition.hpp"

#include <map>
#include <sstream>

namespace springer {

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < p.parts.size(); ++i) {
    if (i) os << ",";
    os << p.parts[i];
  }
  os << ")";
  return os.str();
}

bool is_admissible(const Partition& p, int epsilon) {
  std::map<int, int> multiplicity;
  for (int part : p.parts) ++multiplicity[part];
  for (auto [part, count] : multiplicity) {
    int sign = (part % 2 == 0) ? +1 : -1;
    if (sign == epsilon && count % 2 != 0) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> admissible_two_row_shapes(int max_n) {
  std::vector<std::pair<int, int>> shapes;
  for (int n = 2; n <= max_n; n += 2) {
    int m = n / 2;
    for (int k = 1; k <= m; ++k)
      if (k == m || k % 2 == 1) shapes.emplace_back(n, k);
  }
  return shapes;
}

}  // namespace springer
