#pragma once

#include <string>
#include <utility>
#include <vector>

namespace springer {

enum class Flavor { D, C };

inline int epsilon_of(Flavor f) { return f == Flavor::D ? +1 : -1; }
inline std::string flavor_name(Flavor f) { return f == Flavor::D ? "D" : "C"; }

enum class Parity { even, odd };
inline Parity parity_of_dots(int dots) { return dots % 2 == 0 ? Parity::even : Parity::odd; }

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {}

  int n() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }
  int rows() const { return static_cast<int>(parts.size()); }
  int part(int row) const { return row <= rows() ? parts[static_cast<size_t>(row - 1)] : 0; }

  bool valid() const {
    for (size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] <= 0) return false;
      if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    return true;
  }

  /// 1-based (row, col) cells of the Young diagram.
  std::vector<std::pair<int, int>> cells() const {
    std::vector<std::pair<int, int>> out;
    for (int r = 1; r <= rows(); ++r)
      for (int c = 1; c <= part(r); ++c) out.emplace_back(r, c);
    return out;
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
};

std::string to_string(const Partition& p);

/// Parts j with (-1)^j = epsilon occur an even number of times. Type D is
/// epsilon = +1 (even parts paired), type C is epsilon = -1 (odd parts paired).
bool is_admissible(const Partition& p, int epsilon);
inline bool is_admissible(const Partition& p, Flavor f) { return is_admissible(p, epsilon_of(f)); }

/// All type-D admissible two-row shapes (n-k, k) with even n <= max_n,
/// 1 <= k <= n/2; that is k = n/2 or k odd.
std::vector<std::pair<int, int>> admissible_two_row_shapes(int max_n);

}  // namespace springer
