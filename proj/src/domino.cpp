#include "springer/domino.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace springer {

const Domino& SignedDominoTableau::domino(int label) const {
  for (const auto& d : dominoes)
    if (d.label == label) return d;
  throw std::invalid_argument("no domino with label " + std::to_string(label));
}

std::vector<int> signable_labels(const SignedDominoTableau& t) {
  const int wanted_parity = t.flavor == Flavor::D ? 1 : 0;  // odd columns for D, even for C
  std::vector<int> labels;
  for (const auto& d : t.dominoes)
    if (d.vertical() && d.column() % 2 == wanted_parity) labels.push_back(d.label);
  std::sort(labels.begin(), labels.end(), [&](int a, int b) {
    return t.domino(a).column() < t.domino(b).column();
  });
  return labels;
}

int minus_count(const SignedDominoTableau& t) {
  int c = 0;
  for (auto [label, sign] : t.signs) c += (sign == Sign::minus);
  return c;
}

SignedDominoTableau forget_signs(SignedDominoTableau t) {
  t.signs.clear();
  return t;
}

namespace {

// label grid: labels_at[row][col-1], 0 when absent
std::vector<std::vector<int>> label_grid(const SignedDominoTableau& t) {
  std::vector<std::vector<int>> grid(2);
  grid[0].assign(static_cast<size_t>(t.shape.part(1)), 0);
  grid[1].assign(static_cast<size_t>(t.shape.part(2)), 0);
  for (const auto& d : t.dominoes) {
    for (auto cell : {d.cell_a, d.cell_b}) {
      auto [r, c] = cell;
      if (r < 1 || r > 2 || c < 1 || c > t.shape.part(r))
        throw std::invalid_argument("domino cell outside shape");
      int& slot = grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)];
      if (slot != 0) throw std::invalid_argument("overlapping dominoes");
      slot = d.label;
    }
  }
  return grid;
}

}  // namespace

std::vector<int> reading_word(const SignedDominoTableau& t) {
  auto grid = label_grid(t);
  std::vector<int> word;
  for (const auto& row : grid)
    for (int v : row) word.push_back(v);
  return word;
}

void validate_tableau(const SignedDominoTableau& t) {
  if (t.shape.rows() > 2) throw std::invalid_argument("tableau: more than two rows");
  if (!t.shape.valid()) throw std::invalid_argument("tableau: invalid shape");
  if (t.shape.n() != 2 * t.m()) throw std::invalid_argument("tableau: cell count mismatch");
  // (ADT1): labels 1..m, each exactly one domino of two adjacent cells.
  std::set<int> labels;
  for (const auto& d : t.dominoes) {
    if (!labels.insert(d.label).second) throw std::invalid_argument("tableau: duplicate label");
    bool adjacent = (d.cell_a.first == d.cell_b.first &&
                     d.cell_b.second == d.cell_a.second + 1) ||
                    (d.cell_a.second == d.cell_b.second &&
                     d.cell_b.first == d.cell_a.first + 1);
    if (!adjacent) throw std::invalid_argument("tableau: cells not adjacent (ADT1)");
  }
  for (int l = 1; l <= t.m(); ++l)
    if (!labels.count(l)) throw std::invalid_argument("tableau: missing label (ADT1)");
  auto grid = label_grid(t);
  for (const auto& row : grid)
    for (int v : row)
      if (v == 0) throw std::invalid_argument("tableau: uncovered cell (ADT1)");
  // (ADT2): rows and columns weakly decreasing.
  for (const auto& row : grid)
    for (size_t j = 1; j < row.size(); ++j)
      if (row[j - 1] < row[j]) throw std::invalid_argument("tableau: row not decreasing (ADT2)");
  for (size_t j = 0; j < grid[1].size(); ++j)
    if (grid[0][j] < grid[1][j])
      throw std::invalid_argument("tableau: column not decreasing (ADT2)");
  // (ADT3): every truncation admissible for the flavor.
  for (int i = 0; i <= t.m(); ++i) {
    int cells0 = 0, cells1 = 0;
    for (int v : grid[0]) cells0 += (v > i);
    for (int v : grid[1]) cells1 += (v > i);
    std::vector<int> parts;
    if (cells0 > 0) parts.push_back(cells0);
    if (cells1 > 0) parts.push_back(cells1);
    Partition truncated(parts);
    if (!truncated.valid()) throw std::invalid_argument("tableau: truncation not a shape (ADT3)");
    if (!is_admissible(truncated, t.flavor))
      throw std::invalid_argument("tableau: truncation not admissible (ADT3)");
    // Truncations must also be left-aligned prefixes of the rows.
    for (const auto& row : grid) {
      bool seen_deleted = false;
      for (int v : row) {
        if (v <= i)
          seen_deleted = true;
        else if (seen_deleted)
          throw std::invalid_argument("tableau: truncation not left aligned (ADT3)");
      }
    }
  }
  // Sign positions.
  if (!t.signs.empty()) {
    auto allowed = signable_labels(t);
    for (auto [label, sign] : t.signs) {
      (void)sign;
      if (std::find(allowed.begin(), allowed.end(), label) == allowed.end())
        throw std::invalid_argument("tableau: sign on non-signable domino");
    }
  }
}

namespace {

struct GrowthState {
  int top = 0, bottom = 0;  // current truncation shape
  std::vector<Domino> placed;
};

void grow(const Partition& target, Flavor flavor, int next_label, GrowthState& st,
          std::vector<SignedDominoTableau>& out) {
  const int target_top = target.part(1), target_bottom = target.part(2);
  if (next_label == 0) {
    if (st.top == target_top && st.bottom == target_bottom) {
      SignedDominoTableau t;
      t.flavor = flavor;
      t.shape = target;
      t.dominoes = st.placed;
      std::sort(t.dominoes.begin(), t.dominoes.end(),
                [](const Domino& a, const Domino& b) { return a.label < b.label; });
      out.push_back(std::move(t));
    }
    return;
  }
  auto try_shape = [&](int top, int bottom, Domino d) {
    if (top > target_top || bottom > target_bottom) return;
    std::vector<int> parts;
    if (top > 0) parts.push_back(top);
    if (bottom > 0) parts.push_back(bottom);
    Partition p(parts);
    if (!p.valid() || !is_admissible(p, flavor)) return;
    int saved_top = st.top, saved_bottom = st.bottom;
    st.top = top;
    st.bottom = bottom;
    st.placed.push_back(d);
    grow(target, flavor, next_label - 1, st, out);
    st.placed.pop_back();
    st.top = saved_top;
    st.bottom = saved_bottom;
  };
  // Vertical (possible only on equal rows), horizontal in row 1, row 2.
  if (st.top == st.bottom)
    try_shape(st.top + 1, st.bottom + 1,
              Domino{next_label, {1, st.top + 1}, {2, st.top + 1}});
  try_shape(st.top + 2, st.bottom,
            Domino{next_label, {1, st.top + 1}, {1, st.top + 2}});
  if (st.bottom + 2 <= st.top)
    try_shape(st.top, st.bottom + 2,
              Domino{next_label, {2, st.bottom + 1}, {2, st.bottom + 2}});
}

}  // namespace

std::vector<SignedDominoTableau> enumerate_adt(const Partition& shape, Flavor flavor) {
  if (shape.rows() > 2) throw std::invalid_argument("enumerate_adt: more than two rows");
  if (shape.n() % 2 != 0) throw std::invalid_argument("enumerate_adt: odd cell count");
  if (!is_admissible(shape, flavor))
    throw std::invalid_argument("enumerate_adt: shape not admissible for flavor " +
                                flavor_name(flavor));
  std::vector<SignedDominoTableau> out;
  GrowthState st;
  grow(shape, flavor, shape.n() / 2, st, out);
  std::sort(out.begin(), out.end(),
            [](const SignedDominoTableau& a, const SignedDominoTableau& b) {
              return reading_word(a) < reading_word(b);
            });
  for (const auto& t : out) validate_tableau(t);
  return out;
}

std::vector<SignedDominoTableau> enumerate_signed(const Partition& shape, Flavor flavor) {
  return enumerate_signed(shape, flavor, std::nullopt);
}

std::vector<SignedDominoTableau> enumerate_signed(const Partition& shape, Flavor flavor,
                                                  std::optional<Parity> parity_filter) {
  std::vector<SignedDominoTableau> out;
  for (const auto& base : enumerate_adt(shape, flavor)) {
    std::vector<int> slots = signable_labels(base);
    const size_t s = slots.size();
    for (size_t mask = 0; mask < (size_t{1} << s); ++mask) {
      SignedDominoTableau t = base;
      int minus = 0;
      for (size_t i = 0; i < s; ++i) {
        // + before -: treat slot 0 (leftmost column) as the most significant bit.
        bool is_minus = mask & (size_t{1} << (s - 1 - i));
        t.signs[slots[i]] = is_minus ? Sign::minus : Sign::plus;
        minus += is_minus;
      }
      if (parity_filter && parity_of_dots(minus) != *parity_filter) continue;
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<int> Cluster::all_labels() const {
  std::vector<int> labels = vertical_labels;
  labels.insert(labels.end(), horizontal_labels.begin(), horizontal_labels.end());
  std::sort(labels.rbegin(), labels.rend());
  return labels;
}

std::vector<Cluster> clusters(const SignedDominoTableau& t) {
  std::vector<Cluster> out;
  Cluster current;
  std::vector<int> pending_horizontals;
  bool in_closed = false;
  int right_vertical = 0;
  auto sign_of = [&](int label) -> std::optional<Sign> {
    auto it = t.signs.find(label);
    return it == t.signs.end() ? std::nullopt : std::optional<Sign>(it->second);
  };
  // Walk labels in increasing order; the rightmost cluster comes first.
  for (int label = 1; label <= t.m(); ++label) {
    const Domino& d = t.domino(label);
    if (!d.vertical()) {
      pending_horizontals.push_back(label);
      continue;
    }
    if (!in_closed) {
      if (d.column() % 2 == 1) {
        // Open cluster: single vertical in an odd column, rightmost block only.
        if (!out.empty())
          throw std::invalid_argument("clusters: open cluster not rightmost");
        Cluster c;
        c.kind = Cluster::Kind::open;
        c.vertical_labels = {label};
        c.horizontal_labels = pending_horizontals;
        c.left_sign = sign_of(label);
        out.push_back(std::move(c));
        pending_horizontals.clear();
      } else {
        in_closed = true;
        right_vertical = label;
        if (!pending_horizontals.empty())
          throw std::invalid_argument("clusters: horizontals right of a closed cluster");
      }
    } else {
      if (d.column() % 2 == 0)
        throw std::invalid_argument("clusters: left vertical in even column");
      Cluster c;
      c.kind = Cluster::Kind::closed;
      c.vertical_labels = {label, right_vertical};
      c.horizontal_labels = pending_horizontals;
      c.left_sign = sign_of(label);
      out.push_back(std::move(c));
      pending_horizontals.clear();
      in_closed = false;
    }
  }
  if (in_closed || !pending_horizontals.empty())
    throw std::invalid_argument("clusters: dangling block");
  return out;
}

SignedDominoTableau d_to_c(const SignedDominoTableau& t) {
  if (t.flavor != Flavor::D) throw std::invalid_argument("d_to_c: expects a type D tableau");
  if (t.m() == 0) throw std::invalid_argument("d_to_c: empty tableau");
  const Domino& leftmost = t.domino(t.m());
  if (!leftmost.vertical() || leftmost.column() != 1)
    throw std::invalid_argument("d_to_c: no vertical domino in column 1");
  SignedDominoTableau out;
  out.flavor = Flavor::C;
  std::vector<int> parts;
  if (t.shape.part(1) > 1) parts.push_back(t.shape.part(1) - 1);
  if (t.shape.part(2) > 1) parts.push_back(t.shape.part(2) - 1);
  out.shape = Partition(parts);
  for (const auto& d : t.dominoes) {
    if (d.label == t.m()) continue;
    Domino shifted = d;
    shifted.cell_a.second -= 1;
    shifted.cell_b.second -= 1;
    out.dominoes.push_back(shifted);
  }
  for (auto [label, sign] : t.signs)
    if (label != t.m()) out.signs[label] = sign;
  if (out.m() > 0) validate_tableau(out);
  return out;
}

std::string to_string(const SignedDominoTableau& t) {
  std::ostringstream os;
  os << flavor_name(t.flavor) << to_string(t.shape) << "[";
  for (size_t i = 0; i < t.dominoes.size(); ++i) {
    const auto& d = t.dominoes[i];
    if (i) os << " ";
    os << d.label << (d.vertical() ? "V" : "H") << "(" << d.cell_a.first << "," << d.cell_a.second
       << ")";
    auto it = t.signs.find(d.label);
    if (it != t.signs.end()) os << sign_char(it->second);
  }
  os << "]";
  return os.str();
}

}  // namespace springer
