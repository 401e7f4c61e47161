#include "springer/spaltenstein.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace springer {

void validate_flag_shape(const Flag& flag) {
  for (int i = 1; i <= flag.length(); ++i) {
    if (flag.space(i).dim() != i) throw std::invalid_argument("flag: dim F_i != i");
    if (i > 1 && !contains(flag.space(i), flag.space(i - 1)))
      throw std::invalid_argument("flag: spaces not nested");
  }
}

SpaltensteinResult spaltenstein(const Flag& flag, const FormSpec& form) {
  validate_flag_shape(flag);
  const int ell = flag.length();
  const int N = ell > 0 ? static_cast<int>(flag.space(1).ambient_dim() / 2) : 0;
  const Matrix z = z_restricted(form);

  std::vector<Partition> seq;  // index i stored at position ell - i
  for (int i = ell; i >= 0; --i) {
    Subspace u =
        i == 0 ? Subspace::zero(form.dim()) : project_to_E(form, flag.space(i), N);
    seq.push_back(jordan_type(induced_map(z, u, form)));
  }

  SpaltensteinResult result;
  result.jordan_seq = seq;
  result.tableau.flavor = form.flavor;
  result.tableau.shape = seq.back();
  for (int step = 0; step < ell; ++step) {
    const Partition& small = seq[static_cast<size_t>(step)];
    const Partition& large = seq[static_cast<size_t>(step) + 1];
    auto small_cells = small.cells();
    auto large_cells = large.cells();
    std::set<std::pair<int, int>> small_set(small_cells.begin(), small_cells.end());
    std::vector<std::pair<int, int>> added;
    for (auto cell : large_cells)
      if (!small_set.count(cell)) added.push_back(cell);
    bool adjacent = added.size() == 2 &&
                    ((added[0].first == added[1].first &&
                      std::abs(added[0].second - added[1].second) == 1) ||
                     (added[0].second == added[1].second &&
                      std::abs(added[0].first - added[1].first) == 1));
    if (!adjacent || small_cells.size() + 2 != large_cells.size())
      throw std::invalid_argument(
          "spaltenstein: consecutive Jordan types do not differ by one domino");
    std::sort(added.begin(), added.end());
    // Step from J(x^{(i+1)}) to J(x^{(i)}) with i = ell - 1 - step: label i+1.
    Domino d;
    d.label = ell - step;
    d.cell_a = added[0];
    d.cell_b = added[1];
    result.tableau.dominoes.push_back(d);
  }
  std::sort(result.tableau.dominoes.begin(), result.tableau.dominoes.end(),
            [](const Domino& a, const Domino& b) { return a.label < b.label; });
  if (result.tableau.m() > 0) validate_tableau(result.tableau);
  return result;
}

}  // namespace springer
