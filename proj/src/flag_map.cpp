#include "springer/flag_map.hpp"

#include <stdexcept>

#include "springer/rng.hpp"

namespace springer {

bool z_compatible(const Ambient& ambient, const Flag& flag) {
  for (int i = 1; i <= flag.length(); ++i) {
    const Subspace& prev =
        i == 1 ? Subspace::zero(ambient.dim()) : flag.space(i - 1);
    for (Index r = 0; r < flag.space(i).dim(); ++r)
      if (!contains(prev, Vector(ambient.z * flag.space(i).basis_vector(r)))) return false;
  }
  return true;
}

std::vector<ProjLine> phi(const Ambient& ambient, const Flag& flag) {
  validate_flag_shape(flag);
  std::vector<ProjLine> lines;
  Subspace prev = Subspace::zero(ambient.dim());
  for (int i = 1; i <= flag.length(); ++i) {
    Subspace line = intersect(flag.space(i), perp_hermitian(prev));
    if (line.dim() != 1) throw std::invalid_argument("phi: F_i cap F_{i-1}^perp is not a line");
    Vector image = ambient.C * line.basis_vector(0);
    lines.emplace_back(image(0), image(1));
    prev = flag.space(i);
  }
  return lines;
}

Flag phi_inverse(const Ambient& ambient, const std::vector<ProjLine>& lines) {
  if (static_cast<int>(lines.size()) != ambient.m)
    throw std::invalid_argument("phi_inverse: expected m lines");
  Flag flag;
  Subspace prev = Subspace::zero(ambient.dim());
  for (const ProjLine& target : lines) {
    Subspace window = intersect(preimage(ambient.z, prev), perp_hermitian(prev));
    if (window.dim() != 2)
      throw std::logic_error("phi_inverse: z^{-1}F cap F^perp is not two-dimensional");
    Vector w1 = window.basis_vector(0), w2 = window.basis_vector(1);
    Matrix c_window(2, 2);
    c_window.col(0) = ambient.C * w1;
    c_window.col(1) = ambient.C * w2;
    auto coeffs = solve_exact(c_window, target.representative());
    if (!coeffs) throw std::logic_error("phi_inverse: C is not invertible on the window");
    Vector lifted = (*coeffs)(0) * w1 + (*coeffs)(1) * w2;
    prev = sum(prev, Subspace::span_of({lifted}, ambient.dim()));
    flag.spaces.push_back(prev);
  }
  validate_flag_shape(flag);
  return flag;
}

Flag pi_map(const Flag& flag) {
  if (flag.length() < 1) throw std::invalid_argument("pi: empty flag");
  Flag out = flag;
  out.spaces.pop_back();
  return out;
}

namespace {

Rational random_bounded_rational(SplitMix64& rng) {
  int num = rng.range(-7, 7);
  int den = rng.range(1, 7);
  return Rational(num, den);
}

bool is_fixed_constant(const ProjLine& l) {
  return l == line_e() || l == line_f() || l == line_e_plus_f(+1) || l == line_e_plus_f(-1) ||
         l == line_ie_plus_f(+1) || l == line_ie_plus_f(-1);
}

ProjLine random_line(SplitMix64& rng) {
  while (true) {
    GaussianRational alpha(random_bounded_rational(rng), random_bounded_rational(rng));
    GaussianRational beta(random_bounded_rational(rng), random_bounded_rational(rng));
    if (alpha.is_zero() && beta.is_zero()) continue;
    ProjLine l(alpha, beta);
    if (!is_fixed_constant(l)) return l;
  }
}

}  // namespace

std::vector<ProjLine> sample_T_a(const CupDiagram& a, std::uint64_t seed) {
  const int m = a.m;
  const int k = k_of(a);
  std::vector<ProjRelation> relations = translate_to_p1(a, k, m);
  std::vector<ProjLine> lines(static_cast<size_t>(m));
  SplitMix64 rng(derive_seed(seed, to_string(a), 0));
  for (const auto& rel : relations)
    if (rel.kind == ProjRelation::Kind::fixed) lines[static_cast<size_t>(rel.i - 1)] = rel.line;
  for (const auto& c : a.cups) {
    ProjLine l = random_line(rng);
    lines[static_cast<size_t>(c.from - 1)] = l;
    lines[static_cast<size_t>(c.to - 1)] = c.dot ? l : l.perp();
  }
  if (auto violated = first_violation(lines, relations))
    throw std::logic_error("sample_T_a: generated point violates " + to_string(*violated));
  return lines;
}

}  // namespace springer
