#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "springer/bijections.hpp"
#include "springer/flag_map.hpp"
#include "springer/rng.hpp"
#include "springer/spaltenstein.hpp"

using namespace springer;

namespace {

GaussianRational one() { return GaussianRational(1); }
GaussianRational im() { return GaussianRational::i(); }

// Independent oracle for the Jordan type of the map induced on P/U by z:
// kernel dimensions of powers via the subspaces K_t = {v in P : z^t v in U}.
Partition induced_jordan_oracle(const Matrix& z, const Subspace& u, const FormSpec& form) {
  Subspace p = perp_form(u, form.gram);
  const Index quotient_dim = p.dim() - u.dim();
  if (quotient_dim == 0) return Partition{};
  std::vector<Index> increments;
  Index prev = 0;
  Matrix power = z;
  while (true) {
    Subspace kernel = intersect(p, preimage(power, u));
    Index d = kernel.dim() - u.dim();
    increments.push_back(d - prev);
    prev = d;
    if (d == quotient_dim) break;
    power = power * z;
  }
  std::vector<int> parts;
  for (Index j = 1; j <= increments.front(); ++j) {
    int count = 0;
    for (Index inc : increments) count += (inc >= j);
    parts.push_back(count);
  }
  return Partition(parts);
}

Subspace span_e_prefix(const FormSpec& form, int upto) {
  std::vector<Vector> vs;
  for (int i = 1; i <= upto; ++i) {
    Vector v(form.dim());
    v.setConstant(GaussianRational(0));
    v(form.idx_e(i)) = one();
    vs.push_back(v);
  }
  return Subspace::span_of(vs, form.dim());
}

}  // namespace

TEST_CASE("ambient basics") {
  Ambient amb = build_ambient(4);
  CHECK(amb.N == 5);
  // ker z = span(e1, f1)
  Subspace kernel = preimage(amb.z, Subspace::zero(amb.dim()));
  CHECK(kernel == Subspace::span_of({amb.e(1), amb.f(1)}, amb.dim()));
  // z^m kills span(e_1..e_m, f_1..f_m)
  Matrix zm = amb.z;
  for (int t = 1; t < amb.m; ++t) zm = zm * amb.z;
  for (int i = 1; i <= amb.m; ++i) {
    for (Vector v : {Vector(amb.e(i)), Vector(amb.f(i))}) {
      Vector image = zm * v;
      bool zero = true;
      for (Index j = 0; j < image.size(); ++j) zero = zero && image(j) == GaussianRational(0);
      CHECK(zero);
    }
  }
  // C(e3 + i f2) = e + i f
  Vector v = amb.e(3) + im() * amb.f(2);
  Vector c = amb.C * v;
  CHECK(c(0) == one());
  CHECK(c(1) == im());
}

TEST_CASE("make_form beta_D^{5,3} golden entries") {
  FormSpec form = make_form(Flavor::D, 8, 3);
  CHECK(form.a == 5);
  CHECK(form.b == 3);
  CHECK(form.gram(form.idx_e(1), form.idx_e(5)) == one());
  CHECK(form.gram(form.idx_e(2), form.idx_e(4)) == GaussianRational(-1));
  CHECK(form.gram(form.idx_e(3), form.idx_e(3)) == one());
  CHECK(form.gram(form.idx_f(1), form.idx_f(3)) == GaussianRational(-1));
  CHECK(form.gram(form.idx_f(2), form.idx_f(2)) == one());
  CHECK(form.gram(form.idx_e(1), form.idx_f(1)) == GaussianRational(0));
  CHECK(mat_equal(Matrix(form.gram.transpose()), form.gram));
}

TEST_CASE("make_form beta_D^{n-1,1} restricted Gram") {
  // m odd: entries +1 on e_m and -1 on f_1; m even: both -1.
  for (int m : {5, 4}) {
    FormSpec form = make_form(Flavor::D, 2 * m, 1);
    GaussianRational e_entry = form.gram(form.idx_e(m), form.idx_e(m));
    CHECK(e_entry == (m % 2 == 1 ? one() : GaussianRational(-1)));
    CHECK(form.gram(form.idx_f(1), form.idx_f(1)) == GaussianRational(-1));
    for (int i = 1; i < m; ++i)
      for (int j = 1; j <= m; ++j)
        if (i + j != 2 * m)
          CHECK(form.gram(form.idx_e(i), form.idx_e(j)) == GaussianRational(0));
  }
}

TEST_CASE("make_form type C cases") {
  // k = m: beta_C^{k-1,k-1}(f_j, e_{j'}) = -beta_C^{k-1,k-1}(e_{j'}, f_j).
  FormSpec km = make_form(Flavor::C, 6, 3);
  CHECK(km.a == 2);
  CHECK(km.gram(km.idx_f(1), km.idx_e(2)) == one());
  CHECK(km.gram(km.idx_e(2), km.idx_f(1)) == GaussianRational(-1));
  CHECK(km.gram(km.idx_f(2), km.idx_e(1)) == GaussianRational(-1));

  // k < m: shape (4,2) from (n,k) = (8,3).
  FormSpec kl = make_form(Flavor::C, 8, 3);
  CHECK(kl.a == 4);
  CHECK(kl.b == 2);
  CHECK(kl.gram(kl.idx_e(1), kl.idx_e(4)) == GaussianRational(-1));
  CHECK(kl.gram(kl.idx_e(4), kl.idx_e(1)) == one());
  CHECK(kl.gram(kl.idx_e(2), kl.idx_e(3)) == one());
  CHECK(kl.gram(kl.idx_f(1), kl.idx_f(2)) == one());
  CHECK(kl.gram(kl.idx_f(2), kl.idx_f(1)) == GaussianRational(-1));
  CHECK(mat_equal(Matrix(kl.gram.transpose()), Matrix(-kl.gram)));
}

TEST_CASE("all four form cases construct for every shape up to n = 16") {
  // Construction itself checks (anti)symmetry, nondegeneracy and the
  // compatibility beta(zv, w) = -beta(v, zw).
  for (auto [n, k] : admissible_two_row_shapes(16)) {
    CHECK_NOTHROW(make_form(Flavor::D, n, k));
    CHECK_NOTHROW(make_form(Flavor::C, n, k));
  }
  CHECK_THROWS_AS(make_form(Flavor::D, 8, 2), std::invalid_argument);
}

TEST_CASE("isotropy golden values") {
  FormSpec form = make_form(Flavor::D, 8, 3);
  Ambient amb = build_ambient(4);
  // span(e1, e2, f1, i e3 + f2) is isotropic for beta_D^{5,3}.
  Subspace good = Subspace::span_of(
      {amb.e(1), amb.e(2), amb.f(1), Vector(im() * amb.e(3) + amb.f(2))}, amb.dim());
  CHECK(isotropy(form, good, amb.N) == IsotropyCheck::isotropic);
  // span(e1, e5) pairs to beta(e1, e5) = 1.
  Subspace bad = Subspace::span_of({amb.e(1), amb.e(5)}, amb.dim());
  CHECK(isotropy(form, bad, amb.N) == IsotropyCheck::not_isotropic);
  // f3 coordinates may appear, f4 must not.
  Subspace outside = Subspace::span_of({amb.f(4)}, amb.dim());
  CHECK(isotropy(form, outside, amb.N) == IsotropyCheck::not_contained);

  // span(e_1..e_{m-1}, e_m + (-1)^eps f_1) for m = 5 under beta_D^{9,1}.
  Ambient amb5 = build_ambient(5);
  FormSpec form91 = make_form(Flavor::D, 10, 1);
  for (int eps_sign : {+1, -1}) {
    std::vector<Vector> vs;
    for (int i = 1; i < 5; ++i) vs.push_back(amb5.e(i));
    vs.push_back(Vector(amb5.e(5) + GaussianRational(eps_sign) * amb5.f(1)));
    CHECK(isotropy(form91, Subspace::span_of(vs, amb5.dim()), amb5.N) ==
          IsotropyCheck::isotropic);
  }
}

TEST_CASE("jordan_type") {
  // The 8x8 nilpotent with blocks of sizes 5 and 3.
  CHECK(jordan_type(z_restricted(make_form(Flavor::D, 8, 3))) == Partition({5, 3}));
  Matrix zero(2, 2);
  zero.setConstant(GaussianRational(0));
  CHECK(jordan_type(zero) == Partition({1, 1}));
  CHECK(jordan_type(z_restricted(make_form(Flavor::D, 6, 3))) == Partition({3, 3}));
  Matrix not_nilpotent = Matrix::Identity(2, 2);
  CHECK_THROWS_AS(jordan_type(not_nilpotent), std::invalid_argument);
  CHECK(jordan_type(Matrix(0, 0)) == Partition{});
}

TEST_CASE("induced_map golden values in (5,3)") {
  FormSpec form = make_form(Flavor::D, 8, 3);
  Matrix z = z_restricted(form);

  // U = 0: the induced map is z itself.
  CHECK(jordan_type(induced_map(z, Subspace::zero(8), form)) == Partition({5, 3}));

  // U = span(e1): J = (3,3) as in the worked Jordan-type sequence.
  Subspace e1 = span_e_prefix(form, 1);
  CHECK(jordan_type(induced_map(z, e1, form)) == Partition({3, 3}));
  CHECK(induced_jordan_oracle(z, e1, form) == Partition({3, 3}));

  // U = span(f1): the quotient keeps the whole e-chain while f2 dies into U,
  // so the type is (5,1); frozen from the power-kernel oracle.
  Vector f1(8);
  f1.setConstant(GaussianRational(0));
  f1(form.idx_f(1)) = one();
  Subspace uf1 = Subspace::span_of({f1}, 8);
  CHECK(induced_jordan_oracle(z, uf1, form) == Partition({5, 1}));
  CHECK(jordan_type(induced_map(z, uf1, form)) == Partition({5, 1}));

  // Errors: not z-stable, not isotropic.
  Vector e5(8);
  e5.setConstant(GaussianRational(0));
  e5(form.idx_e(5)) = one();
  CHECK_THROWS_AS(induced_map(z, Subspace::span_of({e5}, 8), form), std::invalid_argument);
  CHECK_THROWS_AS(induced_map(z, span_e_prefix(form, 3), form), std::invalid_argument);
}

TEST_CASE("induced_map agrees with the power-kernel oracle on flag spaces") {
  FormSpec form = make_form(Flavor::D, 8, 3);
  Matrix z = z_restricted(form);
  Ambient amb = build_ambient(4);
  std::vector<Subspace> spaces = {
      Subspace::span_of({amb.e(1)}, amb.dim()),
      Subspace::span_of({amb.e(1), amb.f(1)}, amb.dim()),
      Subspace::span_of({amb.e(1), amb.e(2), amb.f(1)}, amb.dim()),
      Subspace::span_of({amb.e(1), amb.e(2), amb.f(1), Vector(im() * amb.e(3) + amb.f(2))},
                        amb.dim()),
  };
  for (const auto& s : spaces) {
    Subspace u = project_to_E(form, s, amb.N);
    CHECK(jordan_type(induced_map(z, u, form)) == induced_jordan_oracle(z, u, form));
  }
}

TEST_CASE("spaltenstein on the worked example flag") {
  Ambient amb = build_ambient(4);
  FormSpec form = make_form(Flavor::D, 8, 3);
  Flag flag;
  flag.spaces = {
      Subspace::span_of({amb.e(1)}, amb.dim()),
      Subspace::span_of({amb.e(1), amb.f(1)}, amb.dim()),
      Subspace::span_of({amb.e(1), amb.e(2), amb.f(1)}, amb.dim()),
      Subspace::span_of({amb.e(1), amb.e(2), amb.f(1), Vector(im() * amb.e(3) + amb.f(2))},
                        amb.dim()),
  };
  SpaltensteinResult result = spaltenstein(flag, form);
  REQUIRE(result.jordan_seq.size() == 5);
  CHECK(result.jordan_seq[0] == Partition{});
  CHECK(result.jordan_seq[1] == Partition({1, 1}));
  CHECK(result.jordan_seq[2] == Partition({3, 1}));
  CHECK(result.jordan_seq[3] == Partition({3, 3}));
  CHECK(result.jordan_seq[4] == Partition({5, 3}));

  // The tableau is the second ADT(5,3): vertical 4, horizontal 3 on top,
  // 2 below it, 1 top right.
  SignedDominoTableau expected = enumerate_adt(Partition({5, 3}), Flavor::D)[1];
  CHECK(result.tableau == expected);
}

TEST_CASE("spaltenstein of a one-step flag") {
  Ambient amb = build_ambient(1);
  FormSpec form = make_form(Flavor::D, 2, 1);
  Flag flag;
  flag.spaces = {Subspace::span_of({amb.e(1)}, amb.dim())};
  SpaltensteinResult result = spaltenstein(flag, form);
  CHECK(result.tableau.m() == 1);
  CHECK(result.tableau.dominoes[0].vertical());
  CHECK(result.tableau.dominoes[0].column() == 1);
}

TEST_CASE("phi on simple flags") {
  Ambient amb = build_ambient(3);
  Flag flag;
  flag.spaces = {Subspace::span_of({amb.e(1)}, amb.dim()),
                 Subspace::span_of({amb.e(1), amb.e(2)}, amb.dim()),
                 Subspace::span_of({amb.e(1), amb.e(2), amb.e(3)}, amb.dim())};
  auto lines = phi(amb, flag);
  REQUIRE(lines.size() == 3);
  for (const auto& l : lines) CHECK(l == line_e());
}

TEST_CASE("phi of the worked example flag and its inverse") {
  Ambient amb = build_ambient(4);
  Flag flag;
  flag.spaces = {
      Subspace::span_of({amb.e(1)}, amb.dim()),
      Subspace::span_of({amb.e(1), amb.f(1)}, amb.dim()),
      Subspace::span_of({amb.e(1), amb.e(2), amb.f(1)}, amb.dim()),
      Subspace::span_of({amb.e(1), amb.e(2), amb.f(1), Vector(im() * amb.e(3) + amb.f(2))},
                        amb.dim()),
  };
  auto lines = phi(amb, flag);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == line_e());
  CHECK(lines[1] == line_f());
  CHECK(lines[2] == line_e());
  CHECK(lines[3] == line_ie_plus_f(+1));

  CHECK(phi_inverse(amb, lines) == flag);
}

TEST_CASE("phi_inverse on the rays-only components of B^{n-1,1}") {
  // m odd: last vector e_m + (-1)^eps f_1; m even: i e_m + (-1)^eps f_1.
  for (int m : {5, 4}) {
    Ambient amb = build_ambient(m);
    for (int eps_sign : {+1, -1}) {
      std::vector<ProjLine> lines(static_cast<size_t>(m), line_e());
      lines.back() = (m % 2 == 1) ? line_e_plus_f(eps_sign) : line_ie_plus_f(eps_sign);
      Flag flag = phi_inverse(amb, lines);
      for (int i = 1; i < m; ++i) {
        std::vector<Vector> vs;
        for (int t = 1; t <= i; ++t) vs.push_back(amb.e(t));
        CHECK(flag.space(i) == Subspace::span_of(vs, amb.dim()));
      }
      std::vector<Vector> vs;
      for (int t = 1; t < m; ++t) vs.push_back(amb.e(t));
      GaussianRational lead = (m % 2 == 1) ? one() : im();
      vs.push_back(Vector(lead * amb.e(m) + GaussianRational(eps_sign) * amb.f(1)));
      CHECK(flag.space(m) == Subspace::span_of(vs, amb.dim()));
      CHECK(phi(amb, flag) == lines);
      CHECK(z_compatible(amb, flag));
      CHECK(isotropy(make_form(Flavor::D, 2 * m, 1), flag.space(m), amb.N) ==
            IsotropyCheck::isotropic);
    }
  }
  // m = 1: span(f) lifts to span(f_1).
  Ambient amb1 = build_ambient(1);
  Flag f_flag = phi_inverse(amb1, {line_f()});
  CHECK(f_flag.space(1) == Subspace::span_of({amb1.f(1)}, amb1.dim()));
}

TEST_CASE("phi round trips on sampled T_a points") {
  SplitMix64 seeds(99);
  for (const char* text : {"(1,2) |3 |4", "|1 |2* (3,4)*", "(1,2) (3,4)", "(1,4) (2,3)",
                           "|1 (2,3) (4,5)", "(1,2) |3 |4 |5"}) {
    CupDiagram a = parse_cup_diagram(text);
    Ambient amb = build_ambient(a.m);
    for (int s = 0; s < 3; ++s) {
      auto lines = sample_T_a(a, seeds.next());
      Flag flag = phi_inverse(amb, lines);
      CHECK(phi(amb, flag) == lines);
      CHECK(z_compatible(amb, flag));
      CHECK(phi_inverse(amb, phi(amb, flag)) == flag);
    }
  }
}

TEST_CASE("sample_T_a output satisfies its relations and avoids fixed lines") {
  CupDiagram a = parse_cup_diagram("|1 (2,3) (4,5)");
  auto relations = translate_to_p1(a, k_of(a), a.m);
  for (std::uint64_t seed : {1ull, 2ull, 77ull}) {
    auto lines = sample_T_a(a, seed);
    CHECK_FALSE(first_violation(lines, relations).has_value());
    for (const auto& c : a.cups) {
      const ProjLine& l = lines[static_cast<size_t>(c.from - 1)];
      CHECK(l != line_e());
      CHECK(l != line_f());
      CHECK(l != line_e_plus_f(+1));
      CHECK(l != line_e_plus_f(-1));
      CHECK(l != line_ie_plus_f(+1));
      CHECK(l != line_ie_plus_f(-1));
    }
  }
  CHECK(sample_T_a(parse_cup_diagram("|1*"), 5) == std::vector<ProjLine>{line_e()});
}

TEST_CASE("pi drops the last space and keeps z-compatibility") {
  Ambient amb = build_ambient(4);
  Flag flag = phi_inverse(amb, sample_T_a(parse_cup_diagram("|1 |2* (3,4)*"), 3));
  Flag image = pi_map(flag);
  CHECK(image.length() == 3);
  for (int i = 1; i <= 3; ++i) CHECK(image.space(i) == flag.space(i));
  CHECK(z_compatible(amb, image));
}

TEST_CASE("perp_form against the worked (5,3) complements") {
  FormSpec form = make_form(Flavor::D, 8, 3);
  auto unit_E = [&](Index idx) {
    Vector v(8);
    v.setConstant(GaussianRational(0));
    v(idx) = GaussianRational(1);
    return v;
  };
  // F_1 = span(e1): complement is everything except e5.
  Subspace f1 = Subspace::span_of({unit_E(form.idx_e(1))}, 8);
  std::vector<Vector> all_but_e5;
  for (int i = 1; i <= 4; ++i) all_but_e5.push_back(unit_E(form.idx_e(i)));
  for (int j = 1; j <= 3; ++j) all_but_e5.push_back(unit_E(form.idx_f(j)));
  CHECK(perp_form(f1, form.gram) == Subspace::span_of(all_but_e5, 8));

  // F_2 = span(e1, f1): everything except e5 and f3.
  Subspace f2 = Subspace::span_of({unit_E(form.idx_e(1)), unit_E(form.idx_f(1))}, 8);
  std::vector<Vector> all_but_e5_f3;
  for (int i = 1; i <= 4; ++i) all_but_e5_f3.push_back(unit_E(form.idx_e(i)));
  for (int j = 1; j <= 2; ++j) all_but_e5_f3.push_back(unit_E(form.idx_f(j)));
  CHECK(perp_form(f2, form.gram) == Subspace::span_of(all_but_e5_f3, 8));

  CHECK(perp_form(Subspace::zero(8), form.gram) == Subspace::full(8));
}
