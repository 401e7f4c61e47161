#include "springer/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "springer/bijections.hpp"
#include "springer/flag_map.hpp"
#include "springer/rng.hpp"
#include "springer/spaltenstein.hpp"

namespace springer {

void VerifyReport::add(int sample, const std::string& assertion, bool ok,
                       const std::string& detail) {
  entries.push_back({sample, assertion, ok, ok ? "" : detail});
  pass = pass && ok;
}

namespace {

std::string flag_text(const Flag& flag) {
  std::ostringstream os;
  for (int i = 1; i <= flag.length(); ++i) os << "F" << i << " = " << to_string(flag.space(i)) << "; ";
  return os.str();
}

Partition expected_no_undotted_shape(int n, int k, int i) {
  const int m = n / 2;
  if (i >= m - k) {
    int s = m - i;
    return s == 0 ? Partition{} : Partition({s, s});
  }
  return Partition({n - k - 2 * i, k});
}

}  // namespace

VerifyReport verify_component(const CupDiagram& a, int samples, std::uint64_t seed,
                              const FormSpec* form_override) {
  validate(a);
  const int m = a.m;
  const int k = k_of(a);
  const int n = 2 * m;

  VerifyReport report;
  report.subject = to_string(a);
  report.seed = seed;

  Ambient ambient = build_ambient(m);
  FormSpec form = form_override ? *form_override : make_form(Flavor::D, n, k);
  SignedDominoTableau expected = forget_signs(Psi_inverse(a));
  bool no_undotted = true;
  for (const auto& c : a.cups) no_undotted = no_undotted && c.dot;

  for (int s = 0; s < samples; ++s) {
    std::uint64_t sample_seed = derive_seed(seed, to_string(a), static_cast<std::uint64_t>(s));
    std::vector<ProjLine> lines = sample_T_a(a, sample_seed);
    Flag flag = phi_inverse(ambient, lines);
    const std::string payload = flag_text(flag);

    report.add(s, "z-compatibility", z_compatible(ambient, flag), payload);
    report.add(s, "containment in E",
               contained_in_E(form, flag.space(m), ambient.N), payload);
    IsotropyCheck iso = isotropy(form, flag.space(m), ambient.N);
    report.add(s, "isotropy", iso == IsotropyCheck::isotropic,
               to_string(iso) + "; " + payload);

    try {
      SpaltensteinResult spalt = spaltenstein(flag, form);
      report.add(s, "unsigned tableau match", spalt.tableau == expected,
                 "got " + to_string(spalt.tableau) + " expected " + to_string(expected) + "; " +
                     payload);
      if (no_undotted) {
        bool seq_ok = true;
        std::ostringstream detail;
        for (int i = m; i >= 0; --i) {
          const Partition& got = spalt.jordan_seq[static_cast<size_t>(m - i)];
          Partition want = expected_no_undotted_shape(n, k, i);
          if (got != want) {
            seq_ok = false;
            detail << "J(z^(" << i << ")) = " << to_string(got) << " expected " << to_string(want)
                   << "; ";
          }
        }
        report.add(s, "Jordan sequence (no undotted cups)", seq_ok, detail.str() + payload);
      }
    } catch (const std::exception& e) {
      report.add(s, "spaltenstein", false, std::string(e.what()) + "; " + payload);
    }

    report.add(s, "phi round trip", phi(ambient, flag) == lines, payload);
  }
  return report;
}

VerifyReport verify_theorem2(const CupDiagram& a, int samples, std::uint64_t seed,
                             const FormSpec* form_override) {
  validate(a);
  if (parity(a) != Parity::odd)
    throw std::invalid_argument("verify_theorem2: diagram must have odd parity");
  const int m = a.m;
  const int k = k_of(a);
  const int n = 2 * m;

  VerifyReport report;
  report.subject = to_string(a);
  report.seed = seed;

  if (m == 1) {
    report.vacuous = true;
    report.add(-1, "trivially passes (m-1 = 0)", true);
    return report;
  }

  Ambient ambient = build_ambient(m);
  FormSpec form_c = form_override ? *form_override : make_form(Flavor::C, n, k);
  SignedDominoTableau expected = forget_signs(d_to_c(Psi_inverse(a)));

  std::vector<Flag> flags, images;
  for (int s = 0; s < samples; ++s) {
    std::uint64_t sample_seed = derive_seed(seed, to_string(a), static_cast<std::uint64_t>(s));
    Flag flag = phi_inverse(ambient, sample_T_a(a, sample_seed));
    Flag image = pi_map(flag);
    const std::string payload = flag_text(image);

    report.add(s, "pi-image containment in E",
               contained_in_E(form_c, image.space(m - 1), ambient.N), payload);
    IsotropyCheck iso = isotropy(form_c, image.space(m - 1), ambient.N);
    report.add(s, "pi-image isotropy", iso == IsotropyCheck::isotropic,
               to_string(iso) + "; " + payload);
    if (expected.m() > 0) {
      try {
        SpaltensteinResult spalt = spaltenstein(image, form_c);
        report.add(s, "type C tableau match", spalt.tableau == expected,
                   "got " + to_string(spalt.tableau) + " expected " + to_string(expected) + "; " +
                       payload);
      } catch (const std::exception& e) {
        report.add(s, "type C spaltenstein", false, std::string(e.what()) + "; " + payload);
      }
    }
    flags.push_back(std::move(flag));
    images.push_back(std::move(image));
  }

  bool injective = true;
  std::string counterexample;
  for (size_t s = 0; s < flags.size() && injective; ++s)
    for (size_t t = s + 1; t < flags.size() && injective; ++t)
      if (!(flags[s] == flags[t]) && images[s] == images[t]) {
        injective = false;
        counterexample = "samples " + std::to_string(s) + " and " + std::to_string(t) +
                         " collide: " + flag_text(flags[s]) + " vs " + flag_text(flags[t]);
      }
  report.add(-1, "injectivity spot-check", injective, counterexample);
  return report;
}

namespace {

std::vector<Index> isotropic_block(const FormSpec& form) {
  std::vector<Index> block;
  for (Index i = 0; i < form.dim(); ++i) {
    bool ok = form.gram(i, i) == GaussianRational(0);
    for (Index j : block) ok = ok && form.gram(i, j) == GaussianRational(0) &&
                               form.gram(j, i) == GaussianRational(0);
    if (ok) block.push_back(i);
  }
  return block;
}

GaussianRational random_small_scalar(SplitMix64& rng) {
  return GaussianRational(Rational(rng.range(-3, 3), rng.range(1, 3)),
                          Rational(rng.range(-3, 3), rng.range(1, 3)));
}

}  // namespace

VerifyReport isotropy_propagation(int n, int k, Flavor flavor, int trials, std::uint64_t seed) {
  VerifyReport report;
  report.subject = flavor_name(flavor) + " (" + std::to_string(n - k) + "," + std::to_string(k) + ")";
  report.seed = seed;
  if (k < 3 || (flavor == Flavor::C && k == 3 && k == n / 2)) {
    // No smaller admissible shape to propagate from.
    report.vacuous = true;
    report.add(-1, "no smaller shape; vacuous", true);
    return report;
  }

  FormSpec big = make_form(flavor, n, k);
  FormSpec small = make_form(flavor, n - 4, k - 2);
  if (small.dim() == 0) {
    report.vacuous = true;
    report.add(-1, "smaller form is zero-dimensional; vacuous", true);
    return report;
  }
  // An ambient large enough to hold E_{n-k-2,k-2} and its z-preimage.
  Ambient ambient = build_ambient(n);
  std::vector<Index> block = isotropic_block(small);

  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng(derive_seed(seed, report.subject, static_cast<std::uint64_t>(t)));
    const int r = rng.range(0, static_cast<int>(block.size()));
    std::vector<Vector> vectors;
    for (int v = 0; v < r; ++v) {
      Vector vec(ambient.dim());
      vec.setConstant(GaussianRational(0));
      for (Index idx : block) {
        // E-coordinate -> ambient coordinate.
        int label = static_cast<int>(idx);
        Index amb = label < small.a ? ambient.idx_e(label + 1)
                                    : ambient.idx_f(label - small.a + 1);
        vec(amb) = random_small_scalar(rng);
      }
      vectors.push_back(std::move(vec));
    }
    Subspace v_small = Subspace::span_of(vectors, ambient.dim());
    Subspace u = preimage(ambient.z, v_small);

    bool premise_ok = contained_in_E(small, v_small, ambient.N) &&
                      isotropy(small, v_small, ambient.N) == IsotropyCheck::isotropic;
    report.add(t, "premise: zU isotropic in smaller E", premise_ok, to_string(v_small));
    bool contained = contained_in_E(big, u, ambient.N);
    bool isotropic_ok = isotropy(big, u, ambient.N) == IsotropyCheck::isotropic;
    report.add(t, "U contained in E", contained, "U = " + to_string(u));
    report.add(t, "U isotropic", isotropic_ok, "U = " + to_string(u));
  }
  return report;
}

}  // namespace springer
