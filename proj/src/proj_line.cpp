#include "springer/proj_line.hpp"

#include <sstream>
#include <stdexcept>

namespace springer {

ProjLine::ProjLine(GaussianRational a, GaussianRational b) : alpha(std::move(a)), beta(std::move(b)) {
  if (alpha.is_zero() && beta.is_zero())
    throw std::invalid_argument("ProjLine: zero coordinates");
  if (!alpha.is_zero()) {
    beta = beta / alpha;
    alpha = GaussianRational(1);
  } else {
    beta = GaussianRational(1);
  }
}

ProjLine ProjLine::perp() const { return ProjLine(-conj(beta), conj(alpha)); }

Vector ProjLine::representative() const {
  Vector v(2);
  v(0) = alpha;
  v(1) = beta;
  return v;
}

ProjLine line_e() { return ProjLine(GaussianRational(1), GaussianRational(0)); }
ProjLine line_f() { return ProjLine(GaussianRational(0), GaussianRational(1)); }
ProjLine line_e_plus_f(int sign) { return ProjLine(GaussianRational(1), GaussianRational(sign)); }
ProjLine line_ie_plus_f(int sign) {
  return ProjLine(GaussianRational::i(), GaussianRational(sign));
}

std::string to_string(const ProjLine& l) {
  return "(" + format_scalar(l.alpha) + ":" + format_scalar(l.beta) + ")";
}

ProjLine parse_proj_line(const std::string& alpha, const std::string& beta) {
  return ProjLine(parse_scalar(alpha), parse_scalar(beta));
}

std::string to_string(const ProjRelation& r) {
  std::ostringstream os;
  switch (r.kind) {
    case ProjRelation::Kind::perp:
      os << "l" << r.i << "^perp = l" << r.j;
      break;
    case ProjRelation::Kind::same:
      os << "l" << r.i << " = l" << r.j;
      break;
    case ProjRelation::Kind::fixed:
      os << "l" << r.i << " = " << to_string(r.line);
      break;
  }
  return os.str();
}

std::vector<ProjRelation> translate_to_p1(const CupDiagram& a, int k, int m) {
  validate(a);
  if (a.m != m || k_of(a) != k)
    throw std::invalid_argument("translate_to_p1: diagram is not in B^{n-k,k}");
  std::vector<ProjRelation> out;
  for (const auto& c : a.cups) {
    ProjRelation rel;
    rel.kind = c.dot ? ProjRelation::Kind::same : ProjRelation::Kind::perp;
    rel.i = c.from;
    rel.j = c.to;
    out.push_back(rel);
  }
  const int rightmost = a.rays.empty() ? 0 : a.rays.back().at;
  for (const auto& r : a.rays) {
    ProjRelation rel;
    rel.kind = ProjRelation::Kind::fixed;
    rel.i = r.at;
    if (k == m) {
      rel.line = r.dot ? line_e() : line_f();
    } else if (r.at != rightmost) {
      rel.line = line_e();
    } else {
      const int eps_sign = r.dot ? +1 : -1;  // (-1)^eps with eps = 0 iff dotted
      rel.line = ((m - k) % 2 == 0) ? line_e_plus_f(eps_sign) : line_ie_plus_f(eps_sign);
    }
    out.push_back(rel);
  }
  return out;
}

std::optional<ProjRelation> first_violation(const std::vector<ProjLine>& lines,
                                            const std::vector<ProjRelation>& relations) {
  auto at = [&](int v) -> const ProjLine& { return lines[static_cast<size_t>(v - 1)]; };
  for (const auto& rel : relations) {
    bool ok = true;
    switch (rel.kind) {
      case ProjRelation::Kind::perp:
        ok = at(rel.i).perp() == at(rel.j);
        break;
      case ProjRelation::Kind::same:
        ok = at(rel.i) == at(rel.j);
        break;
      case ProjRelation::Kind::fixed:
        ok = at(rel.i) == rel.line;
        break;
    }
    if (!ok) return rel;
  }
  return std::nullopt;
}

}  // namespace springer
