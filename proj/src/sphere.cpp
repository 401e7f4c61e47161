#include "springer/sphere.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace springer {

namespace {

std::string constant_name(SphereConstant c, int sign) {
  std::string base = (c == SphereConstant::p) ? "p" : "q";
  return sign < 0 ? "-" + base : base;
}

}  // namespace

std::string to_string(const SphereConstraint& c) {
  std::ostringstream os;
  switch (c.kind) {
    case SphereConstraint::Kind::equal:
      os << "x" << c.i << " = x" << c.j;
      break;
    case SphereConstraint::Kind::negate:
      os << "x" << c.i << " = -x" << c.j;
      break;
    case SphereConstraint::Kind::constant:
      os << "x" << c.i << " = " << constant_name(c.constant, c.constant_sign);
      break;
  }
  return os.str();
}

std::vector<SphereConstraint> relations_of(const CupDiagram& a, SphereConvention conv) {
  validate(a);
  const bool swap = (conv == SphereConvention::swapped);
  const SphereConstant near = swap ? SphereConstant::q : SphereConstant::p;
  const SphereConstant far = swap ? SphereConstant::p : SphereConstant::q;
  std::vector<SphereConstraint> out;
  for (const auto& c : a.cups) {
    SphereConstraint rel;
    rel.kind = c.dot ? SphereConstraint::Kind::equal : SphereConstraint::Kind::negate;
    rel.i = c.from;
    rel.j = c.to;
    out.push_back(rel);
  }
  const int rightmost = a.rays.empty() ? 0 : a.rays.back().at;
  for (const auto& r : a.rays) {
    SphereConstraint rel;
    rel.kind = SphereConstraint::Kind::constant;
    rel.i = r.at;
    if (r.dot) {  // dotted ray (necessarily rightmost): x = p
      rel.constant = near;
      rel.constant_sign = +1;
    } else if (r.at == rightmost) {  // undotted rightmost ray: x = -p
      rel.constant = near;
      rel.constant_sign = -1;
    } else {  // other rays: x = q
      rel.constant = far;
      rel.constant_sign = +1;
    }
    out.push_back(rel);
  }
  return out;
}

namespace {

// Union-find over x_1..x_m tracking the sign of each element relative to its
// root, plus an optional constant tag per class. A class must not receive two
// different constants, and x = -x (an odd cycle) has no solution on S^2.
class SignedUnionFind {
 public:
  explicit SignedUnionFind(int n) : parent_(static_cast<size_t>(n) + 1), sign_(parent_.size(), +1) {
    for (size_t i = 0; i < parent_.size(); ++i) parent_[i] = static_cast<int>(i);
  }

  // x_i = s * x_j; returns false on contradiction.
  bool relate(int i, int j, int s) {
    auto [ri, si] = find(i);
    auto [rj, sj] = find(j);
    if (ri == rj) return si == s * sj;
    parent_[static_cast<size_t>(rj)] = ri;
    sign_[static_cast<size_t>(rj)] = si * s * sj;
    auto it = constant_.find(rj);
    if (it != constant_.end()) {
      auto tag = it->second;
      constant_.erase(it);
      return assign_root(ri, tag.first, tag.second * sign_of_root(rj));
    }
    return true;
  }

  // x_i = sign * c; returns false on contradiction.
  bool assign(int i, SphereConstant c, int sign) {
    auto [r, s] = find(i);
    return assign_root(r, c, s * sign);
  }

  std::pair<int, int> find(int i) {  // (root, sign of x_i relative to root)
    int sign = +1;
    while (parent_[static_cast<size_t>(i)] != i) {
      sign *= sign_[static_cast<size_t>(i)];
      i = parent_[static_cast<size_t>(i)];
    }
    return {i, sign};
  }

  std::optional<std::pair<SphereConstant, int>> constant_of_root(int r) const {
    auto it = constant_.find(r);
    if (it == constant_.end()) return std::nullopt;
    return it->second;
  }

 private:
  int sign_of_root(int r) const { return sign_[static_cast<size_t>(r)]; }

  bool assign_root(int root, SphereConstant c, int sign) {
    auto it = constant_.find(root);
    if (it != constant_.end()) return it->second == std::make_pair(c, sign);
    constant_[root] = {c, sign};
    return true;
  }

  std::vector<int> parent_;
  std::vector<int> sign_;  // sign relative to parent
  std::map<int, std::pair<SphereConstant, int>> constant_;
};

}  // namespace

SolveResult solve(const CupDiagram& a, const CupDiagram& b, SphereConvention conv) {
  if (a.m != b.m) throw std::invalid_argument("solve: vertex count mismatch");
  const int m = a.m;
  SignedUnionFind uf(m);
  bool ok = true;
  for (const auto& diagram : {a, b}) {
    for (const auto& rel : relations_of(diagram, conv)) {
      switch (rel.kind) {
        case SphereConstraint::Kind::equal:
          ok = ok && uf.relate(rel.i, rel.j, +1);
          break;
        case SphereConstraint::Kind::negate:
          ok = ok && uf.relate(rel.i, rel.j, -1);
          break;
        case SphereConstraint::Kind::constant:
          ok = ok && uf.assign(rel.i, rel.constant, rel.constant_sign);
          break;
      }
      if (!ok) return {};
    }
  }
  SolveResult result;
  result.consistent = true;
  std::map<int, std::string> symbol_of_root;
  for (int v = 1; v <= m; ++v) {
    auto [root, sign] = uf.find(v);
    if (!uf.constant_of_root(root) && !symbol_of_root.count(root)) {
      ++result.free_count;
      symbol_of_root[root] = "s" + std::to_string(result.free_count);
    }
  }
  result.witness.assign(static_cast<size_t>(m) + 1, "");
  for (int v = 1; v <= m; ++v) {
    auto [root, sign] = uf.find(v);
    std::string base;
    int total_sign = sign;
    if (auto tag = uf.constant_of_root(root)) {
      base = (tag->first == SphereConstant::p) ? "p" : "q";
      total_sign *= tag->second;
    } else {
      base = symbol_of_root[root];
    }
    result.witness[static_cast<size_t>(v)] = (total_sign < 0 ? "-" : "") + base;
  }
  return result;
}

CrossCheckReport oracle_cross_check(const CupDiagram& a, const CupDiagram& b) {
  CrossCheckReport report;
  IntersectionResult predicted = intersection_type(a, b);
  for (auto conv : {SphereConvention::definition, SphereConvention::swapped}) {
    SolveResult solved = solve(a, b, conv);
    if (solved.consistent != predicted.nonempty) {
      report.ok = false;
      report.mismatch = "verdict mismatch for a=" + to_string(a) + " b=" + to_string(b) +
                        " convention=" + (conv == SphereConvention::definition ? "definition" : "swapped") +
                        ": oracle " + (solved.consistent ? "consistent" : "inconsistent") +
                        " vs predictor " + to_string(predicted);
      return report;
    }
    if (solved.consistent && solved.free_count != predicted.circ) {
      report.ok = false;
      report.mismatch = "free count mismatch for a=" + to_string(a) + " b=" + to_string(b) + ": " +
                        std::to_string(solved.free_count) + " vs circ " +
                        std::to_string(predicted.circ);
      return report;
    }
  }
  return report;
}

}  // namespace springer
