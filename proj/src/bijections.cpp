#include "springer/bijections.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace springer {

CupDiagram psi(const StandardYoungTableau& t) {
  if (!valid_syt(t)) throw std::invalid_argument("psi: invalid standard tableau");
  const int n = t.n();
  std::set<int> lower(t.row2.begin(), t.row2.end());
  CupDiagram d;
  d.m = n;
  std::vector<int> open;
  for (int v = 1; v <= n; ++v) {
    if (lower.count(v)) {
      open.push_back(v);
    } else if (!open.empty()) {
      d.cups.push_back({open.back(), v, false});
      open.pop_back();
    } else {
      d.rays.push_back({v, false});
    }
  }
  if (!open.empty()) throw std::invalid_argument("psi: unmatched lower-row entry");
  std::sort(d.cups.begin(), d.cups.end(),
            [](const CupDiagram::Cup& a, const CupDiagram::Cup& b) { return a.from < b.from; });
  validate(d);
  return d;
}

StandardYoungTableau psi_inverse(const CupDiagram& d) {
  for (const auto& c : d.cups)
    if (c.dot) throw std::invalid_argument("psi_inverse: expects an undecorated diagram");
  for (const auto& r : d.rays)
    if (r.dot) throw std::invalid_argument("psi_inverse: expects an undecorated diagram");
  StandardYoungTableau t;
  for (const auto& c : d.cups) t.row2.push_back(c.from);
  std::sort(t.row2.rbegin(), t.row2.rend());
  std::set<int> lower(t.row2.begin(), t.row2.end());
  for (int v = d.m; v >= 1; --v)
    if (!lower.count(v)) t.row1.push_back(v);
  if (!valid_syt(t)) throw std::invalid_argument("psi_inverse: diagram is not a psi image");
  return t;
}

namespace {

// Standard-tableau part of a cluster with entries shifted down by `base`
// (0 for open clusters, the right vertical's label for closed ones).
StandardYoungTableau cluster_tableau(const SignedDominoTableau& t, const Cluster& c, int base) {
  StandardYoungTableau syt;
  for (int label : c.horizontal_labels) {
    const Domino& d = t.domino(label);
    (d.row() == 1 ? syt.row1 : syt.row2).push_back(label - base);
  }
  std::sort(syt.row1.rbegin(), syt.row1.rend());
  std::sort(syt.row2.rbegin(), syt.row2.rend());
  if (!valid_syt(syt))
    throw std::invalid_argument("Psi: cluster standard part is not a standard tableau");
  return syt;
}

}  // namespace

CupDiagram Psi(const SignedDominoTableau& t) {
  if (t.flavor != Flavor::D) throw std::invalid_argument("Psi: expects a type D tableau");
  validate_tableau(t);
  CupDiagram out;
  out.m = t.m();
  int offset = 0;  // vertices consumed by pieces placed so far
  for (const Cluster& c : clusters(t)) {
    bool dotted = c.left_sign.has_value() && *c.left_sign == Sign::minus;
    if (c.kind == Cluster::Kind::open) {
      CupDiagram part = psi(cluster_tableau(t, c, 0));
      for (const auto& cup : part.cups) out.cups.push_back({offset + cup.from, offset + cup.to, false});
      for (const auto& ray : part.rays) out.rays.push_back({offset + ray.at, false});
      out.rays.push_back({offset + part.m + 1, dotted});
      offset += part.m + 1;
    } else {
      const int size = 2 + static_cast<int>(c.horizontal_labels.size());
      CupDiagram part = psi(cluster_tableau(t, c, c.vertical_labels[1]));
      out.cups.push_back({offset + 1, offset + size, dotted});
      for (const auto& cup : part.cups)
        out.cups.push_back({offset + 1 + cup.from, offset + 1 + cup.to, false});
      if (!part.rays.empty())
        throw std::invalid_argument("Psi: closed cluster standard part has rays");
      offset += size;
    }
  }
  std::sort(out.cups.begin(), out.cups.end(),
            [](const CupDiagram::Cup& a, const CupDiagram::Cup& b) { return a.from < b.from; });
  std::sort(out.rays.begin(), out.rays.end(),
            [](const CupDiagram::Ray& a, const CupDiagram::Ray& b) { return a.at < b.at; });
  validate(out);
  return out;
}

SignedDominoTableau Psi_inverse(const CupDiagram& d) {
  validate(d);
  const int m = d.m;
  const int k = k_of(d);

  // Split the diagram into pieces: an open piece [1..r] up to the rightmost
  // ray, then top-level cups, each spanning a contiguous block.
  struct Piece {
    bool open;
    int lo, hi;
    bool dotted;
  };
  std::vector<Piece> pieces;
  int r = 0;
  if (!d.rays.empty()) {
    r = d.rays.back().at;
    pieces.push_back({true, 1, r, d.rays.back().dot});
  }
  {
    int cursor = r + 1;
    while (cursor <= m) {
      const CupDiagram::Cup* top = nullptr;
      for (const auto& c : d.cups)
        if (c.from == cursor) top = &c;
      if (!top)
        throw std::invalid_argument("Psi_inverse: vertex " + std::to_string(cursor) +
                                    " is not the start of a top-level cup");
      pieces.push_back({false, top->from, top->to, top->dot});
      cursor = top->to + 1;
    }
  }

  // Recover labels, rows and signs cluster by cluster (piece p is cluster
  // C_{p+1}; labels are the global vertex numbers of the piece).
  struct RecoveredCluster {
    bool open;
    int lo, hi;
    bool dotted;
    StandardYoungTableau syt;  // entries shifted to 1..h
  };
  std::vector<RecoveredCluster> recovered;
  for (const Piece& p : pieces) {
    CupDiagram local;
    if (p.open) {
      local.m = p.hi - 1;
      for (const auto& c : d.cups) {
        if (c.from >= p.lo && c.to <= p.hi) {
          if (c.dot) throw std::invalid_argument("Psi_inverse: dotted cup left of a ray");
          local.cups.push_back({c.from, c.to, false});
        }
      }
      for (const auto& ray : d.rays) {
        if (ray.at == p.hi) continue;
        if (ray.dot) throw std::invalid_argument("Psi_inverse: dotted non-rightmost ray");
        local.rays.push_back({ray.at, false});
      }
    } else {
      local.m = p.hi - p.lo - 1;
      for (const auto& c : d.cups) {
        if (c.from > p.lo && c.to < p.hi) {
          if (c.dot) throw std::invalid_argument("Psi_inverse: dotted nested cup");
          local.cups.push_back({c.from - p.lo, c.to - p.lo, false});
        }
      }
    }
    validate(local);
    recovered.push_back({p.open, p.lo, p.hi, p.dotted, psi_inverse(local)});
  }

  // Assemble cells, walking clusters from the leftmost tableau columns
  // (last piece) to the rightmost (first piece).
  SignedDominoTableau t;
  t.flavor = Flavor::D;
  int col = 1;
  int top_len = 0, bottom_len = 0;
  for (auto it = recovered.rbegin(); it != recovered.rend(); ++it) {
    const RecoveredCluster& c = *it;
    if (!c.open) {
      t.dominoes.push_back(Domino{c.hi, {1, col}, {2, col}});  // left vertical
      if (c.dotted) t.signs[c.hi] = Sign::minus;
      else t.signs[c.hi] = Sign::plus;
      const int base = c.lo;
      for (size_t j = 0; j < c.syt.row1.size(); ++j) {
        int cc = col + 2 * static_cast<int>(j) + 1;
        t.dominoes.push_back(Domino{c.syt.row1[j] + base, {1, cc}, {1, cc + 1}});
      }
      for (size_t j = 0; j < c.syt.row2.size(); ++j) {
        int cc = col + 2 * static_cast<int>(j) + 1;
        t.dominoes.push_back(Domino{c.syt.row2[j] + base, {2, cc}, {2, cc + 1}});
      }
      int h = static_cast<int>(c.syt.row1.size() + c.syt.row2.size());
      t.dominoes.push_back(Domino{c.lo, {1, col + h + 1}, {2, col + h + 1}});  // right vertical
      top_len = bottom_len = col + h + 1;
      col += h + 2;
    } else {
      t.dominoes.push_back(Domino{c.hi, {1, col}, {2, col}});  // vertical, odd column
      if (c.dotted) t.signs[c.hi] = Sign::minus;
      else t.signs[c.hi] = Sign::plus;
      for (size_t j = 0; j < c.syt.row1.size(); ++j) {
        int cc = col + 2 * static_cast<int>(j) + 1;
        t.dominoes.push_back(Domino{c.syt.row1[j], {1, cc}, {1, cc + 1}});
        top_len = cc + 1;
      }
      for (size_t j = 0; j < c.syt.row2.size(); ++j) {
        int cc = col + 2 * static_cast<int>(j) + 1;
        t.dominoes.push_back(Domino{c.syt.row2[j], {2, cc}, {2, cc + 1}});
        bottom_len = cc + 1;
      }
      if (c.syt.row1.empty()) top_len = col;
      if (c.syt.row2.empty()) bottom_len = col;
      col = top_len + 1;
    }
  }
  std::vector<int> parts;
  if (top_len > 0) parts.push_back(top_len);
  if (bottom_len > 0) parts.push_back(bottom_len);
  t.shape = Partition(parts);
  std::sort(t.dominoes.begin(), t.dominoes.end(),
            [](const Domino& a, const Domino& b) { return a.label < b.label; });

  // The target shape is (2m-k, k); everything is re-validated independently.
  if (t.shape != Partition(k == 0 ? std::vector<int>{} : std::vector<int>{2 * m - k, k}))
    throw std::invalid_argument("Psi_inverse: assembled shape mismatch");
  validate_tableau(t);
  return t;
}

}  // namespace springer
