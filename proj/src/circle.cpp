#include "springer/circle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace springer {

namespace {

struct PlainUnionFind {
  std::vector<int> parent;
  explicit PlainUnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

CircleDiagram circle_diagram(const CupDiagram& a, const CupDiagram& b) {
  if (a.m != b.m) throw std::invalid_argument("circle_diagram: vertex count mismatch");
  const int m = a.m;
  PlainUnionFind uf(m + 1);
  for (const auto& c : a.cups) uf.unite(c.from, c.to);
  for (const auto& c : b.cups) uf.unite(c.from, c.to);

  struct Acc {
    std::vector<int> vertices;
    int dots = 0;
    int rays_a = 0, rays_b = 0;
  };
  std::map<int, Acc> by_root;
  for (int v = 1; v <= m; ++v) by_root[uf.find(v)].vertices.push_back(v);
  for (const auto& c : a.cups) by_root[uf.find(c.from)].dots += c.dot;
  for (const auto& c : b.cups) by_root[uf.find(c.from)].dots += c.dot;
  for (const auto& r : a.rays) {
    Acc& acc = by_root[uf.find(r.at)];
    acc.dots += r.dot;
    ++acc.rays_a;
  }
  for (const auto& r : b.rays) {
    Acc& acc = by_root[uf.find(r.at)];
    acc.dots += r.dot;
    ++acc.rays_b;
  }

  CircleDiagram out;
  for (auto& [root, acc] : by_root) {
    CircleComponent comp;
    comp.vertices = std::move(acc.vertices);
    std::sort(comp.vertices.begin(), comp.vertices.end());
    comp.dots = acc.dots;
    comp.closed = (acc.rays_a + acc.rays_b == 0);
    comp.propagating = (acc.rays_a == 1 && acc.rays_b == 1);
    out.components.push_back(std::move(comp));
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const CircleComponent& x, const CircleComponent& y) {
              return x.vertices.front() < y.vertices.front();
            });
  return out;
}

IntersectionResult intersection_type(const CupDiagram& a, const CupDiagram& b) {
  if (a.cup_count() != b.cup_count())
    throw std::invalid_argument("intersection_type: cup count mismatch");
  CircleDiagram glued = circle_diagram(a, b);
  for (const auto& comp : glued.components) {
    if (comp.dots % 2 != 0) return {false, 0};          // (I1)
    if (!comp.closed && !comp.propagating) return {false, 0};  // (I2)
  }
  return {true, glued.closed_count()};
}

std::string to_string(const IntersectionResult& r) {
  if (!r.nonempty) return "empty";
  std::ostringstream os;
  os << "(S^2)^" << r.circ;
  return os.str();
}

std::string canonical_name(size_t index) {
  if (index < 26) return std::string(1, static_cast<char>('a' + index));
  return "n" + std::to_string(index + 1);
}

IntersectionGraph intersection_graph(const std::vector<CupDiagram>& diagrams) {
  IntersectionGraph g;
  g.nodes = diagrams;
  for (size_t i = 0; i < diagrams.size(); ++i) g.names.push_back(canonical_name(i));
  const size_t n = diagrams.size();
  g.edge.assign(n, std::vector<IntersectionResult>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) g.edge[i][j] = intersection_type(diagrams[i], diagrams[j]);
  return g;
}

std::vector<std::vector<int>> IntersectionGraph::connected_components() const {
  const int n = static_cast<int>(nodes.size());
  PlainUnionFind uf(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge[static_cast<size_t>(i)][static_cast<size_t>(j)].nonempty) uf.unite(i, j);
  std::map<int, std::vector<int>> by_root;
  for (int i = 0; i < n; ++i) by_root[uf.find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const std::vector<int>& x, const std::vector<int>& y) { return x.front() < y.front(); });
  return out;
}

std::string IntersectionGraph::to_dot() const {
  std::ostringstream os;
  os << "graph intersections {\n";
  for (size_t i = 0; i < nodes.size(); ++i)
    os << "  " << names[i] << " [label=\"" << names[i] << ": " << to_string(nodes[i]) << "\"];\n";
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = i + 1; j < nodes.size(); ++j)
      if (edge[i][j].nonempty)
        os << "  " << names[i] << " -- " << names[j] << " [label=\"" << to_string(edge[i][j])
           << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace springer
