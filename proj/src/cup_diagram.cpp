#include "springer/cup_diagram.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace springer {

int CupDiagram::dot_count() const {
  int d = 0;
  for (const auto& c : cups) d += c.dot;
  for (const auto& r : rays) d += r.dot;
  return d;
}

Parity parity(const CupDiagram& d) { return parity_of_dots(d.dot_count()); }

namespace {

bool nested_inside_some_cup(const CupDiagram& d, const CupDiagram::Cup& c) {
  for (const auto& other : d.cups)
    if (other.from < c.from && c.to < other.to) return true;
  return false;
}

bool ray_right_of(const CupDiagram& d, int vertex) {
  for (const auto& r : d.rays)
    if (r.at > vertex) return true;
  return false;
}

}  // namespace

void validate(const CupDiagram& d) {
  if (d.m < 0) throw std::invalid_argument("cup diagram: negative m");
  std::vector<int> cover(static_cast<size_t>(d.m) + 1, 0);
  auto touch = [&](int v) {
    if (v < 1 || v > d.m) throw std::invalid_argument("cup diagram: vertex out of range");
    if (++cover[static_cast<size_t>(v)] > 1)
      throw std::invalid_argument("cup diagram: vertex used twice");
  };
  for (const auto& c : d.cups) {
    if (c.from >= c.to) throw std::invalid_argument("cup diagram: cup endpoints not increasing");
    touch(c.from);
    touch(c.to);
  }
  for (const auto& r : d.rays) touch(r.at);
  for (int v = 1; v <= d.m; ++v)
    if (!cover[static_cast<size_t>(v)]) throw std::invalid_argument("cup diagram: uncovered vertex");
  for (size_t i = 0; i + 1 < d.cups.size(); ++i)
    if (d.cups[i].from >= d.cups[i + 1].from)
      throw std::invalid_argument("cup diagram: cups not sorted");
  for (size_t i = 0; i + 1 < d.rays.size(); ++i)
    if (d.rays[i].at >= d.rays[i + 1].at) throw std::invalid_argument("cup diagram: rays not sorted");
  // Non-crossing: any two cups are nested or disjoint.
  for (const auto& a : d.cups)
    for (const auto& b : d.cups) {
      if (a.from >= b.from) continue;
      bool disjoint = a.to < b.from;
      bool nested = b.to < a.to;
      if (!disjoint && !nested) throw std::invalid_argument("cup diagram: crossing cups");
    }
  // No ray strictly inside a cup.
  for (const auto& r : d.rays)
    for (const auto& c : d.cups)
      if (c.from < r.at && r.at < c.to)
        throw std::invalid_argument("cup diagram: ray inside a cup");
  // Dot accessibility.
  for (const auto& c : d.cups) {
    if (!c.dot) continue;
    if (nested_inside_some_cup(d, c)) throw std::invalid_argument("cup diagram: dot on nested cup");
    if (ray_right_of(d, c.to))
      throw std::invalid_argument("cup diagram: dot on cup left of a ray");
  }
  for (const auto& r : d.rays)
    if (r.dot && ray_right_of(d, r.at))
      throw std::invalid_argument("cup diagram: dot on non-rightmost ray");
}

int k_of(const CupDiagram& d) {
  return d.rays.empty() ? 2 * d.cup_count() : 2 * d.cup_count() + 1;
}

namespace {

struct Base {
  std::vector<std::pair<int, int>> cups;
  std::vector<int> rays;
};

void gen_bases(int m, int c, int vertex, std::vector<int>& stack, Base& current,
               std::vector<Base>& out) {
  if (vertex > m) {
    if (stack.empty() && static_cast<int>(current.cups.size()) == c) out.push_back(current);
    return;
  }
  // Open a cup.
  if (static_cast<int>(current.cups.size()) + static_cast<int>(stack.size()) < c) {
    stack.push_back(vertex);
    gen_bases(m, c, vertex + 1, stack, current, out);
    stack.pop_back();
  }
  // Close the innermost open cup.
  if (!stack.empty()) {
    int from = stack.back();
    stack.pop_back();
    current.cups.emplace_back(from, vertex);
    gen_bases(m, c, vertex + 1, stack, current, out);
    current.cups.pop_back();
    stack.push_back(from);
  }
  // Ray; only allowed outside every cup.
  if (stack.empty()) {
    current.rays.push_back(vertex);
    gen_bases(m, c, vertex + 1, stack, current, out);
    current.rays.pop_back();
  }
}

}  // namespace

std::vector<CupDiagram> enumerate_cup_diagrams(int m, int c) {
  if (c < 0 || 2 * c > m) throw std::invalid_argument("enumerate_cup_diagrams: bad cup count");
  std::vector<Base> bases;
  {
    std::vector<int> stack;
    Base current;
    gen_bases(m, c, 1, stack, current, bases);
  }

  struct Entry {
    CupDiagram diagram;
    size_t base_index;
    std::vector<int> dotted;  // leftmost vertices of dotted components
  };
  std::vector<Entry> entries;
  for (size_t bi = 0; bi < bases.size(); ++bi) {
    const Base& base = bases[bi];
    CupDiagram d;
    d.m = m;
    for (auto [from, to] : base.cups) d.cups.push_back({from, to, false});
    std::sort(d.cups.begin(), d.cups.end(),
              [](const CupDiagram::Cup& a, const CupDiagram::Cup& b) { return a.from < b.from; });
    for (int at : base.rays) d.rays.push_back({at, false});

    // Dottable components: non-nested cups with no ray to the right; the
    // rightmost ray.
    struct Eligible {
      bool is_cup;
      size_t index;
      int position;
    };
    std::vector<Eligible> eligible;
    for (size_t i = 0; i < d.cups.size(); ++i) {
      if (!nested_inside_some_cup(d, d.cups[i]) && !ray_right_of(d, d.cups[i].to))
        eligible.push_back({true, i, d.cups[i].from});
    }
    if (!d.rays.empty())
      eligible.push_back({false, d.rays.size() - 1, d.rays.back().at});
    std::sort(eligible.begin(), eligible.end(),
              [](const Eligible& a, const Eligible& b) { return a.position < b.position; });

    const size_t ndot = eligible.size();
    for (size_t mask = 0; mask < (size_t{1} << ndot); ++mask) {
      Entry e{d, bi, {}};
      for (size_t t = 0; t < ndot; ++t) {
        if (!(mask & (size_t{1} << t))) continue;
        if (eligible[t].is_cup)
          e.diagram.cups[eligible[t].index].dot = true;
        else
          e.diagram.rays[eligible[t].index].dot = true;
        e.dotted.push_back(eligible[t].position);
      }
      entries.push_back(std::move(e));
    }
  }

  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    int pa = a.dotted.size() % 2, pb = b.dotted.size() % 2;
    if (pa != pb) return pa < pb;  // even block first
    if (a.base_index != b.base_index) return a.base_index < b.base_index;
    if (a.dotted.size() != b.dotted.size()) return a.dotted.size() < b.dotted.size();
    return a.dotted < b.dotted;
  });

  std::vector<CupDiagram> out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    validate(e.diagram);
    out.push_back(std::move(e.diagram));
  }
  return out;
}

std::string to_string(const CupDiagram& d) {
  struct Piece {
    int pos;
    std::string text;
  };
  std::vector<Piece> pieces;
  for (const auto& c : d.cups) {
    std::ostringstream os;
    os << "(" << c.from << "," << c.to << ")" << (c.dot ? "*" : "");
    pieces.push_back({c.from, os.str()});
  }
  for (const auto& r : d.rays) {
    std::ostringstream os;
    os << "|" << r.at << (r.dot ? "*" : "");
    pieces.push_back({r.at, os.str()});
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.pos < b.pos; });
  std::string out;
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (i) out += " ";
    out += pieces[i].text;
  }
  return out;
}

CupDiagram parse_cup_diagram(const std::string& text) {
  CupDiagram d;
  std::istringstream is(text);
  std::string tok;
  int max_vertex = 0;
  while (is >> tok) {
    bool dot = false;
    if (!tok.empty() && tok.back() == '*') {
      dot = true;
      tok.pop_back();
    }
    if (tok.size() >= 2 && tok.front() == '|') {
      int at = 0;
      try {
        at = std::stoi(tok.substr(1));
      } catch (...) {
        throw std::invalid_argument("bad ray token: " + tok);
      }
      d.rays.push_back({at, dot});
      max_vertex = std::max(max_vertex, at);
    } else if (tok.size() >= 5 && tok.front() == '(' && tok.back() == ')') {
      auto comma = tok.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("bad cup token: " + tok);
      int from = 0, to = 0;
      try {
        from = std::stoi(tok.substr(1, comma - 1));
        to = std::stoi(tok.substr(comma + 1, tok.size() - comma - 2));
      } catch (...) {
        throw std::invalid_argument("bad cup token: " + tok);
      }
      d.cups.push_back({from, to, dot});
      max_vertex = std::max(max_vertex, to);
    } else {
      throw std::invalid_argument("bad diagram token: " + tok);
    }
  }
  d.m = max_vertex;
  std::sort(d.cups.begin(), d.cups.end(),
            [](const CupDiagram::Cup& a, const CupDiagram::Cup& b) { return a.from < b.from; });
  std::sort(d.rays.begin(), d.rays.end(),
            [](const CupDiagram::Ray& a, const CupDiagram::Ray& b) { return a.at < b.at; });
  validate(d);
  return d;
}

CupDiagram flip_dot(const CupDiagram& d, int vertex) {
  CupDiagram out = d;
  for (auto& c : out.cups)
    if (c.from == vertex) {
      c.dot = !c.dot;
      validate(out);
      return out;
    }
  for (auto& r : out.rays)
    if (r.at == vertex) {
      r.dot = !r.dot;
      validate(out);
      return out;
    }
  throw std::invalid_argument("flip_dot: no component starts at that vertex");
}

}  // namespace springer
