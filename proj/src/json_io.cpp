#include "springer/json_io.hpp"

#include <stdexcept>

namespace springer {

Json to_json(const GaussianRational& z) { return format_scalar(z); }

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (const auto& row : format_matrix_rows(m)) rows.push_back(row);
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : j) {
    std::vector<std::string> r;
    for (const auto& cell : row) r.push_back(cell.get<std::string>());
    rows.push_back(std::move(r));
  }
  return parse_matrix_rows(rows);
}

Json to_json(const Subspace& s) {
  return Json{{"ambient", s.ambient_dim()}, {"basis", to_json(s.basis())}};
}

Subspace subspace_from_json(const Json& j) {
  Index ambient = j.at("ambient").get<Index>();
  Matrix basis = matrix_from_json(j.at("basis"));
  if (basis.rows() == 0) return Subspace::zero(ambient);
  if (basis.cols() != ambient) throw std::invalid_argument("subspace: basis/ambient mismatch");
  return Subspace::span(std::move(basis));
}

Json to_json(const CupDiagram& d) {
  Json cups = Json::array();
  for (const auto& c : d.cups) cups.push_back(Json{{"from", c.from}, {"to", c.to}, {"dot", c.dot}});
  Json rays = Json::array();
  for (const auto& r : d.rays) rays.push_back(Json{{"at", r.at}, {"dot", r.dot}});
  return Json{{"m", d.m}, {"cups", cups}, {"rays", rays}};
}

CupDiagram cup_diagram_from_json(const Json& j) {
  CupDiagram d;
  d.m = j.at("m").get<int>();
  for (const auto& c : j.at("cups"))
    d.cups.push_back({c.at("from").get<int>(), c.at("to").get<int>(), c.at("dot").get<bool>()});
  for (const auto& r : j.at("rays"))
    d.rays.push_back({r.at("at").get<int>(), r.at("dot").get<bool>()});
  std::sort(d.cups.begin(), d.cups.end(),
            [](const CupDiagram::Cup& a, const CupDiagram::Cup& b) { return a.from < b.from; });
  std::sort(d.rays.begin(), d.rays.end(),
            [](const CupDiagram::Ray& a, const CupDiagram::Ray& b) { return a.at < b.at; });
  validate(d);
  return d;
}

Json to_json(const SignedDominoTableau& t) {
  Json dominoes = Json::array();
  for (const auto& d : t.dominoes) {
    Json entry{{"label", d.label},
               {"cells", Json::array({Json::array({d.cell_a.first, d.cell_a.second}),
                                      Json::array({d.cell_b.first, d.cell_b.second})})}};
    auto it = t.signs.find(d.label);
    if (it != t.signs.end()) entry["sign"] = std::string(1, sign_char(it->second));
    dominoes.push_back(std::move(entry));
  }
  return Json{{"shape", t.shape.parts}, {"flavor", flavor_name(t.flavor)}, {"dominoes", dominoes}};
}

SignedDominoTableau tableau_from_json(const Json& j) {
  SignedDominoTableau t;
  std::string flavor = j.at("flavor").get<std::string>();
  if (flavor == "D")
    t.flavor = Flavor::D;
  else if (flavor == "C")
    t.flavor = Flavor::C;
  else
    throw std::invalid_argument("tableau: flavor must be D or C");
  t.shape = Partition(j.at("shape").get<std::vector<int>>());
  for (const auto& entry : j.at("dominoes")) {
    Domino d;
    d.label = entry.at("label").get<int>();
    const auto& cells = entry.at("cells");
    if (cells.size() != 2) throw std::invalid_argument("tableau: domino needs two cells");
    d.cell_a = {cells[0][0].get<int>(), cells[0][1].get<int>()};
    d.cell_b = {cells[1][0].get<int>(), cells[1][1].get<int>()};
    if (d.cell_b < d.cell_a) std::swap(d.cell_a, d.cell_b);
    if (entry.contains("sign")) {
      std::string s = entry.at("sign").get<std::string>();
      if (s != "+" && s != "-") throw std::invalid_argument("tableau: bad sign");
      t.signs[d.label] = (s == "+") ? Sign::plus : Sign::minus;
    }
    t.dominoes.push_back(d);
  }
  std::sort(t.dominoes.begin(), t.dominoes.end(),
            [](const Domino& a, const Domino& b) { return a.label < b.label; });
  if (t.m() > 0) validate_tableau(t);
  return t;
}

Json to_json(const StandardYoungTableau& t) {
  return Json{{"shape", t.shape().parts}, {"rows", Json::array({t.row1, t.row2})}};
}

StandardYoungTableau syt_from_json(const Json& j) {
  StandardYoungTableau t;
  const auto& rows = j.at("rows");
  if (rows.size() >= 1) t.row1 = rows[0].get<std::vector<int>>();
  if (rows.size() >= 2) t.row2 = rows[1].get<std::vector<int>>();
  if (rows.size() > 2) throw std::invalid_argument("syt: more than two rows");
  if (!valid_syt(t)) throw std::invalid_argument("syt: invalid tableau");
  return t;
}

Json to_json(const ProjLine& l) {
  return Json::array({format_scalar(l.alpha), format_scalar(l.beta)});
}

ProjLine proj_line_from_json(const Json& j) {
  if (j.size() != 2) throw std::invalid_argument("proj line: need [alpha, beta]");
  return parse_proj_line(j[0].get<std::string>(), j[1].get<std::string>());
}

Json to_json(const Flag& flag) {
  Json spaces = Json::array();
  for (const auto& s : flag.spaces) spaces.push_back(to_json(s.basis()));
  return spaces;
}

Flag flag_from_json(const Json& j) {
  Flag flag;
  Index ambient = -1;
  for (const auto& space : j) {
    Matrix basis = matrix_from_json(space);
    if (ambient < 0) ambient = basis.cols();
    if (basis.cols() != ambient) throw std::invalid_argument("flag: ambient mismatch");
    flag.spaces.push_back(Subspace::span(std::move(basis)));
  }
  validate_flag_shape(flag);
  return flag;
}

Json to_json(const IntersectionResult& r) {
  if (!r.nonempty) return Json{{"empty", true}};
  return Json{{"empty", false}, {"circ", r.circ}};
}

Json to_json(const CircleDiagram& c) {
  Json components = Json::array();
  for (const auto& comp : c.components)
    components.push_back(Json{{"vertices", comp.vertices},
                              {"closed", comp.closed},
                              {"dots", comp.dots},
                              {"propagating", comp.propagating}});
  return Json{{"components", components}};
}

Json to_json(const IntersectionGraph& g) {
  Json nodes = Json::array();
  for (size_t i = 0; i < g.nodes.size(); ++i)
    nodes.push_back(Json{{"name", g.names[i]}, {"diagram", to_string(g.nodes[i])}});
  Json edges = Json::array();
  for (size_t i = 0; i < g.nodes.size(); ++i)
    for (size_t j = i; j < g.nodes.size(); ++j)
      edges.push_back(Json{{"a", g.names[i]}, {"b", g.names[j]}, {"result", to_json(g.edge[i][j])}});
  return Json{{"nodes", nodes}, {"edges", edges}};
}

Json to_json(const SolveResult& r) {
  if (!r.consistent) return Json{{"consistent", false}};
  Json witness = Json::array();
  for (size_t v = 1; v < r.witness.size(); ++v) witness.push_back(r.witness[v]);
  return Json{{"consistent", true}, {"free", r.free_count}, {"witness", witness}};
}

Json to_json(const VerifyReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json entry{{"sample", e.sample}, {"assertion", e.assertion}, {"pass", e.pass}};
    if (!e.pass) entry["counterexample"] = e.detail;
    entries.push_back(std::move(entry));
  }
  return Json{{"subject", r.subject},
              {"seed", r.seed},
              {"pass", r.pass},
              {"vacuous", r.vacuous},
              {"checks", entries}};
}

}  // namespace springer
