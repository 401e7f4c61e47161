#include "springer/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "springer/bijections.hpp"
#include "springer/flag_map.hpp"
#include "springer/json_io.hpp"
#include "springer/rng.hpp"
#include "springer/svg.hpp"
#include "springer/verify.hpp"

namespace springer {

namespace {

struct Shape {
  int p = 0, q = 0;  // (p, q), p >= q >= 1
  int n() const { return p + q; }
};

Shape parse_shape(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("shape must be of the form p,q (e.g. 5,3)");
  Shape s;
  try {
    s.p = std::stoi(text.substr(0, comma));
    s.q = std::stoi(text.substr(comma + 1));
  } catch (...) {
    throw std::invalid_argument("shape must be of the form p,q (e.g. 5,3)");
  }
  if (s.p < s.q || s.q < 1) throw std::invalid_argument("shape parts must satisfy p >= q >= 1");
  return s;
}

Json read_json_input(const std::string& path) {
  if (path == "-" || path.empty()) {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return Json::parse(buffer.str());
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  return Json::parse(in);
}

void write_file(const std::string& path, const std::string& content, std::ostream& out) {
  if (path == "-" || path.empty()) {
    out << content;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot open output file: " + path);
  f << content;
}

Flavor parse_flavor(const std::string& name) {
  if (name == "D") return Flavor::D;
  if (name == "C") return Flavor::C;
  throw std::invalid_argument("flavor must be D or C");
}

std::vector<CupDiagram> cup_diagrams_of_shape(const Shape& s) {
  if (s.n() % 2 != 0) throw std::invalid_argument("cup diagrams need an even cell count");
  const int m = s.n() / 2;
  if (!(s.q == m || s.q % 2 == 1)) throw std::invalid_argument("shape is not type-D admissible");
  return enumerate_cup_diagrams(m, s.q / 2);
}

int cmd_enumerate(const Shape& shape, const std::string& what, const std::string& parity_str,
                  std::optional<std::string> flavor_str, bool json_out, std::ostream& out) {
  std::optional<Parity> parity_filter;
  if (parity_str == "even") parity_filter = Parity::even;
  else if (parity_str == "odd") parity_filter = Parity::odd;
  else if (!parity_str.empty()) throw std::invalid_argument("parity must be even or odd");

  Json items = Json::array();
  std::vector<std::string> lines;
  if (what == "cups") {
    for (const auto& d : cup_diagrams_of_shape(shape)) {
      if (parity_filter && parity(d) != *parity_filter) continue;
      lines.push_back(to_string(d));
      Json j = to_json(d);
      j["text"] = to_string(d);
      items.push_back(std::move(j));
    }
  } else if (what == "adt" || what == "signed") {
    Partition p({shape.p, shape.q});
    Flavor flavor;
    if (flavor_str)
      flavor = parse_flavor(*flavor_str);
    else if (is_admissible(p, Flavor::D))
      flavor = Flavor::D;
    else
      flavor = Flavor::C;
    std::vector<SignedDominoTableau> tabs =
        what == "adt" ? enumerate_adt(p, flavor) : enumerate_signed(p, flavor, parity_filter);
    for (const auto& t : tabs) {
      lines.push_back(to_string(t));
      items.push_back(to_json(t));
    }
  } else {
    throw std::invalid_argument("--what must be cups, adt or signed");
  }
  if (json_out) {
    out << Json{{"count", items.size()}, {"items", items}}.dump(2) << "\n";
  } else {
    for (const auto& line : lines) out << line << "\n";
    out << "count: " << lines.size() << "\n";
  }
  return 0;
}

int cmd_biject(const std::string& mode, const std::string& input, const std::string& diagram_text,
               std::ostream& out) {
  Json result;
  if (mode == "psi") {
    StandardYoungTableau t = syt_from_json(read_json_input(input));
    CupDiagram d = psi(t);
    result = to_json(d);
    result["text"] = to_string(d);
  } else if (mode == "Psi") {
    SignedDominoTableau t = tableau_from_json(read_json_input(input));
    CupDiagram d = Psi(t);
    result = to_json(d);
    result["text"] = to_string(d);
  } else if (mode == "Psi-inv") {
    CupDiagram d = diagram_text.empty() ? cup_diagram_from_json(read_json_input(input))
                                        : parse_cup_diagram(diagram_text);
    result = to_json(Psi_inverse(d));
  } else if (mode == "d-to-c") {
    result = to_json(d_to_c(tableau_from_json(read_json_input(input))));
  } else {
    throw std::invalid_argument("biject mode must be one of --psi --Psi --Psi-inv --d-to-c");
  }
  out << result.dump(2) << "\n";
  return 0;
}

int cmd_intersect(const Shape& shape, const std::string& pairs, bool oracle,
                  const std::string& dot_file, bool json_out, std::ostream& out,
                  std::ostream& err) {
  std::vector<CupDiagram> diagrams = cup_diagrams_of_shape(shape);
  IntersectionGraph graph = intersection_graph(diagrams);

  if (oracle) {
    for (size_t i = 0; i < diagrams.size(); ++i)
      for (size_t j = i; j < diagrams.size(); ++j) {
        CrossCheckReport rep = oracle_cross_check(diagrams[i], diagrams[j]);
        if (!rep.ok) {
          err << "oracle mismatch: " << rep.mismatch << "\n";
          return 1;
        }
      }
  }
  if (!dot_file.empty()) write_file(dot_file, graph.to_dot(), out);

  if (pairs == "all" || pairs.empty()) {
    if (json_out) {
      out << to_json(graph).dump(2) << "\n";
    } else {
      for (size_t i = 0; i < diagrams.size(); ++i)
        out << graph.names[i] << " = " << to_string(diagrams[i]) << "\n";
      for (size_t i = 0; i < diagrams.size(); ++i)
        for (size_t j = i; j < diagrams.size(); ++j)
          out << graph.names[i] << " " << graph.names[j] << " -> "
              << to_string(graph.edge[i][j]) << "\n";
      if (oracle) out << "oracle: all pairs agree\n";
    }
    return 0;
  }

  auto comma = pairs.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("--pairs expects 'all' or two names like a,c");
  std::string name_a = pairs.substr(0, comma), name_b = pairs.substr(comma + 1);
  auto index_of = [&](const std::string& name) -> size_t {
    for (size_t i = 0; i < graph.names.size(); ++i)
      if (graph.names[i] == name) return i;
    throw std::invalid_argument("unknown diagram name: " + name);
  };
  size_t i = index_of(name_a), j = index_of(name_b);
  if (json_out) {
    Json result{{"a", name_a}, {"b", name_b}, {"result", to_json(graph.edge[i][j])}};
    if (oracle) result["oracle"] = to_json(solve(diagrams[i], diagrams[j], SphereConvention::definition));
    out << result.dump(2) << "\n";
  } else {
    out << name_a << " " << name_b << " -> " << to_string(graph.edge[i][j]) << "\n";
    if (oracle) {
      SolveResult solved = solve(diagrams[i], diagrams[j], SphereConvention::definition);
      out << "oracle: " << to_json(solved).dump() << "\n";
    }
  }
  return 0;
}

int cmd_lift(const std::string& diagram_text, int samples, std::uint64_t seed, std::ostream& out) {
  CupDiagram a = parse_cup_diagram(diagram_text);
  Ambient ambient = build_ambient(a.m);
  Json sample_list = Json::array();
  for (int s = 0; s < samples; ++s) {
    std::uint64_t sample_seed = derive_seed(seed, to_string(a), static_cast<std::uint64_t>(s));
    std::vector<ProjLine> lines = sample_T_a(a, sample_seed);
    Flag flag = phi_inverse(ambient, lines);
    Json line_list = Json::array();
    for (const auto& l : lines) line_list.push_back(to_json(l));
    sample_list.push_back(Json{{"index", s}, {"lines", line_list}, {"flag", to_json(flag)}});
  }
  out << Json{{"diagram", to_string(a)},
              {"m", a.m},
              {"k", k_of(a)},
              {"seed", seed},
              {"samples", sample_list}}
             .dump(2)
      << "\n";
  return 0;
}

int cmd_spaltenstein(const std::string& flag_file, const std::string& form_name,
                     const Shape& shape, std::ostream& out) {
  Flavor flavor = parse_flavor(form_name);
  // The shape names the form's own two rows; recover (n, k) of the type-D
  // partition indexing the construction.
  int n = 0, k = 0;
  if (flavor == Flavor::D) {
    n = shape.n();
    k = shape.q;
  } else {
    n = shape.n() + 2;
    k = shape.q + 1;
  }
  FormSpec form = make_form(flavor, n, k);
  Flag flag = flag_from_json(read_json_input(flag_file));
  SpaltensteinResult result = spaltenstein(flag, form);
  Json seq = Json::array();
  for (const auto& p : result.jordan_seq) seq.push_back(p.parts);
  out << Json{{"tableau", to_json(result.tableau)}, {"jordan_sequence", seq}}.dump(2) << "\n";
  return 0;
}

int cmd_verify(const Shape& shape, int theorem, int samples, std::uint64_t seed, bool json_out,
               std::ostream& out) {
  std::vector<CupDiagram> diagrams = cup_diagrams_of_shape(shape);
  std::vector<VerifyReport> reports;
  for (const auto& a : diagrams) {
    if (theorem == 0 || theorem == 1) reports.push_back(verify_component(a, samples, seed));
    if ((theorem == 0 || theorem == 2) && parity(a) == Parity::odd)
      reports.push_back(verify_theorem2(a, samples, seed));
  }
  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass;
  if (json_out) {
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(to_json(r));
    out << Json{{"pass", all_pass}, {"reports", list}}.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << (r.pass ? "PASS" : "FAIL") << " " << r.subject << " (seed " << r.seed << ")\n";
      for (const auto& e : r.entries)
        if (!e.pass)
          out << "  sample " << e.sample << ": " << e.assertion << " failed: " << e.detail << "\n";
    }
    out << (all_pass ? "all checks passed" : "FAILURES present") << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cup-diagram calculus and Springer-fiber verification"};
  app.require_subcommand(1);

  std::string shape_text, what = "cups", parity_str, flavor_str, diagram_text, input = "-";
  std::string pairs = "all", dot_file, form_name = "D", out_file = "-";
  bool json_out = false, oracle = false;
  bool mode_psi = false, mode_Psi = false, mode_Psi_inv = false, mode_d_to_c = false;
  int samples = 5, theorem = 0;
  std::uint64_t seed = 1;

  auto* enumerate = app.add_subcommand("enumerate", "List cup diagrams or domino tableaux");
  enumerate->add_option("--shape", shape_text, "two-row shape p,q")->required();
  enumerate->add_option("--what", what, "cups | adt | signed");
  enumerate->add_option("--parity", parity_str, "even | odd filter");
  enumerate->add_option("--flavor", flavor_str, "D | C (default: inferred)");
  enumerate->add_flag("--json", json_out, "machine output");

  auto* biject = app.add_subcommand("biject", "Apply psi / Psi / Psi^-1 / d-to-c");
  biject->add_flag("--psi", mode_psi, "standard tableau -> undecorated diagram");
  biject->add_flag("--Psi", mode_Psi, "signed domino tableau -> cup diagram");
  biject->add_flag("--Psi-inv", mode_Psi_inv, "cup diagram -> signed domino tableau");
  biject->add_flag("--d-to-c", mode_d_to_c, "delete the leftmost vertical domino");
  biject->add_option("--input", input, "JSON input file or - for stdin");
  biject->add_option("--diagram", diagram_text, "diagram text (for --Psi-inv)");

  auto* intersect_cmd = app.add_subcommand("intersect", "Pairwise intersection table");
  intersect_cmd->add_option("--shape", shape_text, "two-row shape p,q")->required();
  intersect_cmd->add_option("--pairs", pairs, "all or two names like a,c");
  intersect_cmd->add_flag("--oracle", oracle, "cross-check against the constraint solver");
  intersect_cmd->add_option("--dot", dot_file, "write DOT graph to file");
  intersect_cmd->add_flag("--json", json_out, "machine output");

  auto* lift = app.add_subcommand("lift", "Sample T_a points and lift them to flags");
  lift->add_option("--diagram", diagram_text, "cup diagram text")->required();
  lift->add_option("--samples", samples, "number of samples");
  lift->add_option("--seed", seed, "64-bit seed");

  auto* spalt = app.add_subcommand("spaltenstein", "Tableau of a flag");
  spalt->add_option("--flag", input, "flag JSON file or - for stdin")->required();
  spalt->add_option("--form", form_name, "D | C");
  spalt->add_option("--shape", shape_text, "shape of the form's space p,q")->required();

  auto* verify = app.add_subcommand("verify", "Run the theorem checks for a shape");
  verify->add_option("--shape", shape_text, "two-row shape p,q")->required();
  verify->add_option("--theorem", theorem, "1 or 2 (default: both)");
  verify->add_option("--samples", samples, "samples per diagram");
  verify->add_option("--seed", seed, "64-bit seed");
  verify->add_flag("--json", json_out, "machine output");

  auto* render = app.add_subcommand("render", "Render a cup diagram as SVG");
  render->add_option("--diagram", diagram_text, "cup diagram text")->required();
  render->add_option("--out", out_file, "output file or - for stdout");

  std::vector<const char*> argv;
  argv.push_back("springer");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (enumerate->parsed())
      return cmd_enumerate(parse_shape(shape_text), what, parity_str,
                           flavor_str.empty() ? std::nullopt : std::optional(flavor_str), json_out,
                           out);
    if (biject->parsed()) {
      int picked = mode_psi + mode_Psi + mode_Psi_inv + mode_d_to_c;
      if (picked != 1)
        throw std::invalid_argument("pick exactly one of --psi --Psi --Psi-inv --d-to-c");
      std::string mode = mode_psi ? "psi" : mode_Psi ? "Psi" : mode_Psi_inv ? "Psi-inv" : "d-to-c";
      return cmd_biject(mode, input, diagram_text, out);
    }
    if (intersect_cmd->parsed())
      return cmd_intersect(parse_shape(shape_text), pairs, oracle, dot_file, json_out, out, err);
    if (lift->parsed()) return cmd_lift(diagram_text, samples, seed, out);
    if (spalt->parsed()) return cmd_spaltenstein(input, form_name, parse_shape(shape_text), out);
    if (verify->parsed())
      return cmd_verify(parse_shape(shape_text), theorem, samples, seed, json_out, out);
    if (render->parsed()) {
      write_file(out_file, render_svg(parse_cup_diagram(diagram_text)), out);
      return 0;
    }
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace springer
