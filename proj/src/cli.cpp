#include "bgrid/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bgrid/bipartite.hpp"
#include "bgrid/errors.hpp"
#include "bgrid/io.hpp"
#include "bgrid/quality.hpp"
#include "bgrid/refine.hpp"
#include "bgrid/samples.hpp"

namespace bgrid {

namespace {

using json = nlohmann::ordered_json;

std::string slurp_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void spit_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << content)) throw Error("cannot write '" + path + "'");
}

// "#ELE" on a line of its own separates node data from ele data in a stream.
constexpr const char* kEleSeparator = "#ELE";
constexpr const char* kColorSeparator = "#COLOR";

std::pair<std::string, std::string> split_stream(const std::string& text) {
  std::istringstream is(text);
  std::string line, node, ele;
  bool in_ele = false;
  while (std::getline(is, line)) {
    if (!in_ele && line == kEleSeparator) {
      in_ele = true;
      continue;
    }
    (in_ele ? ele : node) += line;
    (in_ele ? ele : node) += '\n';
  }
  if (!in_ele)
    throw Error(std::string("mesh stream is missing the '") + kEleSeparator +
                "' separator line");
  return {std::move(node), std::move(ele)};
}

// Mesh argument: '-' for a node+"#ELE"+ele stream on standard input,
// otherwise a path, with or without the .node suffix.
AnyMesh load_mesh(const std::string& arg, std::istream& in) {
  if (arg == "-") {
    std::ostringstream os;
    os << in.rdbuf();
    auto [node, ele] = split_stream(os.str());
    return read_node_ele(node, ele);
  }
  std::string base = arg;
  if (base.size() > 5 && base.substr(base.size() - 5) == ".node")
    base = base.substr(0, base.size() - 5);
  return read_node_ele(slurp_file(base + ".node"), slurp_file(base + ".ele"));
}

int mesh_dim(const AnyMesh& m) {
  return std::holds_alternative<TriMesh>(m) ? 2 : 3;
}

NodeEleText to_node_ele(const AnyMesh& m) {
  return std::visit([](const auto& x) { return write_node_ele(x); }, m);
}

// '-' streams node, "#ELE", ele (and "#COLOR" plus one color per line when
// given) to out; otherwise writes <base>.node/.ele/.color files.
void write_mesh_output(const AnyMesh& m, const std::string& dest,
                       std::ostream& out,
                       const std::vector<int>* color = nullptr) {
  const NodeEleText text = to_node_ele(m);
  if (dest == "-") {
    out << text.node << kEleSeparator << '\n' << text.ele;
    if (color) {
      out << kColorSeparator << '\n';
      for (int c : *color) out << c << '\n';
    }
    return;
  }
  spit_file(dest + ".node", text.node);
  spit_file(dest + ".ele", text.ele);
  if (color) {
    std::ostringstream os;
    for (int c : *color) os << c << '\n';
    spit_file(dest + ".color", os.str());
  }
}

std::map<std::string, int> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, int> params;
  for (const auto& p : raw) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0)
      throw InvalidParam("--param expects key=value, got '" + p + "'");
    int value = 0;
    const char* begin = p.data() + eq + 1;
    const char* end = p.data() + p.size();
    auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr != end)
      throw InvalidParam("--param value in '" + p + "' is not an integer");
    if (!params.emplace(p.substr(0, eq), value).second)
      throw InvalidParam("--param key '" + p.substr(0, eq) + "' repeated");
  }
  return params;
}

// ---- check ----------------------------------------------------------------

struct CheckAnalysis {
  int dim = 2;
  json counts;
  ConformityReport conformity;
  int euler = 0;
  TwoColorResult coloring{ElementColoring{}};
  bool connected = true;
  int components = 0;
  bool char_bipartite = true;
  json offenders = json::array();
  std::string offender_noun;
};

CheckAnalysis analyze(const AnyMesh& mesh) {
  CheckAnalysis a;
  a.dim = mesh_dim(mesh);
  if (a.dim == 2) {
    const TriMesh& m = std::get<TriMesh>(mesh);
    const Classification cls = classify(m);
    a.counts = {{"points", m.n_points()},
                {"elements", m.n_elements()},
                {"edges", m.edges().size()},
                {"interior_vertices", cls.interior_vertices.size()},
                {"interior_edges", cls.interior_edges.size()}};
    a.conformity = check_conformity(m);
    a.euler = euler_characteristic(m);
    a.coloring = two_color(adjacency_graph(m));
    const IncidenceCheck2D c = characterization_check_2d(m);
    a.char_bipartite = c.bipartite;
    a.offender_noun = "vertex";
    for (const auto& [v, n] : c.offending_vertices)
      a.offenders.push_back({{"vertex", v}, {"count", n}});
  } else {
    const TetMesh& m = std::get<TetMesh>(mesh);
    const Classification cls = classify(m);
    a.counts = {{"points", m.n_points()},
                {"elements", m.n_elements()},
                {"edges", m.edges().size()},
                {"faces", m.faces().size()},
                {"interior_edges", cls.interior_edges.size()},
                {"interior_faces", cls.interior_faces.size()}};
    a.conformity = check_conformity(m);
    a.euler = euler_characteristic(m);
    a.coloring = two_color(adjacency_graph(m));
    const IncidenceCheck3D c = characterization_check_3d(m);
    a.char_bipartite = c.bipartite;
    a.offender_noun = "edge";
    for (const auto& [e, n] : c.offending_edges)
      a.offenders.push_back({{"edge", {e[0], e[1]}}, {"count", n}});
  }
  if (const auto* coloring = std::get_if<ElementColoring>(&a.coloring)) {
    a.components = coloring->n_components;
    a.connected = coloring->n_components <= 1;
  } else {
    // Component count is not part of the witness; recompute connectivity.
    const auto* m2 = std::get_if<TriMesh>(&mesh);
    const MeshGraph g = m2 ? adjacency_graph(*m2)
                           : adjacency_graph(std::get<TetMesh>(mesh));
    std::vector<char> seen(g.n, 0);
    for (int root = 0; root < g.n; ++root) {
      if (seen[root]) continue;
      ++a.components;
      std::vector<int> stack{root};
      seen[root] = 1;
      while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : g.adjacency[u])
          if (!seen[v]) {
            seen[v] = 1;
            stack.push_back(v);
          }
      }
    }
    a.connected = a.components <= 1;
  }
  return a;
}

json conformity_json(const ConformityReport& r) {
  json out = {{"ok", r.ok()}, {"violations", json::array()}};
  for (const auto& v : r.violations)
    out["violations"].push_back({{"kind", v.kind}, {"detail", v.detail}});
  return out;
}

int cmd_check(const std::string& mesh_arg, const std::string& report,
              std::istream& in, std::ostream& out) {
  const AnyMesh mesh = load_mesh(mesh_arg, in);
  const CheckAnalysis a = analyze(mesh);
  const bool bipartite = is_bipartite(a.coloring);
  const bool advisory = a.euler != 1;

  if (report == "json") {
    json j;
    j["command"] = "check";
    j["dim"] = a.dim;
    j["counts"] = a.counts;
    j["conformity"] = conformity_json(a.conformity);
    j["euler_characteristic"] = a.euler;
    j["simply_connected_proxy"] = (a.euler == 1);
    j["connected"] = a.connected;
    j["components"] = a.components;
    j["two_color"] = {{"bipartite", bipartite}};
    if (const auto* w = std::get_if<OddCycleWitness>(&a.coloring))
      j["two_color"]["odd_cycle"] = w->cycle;
    j["characterization"] = {{"bipartite", a.char_bipartite},
                             {"advisory", advisory},
                             {"offenders", a.offenders}};
    j["verdicts_agree"] = (bipartite == a.char_bipartite);
    out << j.dump(2) << '\n';
  } else {
    out << "dimension: " << a.dim << '\n';
    out << "counts:";
    for (const auto& [k, v] : a.counts.items())
      out << ' ' << k << '=' << v.dump();
    out << '\n';
    out << "conformity: "
        << (a.conformity.ok()
                ? "ok"
                : std::to_string(a.conformity.violations.size()) +
                      " violation(s)")
        << '\n';
    for (const auto& v : a.conformity.violations)
      out << "  " << v.kind << ": " << v.detail << '\n';
    out << "euler characteristic: " << a.euler
        << (advisory ? " (not 1: incidence check is advisory)" : "") << '\n';
    out << "connected: " << (a.connected ? "yes" : "no") << " ("
        << a.components << " component" << (a.components == 1 ? "" : "s")
        << ")\n";
    if (bipartite) {
      out << "two-coloring: bipartite\n";
    } else {
      out << "two-coloring: not bipartite, odd cycle:";
      for (int k : std::get<OddCycleWitness>(a.coloring).cycle) out << ' ' << k;
      out << '\n';
    }
    out << "even-incidence check" << (advisory ? " (advisory)" : "") << ": "
        << (a.char_bipartite ? "bipartite" : "not bipartite") << '\n';
    for (const auto& o : a.offenders) {
      out << "  " << a.offender_noun << ' ';
      if (o.contains("vertex"))
        out << o["vertex"].get<int>();
      else
        out << '(' << o["edge"][0].get<int>() << ',' << o["edge"][1].get<int>()
            << ')';
      out << ": " << o["count"].get<int>() << " incident elements\n";
    }
  }
  return bipartite ? 0 : 1;
}

// ---- color ----------------------------------------------------------------

int cmd_color(const std::string& mesh_arg, const std::string& dest,
              const std::string& format, std::istream& in, std::ostream& out,
              std::ostream& err) {
  const AnyMesh mesh = load_mesh(mesh_arg, in);
  const TwoColorResult result = std::visit(
      [](const auto& m) { return two_color(adjacency_graph(m)); }, mesh);
  if (const auto* w = std::get_if<OddCycleWitness>(&result)) {
    err << "not bipartite; odd cycle:";
    for (int k : w->cycle) err << ' ' << k;
    err << '\n';
    return 1;
  }
  const auto& coloring = std::get<ElementColoring>(result);
  if (format == "vtk") {
    VtkCellData data;
    data.color = &coloring.color;
    const std::string text = std::visit(
        [&](const auto& m) { return write_vtk(m, data); }, mesh);
    if (dest == "-")
      out << text;
    else
      spit_file(dest.size() > 4 && dest.substr(dest.size() - 4) == ".vtk"
                    ? dest
                    : dest + ".vtk",
                text);
  } else {
    write_mesh_output(mesh, dest, out, &coloring.color);
  }
  return 0;
}

// ---- refine ---------------------------------------------------------------

int cmd_refine(const std::string& mesh_arg, const std::string& scheme,
               int levels, bool use_incenter, bool verify_bounds,
               const std::string& dest, std::istream& in, std::ostream& out,
               std::ostream& err) {
  if (levels < 1) throw InvalidParam("--levels must be >= 1");
  AnyMesh mesh = load_mesh(mesh_arg, in);

  if (mesh_dim(mesh) == 2) {
    if (verify_bounds)
      throw InvalidParam("--verify-bounds applies to tetrahedral meshes");
    TriMesh m = std::get<TriMesh>(mesh);
    if (scheme == "red") {
      if (use_incenter)
        throw InvalidParam("--incenter applies to the bipartite scheme");
      m = red_refine_2d(m, levels).first;
    } else {
      GridOptions opts;
      opts.use_incenter = use_incenter;
      if (use_incenter)
        err << "note: incenter interior points are experimental; children are"
               " no longer equal-area\n";
      for (int l = 0; l < levels; ++l) m = bipartite_refine_2d(m, opts).first;
    }
    write_mesh_output(AnyMesh(std::move(m)), dest, out);
    return 0;
  }

  if (scheme == "red")
    throw InvalidParam("red refinement is 2-D only; tet meshes support "
                       "--scheme bipartite");
  if (use_incenter)
    throw InvalidParam("--incenter applies to 2-D meshes");
  TetMesh m = std::get<TetMesh>(mesh);
  bool bounds_ok = true;
  double worst_ratio = 0;
  for (int l = 0; l < levels; ++l) {
    if (verify_bounds)
      for (int k = 0; k < m.n_elements(); ++k) {
        const BoundReport r = verify_deterioration_bound(m.element_geometry(k));
        bounds_ok = bounds_ok && r.all_pass();
        worst_ratio = std::max(worst_ratio, r.worst_eta_ratio);
      }
    m = bipartite_refine_3d(m).first;
  }
  write_mesh_output(AnyMesh(std::move(m)), dest, out);
  if (verify_bounds) {
    err << "deterioration bound: "
        << (bounds_ok ? "ok" : "VIOLATED")
        << ", worst eta ratio " << format_double(worst_ratio) << '\n';
    if (!bounds_ok) return 1;
  }
  return 0;
}

// ---- quality --------------------------------------------------------------

json histogram_json(const Histogram& h) {
  json edges = json::array();
  for (double e : h.edges)
    edges.push_back(std::isinf(e) ? json("inf") : json(e));
  return {{"edges", edges}, {"counts", h.counts}};
}

int cmd_quality(const std::string& mesh_arg, bool verify_bounds,
                const std::string& report, std::istream& in,
                std::ostream& out) {
  const AnyMesh mesh = load_mesh(mesh_arg, in);
  if (verify_bounds && mesh_dim(mesh) == 2)
    throw InvalidParam("--verify-bounds applies to tetrahedral meshes");
  const MeshQualityReport q = std::visit(
      [](const auto& m) { return mesh_quality(m); }, mesh);

  bool bounds_pass = true;
  json bounds;
  if (verify_bounds) {
    const TetMesh& m = std::get<TetMesh>(mesh);
    std::map<std::string, InequalityCheck> worst_shape;
    bool shape_pass = true;
    bool det_pass = true;
    double worst_ratio = 0;
    InequalityCheck worst_det[2];
    bool det_init = false;
    for (int k = 0; k < m.n_elements(); ++k) {
      const Tetrahedron t = m.element_geometry(k);
      for (const auto& c : verify_shape_inequalities(t).checks) {
        shape_pass = shape_pass && c.pass;
        auto it = worst_shape.find(c.name);
        if (it == worst_shape.end() || c.slack < it->second.slack)
          worst_shape.insert_or_assign(c.name, c);
      }
      const BoundReport det = verify_deterioration_bound(t);
      det_pass = det_pass && det.all_pass();
      worst_ratio = std::max(worst_ratio, det.worst_eta_ratio);
      for (int i = 0; i < 2; ++i)
        if (!det_init || det.checks[i].slack < worst_det[i].slack)
          worst_det[i] = det.checks[i];
      det_init = true;
    }
    bounds_pass = shape_pass && det_pass;
    json shape = json::array();
    for (const auto& [name, c] : worst_shape)
      shape.push_back({{"name", c.name},
                       {"lhs", c.lhs},
                       {"rhs", c.rhs},
                       {"min_slack", c.slack},
                       {"pass", c.pass}});
    json det = json::array();
    for (int i = 0; i < 2; ++i)
      det.push_back({{"name", worst_det[i].name},
                     {"lhs", worst_det[i].lhs},
                     {"rhs", worst_det[i].rhs},
                     {"min_slack", worst_det[i].slack},
                     {"pass", worst_det[i].pass}});
    bounds = {{"all_pass", bounds_pass},
              {"shape", shape},
              {"deterioration", det},
              {"worst_eta_ratio", worst_ratio}};
  }

  if (report == "json") {
    json j;
    j["command"] = "quality";
    j["dim"] = q.dim;
    j["elements"] = (q.dim == 2 ? q.per_triangle.size() : q.per_tet.size());
    j["h"] = q.h;
    j["zeta_max"] = q.zeta_max;
    j["zeta_mean"] = q.zeta_mean;
    if (q.dim == 3) {
      j["eta_min"] = q.eta_min;
      j["eta_mean"] = q.eta_mean;
    }
    j["zeta_histogram"] = histogram_json(q.zeta_hist);
    if (q.dim == 3) j["eta_histogram"] = histogram_json(q.eta_hist);
    if (verify_bounds) j["bounds"] = bounds;
    j["glossary"] = {
        {"zeta", "diameter over insphere diameter, >= sqrt(3) (2-D), >= "
                 "sqrt(6) (3-D)"},
        {"eta", "12 (3 vol)^(2/3) / sum of squared edges, in (0,1], 1 iff "
                "regular"},
        {"theta", "3 inradius / circumradius, in (0,1]"},
        {"eta_deterioration_factor", kEtaDeteriorationFactor},
        {"zeta_deterioration_const", kZetaDeteriorationConst},
        {"iterated_eta_lower_factor", kIteratedEtaLowerFactor},
        {"iterated_regularity_const", kIteratedRegularityConst}};
    out << j.dump(2) << '\n';
  } else {
    out << "dimension: " << q.dim << '\n';
    out << "elements: "
        << (q.dim == 2 ? q.per_triangle.size() : q.per_tet.size()) << '\n';
    out << "mesh size h: " << format_double(q.h) << '\n';
    out << "zeta max: " << format_double(q.zeta_max)
        << "  mean: " << format_double(q.zeta_mean) << '\n';
    if (q.dim == 3)
      out << "eta min: " << format_double(q.eta_min)
          << "  mean: " << format_double(q.eta_mean) << '\n';
    auto print_hist = [&](const char* name, const Histogram& h) {
      out << name << " histogram:\n";
      for (std::size_t i = 0; i < h.counts.size(); ++i)
        out << "  [" << format_double(h.edges[i]) << ", "
            << format_double(h.edges[i + 1]) << "): " << h.counts[i] << '\n';
    };
    print_hist("zeta", q.zeta_hist);
    if (q.dim == 3) print_hist("eta", q.eta_hist);
    if (verify_bounds)
      out << "bounds: " << (bounds_pass ? "all pass" : "VIOLATED") << '\n';
  }
  return bounds_pass ? 0 : 1;
}

// ---- sample / export ------------------------------------------------------

int cmd_sample(const std::string& name, const std::vector<std::string>& raw,
               const std::string& dest, std::ostream& out) {
  const AnyMesh mesh = sample_mesh(name, parse_params(raw));
  write_mesh_output(mesh, dest, out);
  return 0;
}

int cmd_export(const std::string& mesh_arg, const std::string& format,
               const std::string& dest, std::istream& in, std::ostream& out) {
  const AnyMesh mesh = load_mesh(mesh_arg, in);
  std::string text;
  std::string suffix;
  if (format == "vtk") {
    text = std::visit([](const auto& m) { return write_vtk(m); }, mesh);
    suffix = ".vtk";
  } else {
    if (mesh_dim(mesh) != 2)
      throw InvalidParam("svg output is 2-D only");
    const TriMesh& m = std::get<TriMesh>(mesh);
    const TwoColorResult r = two_color(adjacency_graph(m));
    const auto* coloring = std::get_if<ElementColoring>(&r);
    text = write_svg(m, coloring ? &coloring->color : nullptr);
    suffix = ".svg";
  }
  if (dest == "-")
    out << text;
  else
    spit_file(dest.size() >= suffix.size() &&
                      dest.substr(dest.size() - suffix.size()) == suffix
                  ? dest
                  : dest + suffix,
              text);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"bipartite triangulation and tet mesh toolkit"};
  app.require_subcommand(1);

  std::string mesh_arg = "-", dest = "-", report = "text";
  std::string scheme, format, name;
  int levels = 1;
  bool use_incenter = false, verify_bounds = false;

  auto add_mesh_arg = [&](CLI::App* cmd) {
    cmd->add_option("mesh", mesh_arg,
                    "mesh path (base or .node file), or - for stdin");
  };
  auto add_report = [&](CLI::App* cmd) {
    cmd->add_option("--report", report, "report format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* check = app.add_subcommand(
      "check", "conformity, Euler characteristic and 2-colorability");
  add_mesh_arg(check);
  add_report(check);

  CLI::App* color = app.add_subcommand(
      "color", "write the mesh with its element 2-coloring");
  add_mesh_arg(color);
  color->add_option("-o,--output", dest, "output base path, or -");
  color->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"node-ele", "vtk"}))
      ->default_val("node-ele");

  CLI::App* refine = app.add_subcommand("refine", "refine a mesh");
  add_mesh_arg(refine);
  refine->add_option("--scheme", scheme, "refinement scheme")
      ->check(CLI::IsMember({"bipartite", "red"}))
      ->required();
  refine->add_option("--levels", levels, "number of refinement passes");
  refine->add_flag("--incenter", use_incenter,
                   "experimental: incenter interior points (2-D bipartite)");
  refine->add_flag("--verify-bounds", verify_bounds,
                   "check the deterioration bound for every parent (3-D)");
  refine->add_option("-o,--output", dest, "output base path, or -");

  CLI::App* quality = app.add_subcommand(
      "quality", "per-element and aggregate quality metrics");
  add_mesh_arg(quality);
  quality->add_flag("--verify-bounds", verify_bounds,
                    "check shape and deterioration bounds per element (3-D)");
  add_report(quality);

  CLI::App* sample = app.add_subcommand("sample", "generate a built-in mesh");
  sample->add_option("name", name, "generator name")->required();
  std::vector<std::string> raw_params;
  sample->add_option("--param", raw_params, "generator parameter key=value");
  sample->add_option("-o,--output", dest, "output base path, or -");

  CLI::App* exp = app.add_subcommand("export", "write VTK or SVG");
  add_mesh_arg(exp);
  exp->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"vtk", "svg"}))
      ->required();
  exp->add_option("-o,--output", dest, "output path, or -");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(mesh_arg, report, in, out);
    if (color->parsed())
      return cmd_color(mesh_arg, dest, format, in, out, err);
    if (refine->parsed())
      return cmd_refine(mesh_arg, scheme, levels, use_incenter, verify_bounds,
                        dest, in, out, err);
    if (quality->parsed())
      return cmd_quality(mesh_arg, verify_bounds, report, in, out);
    if (sample->parsed()) return cmd_sample(name, raw_params, dest, out);
    if (exp->parsed()) return cmd_export(mesh_arg, format, dest, in, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace bgrid
