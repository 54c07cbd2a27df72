#include "bgrid/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "bgrid/errors.hpp"

namespace bgrid {

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

struct Token {
  std::string_view text;
  int line;    // 1-based
  int column;  // 1-based
};

// Whitespace-separated tokens; blank lines and lines starting with '#' are
// skipped. Keeps source positions for error reporting.
class LineReader {
 public:
  explicit LineReader(const std::string& text) : text_(text) {}

  // Tokens of the next non-empty line.
  bool next_line(std::vector<Token>& out) {
    out.clear();
    while (pos_ < text_.size()) {
      ++line_;
      std::size_t eol = text_.find('\n', pos_);
      if (eol == std::string::npos) eol = text_.size();
      std::string_view line(text_.data() + pos_, eol - pos_);
      const std::size_t line_start = pos_;
      pos_ = eol + 1;
      std::size_t i = 0;
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      if (i >= line.size() || line[i] == '#') continue;
      while (i < line.size()) {
        std::size_t j = i;
        while (j < line.size() &&
               !std::isspace(static_cast<unsigned char>(line[j])))
          ++j;
        out.push_back({line.substr(i, j - i), line_,
                       static_cast<int>(i) + 1});
        i = j;
        while (i < line.size() &&
               std::isspace(static_cast<unsigned char>(line[i])))
          ++i;
      }
      (void)line_start;
      return true;
    }
    return false;
  }

  int line() const { return line_; }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 0;
};

int parse_int(const Token& t) {
  int v = 0;
  auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (res.ec != std::errc{} || res.ptr != t.text.data() + t.text.size())
    throw ParseError(t.line, t.column,
                     "expected integer, got '" + std::string(t.text) + "'");
  return v;
}

double parse_real(const Token& t) {
  double v = 0;
  auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (res.ec != std::errc{} || res.ptr != t.text.data() + t.text.size())
    throw ParseError(t.line, t.column,
                     "expected number, got '" + std::string(t.text) + "'");
  return v;
}

void require_tokens(const std::vector<Token>& tokens, std::size_t n,
                    const char* what) {
  if (tokens.size() < n) {
    const Token& last = tokens.back();
    throw ParseError(last.line,
                     last.column + static_cast<int>(last.text.size()),
                     std::string("expected ") + what);
  }
}

int detect_base(const Token& t) {
  const int id = parse_int(t);
  if (id != 0 && id != 1)
    throw ParseError(t.line, t.column,
                     "first id must be 0 or 1, got " + std::string(t.text));
  return id;
}

}  // namespace

AnyMesh read_node_ele(const std::string& node_text,
                      const std::string& ele_text) {
  LineReader node(node_text);
  std::vector<Token> tokens;
  if (!node.next_line(tokens))
    throw ParseError(1, 1, "empty node data");
  require_tokens(tokens, 2, "point count and dimension");
  const int n_points = parse_int(tokens[0]);
  const int dim = parse_int(tokens[1]);
  if (n_points < 0)
    throw ParseError(tokens[0].line, tokens[0].column, "negative point count");
  if (dim != 2 && dim != 3)
    throw ParseError(tokens[1].line, tokens[1].column,
                     "dimension must be 2 or 3");

  std::vector<Point2> points2;
  std::vector<Point3> points3;
  int base = 0;
  for (int i = 0; i < n_points; ++i) {
    if (!node.next_line(tokens))
      throw ParseError(node.line() + 1, 1,
                       "expected " + std::to_string(n_points) +
                           " points, got " + std::to_string(i));
    require_tokens(tokens, static_cast<std::size_t>(1 + dim),
                   "point id and coordinates");
    if (i == 0) base = detect_base(tokens[0]);
    const int id = parse_int(tokens[0]);
    if (id != base + i)
      throw IndexBaseMismatch("node id " + std::to_string(id) + " at line " +
                              std::to_string(tokens[0].line) +
                              " is not consecutive from base " +
                              std::to_string(base));
    if (dim == 2)
      points2.push_back({parse_real(tokens[1]), parse_real(tokens[2])});
    else
      points3.push_back({parse_real(tokens[1]), parse_real(tokens[2]),
                         parse_real(tokens[3])});
  }

  LineReader ele(ele_text);
  if (!ele.next_line(tokens))
    throw ParseError(1, 1, "empty ele data");
  require_tokens(tokens, 2, "element count and corner count");
  const int n_elements = parse_int(tokens[0]);
  const int corners = parse_int(tokens[1]);
  if (n_elements < 0)
    throw ParseError(tokens[0].line, tokens[0].column,
                     "negative element count");
  if (corners != 3 && corners != 4)
    throw ParseError(tokens[1].line, tokens[1].column,
                     "corner count must be 3 (triangles) or 4 (tets)");
  if (corners != dim + 1)
    throw ParseError(tokens[1].line, tokens[1].column,
                     "corner count " + std::to_string(corners) +
                         " does not match dimension " + std::to_string(dim));

  auto vertex_ref = [&](const Token& t) {
    const int raw = parse_int(t);
    const int v = raw - base;
    if (raw == 0 && base == 1)
      throw IndexBaseMismatch("vertex reference 0 at line " +
                              std::to_string(t.line) +
                              " in a 1-based file");
    if (raw == n_points && base == 0)
      throw IndexBaseMismatch("vertex reference " + std::to_string(raw) +
                              " at line " + std::to_string(t.line) +
                              " looks 1-based in a 0-based file");
    return v;
  };

  std::vector<std::array<int, 3>> tris;
  std::vector<std::array<int, 4>> tets;
  int ele_base = 0;
  for (int i = 0; i < n_elements; ++i) {
    if (!ele.next_line(tokens))
      throw ParseError(ele.line() + 1, 1,
                       "expected " + std::to_string(n_elements) +
                           " elements, got " + std::to_string(i));
    require_tokens(tokens, static_cast<std::size_t>(1 + corners),
                   "element id and vertices");
    if (i == 0) ele_base = detect_base(tokens[0]);
    const int id = parse_int(tokens[0]);
    if (id != ele_base + i)
      throw IndexBaseMismatch("element id " + std::to_string(id) +
                              " at line " + std::to_string(tokens[0].line) +
                              " is not consecutive from base " +
                              std::to_string(ele_base));
    if (corners == 3)
      tris.push_back({vertex_ref(tokens[1]), vertex_ref(tokens[2]),
                      vertex_ref(tokens[3])});
    else
      tets.push_back({vertex_ref(tokens[1]), vertex_ref(tokens[2]),
                      vertex_ref(tokens[3]), vertex_ref(tokens[4])});
  }

  if (corners == 3)
    return build_tri_mesh(std::move(points2), std::move(tris));
  return build_tet_mesh(std::move(points3), std::move(tets));
}

namespace {

template <class Mesh>
NodeEleText write_node_ele_impl(const Mesh& m, int dim, int corners) {
  std::ostringstream node;
  node << m.n_points() << ' ' << dim << " 0 0\n";
  for (int i = 0; i < m.n_points(); ++i) {
    const auto& p = m.points()[i];
    node << (i + 1) << ' ' << format_double(p.x) << ' ' << format_double(p.y);
    if constexpr (std::is_same_v<Mesh, TetMesh>) node << ' '
                                                      << format_double(p.z);
    node << '\n';
  }
  std::ostringstream ele;
  ele << m.n_elements() << ' ' << corners << " 0\n";
  for (int k = 0; k < m.n_elements(); ++k) {
    ele << (k + 1);
    for (int v : m.elements()[k]) ele << ' ' << (v + 1);
    ele << '\n';
  }
  return {node.str(), ele.str()};
}

}  // namespace

NodeEleText write_node_ele(const TriMesh& m) {
  return write_node_ele_impl(m, 2, 3);
}

NodeEleText write_node_ele(const TetMesh& m) {
  return write_node_ele_impl(m, 3, 4);
}

namespace {

template <class Mesh>
std::string write_vtk_impl(const Mesh& m, const VtkCellData& data,
                           int cell_type, int corners) {
  std::ostringstream os;
  os << "# vtk DataFile Version 3.0\n"
        "bipartite mesh toolkit output\n"
        "ASCII\n"
        "DATASET UNSTRUCTURED_GRID\n";
  os << "POINTS " << m.n_points() << " double\n";
  for (const auto& p : m.points()) {
    os << format_double(p.x) << ' ' << format_double(p.y) << ' ';
    if constexpr (std::is_same_v<Mesh, TetMesh>)
      os << format_double(p.z);
    else
      os << '0';
    os << '\n';
  }
  os << "CELLS " << m.n_elements() << ' '
     << m.n_elements() * (corners + 1) << '\n';
  for (const auto& e : m.elements()) {
    os << corners;
    for (int v : e) os << ' ' << v;
    os << '\n';
  }
  os << "CELL_TYPES " << m.n_elements() << '\n';
  for (int k = 0; k < m.n_elements(); ++k) os << cell_type << '\n';
  if (data.color || data.zeta || data.eta) {
    os << "CELL_DATA " << m.n_elements() << '\n';
    if (data.color) {
      os << "SCALARS color int 1\nLOOKUP_TABLE default\n";
      for (int c : *data.color) os << c << '\n';
    }
    if (data.zeta) {
      os << "SCALARS zeta double 1\nLOOKUP_TABLE default\n";
      for (double z : *data.zeta) os << format_double(z) << '\n';
    }
    if (data.eta) {
      os << "SCALARS eta double 1\nLOOKUP_TABLE default\n";
      for (double e : *data.eta) os << format_double(e) << '\n';
    }
  }
  return os.str();
}

}  // namespace

std::string write_vtk(const TriMesh& m, const VtkCellData& data) {
  return write_vtk_impl(m, data, 5, 3);
}

std::string write_vtk(const TetMesh& m, const VtkCellData& data) {
  return write_vtk_impl(m, data, 10, 4);
}

std::string write_svg(const TriMesh& m, const std::vector<int>* color) {
  if (m.n_elements() == 0) throw EmptyMesh("svg output of an empty mesh");
  double min_x = m.points()[0].x, max_x = min_x;
  double min_y = m.points()[0].y, max_y = min_y;
  for (const auto& p : m.points()) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double extent = std::max(max_x - min_x, max_y - min_y);
  const double margin = 0.05 * extent;

  static const char* kFills[2] = {"#4477aa", "#ee6677"};
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<!-- mesh y axis points up; svg y axis points down; "
        "y coordinates are negated -->\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
     << format_double(min_x - margin) << ' '
     << format_double(0.0 - (max_y + margin)) << ' '
     << format_double(max_x - min_x + 2 * margin) << ' '
     << format_double(max_y - min_y + 2 * margin) << "\">\n";
  os << "<g stroke=\"#333333\" stroke-width=\"" << format_double(0.004 * extent)
     << "\" stroke-linejoin=\"round\">\n";
  for (int k = 0; k < m.n_elements(); ++k) {
    const char* fill = color ? kFills[(*color)[k] & 1] : "#bbbbbb";
    os << "<polygon fill=\"" << fill << "\" points=\"";
    const auto& t = m.elements()[k];
    for (int i = 0; i < 3; ++i) {
      const Point2 p = m.points()[t[i]];
      // 0.0 - y instead of -y keeps zeros positive in the output.
      os << (i ? " " : "") << format_double(p.x) << ','
         << format_double(0.0 - p.y);
    }
    os << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace bgrid
