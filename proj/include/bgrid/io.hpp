#ifndef BGRID_IO_HPP
#define BGRID_IO_HPP

#include <string>
#include <variant>
#include <vector>

#include "bgrid/mesh.hpp"

namespace bgrid {

using AnyMesh = std::variant<TriMesh, TetMesh>;

// node text: "<#points> <dim 2|3> [#attrs] [#markers]" then one point per
// line, "<id> <x> <y> [<z>]", extra columns ignored. ele text:
// "<#elements> <3|4> [#attrs]" then "<id> <v...>". Ids may be 0- or 1-based,
// detected from the first id; blank and '#'-comment lines are skipped.
// Throws ParseError, IndexBaseMismatch; build errors propagate.
AnyMesh read_node_ele(const std::string& node_text,
                      const std::string& ele_text);

struct NodeEleText {
  std::string node, ele;
};

// 1-based ids, no attribute columns, coordinates as shortest round-trip
// decimals, so read_node_ele(write_node_ele(m)) reproduces m exactly.
NodeEleText write_node_ele(const TriMesh& m);
NodeEleText write_node_ele(const TetMesh& m);

// Optional per-element scalars for VTK output; pointers may be null and must
// otherwise address vectors of n_elements() values.
struct VtkCellData {
  const std::vector<int>* color = nullptr;
  const std::vector<double>* zeta = nullptr;
  const std::vector<double>* eta = nullptr;
};

// Legacy ASCII unstructured grid, cell type 5 (triangle) or 10 (tet).
std::string write_vtk(const TriMesh& m, const VtkCellData& data = {});
std::string write_vtk(const TetMesh& m, const VtkCellData& data = {});

// 2-D only. Fitted viewBox with a 5% margin; the y axis is flipped to match
// svg screen coordinates (noted by a comment in the file); colors 0 and 1
// map to two fixed fills. Throws EmptyMesh when there is nothing to draw.
std::string write_svg(const TriMesh& m,
                      const std::vector<int>* color = nullptr);

// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

}  // namespace bgrid

#endif
