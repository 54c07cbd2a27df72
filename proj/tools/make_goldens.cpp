// Regenerates the byte-exact reference outputs under tests/golden. Run after
// any intentional change to the VTK or SVG writers:
//   make_goldens <output-dir>
#include <fstream>
#include <iostream>
#include <variant>

#include "bgrid/bipartite.hpp"
#include "bgrid/io.hpp"
#include "bgrid/quality.hpp"
#include "bgrid/refine.hpp"
#include "bgrid/samples.hpp"

using namespace bgrid;

namespace {

void save(const std::string& dir, const std::string& name,
          const std::string& content) {
  const std::string path = dir + "/" + name;
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << content)) {
    std::cerr << "cannot write " << path << '\n';
    std::exit(1);
  }
  std::cout << "wrote " << path << " (" << content.size() << " bytes)\n";
}

const std::vector<int>& colors_of(const TwoColorResult& r) {
  return std::get<ElementColoring>(r).color;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_goldens <output-dir>\n";
    return 1;
  }
  const std::string dir = argv[1];

  const TriMesh fan4 = sample_fan(4);
  const TwoColorResult fan4_colors = two_color(adjacency_graph(fan4));
  save(dir, "fan4.svg", write_svg(fan4, &colors_of(fan4_colors)));

  const TriMesh fan3_grid = bipartite_refine_2d(sample_fan(3)).first;
  const TwoColorResult grid_colors = two_color(adjacency_graph(fan3_grid));
  save(dir, "fan3_grid.svg", write_svg(fan3_grid, &colors_of(grid_colors)));

  save(dir, "square_grid2.vtk", write_vtk(sample_square_grid(2)));

  const TetMesh tent5 = sample_tent(5);
  save(dir, "tent5.vtk", write_vtk(tent5));

  const TetMesh tet_grid = bipartite_refine_3d(sample_corner_tet()).first;
  const TwoColorResult tet_colors = two_color(adjacency_graph(tet_grid));
  const MeshQualityReport q = mesh_quality(tet_grid);
  std::vector<double> zeta, eta;
  for (const TetQuality& t : q.per_tet) {
    zeta.push_back(t.zeta);
    eta.push_back(t.eta);
  }
  VtkCellData data;
  data.color = &colors_of(tet_colors);
  data.zeta = &zeta;
  data.eta = &eta;
  save(dir, "tet_grid_quality.vtk", write_vtk(tet_grid, data));

  return 0;
}
