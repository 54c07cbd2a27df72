#ifndef BGRID_BIPARTITE_HPP
#define BGRID_BIPARTITE_HPP

#include <utility>
#include <variant>
#include <vector>

#include "bgrid/mesh.hpp"

namespace bgrid {

// Element adjacency: arc between two elements iff they share a full edge
// (2-D) or a full face (3-D). Simple by construction; neighbor lists sorted.
struct MeshGraph {
  int n = 0;
  std::vector<std::vector<int>> adjacency;

  int n_arcs() const;
};

MeshGraph adjacency_graph(const TriMesh& m);
MeshGraph adjacency_graph(const TetMesh& m);

struct ElementColoring {
  std::vector<int> color;      // 0 or 1 per element
  std::vector<int> component;  // connected component id per element
  int n_components = 0;
};

// Closed walk c[0], c[1], ..., c[2j], c[0] of odd length; stored with the
// first element repeated at the end.
struct OddCycleWitness {
  std::vector<int> cycle;
};

using TwoColorResult = std::variant<ElementColoring, OddCycleWitness>;

// BFS 2-coloring. Deterministic: components are discovered in element index
// order and the lowest-index element of each component gets color 0.
TwoColorResult two_color(const MeshGraph& g);

inline bool is_bipartite(const TwoColorResult& r) {
  return std::holds_alternative<ElementColoring>(r);
}

// Even-incidence criteria. For meshes of simply connected domains these
// agree with two_color; on other inputs they are advisory only.
struct IncidenceCheck2D {
  bool bipartite = true;
  // Interior vertices with an odd number of incident triangles, with counts.
  std::vector<std::pair<int, int>> offending_vertices;
};

struct IncidenceCheck3D {
  bool bipartite = true;
  // Interior edges with an odd number of incident tets, with counts.
  std::vector<std::pair<EdgeKey, int>> offending_edges;
};

IncidenceCheck2D characterization_check_2d(const TriMesh& m);
IncidenceCheck3D characterization_check_3d(const TetMesh& m);

}  // namespace bgrid

#endif
