#ifndef BGRID_REFINE_HPP
#define BGRID_REFINE_HPP

#include <array>
#include <utility>
#include <vector>

#include "bgrid/mesh.hpp"

namespace bgrid {

enum class ProvenanceKind {
  OriginalVertex,   // 1 parent id
  EdgeMidpoint,     // 2
  FaceBarycenter,   // 3
  CellCentroid,     // 4
};

// Combinatorial identity of a refinement vertex: the sorted tuple of vertex
// ids it averages. Shared sub-simplices of adjacent parents produce the same
// key, so deduplication never compares coordinates and conformity of the
// refined mesh is automatic.
struct ProvenanceKey {
  std::vector<int> ids;  // sorted, size 1..4

  ProvenanceKind kind() const {
    return static_cast<ProvenanceKind>(ids.size() - 1);
  }
  bool operator<(const ProvenanceKey& o) const { return ids < o.ids; }
  bool operator==(const ProvenanceKey& o) const { return ids == o.ids; }
};

struct NewVertex {
  int vertex = 0;  // index in the refined mesh
  ProvenanceKey key;
};

struct RefinementRecord {
  // Parent element index (in the input mesh) of each output element. For
  // multi-level refinement this is composed down to the original input.
  std::vector<int> parent_of;
  // Inverse map, children listed in output order.
  std::vector<std::vector<int>> children_of;
  // Vertices appended by the refinement, in creation order. Key ids refer to
  // vertex indices of the output mesh (input vertices keep their indices, so
  // ids of later levels may name vertices created by earlier levels).
  std::vector<NewVertex> new_vertices;
};

struct GridOptions {
  // Experimental: place the interior point at the incenter instead of the
  // barycenter. Children still tile the parent and the parity argument is
  // unchanged, but the equal-area property is lost.
  bool use_incenter = false;
};

// Six-way gridding of one triangle: each child joins a vertex, an adjacent
// edge midpoint and the interior point, enumerated counter-clockwise
// starting at vertex 0. Children are returned counter-clockwise.
std::array<Triangle2, 6> bipartite_grid_triangle(const Triangle2& t,
                                                 const GridOptions& opts = {});

// Twenty-four-way gridding of one tetrahedron: for every ordering pi of the
// four vertices, the child spanned by the prefix averages
//   u_i = (v_pi(1) + ... + v_pi(i)) / i,  i = 1..4,
// i.e. (vertex, edge midpoint, face barycenter, centroid). Children are
// enumerated over orderings in lexicographic order and reoriented to
// positive volume (odd orderings generate mirrored children).
std::array<Tetrahedron, 24> bipartite_grid_tet(const Tetrahedron& t);

// Mesh-level griddings. Output element 6k+i (24k+i) is child i of input
// element k. Always produce 2-colorable meshes.
std::pair<TriMesh, RefinementRecord> bipartite_refine_2d(
    const TriMesh& m, const GridOptions& opts = {});
std::pair<TetMesh, RefinementRecord> bipartite_refine_3d(const TetMesh& m);

// Standard 4-way midpoint (red) refinement, applied `levels` times
// (levels >= 1, throws InvalidParam otherwise). Children are similar to the
// parent: diameters halve exactly and the regularity ratio of every child
// equals the parent's. Preserves 2-colorability in both directions.
std::pair<TriMesh, RefinementRecord> red_refine_2d(const TriMesh& m,
                                                   int levels);

}  // namespace bgrid

#endif
