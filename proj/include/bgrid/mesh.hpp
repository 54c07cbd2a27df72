#ifndef BGRID_MESH_HPP
#define BGRID_MESH_HPP

#include <array>
#include <string>
#include <vector>

#include "bgrid/geom.hpp"

namespace bgrid {

// Keys are vertex index tuples sorted ascending.
using EdgeKey = std::array<int, 2>;
using FaceKey = std::array<int, 3>;

EdgeKey make_edge_key(int a, int b);
FaceKey make_face_key(int a, int b, int c);

// Sorted-by-key incidence table; values are element indices in ascending
// order. Sorted storage keeps iteration deterministic.
template <class Key>
struct IncidenceTable {
  std::vector<std::pair<Key, std::vector<int>>> entries;

  // Index into entries, or -1 when absent.
  int find(const Key& k) const;
  const std::vector<int>* incident(const Key& k) const;
  std::size_t size() const { return entries.size(); }
};

using EdgeTable = IncidenceTable<EdgeKey>;
using FaceTable = IncidenceTable<FaceKey>;

// Conforming triangle mesh. Triangles are stored counter-clockwise; the
// constructor-side reorientation happens in build_tri_mesh.
class TriMesh {
 public:
  TriMesh() = default;
  TriMesh(std::vector<Point2> points, std::vector<std::array<int, 3>> tris,
          EdgeTable edges)
      : points_(std::move(points)),
        triangles_(std::move(tris)),
        edges_(std::move(edges)) {}

  int n_points() const { return static_cast<int>(points_.size()); }
  int n_elements() const { return static_cast<int>(triangles_.size()); }
  const std::vector<Point2>& points() const { return points_; }
  const std::vector<std::array<int, 3>>& elements() const {
    return triangles_;
  }
  const EdgeTable& edges() const { return edges_; }

  Triangle2 element_geometry(int k) const;

 private:
  std::vector<Point2> points_;
  std::vector<std::array<int, 3>> triangles_;
  EdgeTable edges_;
};

// Conforming tetrahedral mesh. Tets are stored positively oriented.
class TetMesh {
 public:
  TetMesh() = default;
  TetMesh(std::vector<Point3> points, std::vector<std::array<int, 4>> tets,
          FaceTable faces, EdgeTable edges)
      : points_(std::move(points)),
        tets_(std::move(tets)),
        faces_(std::move(faces)),
        edges_(std::move(edges)) {}

  int n_points() const { return static_cast<int>(points_.size()); }
  int n_elements() const { return static_cast<int>(tets_.size()); }
  const std::vector<Point3>& points() const { return points_; }
  const std::vector<std::array<int, 4>>& elements() const { return tets_; }
  const FaceTable& faces() const { return faces_; }
  const EdgeTable& edges() const { return edges_; }

  Tetrahedron element_geometry(int k) const;

 private:
  std::vector<Point3> points_;
  std::vector<std::array<int, 4>> tets_;
  FaceTable faces_;
  EdgeTable edges_;
};

// Validate and index a mesh. Elements with negative orientation are flipped
// silently. Throws OutOfRangeIndex, DegenerateElement, DuplicateElement,
// NonConforming.
TriMesh build_tri_mesh(std::vector<Point2> points,
                       std::vector<std::array<int, 3>> triangles);
TetMesh build_tet_mesh(std::vector<Point3> points,
                       std::vector<std::array<int, 4>> tets);

// Combinatorial boundary classification. Each simplex class is partitioned
// into exterior (touching the boundary) and interior; vectors are sorted.
struct Classification {
  std::vector<int> exterior_vertices, interior_vertices;
  std::vector<EdgeKey> exterior_edges, interior_edges;
  std::vector<FaceKey> exterior_faces, interior_faces;  // 3-D only
  std::vector<int> exterior_elements, interior_elements;
};

Classification classify(const TriMesh& m);
Classification classify(const TetMesh& m);

struct ConformityViolation {
  std::string kind;    // "non-manifold-edge", "interior-edge-link-not-cycle", ...
  std::string detail;
};

struct ConformityReport {
  std::vector<ConformityViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Re-checks invariants and, in 3-D, verifies that the incident-tet link of
// each edge is consistent: a single closed cycle around interior edges, a
// single open path around exterior ones. Never throws; findings go into the
// report.
ConformityReport check_conformity(const TriMesh& m);
ConformityReport check_conformity(const TetMesh& m);

// V - E + F in 2-D, V - E + F - T in 3-D. Equals 1 for meshes of simply
// connected domains; used as a proxy check, not a proof.
int euler_characteristic(const TriMesh& m);
int euler_characteristic(const TetMesh& m);

}  // namespace bgrid

#endif
