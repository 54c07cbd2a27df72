#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "bgrid/errors.hpp"
#include "bgrid/mesh.hpp"
#include "bgrid/samples.hpp"
#include "support.hpp"

using namespace bgrid;

namespace {

TriMesh unit_square_two_triangles() {
  return build_tri_mesh({{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                        {{0, 1, 2}, {0, 2, 3}});
}

// Two fans of tets around the same pole edge with separate rims: every face
// is manifold but the pole link splits into two components.
TetMesh hourglass_pinch() {
  std::vector<Point3> pts{{0, 0, 0}, {0, 0, 1}};
  auto rim = [&](double deg) {
    const double a = deg * 0.017453292519943295;
    pts.push_back({std::cos(a), std::sin(a), 0.5});
  };
  rim(0);
  rim(40);
  rim(80);     // first fan: vertices 2,3,4
  rim(180);
  rim(220);
  rim(260);    // second fan: vertices 5,6,7
  return build_tet_mesh(std::move(pts), {{0, 1, 2, 3},
                                         {0, 1, 3, 4},
                                         {0, 1, 5, 6},
                                         {0, 1, 6, 7}});
}

}  // namespace

TEST_CASE("unit square mesh indexes five edges") {
  const TriMesh m = unit_square_two_triangles();
  CHECK(m.n_points() == 4);
  CHECK(m.n_elements() == 2);
  CHECK(m.edges().size() == 5);
  const auto* diag = m.edges().incident(make_edge_key(0, 2));
  REQUIRE(diag != nullptr);
  CHECK(*diag == std::vector<int>{0, 1});
  CHECK(m.edges().incident(make_edge_key(1, 3)) == nullptr);
  CHECK(euler_characteristic(m) == 1);
}

TEST_CASE("clockwise triangles are reoriented silently") {
  const TriMesh m = build_tri_mesh({{0, 0}, {1, 0}, {0, 1}}, {{0, 2, 1}});
  CHECK(signed_area(m.element_geometry(0)) > 0);
  const TetMesh t = build_tet_mesh(
      {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 3, 2}});
  CHECK(signed_volume(t.element_geometry(0)) > 0);
}

TEST_CASE("build rejects invalid input") {
  CHECK_THROWS_AS(build_tri_mesh({{0, 0}, {1, 0}}, {{0, 1, 2}}),
                  OutOfRangeIndex);
  CHECK_THROWS_AS(build_tri_mesh({{0, 0}, {1, 0}, {2, 0}}, {{0, 1, 2}}),
                  DegenerateElement);
  CHECK_THROWS_AS(
      build_tri_mesh({{0, 0}, {1, 0}, {0, 1}}, {{0, 1, 2}, {2, 1, 0}}),
      DuplicateElement);
  // Three triangles on one edge.
  CHECK_THROWS_AS(build_tri_mesh({{0, 0}, {1, 0}, {0, 1}, {0, -1}, {1, 1}},
                                 {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}),
                  NonConforming);
  CHECK_THROWS_AS(
      build_tet_mesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0.5, 0.5, 0}},
                     {{0, 1, 2, 3}}),
      DegenerateElement);
  // Three tets on one face.
  CHECK_THROWS_AS(
      build_tet_mesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                      {0, 0, -1}, {1, 1, 1}},
                     {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 2, 5}}),
      NonConforming);
}

TEST_CASE("single tet tables") {
  const TetMesh m = sample_corner_tet();
  CHECK(m.n_points() == 4);
  CHECK(m.faces().size() == 4);
  CHECK(m.edges().size() == 6);
  CHECK(euler_characteristic(m) == 1);
  const Classification c = classify(m);
  CHECK(c.exterior_faces.size() == 4);
  CHECK(c.interior_faces.empty());
  CHECK(c.interior_edges.empty());
  CHECK(c.interior_vertices.empty());
  CHECK(c.exterior_elements == std::vector<int>{0});
}

TEST_CASE("five-tet cube enumeration") {
  const TetMesh m = sample_cube5();
  CHECK(m.n_points() == 8);
  CHECK(m.n_elements() == 5);
  // 12 boundary triangles (two per cube face) + 4 faces of the central tet.
  CHECK(m.faces().size() == 16);
  const Classification c = classify(m);
  CHECK(c.exterior_faces.size() == 12);
  CHECK(c.interior_faces.size() == 4);
  // 12 cube edges + 6 face diagonals.
  CHECK(m.edges().size() == 18);
  CHECK(euler_characteristic(m) == 1);
  CHECK(c.interior_vertices.empty());
  CHECK(c.interior_edges.empty());
  // Central tet 4 is the only interior element.
  CHECK(c.interior_elements == std::vector<int>{4});
}

TEST_CASE("six-tet cube is a tent around the main diagonal") {
  const TetMesh m = sample_cube6();
  CHECK(m.n_elements() == 6);
  CHECK(m.edges().size() == 19);
  CHECK(m.faces().size() == 18);
  CHECK(euler_characteristic(m) == 1);
  const Classification c = classify(m);
  REQUIRE(c.interior_edges.size() == 1);
  CHECK(c.interior_edges[0] == make_edge_key(0, 7));
  CHECK(m.edges().incident(make_edge_key(0, 7))->size() == 6);
}

TEST_CASE("fan classification") {
  const TriMesh m = sample_fan(4);
  const Classification c = classify(m);
  CHECK(c.interior_vertices == std::vector<int>{0});
  CHECK(c.exterior_vertices == std::vector<int>{1, 2, 3, 4});
  CHECK(c.interior_edges.size() == 4);   // spokes
  CHECK(c.exterior_edges.size() == 4);   // rim
  CHECK(c.interior_elements.empty());
  CHECK(euler_characteristic(m) == 1);
}

TEST_CASE("tent classification has exactly one interior edge") {
  for (int j : {3, 4, 5, 8}) {
    const TetMesh m = sample_tent(j);
    const Classification c = classify(m);
    REQUIRE(c.interior_edges.size() == 1);
    CHECK(c.interior_edges[0] == make_edge_key(0, 1));
    CHECK(m.edges().incident(make_edge_key(0, 1))->size() ==
          static_cast<std::size_t>(j));
    CHECK(c.interior_vertices.empty());
    CHECK(euler_characteristic(m) == 1);
  }
}

TEST_CASE("classification is stable under element permutation") {
  const TriMesh a = sample_l_shape(2);
  std::vector<std::array<int, 3>> permuted(a.elements());
  std::reverse(permuted.begin(), permuted.end());
  const TriMesh b = build_tri_mesh(a.points(), permuted);
  const Classification ca = classify(a), cb = classify(b);
  CHECK(ca.interior_vertices == cb.interior_vertices);
  CHECK(ca.exterior_vertices == cb.exterior_vertices);
  CHECK(ca.interior_edges == cb.interior_edges);
  CHECK(ca.exterior_edges == cb.exterior_edges);
  // Element sets map through the reversal.
  const int n = a.n_elements();
  std::vector<int> mapped;
  for (int k : cb.exterior_elements) mapped.push_back(n - 1 - k);
  std::sort(mapped.begin(), mapped.end());
  CHECK(mapped == ca.exterior_elements);
}

TEST_CASE("disjoint pieces and holes show up in the characteristic") {
  const TriMesh two = build_tri_mesh(
      {{0, 0}, {1, 0}, {0, 1}, {5, 5}, {6, 5}, {5, 6}},
      {{0, 1, 2}, {3, 4, 5}});
  CHECK(euler_characteristic(two) == 2);

  // 3x3 grid of squares with the middle square removed: an annulus.
  std::vector<std::pair<int, int>> cells;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i)
      if (!(i == 1 && j == 1)) cells.push_back({i, j});
  std::vector<Point2> pts;
  for (int j = 0; j <= 3; ++j)
    for (int i = 0; i <= 3; ++i)
      pts.push_back({static_cast<double>(i), static_cast<double>(j)});
  std::vector<std::array<int, 3>> tris;
  for (auto [i, j] : cells) {
    const int v00 = j * 4 + i, v10 = v00 + 1, v01 = v00 + 4, v11 = v01 + 1;
    tris.push_back({v00, v10, v11});
    tris.push_back({v00, v11, v01});
  }
  const TriMesh ring = build_tri_mesh(std::move(pts), std::move(tris));
  CHECK(euler_characteristic(ring) == 0);
}

TEST_CASE("conformity report is clean on built sample meshes") {
  CHECK(check_conformity(sample_fan(5)).ok());
  CHECK(check_conformity(sample_square_grid(3)).ok());
  CHECK(check_conformity(sample_cube5()).ok());
  CHECK(check_conformity(sample_cube6()).ok());
  for (int j : {3, 4, 7}) CHECK(check_conformity(sample_tent(j)).ok());
}

TEST_CASE("interior edge links of tents are single cycles") {
  // tent(3): the pole link is the cycle C_3; removing one tet from tent(6)
  // leaves a path link, which re-classifies the pole as exterior. Both
  // configurations are conforming.
  CHECK(check_conformity(sample_tent(3)).ok());

  const TetMesh full = sample_tent(6);
  std::vector<std::array<int, 4>> tets(full.elements().begin(),
                                       full.elements().end() - 1);
  const TetMesh open = build_tet_mesh(full.points(), tets);
  CHECK(open.edges().incident(make_edge_key(0, 1))->size() == 5);
  const Classification c = classify(open);
  CHECK(std::count(c.exterior_edges.begin(), c.exterior_edges.end(),
                   make_edge_key(0, 1)) == 1);
  CHECK(check_conformity(open).ok());
  CHECK(euler_characteristic(open) == 1);
}

TEST_CASE("pinched edge is reported as non-manifold") {
  const TetMesh m = hourglass_pinch();
  const ConformityReport r = check_conformity(m);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.size() == 1);
  CHECK(r.violations[0].kind == "non-manifold-edge");
  CHECK(r.violations[0].detail.find("(0,1)") != std::string::npos);
}

TEST_CASE("two tets sharing only an edge build but fail the link check") {
  // Legal under the pairwise intersection rule, so the build succeeds, but
  // the shared edge is pinched: its link is two isolated vertices.
  const TetMesh m = build_tet_mesh({{0, 0, 0},
                                    {1, 0, 0},
                                    {0, 1, 0},
                                    {0, 0, 1},
                                    {0, -1, 0},
                                    {0, 0, -1}},
                                   {{0, 1, 2, 3}, {0, 1, 4, 5}});
  CHECK(classify(m).interior_faces.empty());
  const ConformityReport r = check_conformity(m);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].kind == "non-manifold-edge");
}
