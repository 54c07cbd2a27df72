#include "bgrid/samples.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bgrid/errors.hpp"

namespace bgrid {

TriMesh sample_fan(int j) {
  if (j < 3) throw InvalidParam("fan needs j >= 3");
  std::vector<Point2> points{{0, 0}};
  for (int k = 0; k < j; ++k) {
    const double a = 2.0 * std::numbers::pi * k / j;
    points.push_back({std::cos(a), std::sin(a)});
  }
  std::vector<std::array<int, 3>> tris;
  for (int k = 0; k < j; ++k) tris.push_back({0, 1 + k, 1 + (k + 1) % j});
  return build_tri_mesh(std::move(points), std::move(tris));
}

TriMesh sample_strip(int n) {
  if (n < 1) throw InvalidParam("strip needs n >= 1");
  std::vector<Point2> points;
  for (int k = 0; k < n + 2; ++k)
    points.push_back({static_cast<double>(k / 2),
                      static_cast<double>(k % 2)});
  std::vector<std::array<int, 3>> tris;
  for (int k = 0; k < n; ++k) tris.push_back({k, k + 1, k + 2});
  return build_tri_mesh(std::move(points), std::move(tris));
}

namespace {

TriMesh grid_over_cells(int n_cells_per_side,
                        const std::vector<std::pair<int, int>>& cells) {
  const int side = n_cells_per_side + 1;
  std::vector<int> vertex_id(side * side, -1);
  auto grid_index = [side](int i, int j) { return j * side + i; };

  std::vector<char> used(side * side, 0);
  for (auto [i, j] : cells)
    for (int dj = 0; dj <= 1; ++dj)
      for (int di = 0; di <= 1; ++di) used[grid_index(i + di, j + dj)] = 1;

  std::vector<Point2> points;
  for (int j = 0; j < side; ++j)
    for (int i = 0; i < side; ++i)
      if (used[grid_index(i, j)]) {
        vertex_id[grid_index(i, j)] = static_cast<int>(points.size());
        points.push_back({static_cast<double>(i), static_cast<double>(j)});
      }

  std::vector<std::array<int, 3>> tris;
  for (auto [i, j] : cells) {
    const int v00 = vertex_id[grid_index(i, j)];
    const int v10 = vertex_id[grid_index(i + 1, j)];
    const int v01 = vertex_id[grid_index(i, j + 1)];
    const int v11 = vertex_id[grid_index(i + 1, j + 1)];
    tris.push_back({v00, v10, v11});
    tris.push_back({v00, v11, v01});
  }
  return build_tri_mesh(std::move(points), std::move(tris));
}

}  // namespace

TriMesh sample_square_grid(int n) {
  if (n < 1) throw InvalidParam("square-grid needs n >= 1");
  std::vector<std::pair<int, int>> cells;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) cells.push_back({i, j});
  return grid_over_cells(n, cells);
}

TriMesh sample_l_shape(int n) {
  if (n < 1) throw InvalidParam("l-shape needs n >= 1");
  std::vector<std::pair<int, int>> cells;
  for (int j = 0; j < 2 * n; ++j)
    for (int i = 0; i < 2 * n; ++i)
      if (i < n || j < n) cells.push_back({i, j});
  return grid_over_cells(2 * n, cells);
}

TetMesh sample_tent(int j) {
  if (j < 3) throw InvalidParam("tent needs j >= 3");
  std::vector<Point3> points{{0, 0, 0}, {0, 0, 1}};
  for (int k = 0; k < j; ++k) {
    const double a = 2.0 * std::numbers::pi * k / j;
    points.push_back({std::cos(a), std::sin(a), 0});
  }
  std::vector<std::array<int, 4>> tets;
  for (int k = 0; k < j; ++k)
    tets.push_back({0, 2 + k, 2 + (k + 1) % j, 1});
  return build_tet_mesh(std::move(points), std::move(tets));
}

namespace {

std::vector<Point3> cube_corners() {
  std::vector<Point3> points;
  for (int z = 0; z <= 1; ++z)
    for (int y = 0; y <= 1; ++y)
      for (int x = 0; x <= 1; ++x)
        points.push_back({static_cast<double>(x), static_cast<double>(y),
                          static_cast<double>(z)});
  return points;
}

}  // namespace

TetMesh sample_cube5() {
  // Corner index x + 2y + 4z. Even-parity corners span the central regular
  // tet; each odd-parity corner makes a tet with its three neighbors.
  std::vector<std::array<int, 4>> tets{
      {1, 0, 3, 5}, {2, 0, 3, 6}, {4, 0, 5, 6}, {7, 3, 5, 6}, {0, 3, 5, 6}};
  return build_tet_mesh(cube_corners(), std::move(tets));
}

TetMesh sample_cube6() {
  // Six tets around the main diagonal 0-7, one per axis ordering of the
  // monotone corner path.
  const int axis_bit[3] = {1, 2, 4};
  std::vector<std::array<int, 4>> tets;
  int perm[3] = {0, 1, 2};
  std::vector<std::array<int, 3>> orders;
  do {
    orders.push_back({perm[0], perm[1], perm[2]});
  } while (std::next_permutation(perm, perm + 3));
  for (const auto& o : orders) {
    const int c1 = axis_bit[o[0]];
    const int c2 = c1 + axis_bit[o[1]];
    tets.push_back({0, c1, c2, 7});
  }
  return build_tet_mesh(cube_corners(), std::move(tets));
}

TetMesh sample_corner_tet() {
  std::vector<Point3> points{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  return build_tet_mesh(std::move(points), {{0, 1, 2, 3}});
}

AnyMesh sample_mesh(const std::string& name,
                    const std::map<std::string, int>& params) {
  auto the_param = [&](const char* key) {
    if (params.size() != 1 || params.begin()->first != key)
      throw InvalidParam("generator '" + name + "' takes exactly one parameter '" +
                         key + "'");
    return params.begin()->second;
  };
  auto no_params = [&] {
    if (!params.empty())
      throw InvalidParam("generator '" + name + "' takes no parameters");
  };

  if (name == "fan") return sample_fan(the_param("j"));
  if (name == "strip") return sample_strip(the_param("n"));
  if (name == "square-grid") return sample_square_grid(the_param("n"));
  if (name == "l-shape") return sample_l_shape(the_param("n"));
  if (name == "tent") return sample_tent(the_param("j"));
  if (name == "cube5") {
    no_params();
    return sample_cube5();
  }
  if (name == "cube6") {
    no_params();
    return sample_cube6();
  }
  if (name == "tet") {
    no_params();
    return sample_corner_tet();
  }
  throw InvalidParam("unknown generator '" + name + "'");
}

}  // namespace bgrid
