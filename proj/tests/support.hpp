#ifndef BGRID_TESTS_SUPPORT_HPP
#define BGRID_TESTS_SUPPORT_HPP

#include <array>
#include <random>

#include "bgrid/bipartite.hpp"
#include "bgrid/geom.hpp"

namespace bgrid::testing {

using Rng = std::mt19937_64;

inline Point2 random_point2(Rng& rng, double lo = 0.0, double hi = 1.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  return {d(rng), d(rng)};
}

inline Point3 random_point3(Rng& rng, double lo = 0.0, double hi = 1.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  return {d(rng), d(rng), d(rng)};
}

// Random triangle / tet in the unit box, rejecting near-degenerate ones so
// measures are well defined.
inline Triangle2 random_triangle(Rng& rng, double min_area = 1e-4) {
  for (;;) {
    Triangle2 t{{random_point2(rng), random_point2(rng), random_point2(rng)}};
    if (std::abs(signed_area(t)) > min_area) return t;
  }
}

inline Tetrahedron random_tet(Rng& rng, double min_volume = 1e-4) {
  for (;;) {
    Tetrahedron t{{random_point3(rng), random_point3(rng), random_point3(rng),
                   random_point3(rng)}};
    if (std::abs(signed_volume(t)) > min_volume) return t;
  }
}

struct Rotation2 {
  double c = 1, s = 0;
  Point2 shift;
  Point2 operator()(Point2 p) const {
    return {c * p.x - s * p.y + shift.x, s * p.x + c * p.y + shift.y};
  }
};

inline Rotation2 random_isometry2(Rng& rng) {
  std::uniform_real_distribution<double> angle(0, 6.283185307179586);
  std::uniform_real_distribution<double> off(-5, 5);
  const double a = angle(rng);
  return {std::cos(a), std::sin(a), {off(rng), off(rng)}};
}

struct Rotation3 {
  std::array<std::array<double, 3>, 3> m;
  Point3 shift;
  Point3 operator()(Point3 p) const {
    return {m[0][0] * p.x + m[0][1] * p.y + m[0][2] * p.z + shift.x,
            m[1][0] * p.x + m[1][1] * p.y + m[1][2] * p.z + shift.y,
            m[2][0] * p.x + m[2][1] * p.y + m[2][2] * p.z + shift.z};
  }
};

// Rotation from a uniform random unit quaternion.
inline Rotation3 random_isometry3(Rng& rng) {
  std::normal_distribution<double> n(0, 1);
  double q[4] = {n(rng), n(rng), n(rng), n(rng)};
  const double len = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] +
                               q[3] * q[3]);
  for (double& x : q) x /= len;
  const double w = q[0], x = q[1], y = q[2], z = q[3];
  Rotation3 r;
  r.m = {{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
          {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
          {2 * (x * z - w * y), 2 * (y * z + w * x),
           1 - 2 * (x * x + y * y)}}};
  std::uniform_real_distribution<double> off(-5, 5);
  r.shift = {off(rng), off(rng), off(rng)};
  return r;
}

// A witness is only trusted after this check: closed, odd, every
// consecutive pair adjacent in the graph.
inline bool valid_odd_cycle(const MeshGraph& g, const OddCycleWitness& w) {
  if (w.cycle.size() < 4) return false;            // at least a triangle
  if (w.cycle.front() != w.cycle.back()) return false;
  const std::size_t arcs = w.cycle.size() - 1;
  if (arcs % 2 == 0) return false;
  for (std::size_t i = 0; i + 1 < w.cycle.size(); ++i) {
    const auto& adj = g.adjacency[w.cycle[i]];
    if (!std::binary_search(adj.begin(), adj.end(), w.cycle[i + 1]))
      return false;
  }
  return true;
}

// Proper 2-coloring: adjacent elements differ, colors are 0/1, the
// lowest-index element of each component has color 0.
inline bool valid_coloring(const MeshGraph& g, const ElementColoring& c) {
  std::vector<int> first_of_component(c.n_components, -1);
  for (int u = 0; u < g.n; ++u) {
    if (c.color[u] != 0 && c.color[u] != 1) return false;
    const int comp = c.component[u];
    if (comp < 0 || comp >= c.n_components) return false;
    if (first_of_component[comp] < 0) {
      first_of_component[comp] = u;
      if (c.color[u] != 0) return false;
    }
    for (int v : g.adjacency[u]) {
      if (c.color[v] == c.color[u]) return false;
      if (c.component[v] != comp) return false;
    }
  }
  return true;
}

}  // namespace bgrid::testing

#endif
