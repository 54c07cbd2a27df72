#ifndef BGRID_QUALITY_HPP
#define BGRID_QUALITY_HPP

#include <cmath>
#include <string>
#include <vector>

#include "bgrid/mesh.hpp"

namespace bgrid {

// h    diameter (longest edge)
// rho  insphere diameter, 2 * inradius
// zeta h / rho, >= sqrt(3) for triangles, >= sqrt(6) for tets
// theta 3 * inradius / circumradius, in (0, 1], 1 iff regular
// eta  12 * (3 |K|)^(2/3) / sum of squared edge lengths, in (0, 1], 1 iff
//      regular
struct TriQuality {
  double h = 0, rho = 0, zeta = 0;
};

struct TetQuality {
  double h = 0, rho = 0, zeta = 0, theta = 0, eta = 0;
};

TriQuality triangle_quality(const Triangle2& t);
TriQuality triangle_quality(const Triangle3& t);
TetQuality tet_quality(const Tetrahedron& t);

struct Histogram {
  std::vector<double> edges;  // bin i covers [edges[i], edges[i+1])
  std::vector<int> counts;
};

struct MeshQualityReport {
  int dim = 2;
  double h = 0;          // max element diameter
  double zeta_max = 0;   // mesh regularity
  double zeta_mean = 0;
  double eta_min = 0;    // 3-D only
  double eta_mean = 0;
  std::vector<TriQuality> per_triangle;
  std::vector<TetQuality> per_tet;
  Histogram zeta_hist;
  Histogram eta_hist;    // 3-D only
};

// Throws EmptyMesh when the mesh has no elements.
MeshQualityReport mesh_quality(const TriMesh& m);
MeshQualityReport mesh_quality(const TetMesh& m);

struct InequalityCheck {
  std::string name;
  double lhs = 0, rhs = 0;
  double slack = 0;  // rhs - lhs before tolerance
  bool pass = false;
};

struct BoundReport {
  std::vector<InequalityCheck> checks;
  // Worst eta(parent) / eta(child) seen; only set by the deterioration check.
  double worst_eta_ratio = 0;
  bool all_pass() const;
};

// Coefficient of the upper bound theta <= coef * eta^(3/4).
extern const double kThetaUpperCoef;          // 2 / 6^(1/4)
// eta(parent) <= this factor times eta(child) for 24-way gridding children.
extern const double kEtaDeteriorationFactor;  // 36 * 9^(1/3) ~ 74.883
// zeta(child) <= this constant / eta(parent)^3.
inline constexpr double kZetaDeteriorationConst = 1259712.0;  // 2^6 * 3^9

// Constants of the iterated strategy that grids only the worst child each
// round. Documented in quality report glossaries; nothing here iterates.
extern const double kIteratedEtaLowerFactor;   // 4^(1/3) / 11
extern const double kIteratedRegularityConst;  // 11 * 2^6 * 3^9 / 4^(1/3)

// Per-element bounds, tolerance 1e-9 absolute:
//   eta^3 <= theta
//   theta <= kThetaUpperCoef * eta^(3/4)
//   zeta  <= 3 / eta^3
BoundReport verify_shape_inequalities(const Tetrahedron& t);

// Bounds over all 24 gridding children L of t, tolerance 1e-9 relative:
//   eta(t)  <= kEtaDeteriorationFactor * eta(L)
//   zeta(L) <= kZetaDeteriorationConst / eta(t)^3
BoundReport verify_deterioration_bound(const Tetrahedron& t);

inline constexpr double kShapeBoundAbsTol = 1e-9;
inline constexpr double kDeteriorationRelTol = 1e-9;

}  // namespace bgrid

#endif
