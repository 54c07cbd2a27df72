#ifndef BGRID_GEOM_HPP
#define BGRID_GEOM_HPP

#include <array>
#include <cmath>

namespace bgrid {

struct Point2 {
  double x = 0, y = 0;
};

struct Point3 {
  double x = 0, y = 0, z = 0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }

inline Point3 operator+(Point3 a, Point3 b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline Point3 operator-(Point3 a, Point3 b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline Point3 operator*(double s, Point3 a) {
  return {s * a.x, s * a.y, s * a.z};
}
inline bool operator==(Point3 a, Point3 b) {
  return a.x == b.x && a.y == b.y && a.z == b.z;
}

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double dot(Point3 a, Point3 b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline Point3 cross(Point3 a, Point3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm_sq(Point2 a) { return dot(a, a); }
inline double norm_sq(Point3 a) { return dot(a, a); }
inline double norm(Point2 a) { return std::sqrt(norm_sq(a)); }
inline double norm(Point3 a) { return std::sqrt(norm_sq(a)); }

template <class P>
struct Triangle {
  std::array<P, 3> v;
};
using Triangle2 = Triangle<Point2>;
using Triangle3 = Triangle<Point3>;

struct Tetrahedron {
  std::array<Point3, 4> v;
};

// Relative degeneracy threshold: area <= tol * L^2 (2-D), |vol| <= tol * L^3
// (3-D), with L the longest edge of the element.
inline constexpr double kDegeneracyTol = 1e-12;

// Positive iff the vertices are counter-clockwise.
double signed_area(const Triangle2& t);
// Positive iff (v1-v0, v2-v0, v3-v0) is a right-handed frame.
double signed_volume(const Tetrahedron& t);

double longest_edge(const Triangle2& t);
double longest_edge(const Triangle3& t);
double longest_edge(const Tetrahedron& t);

bool is_degenerate(const Triangle2& t);
bool is_degenerate(const Triangle3& t);
bool is_degenerate(const Tetrahedron& t);

Point2 barycenter(const Triangle2& t);
Point3 barycenter(const Triangle3& t);
Point3 barycenter(const Tetrahedron& t);

// Incenter, the center of the inscribed circle. Used by the experimental
// interior-point variant of the 2-D bipartite gridding.
Point2 incenter(const Triangle2& t);

struct TriangleMeasures {
  double area = 0;
  double diameter = 0;      // longest edge
  double inradius = 0;
  double circumradius = 0;
};

struct TetMeasures {
  double volume = 0;        // unsigned
  double diameter = 0;      // longest edge
  double inradius = 0;
  double circumradius = 0;
  double edge_sq_sum = 0;   // sum of the six squared edge lengths
};

// All throw DegenerateElement below the degeneracy threshold.
TriangleMeasures triangle_measures(const Triangle2& t);
TriangleMeasures triangle_measures(const Triangle3& t);
TetMeasures tet_measures(const Tetrahedron& t);

}  // namespace bgrid

#endif
