#include "bgrid/geom.hpp"

#include <algorithm>

#include "bgrid/errors.hpp"

namespace bgrid {

double signed_area(const Triangle2& t) {
  return 0.5 * cross(t.v[1] - t.v[0], t.v[2] - t.v[0]);
}

double signed_volume(const Tetrahedron& t) {
  const Point3 e1 = t.v[1] - t.v[0];
  const Point3 e2 = t.v[2] - t.v[0];
  const Point3 e3 = t.v[3] - t.v[0];
  return dot(e1, cross(e2, e3)) / 6.0;
}

namespace {

double area3(const Triangle3& t) {
  return 0.5 * norm(cross(t.v[1] - t.v[0], t.v[2] - t.v[0]));
}

template <class P, std::size_t N>
double longest_edge_of(const std::array<P, N>& v) {
  double best = 0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      best = std::max(best, norm_sq(v[j] - v[i]));
  return std::sqrt(best);
}

}  // namespace

double longest_edge(const Triangle2& t) { return longest_edge_of(t.v); }
double longest_edge(const Triangle3& t) { return longest_edge_of(t.v); }
double longest_edge(const Tetrahedron& t) { return longest_edge_of(t.v); }

bool is_degenerate(const Triangle2& t) {
  const double L = longest_edge(t);
  return std::abs(signed_area(t)) <= kDegeneracyTol * L * L;
}

bool is_degenerate(const Triangle3& t) {
  const double L = longest_edge(t);
  return area3(t) <= kDegeneracyTol * L * L;
}

bool is_degenerate(const Tetrahedron& t) {
  const double L = longest_edge(t);
  return std::abs(signed_volume(t)) <= kDegeneracyTol * L * L * L;
}

namespace {

template <class S>
void require_proper(const S& s, const char* what) {
  if (is_degenerate(s)) throw DegenerateElement(what);
}

}  // namespace

Point2 barycenter(const Triangle2& t) {
  require_proper(t, "degenerate triangle");
  return (1.0 / 3.0) * (t.v[0] + t.v[1] + t.v[2]);
}

Point3 barycenter(const Triangle3& t) {
  require_proper(t, "degenerate triangle");
  return (1.0 / 3.0) * (t.v[0] + t.v[1] + t.v[2]);
}

Point3 barycenter(const Tetrahedron& t) {
  require_proper(t, "degenerate tetrahedron");
  return 0.25 * (t.v[0] + t.v[1] + t.v[2] + t.v[3]);
}

Point2 incenter(const Triangle2& t) {
  require_proper(t, "degenerate triangle");
  const double a = norm(t.v[2] - t.v[1]);  // side opposite v0
  const double b = norm(t.v[0] - t.v[2]);
  const double c = norm(t.v[1] - t.v[0]);
  return (1.0 / (a + b + c)) * (a * t.v[0] + b * t.v[1] + c * t.v[2]);
}

namespace {

template <class P>
TriangleMeasures triangle_measures_impl(const Triangle<P>& t, double area) {
  const double a = norm(t.v[2] - t.v[1]);
  const double b = norm(t.v[0] - t.v[2]);
  const double c = norm(t.v[1] - t.v[0]);
  TriangleMeasures m;
  m.area = area;
  m.diameter = std::max({a, b, c});
  m.inradius = area / (0.5 * (a + b + c));
  m.circumradius = a * b * c / (4.0 * area);
  return m;
}

}  // namespace

TriangleMeasures triangle_measures(const Triangle2& t) {
  require_proper(t, "degenerate triangle");
  return triangle_measures_impl(t, std::abs(signed_area(t)));
}

TriangleMeasures triangle_measures(const Triangle3& t) {
  require_proper(t, "degenerate triangle");
  return triangle_measures_impl(t, area3(t));
}

TetMeasures tet_measures(const Tetrahedron& t) {
  require_proper(t, "degenerate tetrahedron");
  TetMeasures m;
  m.volume = std::abs(signed_volume(t));
  m.diameter = longest_edge(t);

  double face_area = 0;
  for (int f = 0; f < 4; ++f) {
    Triangle3 tri{{t.v[(f + 1) % 4], t.v[(f + 2) % 4], t.v[(f + 3) % 4]}};
    face_area += area3(tri);
  }
  m.inradius = 3.0 * m.volume / face_area;

  // Circumcenter relative to v0: solve 2 e_i . y = |e_i|^2 by Cramer's rule.
  const Point3 e1 = t.v[1] - t.v[0];
  const Point3 e2 = t.v[2] - t.v[0];
  const Point3 e3 = t.v[3] - t.v[0];
  const double d = dot(e1, cross(e2, e3));  // 6 * signed volume, nonzero here
  const Point3 y = (1.0 / (2.0 * d)) * (norm_sq(e1) * cross(e2, e3) +
                                        norm_sq(e2) * cross(e3, e1) +
                                        norm_sq(e3) * cross(e1, e2));
  m.circumradius = norm(y);

  m.edge_sq_sum = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) m.edge_sq_sum += norm_sq(t.v[j] - t.v[i]);
  return m;
}

}  // namespace bgrid
