#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bgrid/errors.hpp"
#include "bgrid/quality.hpp"
#include "bgrid/refine.hpp"
#include "bgrid/samples.hpp"
#include "support.hpp"

using namespace bgrid;
using namespace bgrid::testing;

namespace {

bool rel_close(double a, double b, double tol = 1e-12) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

const Tetrahedron kCorner{
    {Point3{0, 0, 0}, Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{0, 0, 1}}};

Tetrahedron regular_tet(double edge) {
  const double q = edge / std::sqrt(2.0);
  return {{Point3{q, 0, 0}, Point3{0, q, 0}, Point3{0, 0, q},
           Point3{q, q, q}}};
}

}  // namespace

TEST_CASE("equilateral triangle reaches the regularity floor") {
  const double s = std::sqrt(3.0) / 2;
  const Triangle2 t{{Point2{0, 0}, Point2{1, 0}, Point2{0.5, s}}};
  const TriQuality q = triangle_quality(t);
  CHECK(rel_close(q.zeta, std::sqrt(3.0)));
  CHECK(rel_close(q.h, 1.0));
  CHECK(rel_close(q.rho, 0.57735026918962573));
}

TEST_CASE("right triangle regularity, closed form 1 + sqrt(2)") {
  const Triangle2 t{{Point2{0, 0}, Point2{1, 0}, Point2{0, 1}}};
  const TriQuality q = triangle_quality(t);
  CHECK(rel_close(q.zeta, 1.0 + std::sqrt(2.0)));
  CHECK(rel_close(q.h, std::sqrt(2.0)));
}

TEST_CASE("triangle quality is independent of the embedding") {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Triangle2 t = random_triangle(rng);
    const Rotation3 iso = random_isometry3(rng);
    Triangle3 e;
    for (int i = 0; i < 3; ++i) e.v[i] = iso(Point3{t.v[i].x, t.v[i].y, 0});
    const TriQuality q2 = triangle_quality(t);
    const TriQuality q3 = triangle_quality(e);
    CHECK(rel_close(q2.zeta, q3.zeta, 1e-10));
    CHECK(rel_close(q2.h, q3.h, 1e-10));
    CHECK(rel_close(q2.rho, q3.rho, 1e-10));
  }
}

TEST_CASE("regular tet is the unique optimum of all three tet metrics") {
  const TetQuality q = tet_quality(regular_tet(1.0));
  CHECK(std::abs(q.eta - 1.0) <= 1e-12);
  CHECK(std::abs(q.theta - 1.0) <= 1e-12);
  CHECK(rel_close(q.zeta, std::sqrt(6.0)));
  CHECK(rel_close(q.h, 1.0));

  // Scale invariance of the dimensionless metrics.
  const TetQuality big = tet_quality(regular_tet(37.5));
  CHECK(std::abs(big.eta - 1.0) <= 1e-12);
  CHECK(rel_close(big.h, 37.5));
}

TEST_CASE("corner tet closed forms") {
  const TetQuality q = tet_quality(kCorner);
  // zeta = (3 sqrt 2 + sqrt 6) / 2, theta = sqrt 3 - 1,
  // eta = 12 (1/2)^(2/3) / 9.
  CHECK(rel_close(q.zeta, (3 * std::sqrt(2.0) + std::sqrt(6.0)) / 2));
  CHECK(rel_close(q.theta, std::sqrt(3.0) - 1));
  CHECK(rel_close(q.eta, 12 * std::pow(0.5, 2.0 / 3.0) / 9));
  CHECK(rel_close(q.zeta, 3.3460652149512318));
  CHECK(rel_close(q.theta, 0.7320508075688772));
  CHECK(rel_close(q.eta, 0.8399473665965821));
  CHECK(q.eta < 1.0);
  CHECK(q.theta < 1.0);
}

TEST_CASE("metric ranges and floors on random elements") {
  Rng rng(512);
  for (int trial = 0; trial < 2000; ++trial) {
    const TriQuality tq = triangle_quality(random_triangle(rng));
    CHECK(tq.zeta >= std::sqrt(3.0) - 1e-12);
    const TetQuality q = tet_quality(random_tet(rng));
    CHECK(q.zeta >= std::sqrt(6.0) - 1e-12);
    CHECK(q.eta > 0);
    CHECK(q.eta <= 1.0 + 1e-12);
    CHECK(q.theta > 0);
    CHECK(q.theta <= 1.0 + 1e-12);
  }
}

TEST_CASE("dimensionless metrics survive isometry and scaling") {
  Rng rng(99);
  std::uniform_real_distribution<double> scale(0.05, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Tetrahedron t = random_tet(rng);
    const Rotation3 iso = random_isometry3(rng);
    const double s = scale(rng);
    Tetrahedron moved;
    for (int i = 0; i < 4; ++i) moved.v[i] = iso(s * t.v[i]);
    const TetQuality a = tet_quality(t);
    const TetQuality b = tet_quality(moved);
    CHECK(rel_close(a.zeta, b.zeta, 1e-9));
    CHECK(rel_close(a.theta, b.theta, 1e-9));
    CHECK(rel_close(a.eta, b.eta, 1e-9));
    CHECK(rel_close(s * a.h, b.h, 1e-9));
    CHECK(rel_close(s * a.rho, b.rho, 1e-9));
  }
}

TEST_CASE("shape inequalities hold on random tets and slivers") {
  Rng rng(2718);
  for (int trial = 0; trial < 1000; ++trial) {
    const BoundReport r = verify_shape_inequalities(random_tet(rng, 1e-5));
    REQUIRE(r.checks.size() == 3);
    CHECK(r.all_pass());
    for (const InequalityCheck& c : r.checks) {
      CHECK(c.slack == c.rhs - c.lhs);
      CHECK(c.pass == (c.lhs <= c.rhs + kShapeBoundAbsTol));
    }
  }
  const Tetrahedron needle{{Point3{0, 0, 0}, Point3{1e-3, 0, 0},
                            Point3{0, 1e-3, 0}, Point3{0, 0, 1}}};
  const Tetrahedron cap{{Point3{0, 0, 0}, Point3{1, 0, 0}, Point3{0.5, 1, 0},
                         Point3{0.5, 0.4, 1e-5}}};
  CHECK(verify_shape_inequalities(needle).all_pass());
  CHECK(verify_shape_inequalities(cap).all_pass());
}

TEST_CASE("lower shape bound is tight at the regular tet") {
  const TetQuality q = tet_quality(regular_tet(2.0));
  CHECK(std::abs(q.eta * q.eta * q.eta - q.theta) <= 1e-12);
  const BoundReport r = verify_shape_inequalities(regular_tet(2.0));
  CHECK(r.all_pass());
  CHECK(std::abs(r.checks[0].slack) <= 1e-12);
}

TEST_CASE("named constants match their closed forms") {
  CHECK(kThetaUpperCoef == 2.0 / std::pow(6.0, 0.25));
  CHECK(rel_close(kThetaUpperCoef, 1.2778862084925449));
  CHECK(kEtaDeteriorationFactor == 36.0 * std::cbrt(9.0));
  CHECK(rel_close(kEtaDeteriorationFactor, 74.88301762986855));
  CHECK(kZetaDeteriorationConst == 1259712.0);  // 2^6 * 3^9
  CHECK(kZetaDeteriorationConst == (1 << 6) * std::pow(3.0, 9.0));
  CHECK(kIteratedEtaLowerFactor == std::cbrt(4.0) / 11.0);
  CHECK(rel_close(kIteratedEtaLowerFactor, 0.1443091865425636));
  CHECK(kIteratedRegularityConst == 11.0 * 1259712.0 / std::cbrt(4.0));
  CHECK(rel_close(kIteratedRegularityConst, 8729257.160828438));
}

TEST_CASE("gridding deterioration stays within the guaranteed factor") {
  SUBCASE("corner tet, frozen worst ratio") {
    const BoundReport r = verify_deterioration_bound(kCorner);
    CHECK(r.all_pass());
    CHECK(rel_close(r.worst_eta_ratio, 2.0608237876532756));
    CHECK(r.worst_eta_ratio < kEtaDeteriorationFactor);

    // Consistency with a direct enumeration of the 24 children.
    const TetQuality parent = tet_quality(kCorner);
    double min_eta = 1e300;
    for (const Tetrahedron& child : bipartite_grid_tet(kCorner))
      min_eta = std::min(min_eta, tet_quality(child).eta);
    CHECK(rel_close(parent.eta / min_eta, r.worst_eta_ratio));
  }
  SUBCASE("regular tet") {
    const BoundReport r = verify_deterioration_bound(regular_tet(1.0));
    CHECK(r.all_pass());
    CHECK(r.worst_eta_ratio > 1.0);
    CHECK(rel_close(r.worst_eta_ratio, 1.6756230796807006));
  }
  SUBCASE("random tets") {
    Rng rng(161803);
    for (int trial = 0; trial < 300; ++trial) {
      const BoundReport r = verify_deterioration_bound(random_tet(rng));
      CHECK(r.all_pass());
      CHECK(r.worst_eta_ratio >= 1.0 - 1e-12);
    }
  }
}

TEST_CASE("mesh quality aggregates match the per-element lists") {
  const auto [m, rec] = bipartite_refine_3d(sample_corner_tet());
  const MeshQualityReport q = mesh_quality(m);
  CHECK(q.dim == 3);
  REQUIRE(q.per_tet.size() == 24);
  CHECK(q.per_triangle.empty());

  double h = 0, zmax = 0, zsum = 0, emin = 1e300, esum = 0;
  for (const TetQuality& t : q.per_tet) {
    h = std::max(h, t.h);
    zmax = std::max(zmax, t.zeta);
    zsum += t.zeta;
    emin = std::min(emin, t.eta);
    esum += t.eta;
  }
  CHECK(q.h == h);
  CHECK(q.zeta_max == zmax);
  CHECK(rel_close(q.zeta_mean, zsum / 24));
  CHECK(q.eta_min == emin);
  CHECK(rel_close(q.eta_mean, esum / 24));

  // Frozen aggregates for the gridded corner tet.
  CHECK(rel_close(q.h, 0.82915619758885));
  CHECK(rel_close(q.zeta_max, 7.677701634941286));
  CHECK(rel_close(q.zeta_mean, 6.21092802462663));
  CHECK(rel_close(q.eta_min, 0.40757845072870413));
  CHECK(rel_close(q.eta_mean, 0.5456121757121943));

  const int ztotal = std::accumulate(q.zeta_hist.counts.begin(),
                                     q.zeta_hist.counts.end(), 0);
  const int etotal = std::accumulate(q.eta_hist.counts.begin(),
                                     q.eta_hist.counts.end(), 0);
  CHECK(ztotal == 24);
  CHECK(etotal == 24);
}

TEST_CASE("histogram bins cover the metric ranges") {
  // fan(6) triangles are equilateral: all zetas land in [1.5, 2).
  const MeshQualityReport q = mesh_quality(sample_fan(6));
  CHECK(q.dim == 2);
  REQUIRE(q.per_triangle.size() == 6);
  for (const TriQuality& t : q.per_triangle)
    CHECK(rel_close(t.zeta, std::sqrt(3.0), 1e-12));
  REQUIRE(q.zeta_hist.counts.size() == 7);
  CHECK(q.zeta_hist.counts[1] == 6);
  CHECK(std::accumulate(q.zeta_hist.counts.begin(), q.zeta_hist.counts.end(),
                        0) == 6);
  CHECK(q.eta_hist.counts.empty());

  // eta = 1 lands in the last bin, not past it.
  const TetMesh reg = build_tet_mesh(
      {regular_tet(1.0).v[0], regular_tet(1.0).v[1], regular_tet(1.0).v[2],
       regular_tet(1.0).v[3]},
      {{0, 1, 2, 3}});
  const MeshQualityReport r = mesh_quality(reg);
  REQUIRE(r.eta_hist.counts.size() == 10);
  CHECK(r.eta_hist.counts[9] == 1);
}

TEST_CASE("quality of an empty mesh is refused") {
  CHECK_THROWS_AS(mesh_quality(TriMesh{}), EmptyMesh);
  CHECK_THROWS_AS(mesh_quality(TetMesh{}), EmptyMesh);
}
