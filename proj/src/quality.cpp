#include "bgrid/quality.hpp"

#include <algorithm>
#include <limits>

#include "bgrid/errors.hpp"
#include "bgrid/refine.hpp"

namespace bgrid {

const double kThetaUpperCoef = 2.0 / std::pow(6.0, 0.25);
const double kEtaDeteriorationFactor = 36.0 * std::cbrt(9.0);
const double kIteratedEtaLowerFactor = std::cbrt(4.0) / 11.0;
const double kIteratedRegularityConst =
    11.0 * kZetaDeteriorationConst / std::cbrt(4.0);

bool BoundReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const InequalityCheck& c) { return c.pass; });
}

namespace {

TriQuality tri_quality_from(const TriangleMeasures& m) {
  TriQuality q;
  q.h = m.diameter;
  q.rho = 2.0 * m.inradius;
  q.zeta = q.h / q.rho;
  return q;
}

}  // namespace

TriQuality triangle_quality(const Triangle2& t) {
  return tri_quality_from(triangle_measures(t));
}

TriQuality triangle_quality(const Triangle3& t) {
  return tri_quality_from(triangle_measures(t));
}

TetQuality tet_quality(const Tetrahedron& t) {
  const TetMeasures m = tet_measures(t);
  TetQuality q;
  q.h = m.diameter;
  q.rho = 2.0 * m.inradius;
  q.zeta = q.h / q.rho;
  q.theta = 3.0 * m.inradius / m.circumradius;
  q.eta = 12.0 * std::pow(3.0 * m.volume, 2.0 / 3.0) / m.edge_sq_sum;
  return q;
}

namespace {

Histogram make_histogram(std::vector<double> edges,
                         const std::vector<double>& values) {
  Histogram h;
  h.edges = std::move(edges);
  h.counts.assign(h.edges.size() - 1, 0);
  for (double v : values) {
    auto it = std::upper_bound(h.edges.begin(), h.edges.end(), v);
    // Values at or beyond the last edge land in the last bin; below the
    // first edge in the first. Only relevant for eta == 1.0 exactly.
    std::size_t bin = it == h.edges.begin()
                          ? 0
                          : static_cast<std::size_t>(it - h.edges.begin()) - 1;
    bin = std::min(bin, h.counts.size() - 1);
    ++h.counts[bin];
  }
  return h;
}

const std::vector<double> kZetaEdges{
    1.0, 1.5, 2.0, 3.0, 5.0, 10.0, 25.0,
    std::numeric_limits<double>::infinity()};

std::vector<double> eta_edges() {
  std::vector<double> e;
  for (int i = 0; i <= 10; ++i) e.push_back(i / 10.0);
  return e;
}

}  // namespace

MeshQualityReport mesh_quality(const TriMesh& m) {
  if (m.n_elements() == 0) throw EmptyMesh("quality of an empty mesh");
  MeshQualityReport r;
  r.dim = 2;
  std::vector<double> zetas;
  double zeta_sum = 0;
  for (int k = 0; k < m.n_elements(); ++k) {
    const TriQuality q = triangle_quality(m.element_geometry(k));
    r.per_triangle.push_back(q);
    r.h = std::max(r.h, q.h);
    r.zeta_max = std::max(r.zeta_max, q.zeta);
    zeta_sum += q.zeta;
    zetas.push_back(q.zeta);
  }
  r.zeta_mean = zeta_sum / m.n_elements();
  r.zeta_hist = make_histogram(kZetaEdges, zetas);
  return r;
}

MeshQualityReport mesh_quality(const TetMesh& m) {
  if (m.n_elements() == 0) throw EmptyMesh("quality of an empty mesh");
  MeshQualityReport r;
  r.dim = 3;
  r.eta_min = std::numeric_limits<double>::infinity();
  std::vector<double> zetas, etas;
  double zeta_sum = 0, eta_sum = 0;
  for (int k = 0; k < m.n_elements(); ++k) {
    const TetQuality q = tet_quality(m.element_geometry(k));
    r.per_tet.push_back(q);
    r.h = std::max(r.h, q.h);
    r.zeta_max = std::max(r.zeta_max, q.zeta);
    r.eta_min = std::min(r.eta_min, q.eta);
    zeta_sum += q.zeta;
    eta_sum += q.eta;
    zetas.push_back(q.zeta);
    etas.push_back(q.eta);
  }
  r.zeta_mean = zeta_sum / m.n_elements();
  r.eta_mean = eta_sum / m.n_elements();
  r.zeta_hist = make_histogram(kZetaEdges, zetas);
  r.eta_hist = make_histogram(eta_edges(), etas);
  return r;
}

namespace {

InequalityCheck check_abs(std::string name, double lhs, double rhs) {
  InequalityCheck c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = rhs - lhs;
  c.pass = lhs <= rhs + kShapeBoundAbsTol;
  return c;
}

InequalityCheck check_rel(std::string name, double lhs, double rhs) {
  InequalityCheck c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = rhs - lhs;
  c.pass = lhs <= rhs * (1.0 + kDeteriorationRelTol);
  return c;
}

}  // namespace

BoundReport verify_shape_inequalities(const Tetrahedron& t) {
  const TetQuality q = tet_quality(t);
  BoundReport r;
  r.checks.push_back(check_abs("eta^3 <= theta", q.eta * q.eta * q.eta,
                               q.theta));
  r.checks.push_back(check_abs("theta <= (2/6^(1/4)) eta^(3/4)", q.theta,
                               kThetaUpperCoef * std::pow(q.eta, 0.75)));
  r.checks.push_back(check_abs("zeta <= 3/eta^3", q.zeta,
                               3.0 / (q.eta * q.eta * q.eta)));
  return r;
}

BoundReport verify_deterioration_bound(const Tetrahedron& t) {
  const TetQuality parent = tet_quality(t);
  double worst_child_zeta = 0;
  double min_child_eta = std::numeric_limits<double>::infinity();
  for (const Tetrahedron& child : bipartite_grid_tet(t)) {
    const TetQuality q = tet_quality(child);
    worst_child_zeta = std::max(worst_child_zeta, q.zeta);
    min_child_eta = std::min(min_child_eta, q.eta);
  }
  BoundReport r;
  r.worst_eta_ratio = parent.eta / min_child_eta;
  r.checks.push_back(check_rel("eta(K) <= 36*9^(1/3) eta(L)", parent.eta,
                               kEtaDeteriorationFactor * min_child_eta));
  r.checks.push_back(check_rel(
      "zeta(L) <= 2^6*3^9 / eta(K)^3", worst_child_zeta,
      kZetaDeteriorationConst / (parent.eta * parent.eta * parent.eta)));
  return r;
}

}  // namespace bgrid
