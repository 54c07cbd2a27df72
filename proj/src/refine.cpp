#include "bgrid/refine.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bgrid/errors.hpp"

namespace bgrid {

namespace {

template <class P>
P average(const std::vector<P>& points, const std::vector<int>& ids) {
  P sum{};
  for (int v : ids) sum = sum + points[v];
  return (1.0 / static_cast<double>(ids.size())) * sum;
}

// Appends refinement vertices, one per distinct key, coordinates computed
// once on first use.
template <class P>
struct VertexPool {
  std::vector<P> points;
  std::map<ProvenanceKey, int> index;
  std::vector<NewVertex> created;

  explicit VertexPool(const std::vector<P>& input) : points(input) {}

  int vertex_for(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    ProvenanceKey key{std::move(ids)};
    auto [it, inserted] = index.try_emplace(key, 0);
    if (inserted) {
      it->second = static_cast<int>(points.size());
      points.push_back(average(points, it->first.ids));
      created.push_back({it->second, it->first});
    }
    return it->second;
  }

  int placed_vertex_for(std::vector<int> ids, P at) {
    std::sort(ids.begin(), ids.end());
    ProvenanceKey key{std::move(ids)};
    auto [it, inserted] = index.try_emplace(key, 0);
    if (inserted) {
      it->second = static_cast<int>(points.size());
      points.push_back(at);
      created.push_back({it->second, it->first});
    }
    return it->second;
  }
};

void finish_record(RefinementRecord& rec, int n_parents) {
  rec.children_of.assign(n_parents, {});
  for (std::size_t c = 0; c < rec.parent_of.size(); ++c)
    rec.children_of[rec.parent_of[c]].push_back(static_cast<int>(c));
}

Triangle2 ccw(Triangle2 t) {
  if (signed_area(t) < 0) std::swap(t.v[1], t.v[2]);
  return t;
}

}  // namespace

std::array<Triangle2, 6> bipartite_grid_triangle(const Triangle2& t,
                                                 const GridOptions& opts) {
  const Point2 c =
      opts.use_incenter ? incenter(t) : barycenter(t);  // throws if degenerate
  std::array<Point2, 3> mid;
  for (int i = 0; i < 3; ++i) mid[i] = 0.5 * (t.v[i] + t.v[(i + 1) % 3]);
  std::array<Triangle2, 6> out;
  for (int i = 0; i < 3; ++i) {
    out[2 * i] = ccw(Triangle2{{t.v[i], mid[i], c}});
    out[2 * i + 1] = ccw(Triangle2{{mid[i], t.v[(i + 1) % 3], c}});
  }
  return out;
}

std::array<Tetrahedron, 24> bipartite_grid_tet(const Tetrahedron& t) {
  if (is_degenerate(t)) throw DegenerateElement("degenerate tetrahedron");
  std::array<int, 4> perm{0, 1, 2, 3};
  std::array<Tetrahedron, 24> out;
  int k = 0;
  do {
    Tetrahedron child;
    Point3 sum{};
    for (int i = 0; i < 4; ++i) {
      sum = sum + t.v[perm[i]];
      child.v[i] = (1.0 / (i + 1.0)) * sum;
    }
    if (signed_volume(child) < 0) std::swap(child.v[2], child.v[3]);
    out[k++] = child;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::pair<TriMesh, RefinementRecord> bipartite_refine_2d(
    const TriMesh& m, const GridOptions& opts) {
  VertexPool<Point2> pool(m.points());
  std::vector<std::array<int, 3>> children;
  children.reserve(m.n_elements() * 6);
  RefinementRecord rec;
  rec.parent_of.reserve(m.n_elements() * 6);
  for (int k = 0; k < m.n_elements(); ++k) {
    const auto& t = m.elements()[k];
    const int c =
        opts.use_incenter
            ? pool.placed_vertex_for({t[0], t[1], t[2]},
                                     incenter(m.element_geometry(k)))
            : pool.vertex_for({t[0], t[1], t[2]});
    for (int i = 0; i < 3; ++i) {
      const int a = t[i], b = t[(i + 1) % 3];
      const int mid = pool.vertex_for({a, b});
      children.push_back({a, mid, c});
      children.push_back({mid, b, c});
      rec.parent_of.push_back(k);
      rec.parent_of.push_back(k);
    }
  }
  rec.new_vertices = std::move(pool.created);
  finish_record(rec, m.n_elements());
  return {build_tri_mesh(std::move(pool.points), std::move(children)),
          std::move(rec)};
}

std::pair<TetMesh, RefinementRecord> bipartite_refine_3d(const TetMesh& m) {
  VertexPool<Point3> pool(m.points());
  std::vector<std::array<int, 4>> children;
  children.reserve(m.n_elements() * 24);
  RefinementRecord rec;
  rec.parent_of.reserve(m.n_elements() * 24);
  for (int k = 0; k < m.n_elements(); ++k) {
    const auto& t = m.elements()[k];
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
      std::array<int, 4> child;
      std::vector<int> prefix;
      for (int i = 0; i < 4; ++i) {
        prefix.push_back(t[perm[i]]);
        child[i] = i == 0 ? t[perm[0]] : pool.vertex_for(prefix);
      }
      Tetrahedron g{{pool.points[child[0]], pool.points[child[1]],
                     pool.points[child[2]], pool.points[child[3]]}};
      if (signed_volume(g) < 0) std::swap(child[2], child[3]);
      children.push_back(child);
      rec.parent_of.push_back(k);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  rec.new_vertices = std::move(pool.created);
  finish_record(rec, m.n_elements());
  return {build_tet_mesh(std::move(pool.points), std::move(children)),
          std::move(rec)};
}

namespace {

std::pair<TriMesh, RefinementRecord> red_refine_once(const TriMesh& m) {
  VertexPool<Point2> pool(m.points());
  std::vector<std::array<int, 3>> children;
  children.reserve(m.n_elements() * 4);
  RefinementRecord rec;
  rec.parent_of.reserve(m.n_elements() * 4);
  for (int k = 0; k < m.n_elements(); ++k) {
    const auto& t = m.elements()[k];
    std::array<int, 3> mid;
    for (int i = 0; i < 3; ++i)
      mid[i] = pool.vertex_for({t[i], t[(i + 1) % 3]});
    children.push_back({t[0], mid[0], mid[2]});
    children.push_back({mid[0], t[1], mid[1]});
    children.push_back({mid[2], mid[1], t[2]});
    children.push_back({mid[0], mid[1], mid[2]});
    for (int i = 0; i < 4; ++i) rec.parent_of.push_back(k);
  }
  rec.new_vertices = std::move(pool.created);
  finish_record(rec, m.n_elements());
  return {build_tri_mesh(std::move(pool.points), std::move(children)),
          std::move(rec)};
}

}  // namespace

std::pair<TriMesh, RefinementRecord> red_refine_2d(const TriMesh& m,
                                                   int levels) {
  if (levels < 1) throw InvalidParam("red refinement needs levels >= 1");
  auto [mesh, rec] = red_refine_once(m);
  for (int l = 1; l < levels; ++l) {
    auto [next, step] = red_refine_once(mesh);
    for (auto& p : step.parent_of) p = rec.parent_of[p];
    step.new_vertices.insert(step.new_vertices.begin(),
                             rec.new_vertices.begin(), rec.new_vertices.end());
    rec = std::move(step);
    mesh = std::move(next);
  }
  finish_record(rec, m.n_elements());
  return {std::move(mesh), std::move(rec)};
}

}  // namespace bgrid
