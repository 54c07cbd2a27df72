#include "bgrid/bipartite.hpp"

#include <algorithm>
#include <queue>

namespace bgrid {

int MeshGraph::n_arcs() const {
  std::size_t deg = 0;
  for (const auto& a : adjacency) deg += a.size();
  return static_cast<int>(deg / 2);
}

namespace {

template <class Table>
MeshGraph graph_from_table(int n_elements, const Table& table) {
  MeshGraph g;
  g.n = n_elements;
  g.adjacency.resize(n_elements);
  for (const auto& [key, inc] : table.entries) {
    (void)key;
    if (inc.size() == 2) {
      g.adjacency[inc[0]].push_back(inc[1]);
      g.adjacency[inc[1]].push_back(inc[0]);
    }
  }
  for (auto& a : g.adjacency) std::sort(a.begin(), a.end());
  return g;
}

}  // namespace

MeshGraph adjacency_graph(const TriMesh& m) {
  return graph_from_table(m.n_elements(), m.edges());
}

MeshGraph adjacency_graph(const TetMesh& m) {
  return graph_from_table(m.n_elements(), m.faces());
}

namespace {

// Walk BFS-tree parent pointers from u and v to their lowest common
// ancestor, then join the two paths with the conflicting arc (v, u). Depths
// of u and v have equal parity, so the cycle length is odd.
OddCycleWitness make_witness(const std::vector<int>& parent,
                             const std::vector<int>& depth, int u, int v) {
  std::vector<int> up_u{u}, up_v{v};
  int a = u, b = v;
  while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
  while (depth[b] > depth[a]) up_v.push_back(b = parent[b]);
  while (a != b) {
    up_u.push_back(a = parent[a]);
    up_v.push_back(b = parent[b]);
  }
  OddCycleWitness w;
  w.cycle = std::move(up_u);                                      // u .. lca
  w.cycle.insert(w.cycle.end(), up_v.rbegin() + 1, up_v.rend());  // .. v
  w.cycle.push_back(u);                                           // close
  return w;
}

}  // namespace

TwoColorResult two_color(const MeshGraph& g) {
  ElementColoring out;
  out.color.assign(g.n, -1);
  out.component.assign(g.n, -1);
  std::vector<int> parent(g.n, -1), depth(g.n, 0);
  for (int root = 0; root < g.n; ++root) {
    if (out.color[root] >= 0) continue;
    const int comp = out.n_components++;
    out.color[root] = 0;
    out.component[root] = comp;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : g.adjacency[u]) {
        if (out.color[v] < 0) {
          out.color[v] = 1 - out.color[u];
          out.component[v] = comp;
          parent[v] = u;
          depth[v] = depth[u] + 1;
          q.push(v);
        } else if (out.color[v] == out.color[u]) {
          return make_witness(parent, depth, u, v);
        }
      }
    }
  }
  return out;
}

IncidenceCheck2D characterization_check_2d(const TriMesh& m) {
  std::vector<int> count(m.n_points(), 0);
  for (const auto& t : m.elements())
    for (int v : t) ++count[v];
  IncidenceCheck2D r;
  for (int v : classify(m).interior_vertices)
    if (count[v] % 2 != 0) r.offending_vertices.push_back({v, count[v]});
  r.bipartite = r.offending_vertices.empty();
  return r;
}

IncidenceCheck3D characterization_check_3d(const TetMesh& m) {
  IncidenceCheck3D r;
  for (const auto& key : classify(m).interior_edges) {
    const auto* inc = m.edges().incident(key);
    if (inc && inc->size() % 2 != 0)
      r.offending_edges.push_back({key, static_cast<int>(inc->size())});
  }
  r.bipartite = r.offending_edges.empty();
  return r;
}

}  // namespace bgrid
