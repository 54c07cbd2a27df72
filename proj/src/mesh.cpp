#include "bgrid/mesh.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "bgrid/errors.hpp"

namespace bgrid {

EdgeKey make_edge_key(int a, int b) {
  return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

FaceKey make_face_key(int a, int b, int c) {
  FaceKey k{a, b, c};
  std::sort(k.begin(), k.end());
  return k;
}

template <class Key>
int IncidenceTable<Key>::find(const Key& k) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), k,
      [](const auto& e, const Key& key) { return e.first < key; });
  if (it == entries.end() || it->first != k) return -1;
  return static_cast<int>(it - entries.begin());
}

template <class Key>
const std::vector<int>* IncidenceTable<Key>::incident(const Key& k) const {
  const int i = find(k);
  return i < 0 ? nullptr : &entries[i].second;
}

template struct IncidenceTable<EdgeKey>;
template struct IncidenceTable<FaceKey>;

Triangle2 TriMesh::element_geometry(int k) const {
  const auto& t = triangles_[k];
  return Triangle2{{points_[t[0]], points_[t[1]], points_[t[2]]}};
}

Tetrahedron TetMesh::element_geometry(int k) const {
  const auto& t = tets_[k];
  return Tetrahedron{{points_[t[0]], points_[t[1]], points_[t[2]],
                      points_[t[3]]}};
}

namespace {

struct KeyHash {
  std::size_t operator()(const EdgeKey& k) const {
    return std::hash<std::uint64_t>{}(
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(k[0])) << 32) |
        static_cast<std::uint32_t>(k[1]));
  }
  std::size_t operator()(const FaceKey& k) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : k) {
      h ^= static_cast<std::uint32_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

template <class Key>
IncidenceTable<Key> freeze_table(
    std::unordered_map<Key, std::vector<int>, KeyHash>&& map) {
  IncidenceTable<Key> table;
  table.entries.assign(std::make_move_iterator(map.begin()),
                       std::make_move_iterator(map.end()));
  std::sort(table.entries.begin(), table.entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& e : table.entries) std::sort(e.second.begin(), e.second.end());
  return table;
}

template <std::size_t N>
void check_indices(const std::array<int, N>& elem, int n_points, int k) {
  for (int v : elem)
    if (v < 0 || v >= n_points) {
      std::ostringstream os;
      os << "element " << k << " references vertex " << v << " outside [0, "
         << n_points << ")";
      throw OutOfRangeIndex(os.str());
    }
}

template <std::size_t N>
std::array<int, N> sorted_ids(const std::array<int, N>& elem) {
  std::array<int, N> s = elem;
  std::sort(s.begin(), s.end());
  return s;
}

struct SortedElemHash {
  template <std::size_t N>
  std::size_t operator()(const std::array<int, N>& k) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : k) {
      h ^= static_cast<std::uint32_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

TriMesh build_tri_mesh(std::vector<Point2> points,
                       std::vector<std::array<int, 3>> triangles) {
  const int n = static_cast<int>(points.size());
  std::unordered_set<std::array<int, 3>, SortedElemHash> seen;
  seen.reserve(triangles.size());
  for (std::size_t k = 0; k < triangles.size(); ++k) {
    auto& t = triangles[k];
    check_indices(t, n, static_cast<int>(k));
    Triangle2 g{{points[t[0]], points[t[1]], points[t[2]]}};
    if (is_degenerate(g))
      throw DegenerateElement("triangle " + std::to_string(k) +
                              " is degenerate");
    if (signed_area(g) < 0) std::swap(t[1], t[2]);
    if (!seen.insert(sorted_ids(t)).second)
      throw DuplicateElement("triangle " + std::to_string(k) +
                             " duplicates an earlier element");
  }

  std::unordered_map<EdgeKey, std::vector<int>, KeyHash> edges;
  edges.reserve(triangles.size() * 2);
  for (std::size_t k = 0; k < triangles.size(); ++k) {
    const auto& t = triangles[k];
    for (int i = 0; i < 3; ++i) {
      auto& inc = edges[make_edge_key(t[i], t[(i + 1) % 3])];
      inc.push_back(static_cast<int>(k));
      if (inc.size() > 2)
        throw NonConforming("edge (" + std::to_string(t[i]) + "," +
                            std::to_string(t[(i + 1) % 3]) +
                            ") is shared by more than two triangles");
    }
  }
  return TriMesh(std::move(points), std::move(triangles),
                 freeze_table(std::move(edges)));
}

TetMesh build_tet_mesh(std::vector<Point3> points,
                       std::vector<std::array<int, 4>> tets) {
  const int n = static_cast<int>(points.size());
  std::unordered_set<std::array<int, 4>, SortedElemHash> seen;
  seen.reserve(tets.size());
  for (std::size_t k = 0; k < tets.size(); ++k) {
    auto& t = tets[k];
    check_indices(t, n, static_cast<int>(k));
    Tetrahedron g{{points[t[0]], points[t[1]], points[t[2]], points[t[3]]}};
    if (is_degenerate(g))
      throw DegenerateElement("tet " + std::to_string(k) + " is degenerate");
    if (signed_volume(g) < 0) std::swap(t[2], t[3]);
    if (!seen.insert(sorted_ids(t)).second)
      throw DuplicateElement("tet " + std::to_string(k) +
                             " duplicates an earlier element");
  }

  std::unordered_map<FaceKey, std::vector<int>, KeyHash> faces;
  std::unordered_map<EdgeKey, std::vector<int>, KeyHash> edges;
  faces.reserve(tets.size() * 2);
  edges.reserve(tets.size() * 2);
  for (std::size_t k = 0; k < tets.size(); ++k) {
    const auto& t = tets[k];
    for (int f = 0; f < 4; ++f) {
      auto& inc = faces[make_face_key(t[(f + 1) % 4], t[(f + 2) % 4],
                                      t[(f + 3) % 4])];
      inc.push_back(static_cast<int>(k));
      if (inc.size() > 2)
        throw NonConforming("a face of tet " + std::to_string(k) +
                            " is shared by more than two tets");
    }
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        auto& inc = edges[make_edge_key(t[i], t[j])];
        if (inc.empty() || inc.back() != static_cast<int>(k))
          inc.push_back(static_cast<int>(k));
      }
  }
  return TetMesh(std::move(points), std::move(tets),
                 freeze_table(std::move(faces)), freeze_table(std::move(edges)));
}

namespace {

std::vector<int> complement_sorted(const std::vector<char>& flagged,
                                   bool want) {
  std::vector<int> out;
  for (std::size_t i = 0; i < flagged.size(); ++i)
    if (static_cast<bool>(flagged[i]) == want) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace

Classification classify(const TriMesh& m) {
  Classification c;
  std::vector<char> vertex_ext(m.n_points(), 0);
  std::vector<char> elem_ext(m.n_elements(), 0);
  for (const auto& [key, inc] : m.edges().entries) {
    if (inc.size() == 1) {
      c.exterior_edges.push_back(key);
      vertex_ext[key[0]] = vertex_ext[key[1]] = 1;
      elem_ext[inc[0]] = 1;
    } else {
      c.interior_edges.push_back(key);
    }
  }
  c.exterior_vertices = complement_sorted(vertex_ext, true);
  c.interior_vertices = complement_sorted(vertex_ext, false);
  c.exterior_elements = complement_sorted(elem_ext, true);
  c.interior_elements = complement_sorted(elem_ext, false);
  return c;
}

Classification classify(const TetMesh& m) {
  Classification c;
  std::vector<char> vertex_ext(m.n_points(), 0);
  std::vector<char> elem_ext(m.n_elements(), 0);
  std::unordered_set<EdgeKey, KeyHash> ext_edges;
  for (const auto& [key, inc] : m.faces().entries) {
    if (inc.size() == 1) {
      c.exterior_faces.push_back(key);
      elem_ext[inc[0]] = 1;
      for (int v : key) vertex_ext[v] = 1;
      ext_edges.insert(make_edge_key(key[0], key[1]));
      ext_edges.insert(make_edge_key(key[0], key[2]));
      ext_edges.insert(make_edge_key(key[1], key[2]));
    } else {
      c.interior_faces.push_back(key);
    }
  }
  for (const auto& [key, inc] : m.edges().entries) {
    (void)inc;
    if (ext_edges.count(key))
      c.exterior_edges.push_back(key);
    else
      c.interior_edges.push_back(key);
  }
  c.exterior_vertices = complement_sorted(vertex_ext, true);
  c.interior_vertices = complement_sorted(vertex_ext, false);
  c.exterior_elements = complement_sorted(elem_ext, true);
  c.interior_elements = complement_sorted(elem_ext, false);
  return c;
}

namespace {

template <class Mesh, class Geometry>
void report_element_defects(const Mesh& m, ConformityReport& report,
                            Geometry geometry) {
  std::unordered_set<decltype(sorted_ids(m.elements()[0])), SortedElemHash>
      seen;
  for (int k = 0; k < m.n_elements(); ++k) {
    if (is_degenerate(geometry(k)))
      report.violations.push_back(
          {"degenerate-element", "element " + std::to_string(k)});
    if (!seen.insert(sorted_ids(m.elements()[k])).second)
      report.violations.push_back(
          {"duplicate-element", "element " + std::to_string(k)});
  }
}

std::string edge_text(const EdgeKey& e) {
  return "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + ")";
}

}  // namespace

ConformityReport check_conformity(const TriMesh& m) {
  ConformityReport report;
  report_element_defects(m, report,
                         [&](int k) { return m.element_geometry(k); });
  for (const auto& [key, inc] : m.edges().entries)
    if (inc.size() > 2)
      report.violations.push_back({"non-manifold-edge", "edge " +
                                   edge_text(key) + " has " +
                                   std::to_string(inc.size()) + " triangles"});
  return report;
}

ConformityReport check_conformity(const TetMesh& m) {
  ConformityReport report;
  report_element_defects(m, report,
                         [&](int k) { return m.element_geometry(k); });
  for (const auto& [key, inc] : m.faces().entries)
    if (inc.size() > 2)
      report.violations.push_back(
          {"non-manifold-face", "face has " + std::to_string(inc.size()) +
                                " tets"});

  // Link of an edge: incident tets, adjacent when they share a face that
  // contains the edge. Interior edge requires one closed cycle; any edge
  // with a disconnected link is pinched (non-manifold).
  for (const auto& [key, inc] : m.edges().entries) {
    const int n = static_cast<int>(inc.size());
    std::unordered_map<FaceKey, std::vector<int>, KeyHash> local_faces;
    bool interior = true;
    for (int li = 0; li < n; ++li) {
      const auto& t = m.elements()[inc[li]];
      for (int a = 0; a < 4; ++a) {
        const int v = t[a];
        if (v == key[0] || v == key[1]) continue;
        local_faces[make_face_key(key[0], key[1], v)].push_back(li);
      }
    }
    std::vector<std::vector<int>> adj(n);
    for (const auto& [fk, tets] : local_faces) {
      (void)fk;
      if (tets.size() == 1)
        interior = false;
      else
        for (std::size_t i = 0; i + 1 < tets.size(); ++i) {
          adj[tets[i]].push_back(tets[i + 1]);
          adj[tets[i + 1]].push_back(tets[i]);
        }
    }
    int components = 0;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
      if (seen[s]) continue;
      ++components;
      std::vector<int> stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[u])
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
    }
    if (components > 1)
      report.violations.push_back(
          {"non-manifold-edge", "edge " + edge_text(key) + " link has " +
                                std::to_string(components) + " components"});
    else if (interior) {
      bool cycle = true;
      for (int li = 0; li < n; ++li)
        if (adj[li].size() != 2) cycle = false;
      if (!cycle || n < 3)
        report.violations.push_back(
            {"interior-edge-link-not-cycle",
             "edge " + edge_text(key) + " with " + std::to_string(n) +
                 " tets"});
    }
  }
  return report;
}

int euler_characteristic(const TriMesh& m) {
  return m.n_points() - static_cast<int>(m.edges().size()) + m.n_elements();
}

int euler_characteristic(const TetMesh& m) {
  return m.n_points() - static_cast<int>(m.edges().size()) +
         static_cast<int>(m.faces().size()) - m.n_elements();
}

}  // namespace bgrid
