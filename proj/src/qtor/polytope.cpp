#include "qtor/polytope.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace qtor {

namespace {

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

SimplePolytope SimplePolytope::build(Data data) {
  SimplePolytope p;
  p.n_ = data.dim;
  p.facet_names_ = std::move(data.facet_names);
  p.vertex_names_ = std::move(data.vertex_names);
  p.vertex_facets_ = std::move(data.vertex_facets);

  const std::size_t n = p.n_;
  const std::size_t d = p.facet_names_.size();
  const std::size_t m = p.vertex_names_.size();

  if (n < 1) fail(errc::invalid_input, "polytope dimension must be at least 1");
  if (n > 20) fail(errc::invalid_input, "polytope dimension too large");
  if (p.vertex_facets_.size() != m) fail(errc::invalid_input, "vertex list shape mismatch");

  {
    std::set<std::string> seen;
    for (const auto& s : p.facet_names_) {
      if (s.empty() || s == "Q" || s.find('^') != std::string::npos)
        fail(errc::invalid_input, "bad facet name '" + s + "'");
      if (!seen.insert(s).second) fail(errc::invalid_input, "duplicate facet name '" + s + "'");
    }
    for (const auto& s : p.vertex_names_) {
      if (s.empty() || s == "Q" || s.find('^') != std::string::npos)
        fail(errc::invalid_input, "bad vertex name '" + s + "'");
      if (!seen.insert(s).second) fail(errc::invalid_input, "duplicate name '" + s + "'");
    }
  }

  for (std::size_t v = 0; v < m; ++v) {
    auto& fs = p.vertex_facets_[v];
    std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    for (int i : fs)
      if (i < 0 || static_cast<std::size_t>(i) >= d)
        fail(errc::invalid_input, "facet index out of range at vertex '" + p.vertex_names_[v] + "'");
    if (fs.size() != n)
      fail(errc::not_simple, "vertex '" + p.vertex_names_[v] + "' lies in " +
                                 std::to_string(fs.size()) + " facets, expected " + std::to_string(n));
  }

  {
    std::map<std::vector<int>, int> seen;
    for (std::size_t v = 0; v < m; ++v) {
      auto [it, fresh] = seen.emplace(p.vertex_facets_[v], static_cast<int>(v));
      if (!fresh)
        fail(errc::duplicate_vertex, "vertices '" + p.vertex_names_[it->second] + "' and '" +
                                         p.vertex_names_[v] + "' share the same facet set");
    }
  }

  if (d < n + 1) fail(errc::invalid_input, "a simple polytope needs at least dim+1 facets");
  if (m < n + 1) fail(errc::invalid_input, "a simple polytope needs at least dim+1 vertices");

  p.facet_vertices_.assign(d, {});
  for (std::size_t v = 0; v < m; ++v)
    for (int i : p.vertex_facets_[v]) p.facet_vertices_[i].push_back(static_cast<int>(v));
  for (std::size_t i = 0; i < d; ++i)
    if (p.facet_vertices_[i].empty())
      fail(errc::invalid_input, "facet '" + p.facet_names_[i] + "' contains no vertex");

  // vertex-edge graph: adjacent iff the facet sets share n-1 elements
  {
    std::vector<int> comp(m, -1);
    std::queue<std::size_t> bfs;
    bfs.push(0);
    comp[0] = 0;
    while (!bfs.empty()) {
      std::size_t v = bfs.front();
      bfs.pop();
      for (std::size_t w = 0; w < m; ++w) {
        if (comp[w] >= 0) continue;
        std::vector<int> common;
        std::set_intersection(p.vertex_facets_[v].begin(), p.vertex_facets_[v].end(),
                              p.vertex_facets_[w].begin(), p.vertex_facets_[w].end(),
                              std::back_inserter(common));
        if (common.size() == n - 1) {
          comp[w] = 0;
          bfs.push(w);
        }
      }
    }
    for (std::size_t v = 0; v < m; ++v)
      if (comp[v] < 0) fail(errc::disconnected_skeleton, "vertex-edge graph is disconnected");
  }

  p.generate_faces();
  return p;
}

void SimplePolytope::generate_faces() {
  const std::size_t n = n_;
  const std::size_t m = vertex_names_.size();

  // Each face through v corresponds to a subset of v's n facets, so closing
  // every per-vertex subset finds all faces; canonicalize by vertex set.
  std::map<std::vector<int>, std::vector<int>> by_vertices;  // vertex set -> maximal facet set
  for (std::size_t v = 0; v < m; ++v) {
    const auto& fs = vertex_facets_[v];
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
      std::vector<int> sel;
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (std::size_t(1) << b)) sel.push_back(fs[b]);

      std::vector<int> verts;
      if (sel.empty()) {
        verts.resize(m);
        for (std::size_t w = 0; w < m; ++w) verts[w] = static_cast<int>(w);
      } else {
        verts = facet_vertices_[sel[0]];
        for (std::size_t t = 1; t < sel.size() && !verts.empty(); ++t) {
          std::vector<int> next;
          std::set_intersection(verts.begin(), verts.end(), facet_vertices_[sel[t]].begin(),
                                facet_vertices_[sel[t]].end(), std::back_inserter(next));
          verts = std::move(next);
        }
      }
      if (verts.empty() || by_vertices.count(verts)) continue;
      std::vector<int> canon = vertex_facets_[verts[0]];
      for (std::size_t t = 1; t < verts.size(); ++t) {
        std::vector<int> next;
        std::set_intersection(canon.begin(), canon.end(), vertex_facets_[verts[t]].begin(),
                              vertex_facets_[verts[t]].end(), std::back_inserter(next));
        canon = std::move(next);
      }
      by_vertices.emplace(std::move(verts), std::move(canon));
    }
  }

  std::vector<Face> faces;
  for (auto& [verts, canon] : by_vertices) {
    Face f;
    f.vertex_set = verts;
    f.facet_set = canon;
    f.dim = static_cast<int>(n - canon.size());
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.facet_set.size() != b.facet_set.size()) return a.facet_set.size() < b.facet_set.size();
    return a.facet_set < b.facet_set;
  });
  faces_ = std::move(faces);

  if (faces_.empty() || !faces_[0].facet_set.empty())
    fail(errc::invalid_input, "some facet contains every vertex");

  for (int id = 0; id < face_count(); ++id) face_by_vertices_[faces_[id].vertex_set] = id;

  vertex_face_.assign(m, -1);
  for (std::size_t v = 0; v < m; ++v) {
    auto it = face_by_vertices_.find({static_cast<int>(v)});
    if (it == face_by_vertices_.end()) fail(errc::internal, "vertex face missing");
    vertex_face_[v] = it->second;
  }
  facet_face_.assign(facet_names_.size(), -1);
  for (std::size_t i = 0; i < facet_names_.size(); ++i) {
    auto it = face_by_vertices_.find(facet_vertices_[i]);
    if (it == face_by_vertices_.end() ||
        faces_[it->second].dim != static_cast<int>(n) - 1)
      fail(errc::invalid_input, "facet '" + facet_names_[i] + "' is not a codimension-1 face");
    facet_face_[i] = it->second;
  }

  children_.assign(faces_.size(), {});
  for (int a = 0; a < face_count(); ++a)
    for (int b = 0; b < face_count(); ++b) {
      if (faces_[b].dim != faces_[a].dim - 1) continue;
      if (face_contains(a, b)) children_[a].push_back(b);
    }

  for (int id = 0; id < face_count(); ++id) {
    if (faces_[id].dim != 1) continue;
    if (faces_[id].vertex_set.size() != 2)
      fail(errc::invalid_input, "one-dimensional face with " +
                                    std::to_string(faces_[id].vertex_set.size()) + " vertices");
    skeleton_.push_back({id, faces_[id].vertex_set[0], faces_[id].vertex_set[1]});
  }
  std::sort(skeleton_.begin(), skeleton_.end(), [](const SkeletonEdge& a, const SkeletonEdge& b) {
    return std::pair(a.v0, a.v1) < std::pair(b.v0, b.v1);
  });
  vertex_edges_.assign(m, {});
  for (std::size_t e = 0; e < skeleton_.size(); ++e) {
    vertex_edges_[skeleton_[e].v0].push_back(static_cast<int>(e));
    vertex_edges_[skeleton_[e].v1].push_back(static_cast<int>(e));
  }
}

int SimplePolytope::facet_index(const std::string& name) const {
  for (std::size_t i = 0; i < facet_names_.size(); ++i)
    if (facet_names_[i] == name) return static_cast<int>(i);
  return -1;
}

int SimplePolytope::vertex_index(const std::string& name) const {
  for (std::size_t v = 0; v < vertex_names_.size(); ++v)
    if (vertex_names_[v] == name) return static_cast<int>(v);
  return -1;
}

int SimplePolytope::find_face_by_vertices(const std::vector<int>& sorted_vertices) const {
  auto it = face_by_vertices_.find(sorted_vertices);
  return it == face_by_vertices_.end() ? -1 : it->second;
}

bool SimplePolytope::face_contains(int outer, int inner) const {
  const auto& a = faces_[outer].vertex_set;
  const auto& b = faces_[inner].vertex_set;
  return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<std::size_t> SimplePolytope::f_vector() const {
  std::vector<std::size_t> f(n_ + 1, 0);
  for (const Face& face : faces_) ++f[face.dim];
  return f;
}

std::vector<long long> SimplePolytope::h_vector() const {
  // coefficients of sum_j f_j (t-1)^j
  std::vector<std::size_t> f = f_vector();
  std::vector<long long> h(n_ + 1, 0);
  std::vector<long long> pw{1};  // (t-1)^j
  for (std::size_t j = 0; j <= n_; ++j) {
    for (std::size_t k = 0; k < pw.size(); ++k) h[k] += static_cast<long long>(f[j]) * pw[k];
    std::vector<long long> next(pw.size() + 1, 0);
    for (std::size_t k = 0; k < pw.size(); ++k) {
      next[k + 1] += pw[k];
      next[k] -= pw[k];
    }
    pw = std::move(next);
  }
  return h;
}

std::string SimplePolytope::face_name(int id) const {
  const Face& f = faces_[id];
  if (f.dim == static_cast<int>(n_)) return "Q";
  if (f.dim == 0) return vertex_names_[f.vertex_set[0]];
  std::vector<std::string> parts;
  for (int i : f.facet_set) parts.push_back(facet_names_[i]);
  return join(parts, '^');
}

int SimplePolytope::parse_face_name(const std::string& name) const {
  if (name == "Q") return whole_face();
  if (int v = vertex_index(name); v >= 0) return face_of_vertex(v);
  std::vector<int> sel;
  std::stringstream ss(name);
  std::string part;
  while (std::getline(ss, part, '^')) {
    int i = facet_index(part);
    if (i < 0) fail(errc::invalid_face, "unknown face '" + name + "'");
    sel.push_back(i);
  }
  if (sel.empty()) fail(errc::invalid_face, "empty face name");
  std::vector<int> verts = facet_vertices_[sel[0]];
  for (std::size_t t = 1; t < sel.size() && !verts.empty(); ++t) {
    std::vector<int> next;
    std::set_intersection(verts.begin(), verts.end(), facet_vertices_[sel[t]].begin(),
                          facet_vertices_[sel[t]].end(), std::back_inserter(next));
    verts = std::move(next);
  }
  int id = verts.empty() ? -1 : find_face_by_vertices(verts);
  if (id < 0) fail(errc::invalid_face, "'" + name + "' names an empty intersection");
  return id;
}

}  // namespace qtor
