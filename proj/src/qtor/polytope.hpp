#pragma once

#include "qtor/errors.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace qtor {

// A face, canonically represented: facet_set is the set of ALL facets
// containing it (size = codim for a simple polytope), vertex_set the
// vertices it contains. The whole polytope has empty facet_set.
struct Face {
  std::vector<int> facet_set;   // sorted facet indices
  std::vector<int> vertex_set;  // sorted vertex indices
  int dim = 0;
};

struct SkeletonEdge {
  int face_id;
  int v0, v1;  // v0 < v1 in input order
};

// Purely combinatorial simple polytope: the abstract face lattice generated
// by facet-vertex incidence. No coordinates anywhere; polytopality beyond
// simplicity and skeleton connectivity is trusted, not verified.
class SimplePolytope {
 public:
  struct Data {
    std::size_t dim = 0;
    std::vector<std::string> facet_names;
    std::vector<std::string> vertex_names;
    std::vector<std::vector<int>> vertex_facets;
  };

  static SimplePolytope build(Data data);

  std::size_t dim() const { return n_; }
  std::size_t facet_count() const { return facet_names_.size(); }
  std::size_t vertex_count() const { return vertex_names_.size(); }

  const std::vector<int>& vertex_facets(int v) const { return vertex_facets_[v]; }
  const std::string& facet_name(int i) const { return facet_names_[i]; }
  const std::string& vertex_name(int v) const { return vertex_names_[v]; }
  int facet_index(const std::string& name) const;  // -1 if absent
  int vertex_index(const std::string& name) const;

  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int id) const { return faces_[id]; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int whole_face() const { return 0; }  // the polytope itself is face id 0
  int face_of_vertex(int v) const { return vertex_face_[v]; }
  int face_of_facet(int i) const { return facet_face_[i]; }
  int find_face_by_vertices(const std::vector<int>& sorted_vertices) const;  // -1 if absent

  // faces of one dimension less contained in the given face
  const std::vector<int>& children(int face_id) const { return children_[face_id]; }
  bool face_contains(int outer, int inner) const;

  const std::vector<SkeletonEdge>& skeleton() const { return skeleton_; }
  const std::vector<int>& edges_at_vertex(int v) const { return vertex_edges_[v]; }

  std::vector<std::size_t> f_vector() const;  // counts by dimension 0..n
  std::vector<long long> h_vector() const;

  // "Q" for the whole polytope, the vertex name for vertices, facet names
  // joined by '^' otherwise.
  std::string face_name(int id) const;
  // Accepts canonical names and any '^'-joined facet list defining the face.
  int parse_face_name(const std::string& name) const;  // throws invalid_face

 private:
  std::size_t n_ = 0;
  std::vector<std::string> facet_names_;
  std::vector<std::string> vertex_names_;
  std::vector<std::vector<int>> vertex_facets_;
  std::vector<std::vector<int>> facet_vertices_;

  std::vector<Face> faces_;
  std::map<std::vector<int>, int> face_by_vertices_;
  std::vector<int> vertex_face_;
  std::vector<int> facet_face_;
  std::vector<std::vector<int>> children_;
  std::vector<SkeletonEdge> skeleton_;
  std::vector<std::vector<int>> vertex_edges_;

  void generate_faces();
};

}  // namespace qtor
