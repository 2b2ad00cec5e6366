#pragma once

#include "qtor/polytope.hpp"
#include "qtor/zlinalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qtor {

// A simple polytope together with one integer vector per facet. Validity
// (primitive vectors, independence at every vertex) is checked separately,
// so invalid data can be loaded and reported on.
struct CharacteristicPair {
  SimplePolytope polytope;
  std::vector<Vec> lambda;  // indexed by facet, each of length dim
};

struct ValidationIssue {
  enum class Kind { zero_vector, non_primitive, singular_vertex } kind;
  int index;  // facet index for vector issues, vertex index otherwise
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool valid() const { return issues.empty(); }
};

// Reports every non-primitive facet vector and every vertex whose n x n
// characteristic matrix is singular. Throws dimension_mismatch when the
// vectors do not have length dim.
ValidationReport validate_characteristic(const CharacteristicPair& pair);

// The characteristic data induced on a face: each facet H_j = F cap F_{i_j}
// of F receives the primitive part of lambda(F_{i_j}) pushed through the
// projection onto Z^n / sat(M(F)).
struct InducedPair {
  int face = 0;
  std::size_t quotient_rank = 0;     // dim F
  std::vector<Vec> basis;            // unimodular basis of Z^n; first codim rows span sat(M(F))
  std::vector<int> face_facets;      // face ids (in the ambient polytope) of the facets of F
  std::vector<int> origin_facet;     // the ambient facet index realizing each facet of F
  std::vector<Vec> lambda_f;         // induced vectors, one per facet of F, in Z^{dim F}
  std::optional<SimplePolytope> face_polytope;  // absent for vertices
  std::vector<int> face_vertices;    // ambient vertex ids, in face-polytope vertex order
};

InducedPair induced_characteristic(const CharacteristicPair& pair, int face_id);

// G_F(v): quotient of Z^{dim F} by the induced vectors at v; G_Q(v) when
// face_id is the whole polytope. Must be finite for valid pairs.
FiniteAbelianGroup local_group(const CharacteristicPair& pair, int face_id, int vertex);

// G_F = sat(M(F)) / M(F).
FiniteAbelianGroup face_group(const CharacteristicPair& pair, int face_id);

// Reconstructs a standalone pair (polytope + lambda) from the induced data;
// only defined when dim F >= 1.
CharacteristicPair as_pair(const InducedPair& ind);

}  // namespace qtor
