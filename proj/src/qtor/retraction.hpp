#pragma once

#include "qtor/characteristic.hpp"
#include "qtor/polytope.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

namespace qtor {

// A subcomplex of the face lattice, closed under taking subfaces, stored by
// its maximal faces (an antichain) plus the vertices removed so far.
struct Subcomplex {
  std::vector<int> maximal;  // face ids, sorted
  std::set<int> excluded;    // vertex ids

  bool empty() const { return maximal.empty(); }
  bool single_vertex(const SimplePolytope& p) const {
    return maximal.size() == 1 && p.face(maximal[0]).dim == 0;
  }
};

Subcomplex full_complex(const SimplePolytope& p);

// Vertices lying in exactly one maximal face; for such a vertex the member
// faces through it are exactly the faces of that one maximal face, which is
// the combinatorial corner condition. Input order.
std::vector<int> free_vertices(const SimplePolytope& p, const Subcomplex& b);

// Returns the unique maximal face at v and the union of all member faces
// not containing v.
std::pair<int, Subcomplex> retraction_step(const SimplePolytope& p, const Subcomplex& b, int v);

struct RetractionStep {
  Subcomplex complex;  // B before the step
  int max_face;        // P, the unique maximal face at the vertex
  int vertex;
};

struct RetractionSequence {
  std::vector<RetractionStep> steps;  // one per vertex, last complex is a point
};

// Depth-first enumeration over free-vertex choices in input order; complete
// sequences only. cap = 0 means unbounded.
std::vector<RetractionSequence> enumerate_retractions(const SimplePolytope& p, std::size_t cap);

// Replays a vertex order as a retraction sequence, if it is one.
std::optional<RetractionSequence> sequence_from_order(const SimplePolytope& p,
                                                      const std::vector<int>& order);

struct DivisiveResult {
  enum class Kind { certificate, none, undecided } kind;
  std::optional<RetractionSequence> certificate;
  std::size_t nodes_visited = 0;
  bool first_step_admissible = false;  // some starting vertex had trivial local group
};

inline constexpr std::size_t k_default_divisive_budget = 1'000'000;

// Searches for a retraction sequence whose step-local groups G_{P_i}(v_i)
// are all trivial (the final single-vertex step is exempt). First hit in
// deterministic DFS order; node budget turns exhaustion into 'undecided'.
DivisiveResult is_divisive(const CharacteristicPair& pair,
                           std::size_t node_budget = k_default_divisive_budget);

struct DirectedSkeleton {
  std::vector<int> order;                         // vertex ids, step order
  std::vector<std::size_t> rank;                  // by vertex id
  std::vector<std::vector<std::size_t>> in_from;  // per rank i: ranks k > i with an edge to i
};

// Orients every skeleton edge from the later vertex toward the earlier one;
// the in-degree of step i equals dim P_i.
DirectedSkeleton directed_skeleton(const SimplePolytope& p, const RetractionSequence& seq);

// Multiset {dim P_i} as per-dimension counts c_0..c_n.
std::vector<std::size_t> cell_dimension_counts(const SimplePolytope& p,
                                               const RetractionSequence& seq);

}  // namespace qtor
