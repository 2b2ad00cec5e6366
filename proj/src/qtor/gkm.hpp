#pragma once

#include "qtor/characteristic.hpp"
#include "qtor/laurent.hpp"
#include "qtor/retraction.hpp"

#include <map>
#include <optional>
#include <vector>

namespace qtor {

enum class Theory { K, H };

// Primitive generator of { x : <x, lambda(F)> = 0 for the n-1 facets F
// through the edge }; leading nonzero entry positive.
Vec edge_character(const CharacteristicPair& pair, int edge_face_id);

struct GkmEdge {
  int face_id;
  int va, vb;  // vertex ids, va < vb in input order
  Vec character;
};

// 1-skeleton with primitive edge characters plus a vertex order taken from a
// retraction sequence; in_from[i] lists the later steps with an edge into i.
struct GkmGraph {
  std::size_t n = 0;  // ambient lattice rank
  std::vector<int> order;
  std::vector<std::size_t> rank;
  std::vector<GkmEdge> edges;  // sorted by (va, vb)
  std::vector<std::vector<std::size_t>> edges_at;  // by vertex id -> edge indices
  std::vector<std::vector<std::size_t>> in_from;   // by step -> later steps

  std::size_t vertex_count() const { return order.size(); }
};

GkmGraph build_gkm_graph(const CharacteristicPair& pair, const RetractionSequence& seq);

// Edge list with characters, no vertex order needed.
std::vector<GkmEdge> gkm_edges(const CharacteristicPair& pair);

struct CoprimalityResult {
  bool ok = true;
  int vertex = -1;           // witness vertex when failed
  std::size_t e0 = 0, e1 = 0;  // offending edge indices
};

// Euler classes of distinct edges at a vertex are coprime exactly when their
// characters are pairwise non-proportional; reports the first failure.
CoprimalityResult coprimality_check(const GkmGraph& g);

// K-theoretic Euler class 1 - x^{-u}.
LaurentPoly euler_class_k(const Vec& u);
// Cohomological Euler class <u, x>.
LaurentPoly euler_class_h(const Vec& u);

// Reduction onto the canonical residue modulo the ideal generated by the
// Euler classes of a saturated list of primitive vectors. For K the quotient
// collapses exponents along span(generators); for H it substitutes a
// unimodular change of variables sending each generator's form to a
// coordinate and sets those coordinates to zero. Residues are canonical, so
// congruence tests compare reduced forms.
class IdealReducer {
 public:
  IdealReducer(std::vector<Vec> generators, std::size_t n);

  const std::vector<Vec>& generators() const { return gens_; }
  std::size_t residue_vars() const { return n_ - k_; }

  LaurentPoly reduce(const LaurentPoly& f, Theory theory) const;
  bool contains(const LaurentPoly& f, Theory theory) const { return reduce(f, theory).is_zero(); }

 private:
  std::vector<Vec> gens_;
  std::size_t n_ = 0, k_ = 0;
  IntMatrix collapse_;  // K: exponent w maps to the last n-k entries of w * collapse_
  IntMatrix subst_;     // H: x = subst_ * y, generators' forms become y_0..y_{k-1}
};

// Does 1 - x^{-u} divide f in the Laurent ring? u primitive; the verdict is
// invariant under negating u.
bool divides_k(const Vec& u, const LaurentPoly& f);
// Does the linear form <u, x> divide f in the polynomial ring?
bool divides_h(const Vec& u, const LaurentPoly& f);
bool euler_divides(Theory theory, const Vec& u, const LaurentPoly& f);

// One ring element per vertex (vertex input order).
struct Section {
  Theory theory = Theory::K;
  std::vector<LaurentPoly> value;
};

struct EdgeWitness {
  int va = -1, vb = -1;
};

struct SectionCheck {
  bool ok = true;
  std::optional<EdgeWitness> witness;       // first failing edge
  std::vector<bool> edge_ok;                // aligned with the edge list
};

SectionCheck check_section(const GkmGraph& g, const Section& s);
SectionCheck check_section(const CharacteristicPair& pair, const Section& s);

// Saturated basis of the kernel of the face's characteristic matrix; dim F
// generators. Empty for vertices, a full basis for the whole polytope.
std::vector<Vec> face_ideal(const CharacteristicPair& pair, int face_id);

// One representative per face, read modulo the face's ideal.
struct PiecewiseElement {
  Theory theory = Theory::K;
  std::map<int, LaurentPoly> rep;  // by face id
};

struct FacePairWitness {
  int inner = -1, outer = -1;  // inner is a facet of outer
};

struct PiecewiseCheck {
  bool ok = true;
  std::optional<FacePairWitness> witness;
};

// Every covering pair must agree modulo the larger face's ideal; agreement
// propagates along chains because the ideals grow with the face.
PiecewiseCheck check_piecewise(const CharacteristicPair& pair, const PiecewiseElement& p);

struct PiecewiseBuild {
  enum class Status { ok, not_in_gamma, incongruent } status = Status::ok;
  std::optional<PiecewiseElement> element;
  std::optional<EdgeWitness> edge_witness;  // when not_in_gamma
  struct FaceWitness {
    int face = -1, va = -1, vb = -1;
  };
  std::optional<FaceWitness> face_witness;  // when incongruent
};

// Checks the section, then assigns each face its first vertex's value after
// verifying all vertex values agree modulo the face ideal.
PiecewiseBuild piecewise_from_section(const CharacteristicPair& pair, const Section& s);

// Restriction to the vertex faces.
Section section_from_piecewise(const CharacteristicPair& pair, const PiecewiseElement& p);

}  // namespace qtor
