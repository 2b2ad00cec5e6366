#include "qtor/characteristic.hpp"

#include <algorithm>

namespace qtor {

namespace {

void check_shape(const CharacteristicPair& pair) {
  const std::size_t n = pair.polytope.dim();
  if (pair.lambda.size() != pair.polytope.facet_count())
    fail(errc::dimension_mismatch, "one characteristic vector per facet required");
  for (std::size_t i = 0; i < pair.lambda.size(); ++i)
    if (pair.lambda[i].size() != n)
      fail(errc::dimension_mismatch,
           "characteristic vector of facet '" + pair.polytope.facet_name(static_cast<int>(i)) +
               "' has length " + std::to_string(pair.lambda[i].size()) + ", expected " +
               std::to_string(n));
}

}  // namespace

ValidationReport validate_characteristic(const CharacteristicPair& pair) {
  check_shape(pair);
  const SimplePolytope& p = pair.polytope;
  ValidationReport report;
  for (std::size_t i = 0; i < pair.lambda.size(); ++i) {
    const Vec& v = pair.lambda[i];
    Int g = 0;
    for (const Int& x : v) g = gcd_int(g, x);
    if (g == 0)
      report.issues.push_back({ValidationIssue::Kind::zero_vector, static_cast<int>(i)});
    else if (g != 1)
      report.issues.push_back({ValidationIssue::Kind::non_primitive, static_cast<int>(i)});
  }
  for (std::size_t v = 0; v < p.vertex_count(); ++v) {
    std::vector<Vec> cols;
    for (int i : p.vertex_facets(static_cast<int>(v))) cols.push_back(pair.lambda[i]);
    if (determinant(IntMatrix::from_cols(cols, p.dim())) == 0)
      report.issues.push_back({ValidationIssue::Kind::singular_vertex, static_cast<int>(v)});
  }
  return report;
}

InducedPair induced_characteristic(const CharacteristicPair& pair, int face_id) {
  check_shape(pair);
  const SimplePolytope& p = pair.polytope;
  if (face_id < 0 || face_id >= p.face_count()) fail(errc::invalid_face, "face id out of range");
  const Face& f = p.face(face_id);
  const std::size_t n = p.dim();
  const std::size_t k = f.facet_set.size();  // codim

  InducedPair ind;
  ind.face = face_id;
  ind.quotient_rank = n - k;
  ind.face_vertices = f.vertex_set;

  std::vector<Vec> gens;
  for (int i : f.facet_set) gens.push_back(pair.lambda[i]);
  std::vector<Vec> sat = saturate(gens, n);
  if (sat.size() != k)
    fail(errc::rank_deficient, "characteristic vectors of face '" + p.face_name(face_id) +
                                   "' are dependent");

  // Unimodular basis whose first k rows span sat(M(F)); the projection keeps
  // the coordinates on the remaining rows, i.e. the last n-k entries of x*V.
  IntMatrix proj = IntMatrix::identity(n);
  if (k > 0) {
    SmithForm s = smith_normal_form(IntMatrix::from_rows(sat, n));
    for (const Int& d : s.invariant_factors())
      if (d != 1) fail(errc::internal, "saturation is not a direct summand");
    ind.basis = s.v_inv.row_list();
    proj = s.v;
  } else {
    ind.basis = IntMatrix::identity(n).row_list();
  }

  for (int child : p.children(face_id)) {
    const Face& h = p.face(child);
    // unique ambient facet cutting H out of F
    int extra = -1;
    for (int i : h.facet_set)
      if (!std::binary_search(f.facet_set.begin(), f.facet_set.end(), i)) {
        if (extra >= 0) fail(errc::invalid_face, "face lattice is not simple at '" +
                                                     p.face_name(child) + "'");
        extra = i;
      }
    if (extra < 0) fail(errc::internal, "facet of face without a defining ambient facet");
    Vec image = mul_row(pair.lambda[extra], proj);
    Vec reduced(image.begin() + static_cast<long>(k), image.end());
    if (is_zero_vec(reduced))
      fail(errc::rank_deficient, "characteristic vector of facet '" + p.facet_name(extra) +
                                     "' projects to zero on face '" + p.face_name(face_id) + "'");
    ind.face_facets.push_back(child);
    ind.origin_facet.push_back(extra);
    ind.lambda_f.push_back(primitive_part(reduced));
  }

  if (ind.quotient_rank >= 1) {
    SimplePolytope::Data data;
    data.dim = ind.quotient_rank;
    std::vector<int> vertex_pos(p.vertex_count(), -1);
    for (std::size_t t = 0; t < ind.face_vertices.size(); ++t)
      vertex_pos[ind.face_vertices[t]] = static_cast<int>(t);
    // facets of F are cut out by unique ambient facets; reuse their names
    for (std::size_t j = 0; j < ind.face_facets.size(); ++j)
      data.facet_names.push_back(p.facet_name(ind.origin_facet[j]));
    data.vertex_facets.assign(ind.face_vertices.size(), {});
    for (int v : ind.face_vertices) data.vertex_names.push_back(p.vertex_name(v));
    for (std::size_t j = 0; j < ind.face_facets.size(); ++j)
      for (int v : p.face(ind.face_facets[j]).vertex_set)
        data.vertex_facets[vertex_pos[v]].push_back(static_cast<int>(j));
    ind.face_polytope = SimplePolytope::build(std::move(data));
  }
  return ind;
}

FiniteAbelianGroup local_group(const CharacteristicPair& pair, int face_id, int vertex) {
  check_shape(pair);
  const SimplePolytope& p = pair.polytope;
  if (face_id < 0 || face_id >= p.face_count()) fail(errc::invalid_face, "face id out of range");
  const Face& f = p.face(face_id);
  if (!std::binary_search(f.vertex_set.begin(), f.vertex_set.end(), vertex))
    fail(errc::vertex_not_in_face, "vertex '" + p.vertex_name(vertex) + "' is not in face '" +
                                       p.face_name(face_id) + "'");
  if (f.dim == 0) return {};

  if (face_id == p.whole_face()) {
    std::vector<Vec> gens;
    for (int i : p.vertex_facets(vertex)) gens.push_back(pair.lambda[i]);
    LatticeQuotient q = quotient_invariants(p.dim(), gens);
    if (q.free_rank != 0)
      fail(errc::rank_deficient, "characteristic vectors at vertex '" + p.vertex_name(vertex) +
                                     "' do not span a finite quotient");
    return q.torsion;
  }

  InducedPair ind = induced_characteristic(pair, face_id);
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < ind.face_facets.size(); ++j) {
    const Face& h = p.face(ind.face_facets[j]);
    if (std::binary_search(h.vertex_set.begin(), h.vertex_set.end(), vertex))
      gens.push_back(ind.lambda_f[j]);
  }
  LatticeQuotient q = quotient_invariants(ind.quotient_rank, gens);
  if (q.free_rank != 0)
    fail(errc::rank_deficient, "induced vectors at vertex '" + p.vertex_name(vertex) +
                                   "' of face '" + p.face_name(face_id) +
                                   "' do not span a finite quotient");
  return q.torsion;
}

FiniteAbelianGroup face_group(const CharacteristicPair& pair, int face_id) {
  check_shape(pair);
  const SimplePolytope& p = pair.polytope;
  if (face_id < 0 || face_id >= p.face_count()) fail(errc::invalid_face, "face id out of range");
  const Face& f = p.face(face_id);
  if (f.facet_set.empty()) return {};  // M(Q) = 0

  std::vector<Vec> gens;
  for (int i : f.facet_set) gens.push_back(pair.lambda[i]);
  std::vector<Vec> sat = saturate(gens, p.dim());
  if (sat.size() != gens.size())
    fail(errc::rank_deficient,
         "characteristic vectors of face '" + p.face_name(face_id) + "' are dependent");
  std::vector<Vec> coords = coords_in_basis(sat, gens, p.dim());
  LatticeQuotient q = quotient_invariants(sat.size(), coords);
  if (q.free_rank != 0) fail(errc::internal, "face group came out infinite");
  return q.torsion;
}

CharacteristicPair as_pair(const InducedPair& ind) {
  if (!ind.face_polytope) fail(errc::invalid_face, "vertex faces induce no polytope");
  return CharacteristicPair{*ind.face_polytope, ind.lambda_f};
}

}  // namespace qtor
