#include "qtor/gkm.hpp"

#include <algorithm>

namespace qtor {

Vec edge_character(const CharacteristicPair& pair, int edge_face_id) {
  const SimplePolytope& p = pair.polytope;
  const Face& e = p.face(edge_face_id);
  if (e.dim != 1) fail(errc::invalid_face, "'" + p.face_name(edge_face_id) + "' is not an edge");
  std::vector<Vec> cols;
  for (int i : e.facet_set) cols.push_back(pair.lambda[i]);
  std::vector<Vec> ker = kernel_basis(IntMatrix::from_cols(cols, p.dim()));
  if (ker.size() != 1)
    fail(errc::degenerate_edge,
         "edge '" + p.face_name(edge_face_id) + "' has kernel rank " + std::to_string(ker.size()));
  return ker[0];
}

std::vector<GkmEdge> gkm_edges(const CharacteristicPair& pair) {
  std::vector<GkmEdge> out;
  for (const SkeletonEdge& e : pair.polytope.skeleton())
    out.push_back({e.face_id, e.v0, e.v1, edge_character(pair, e.face_id)});
  return out;
}

GkmGraph build_gkm_graph(const CharacteristicPair& pair, const RetractionSequence& seq) {
  const SimplePolytope& p = pair.polytope;
  DirectedSkeleton ds = directed_skeleton(p, seq);
  GkmGraph g;
  g.n = p.dim();
  g.order = ds.order;
  g.rank = ds.rank;
  g.edges = gkm_edges(pair);
  g.edges_at.assign(p.vertex_count(), {});
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    g.edges_at[g.edges[e].va].push_back(e);
    g.edges_at[g.edges[e].vb].push_back(e);
  }
  g.in_from = ds.in_from;
  return g;
}

CoprimalityResult coprimality_check(const GkmGraph& g) {
  for (std::size_t v = 0; v < g.edges_at.size(); ++v) {
    const auto& inc = g.edges_at[v];
    for (std::size_t a = 0; a < inc.size(); ++a)
      for (std::size_t b = a + 1; b < inc.size(); ++b) {
        const Vec& u = g.edges[inc[a]].character;
        const Vec& w = g.edges[inc[b]].character;
        bool proportional = true;
        for (std::size_t i = 0; i < u.size() && proportional; ++i)
          for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] * w[j] - u[j] * w[i] != 0) {
              proportional = false;
              break;
            }
        if (proportional)
          return {false, static_cast<int>(v), inc[a], inc[b]};
      }
  }
  return {};
}

LaurentPoly euler_class_k(const Vec& u) {
  if (is_zero_vec(u)) fail(errc::zero_vector, "Euler class of the zero character");
  LaurentPoly p = LaurentPoly::constant(u.size(), 1);
  LaurentPoly::Exp e(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) e[i] = -to_i64(u[i]);
  p.add_term(e, -1);
  return p;
}

LaurentPoly euler_class_h(const Vec& u) {
  if (is_zero_vec(u)) fail(errc::zero_vector, "Euler class of the zero character");
  LaurentPoly p(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    LaurentPoly::Exp e(u.size(), 0);
    e[i] = 1;
    p.add_term(e, u[i]);
  }
  return p;
}

IdealReducer::IdealReducer(std::vector<Vec> generators, std::size_t n)
    : gens_(std::move(generators)), n_(n), k_(gens_.size()) {
  if (k_ == 0) {
    collapse_ = IntMatrix::identity(n_);
    subst_ = IntMatrix::identity(n_);
    return;
  }
  SmithForm s = smith_normal_form(IntMatrix::from_rows(gens_, n_));
  if (s.rank != k_) fail(errc::rank_deficient, "ideal generators are dependent");
  for (const Int& d : s.invariant_factors())
    if (d != 1) fail(errc::rank_deficient, "ideal generators do not span a direct summand");
  collapse_ = s.v;
  // subst = v * blockdiag(u, I): generator rows times subst give e_0..e_{k-1}
  subst_ = IntMatrix(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (j < k_) {
        Int acc = 0;
        for (std::size_t t = 0; t < k_; ++t) acc += s.v.at(i, t) * s.u.at(t, j);
        subst_.at(i, j) = acc;
      } else {
        subst_.at(i, j) = s.v.at(i, j);
      }
    }
}

LaurentPoly IdealReducer::reduce(const LaurentPoly& f, Theory theory) const {
  if (f.nvars() != n_) fail(errc::size_mismatch, "variable count mismatch");
  if (k_ == 0) return f;
  const std::size_t out = n_ - k_;
  if (theory == Theory::K) {
    LaurentPoly r(out);
    for (const auto& [e, c] : f.terms()) {
      LaurentPoly::Exp key(out);
      for (std::size_t j = 0; j < out; ++j) {
        Int acc = 0;
        for (std::size_t i = 0; i < n_; ++i) acc += Int(e[i]) * collapse_.at(i, k_ + j);
        key[j] = to_i64(acc);
      }
      r.add_term(key, c);
    }
    return r;
  }
  // H: substitute x_i -> sum_{s >= k} subst_(i,s) y_{s-k} (the first k
  // coordinates are set to zero).
  std::vector<LaurentPoly> lin(n_, LaurentPoly(out));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t s = k_; s < n_; ++s) {
      if (subst_.at(i, s) == 0) continue;
      LaurentPoly::Exp e(out, 0);
      e[s - k_] = 1;
      lin[i].add_term(e, subst_.at(i, s));
    }
  LaurentPoly r(out);
  for (const auto& [e, c] : f.terms()) {
    LaurentPoly term = LaurentPoly::constant(out, c);
    for (std::size_t i = 0; i < n_ && !term.is_zero(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0) fail(errc::invalid_input, "negative exponent in a graded polynomial");
      term = term * lin[i].pow(static_cast<std::uint64_t>(e[i]));
    }
    r += term;
  }
  return r;
}

bool divides_k(const Vec& u, const LaurentPoly& f) {
  return IdealReducer({u}, u.size()).contains(f, Theory::K);
}

bool divides_h(const Vec& u, const LaurentPoly& f) {
  return IdealReducer({u}, u.size()).contains(f, Theory::H);
}

bool euler_divides(Theory theory, const Vec& u, const LaurentPoly& f) {
  return IdealReducer({u}, u.size()).contains(f, theory);
}

namespace {

SectionCheck check_section_edges(const std::vector<GkmEdge>& edges, std::size_t nverts,
                                 std::size_t n, const Section& s) {
  if (s.value.size() != nverts)
    fail(errc::size_mismatch, "section has " + std::to_string(s.value.size()) +
                                  " entries, expected " + std::to_string(nverts));
  for (const LaurentPoly& a : s.value) {
    if (a.nvars() != n) fail(errc::size_mismatch, "section entry variable count mismatch");
    if (s.theory == Theory::H && !a.polynomial())
      fail(errc::invalid_input, "graded sections need nonnegative exponents");
  }
  SectionCheck res;
  res.edge_ok.reserve(edges.size());
  for (const GkmEdge& e : edges) {
    bool ok = euler_divides(s.theory, e.character, s.value[e.va] - s.value[e.vb]);
    res.edge_ok.push_back(ok);
    if (!ok && res.ok) {
      res.ok = false;
      res.witness = EdgeWitness{e.va, e.vb};
    }
  }
  return res;
}

}  // namespace

SectionCheck check_section(const GkmGraph& g, const Section& s) {
  return check_section_edges(g.edges, g.edges_at.size(), g.n, s);
}

SectionCheck check_section(const CharacteristicPair& pair, const Section& s) {
  return check_section_edges(gkm_edges(pair), pair.polytope.vertex_count(), pair.polytope.dim(),
                             s);
}

std::vector<Vec> face_ideal(const CharacteristicPair& pair, int face_id) {
  const SimplePolytope& p = pair.polytope;
  if (face_id < 0 || face_id >= p.face_count()) fail(errc::invalid_face, "face id out of range");
  std::vector<Vec> cols;
  for (int i : p.face(face_id).facet_set) cols.push_back(pair.lambda[i]);
  return kernel_basis(IntMatrix::from_cols(cols, p.dim()));
}

PiecewiseCheck check_piecewise(const CharacteristicPair& pair, const PiecewiseElement& pe) {
  const SimplePolytope& p = pair.polytope;
  for (int id = 0; id < p.face_count(); ++id)
    if (!pe.rep.count(id))
      fail(errc::missing_face, "no representative for face '" + p.face_name(id) + "'");
  PiecewiseCheck res;
  for (int outer = 0; outer < p.face_count(); ++outer) {
    IdealReducer red(face_ideal(pair, outer), p.dim());
    LaurentPoly outer_res = red.reduce(pe.rep.at(outer), pe.theory);
    for (int inner : p.children(outer)) {
      if (red.reduce(pe.rep.at(inner), pe.theory) != outer_res) {
        res.ok = false;
        res.witness = FacePairWitness{inner, outer};
        return res;
      }
    }
  }
  return res;
}

PiecewiseBuild piecewise_from_section(const CharacteristicPair& pair, const Section& s) {
  const SimplePolytope& p = pair.polytope;
  PiecewiseBuild out;
  SectionCheck sc = check_section(pair, s);
  if (!sc.ok) {
    out.status = PiecewiseBuild::Status::not_in_gamma;
    out.edge_witness = sc.witness;
    return out;
  }
  PiecewiseElement pe;
  pe.theory = s.theory;
  for (int id = 0; id < p.face_count(); ++id) {
    const auto& verts = p.face(id).vertex_set;
    IdealReducer red(face_ideal(pair, id), p.dim());
    LaurentPoly first = red.reduce(s.value[verts[0]], s.theory);
    for (std::size_t t = 1; t < verts.size(); ++t)
      if (red.reduce(s.value[verts[t]], s.theory) != first) {
        out.status = PiecewiseBuild::Status::incongruent;
        out.face_witness = PiecewiseBuild::FaceWitness{id, verts[0], verts[t]};
        return out;
      }
    pe.rep.emplace(id, s.value[verts[0]]);
  }
  out.element = std::move(pe);
  return out;
}

Section section_from_piecewise(const CharacteristicPair& pair, const PiecewiseElement& pe) {
  const SimplePolytope& p = pair.polytope;
  Section s;
  s.theory = pe.theory;
  for (std::size_t v = 0; v < p.vertex_count(); ++v) {
    auto it = pe.rep.find(p.face_of_vertex(static_cast<int>(v)));
    if (it == pe.rep.end())
      fail(errc::missing_face, "no representative for vertex '" + p.vertex_name(static_cast<int>(v)) + "'");
    s.value.push_back(it->second);
  }
  return s;
}

}  // namespace qtor
