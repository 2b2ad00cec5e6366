#include "qtor/io.hpp"

#include <algorithm>
#include <limits>

namespace qtor {

namespace {

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte ? e.byte - 1 : 0);
    fail(errc::parse_error, "JSON syntax error at line " + std::to_string(line) + ", column " +
                                std::to_string(col));
  }
}

const json& expect(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(errc::parse_error, where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(errc::parse_error, where + ": missing field '" + key + "'");
  return *it;
}

std::string expect_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(errc::parse_error, where + ": expected a string");
  return j.get<std::string>();
}

Int int_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      fail(errc::parse_error, where + ": not an integer");
    }
  }
  fail(errc::parse_error, where + ": expected an integer or a decimal string");
}

Vec vec_from_json(const json& j, std::size_t len, const std::string& where) {
  if (!j.is_array()) fail(errc::parse_error, where + ": expected an array");
  if (j.size() != len)
    fail(errc::parse_error, where + ": expected " + std::to_string(len) + " entries, got " +
                                std::to_string(j.size()));
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(int_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

LaurentPoly poly_from_json(const json& j, std::size_t nvars, Theory theory,
                           const std::string& where) {
  if (!j.is_array()) fail(errc::parse_error, where + ": expected an array of terms");
  LaurentPoly p(nvars);
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string at = where + "[" + std::to_string(t) + "]";
    const json& term = j[t];
    if (!term.is_object()) fail(errc::parse_error, at + ": expected {\"exp\", \"coef\"}");
    Vec e = vec_from_json(expect(term, "exp", at), nvars, at + ".exp");
    LaurentPoly::Exp exp(nvars);
    for (std::size_t i = 0; i < nvars; ++i) {
      exp[i] = to_i64(e[i]);
      if (theory == Theory::H && exp[i] < 0)
        fail(errc::parse_error, at + ".exp: negative exponent in a graded polynomial");
    }
    p.add_term(exp, int_from_json(expect(term, "coef", at), at + ".coef"));
  }
  return p;
}

}  // namespace

CharacteristicPair parse_pair_document(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) fail(errc::parse_error, "document: expected an object");

  const json& jdim = expect(doc, "dim", "document");
  if (!jdim.is_number_integer() || jdim.get<std::int64_t>() < 1)
    fail(errc::parse_error, "dim: expected a positive integer");
  const std::size_t n = jdim.get<std::size_t>();

  SimplePolytope::Data data;
  data.dim = n;

  const json& jfacets = expect(doc, "facets", "document");
  if (!jfacets.is_array() || jfacets.empty())
    fail(errc::parse_error, "facets: expected a nonempty array of names");
  for (std::size_t i = 0; i < jfacets.size(); ++i)
    data.facet_names.push_back(expect_string(jfacets[i], "facets[" + std::to_string(i) + "]"));

  const json& jverts = expect(doc, "vertices", "document");
  if (!jverts.is_array() || jverts.empty())
    fail(errc::parse_error, "vertices: expected a nonempty array");
  for (std::size_t v = 0; v < jverts.size(); ++v) {
    const std::string where = "vertices[" + std::to_string(v) + "]";
    data.vertex_names.push_back(expect_string(expect(jverts[v], "name", where), where + ".name"));
    const json& jf = expect(jverts[v], "facets", where);
    if (!jf.is_array()) fail(errc::parse_error, where + ".facets: expected an array");
    std::vector<int> fs;
    for (std::size_t t = 0; t < jf.size(); ++t) {
      std::string name = expect_string(jf[t], where + ".facets[" + std::to_string(t) + "]");
      auto it = std::find(data.facet_names.begin(), data.facet_names.end(), name);
      if (it == data.facet_names.end())
        fail(errc::parse_error, where + ".facets: unknown facet '" + name + "'");
      fs.push_back(static_cast<int>(it - data.facet_names.begin()));
    }
    data.vertex_facets.push_back(std::move(fs));
  }

  const json& jlambda = expect(doc, "lambda", "document");
  if (!jlambda.is_object()) fail(errc::parse_error, "lambda: expected an object");
  for (auto it = jlambda.begin(); it != jlambda.end(); ++it)
    if (std::find(data.facet_names.begin(), data.facet_names.end(), it.key()) ==
        data.facet_names.end())
      fail(errc::parse_error, "lambda: unknown facet '" + it.key() + "'");

  CharacteristicPair pair;
  std::vector<std::string> facet_names = data.facet_names;  // build() consumes data
  pair.polytope = SimplePolytope::build(std::move(data));
  for (const std::string& name : facet_names) {
    auto it = jlambda.find(name);
    if (it == jlambda.end()) fail(errc::parse_error, "lambda: missing facet '" + name + "'");
    pair.lambda.push_back(vec_from_json(*it, n, "lambda." + name));
  }
  return pair;
}

Theory parse_theory(const std::string& name) {
  if (name == "K" || name == "k") return Theory::K;
  if (name == "H" || name == "h") return Theory::H;
  fail(errc::parse_error, "theory must be K or H, got '" + name + "'");
}

std::optional<Theory> theory_of_document(const std::string& text) {
  json doc = parse_json(text);
  if (doc.is_object() && doc.contains("theory"))
    return parse_theory(expect_string(doc["theory"], "theory"));
  return std::nullopt;
}

Section parse_section(const std::string& text, const CharacteristicPair& pair, Theory theory) {
  json doc = parse_json(text);
  const SimplePolytope& p = pair.polytope;
  const json& jsec = expect(doc, "section", "document");
  if (!jsec.is_object()) fail(errc::parse_error, "section: expected an object");
  for (auto it = jsec.begin(); it != jsec.end(); ++it)
    if (p.vertex_index(it.key()) < 0)
      fail(errc::parse_error, "section: unknown vertex '" + it.key() + "'");
  Section s;
  s.theory = theory;
  for (std::size_t v = 0; v < p.vertex_count(); ++v) {
    const std::string& name = p.vertex_name(static_cast<int>(v));
    auto it = jsec.find(name);
    if (it == jsec.end()) fail(errc::parse_error, "section: missing vertex '" + name + "'");
    s.value.push_back(poly_from_json(*it, p.dim(), theory, "section." + name));
  }
  return s;
}

PiecewiseElement parse_piecewise(const std::string& text, const CharacteristicPair& pair,
                                 Theory theory) {
  json doc = parse_json(text);
  const SimplePolytope& p = pair.polytope;
  const json& jelem = expect(doc, "element", "document");
  if (!jelem.is_object()) fail(errc::parse_error, "element: expected an object");
  PiecewiseElement pe;
  pe.theory = theory;
  for (auto it = jelem.begin(); it != jelem.end(); ++it) {
    int id;
    try {
      id = p.parse_face_name(it.key());
    } catch (const Error&) {
      fail(errc::parse_error, "element: unknown face '" + it.key() + "'");
    }
    if (pe.rep.count(id))
      fail(errc::parse_error, "element: face '" + p.face_name(id) + "' given twice");
    pe.rep.emplace(id, poly_from_json(*it, p.dim(), theory, "element." + it.key()));
  }
  return pe;
}

RetractionSequence parse_sequence(const std::string& text, const SimplePolytope& p) {
  json doc = parse_json(text);
  std::vector<std::string> names;
  if (doc.is_object() && doc.contains("order")) {
    for (const json& jn : doc["order"]) names.push_back(expect_string(jn, "order"));
  } else if (doc.is_object() && doc.contains("steps")) {
    for (const json& js : doc["steps"])
      names.push_back(expect_string(expect(js, "vertex", "steps"), "steps.vertex"));
  } else {
    fail(errc::parse_error, "sequence document needs 'order' or 'steps'");
  }
  std::vector<int> order;
  for (const std::string& name : names) {
    int v = p.vertex_index(name);
    if (v < 0) fail(errc::parse_error, "sequence: unknown vertex '" + name + "'");
    order.push_back(v);
  }
  auto seq = sequence_from_order(p, order);
  if (!seq) fail(errc::invalid_input, "the given vertex order is not a retraction sequence");
  return *seq;
}

json int_to_json(const Int& x) {
  static const Int lo = Int(std::numeric_limits<std::int64_t>::min());
  static const Int hi = Int(std::numeric_limits<std::int64_t>::max());
  if (x >= lo && x <= hi) return json(x.convert_to<std::int64_t>());
  return json(x.str());
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(int_to_json(x));
  return a;
}

json poly_to_json(const LaurentPoly& p) {
  json a = json::array();
  for (const auto& [e, c] : p.terms()) {
    json term;
    term["exp"] = e;
    term["coef"] = int_to_json(c);
    a.push_back(std::move(term));
  }
  return a;
}

json group_to_json(const FiniteAbelianGroup& g) {
  json j;
  j["factors"] = json::array();
  for (const Int& f : g.invariant_factors) j["factors"].push_back(int_to_json(f));
  j["order"] = int_to_json(g.order());
  return j;
}

json certificate_to_json(const CharacteristicPair& pair, const RetractionSequence& seq,
                         bool with_groups) {
  const SimplePolytope& p = pair.polytope;
  json steps = json::array();
  const std::size_t m = seq.steps.size();
  for (std::size_t i = 0; i < m; ++i) {
    const RetractionStep& st = seq.steps[i];
    json js;
    json complex = json::array();
    for (int id : st.complex.maximal) complex.push_back(p.face_name(id));
    js["complex"] = std::move(complex);
    js["face"] = p.face_name(st.max_face);
    js["dim"] = p.face(st.max_face).dim;
    js["vertex"] = p.vertex_name(st.vertex);
    js["required"] = (i + 1 < m);  // the final single-vertex step carries no condition
    if (with_groups) js["local_group"] = group_to_json(local_group(pair, st.max_face, st.vertex));
    steps.push_back(std::move(js));
  }
  json out;
  out["steps"] = std::move(steps);
  return out;
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

ValidateRun run_validate(const CharacteristicPair& pair) {
  ValidationReport rep = validate_characteristic(pair);
  const SimplePolytope& p = pair.polytope;
  json issues = json::array();
  for (const ValidationIssue& is : rep.issues) {
    json j;
    switch (is.kind) {
      case ValidationIssue::Kind::zero_vector:
        j["kind"] = "zero_vector";
        j["facet"] = p.facet_name(is.index);
        break;
      case ValidationIssue::Kind::non_primitive:
        j["kind"] = "non_primitive";
        j["facet"] = p.facet_name(is.index);
        break;
      case ValidationIssue::Kind::singular_vertex:
        j["kind"] = "singular_vertex";
        j["vertex"] = p.vertex_name(is.index);
        break;
    }
    issues.push_back(std::move(j));
  }
  json report;
  report["valid"] = rep.valid();
  report["issues"] = std::move(issues);
  return {std::move(report), rep.valid()};
}

json run_local_groups(const CharacteristicPair& pair, const std::optional<std::string>& face) {
  const SimplePolytope& p = pair.polytope;
  int face_id = face ? p.parse_face_name(*face) : p.whole_face();
  json report;
  report["face"] = p.face_name(face_id);
  report["dim"] = p.face(face_id).dim;
  report["face_group"] = group_to_json(face_group(pair, face_id));
  json groups = json::array();
  for (int v : p.face(face_id).vertex_set) {
    json g = group_to_json(local_group(pair, face_id, v));
    g["vertex"] = p.vertex_name(v);
    groups.push_back(std::move(g));
  }
  report["groups"] = std::move(groups);
  if (face_id != p.whole_face() && p.face(face_id).dim >= 1) {
    InducedPair ind = induced_characteristic(pair, face_id);
    json lam;
    for (std::size_t j = 0; j < ind.face_facets.size(); ++j)
      lam[p.face_name(ind.face_facets[j])] = vec_to_json(ind.lambda_f[j]);
    report["induced_lambda"] = std::move(lam);
  }
  return report;
}

json run_retract(const CharacteristicPair& pair, bool all, std::size_t cap) {
  const std::size_t limit = cap > 0 ? cap : (all ? 0 : 1);
  std::vector<RetractionSequence> seqs = enumerate_retractions(pair.polytope, limit);
  json list = json::array();
  for (const RetractionSequence& seq : seqs)
    list.push_back(certificate_to_json(pair, seq, false));
  json report;
  report["count"] = seqs.size();
  report["cap"] = limit;
  report["sequences"] = std::move(list);
  return report;
}

DivisiveRun run_divisive(const CharacteristicPair& pair, std::size_t budget) {
  DivisiveResult res = is_divisive(pair, budget);
  json report;
  report["nodes_visited"] = res.nodes_visited;
  report["budget"] = budget;
  DivisiveRun out;
  switch (res.kind) {
    case DivisiveResult::Kind::certificate:
      report["divisive"] = true;
      report["certificate"] = certificate_to_json(pair, *res.certificate, true);
      out.verdict = 1;
      break;
    case DivisiveResult::Kind::none:
      report["divisive"] = false;
      report["certificate"] = nullptr;
      report["reason"] = res.first_step_admissible
                             ? "search exhausted every branch without a certificate"
                             : "no admissible starting vertex";
      out.verdict = 0;
      break;
    case DivisiveResult::Kind::undecided:
      report["divisive"] = "undecided";
      report["certificate"] = nullptr;
      report["reason"] = "node budget exhausted";
      out.verdict = 2;
      break;
  }
  out.report = std::move(report);
  return out;
}

CheckRun run_gkm(const CharacteristicPair& pair, const std::optional<std::string>& seq_doc) {
  const SimplePolytope& p = pair.polytope;
  RetractionSequence seq;
  if (seq_doc) {
    seq = parse_sequence(*seq_doc, p);
  } else {
    std::vector<RetractionSequence> seqs = enumerate_retractions(p, 1);
    if (seqs.empty()) fail(errc::invalid_input, "polytope admits no retraction sequence");
    seq = std::move(seqs[0]);
  }
  GkmGraph g = build_gkm_graph(pair, seq);

  json report;
  json order = json::array();
  for (int v : g.order) order.push_back(p.vertex_name(v));
  report["order"] = std::move(order);

  json edges = json::array();
  for (const GkmEdge& e : g.edges) {
    json je;
    je["edge"] = json::array({p.vertex_name(e.va), p.vertex_name(e.vb)});
    je["face"] = p.face_name(e.face_id);
    je["character"] = vec_to_json(e.character);
    edges.push_back(std::move(je));
  }
  report["edges"] = std::move(edges);

  json innbrs;
  for (std::size_t i = 0; i < g.order.size(); ++i) {
    json lst = json::array();
    for (std::size_t k : g.in_from[i]) lst.push_back(p.vertex_name(g.order[k]));
    innbrs[p.vertex_name(g.order[i])] = std::move(lst);
  }
  report["in_neighbors"] = std::move(innbrs);

  CoprimalityResult cop = coprimality_check(g);
  json jcop;
  jcop["ok"] = cop.ok;
  if (!cop.ok) {
    jcop["vertex"] = p.vertex_name(cop.vertex);
    const GkmEdge& a = g.edges[cop.e0];
    const GkmEdge& b = g.edges[cop.e1];
    jcop["edges"] = json::array({json::array({p.vertex_name(a.va), p.vertex_name(a.vb)}),
                                 json::array({p.vertex_name(b.va), p.vertex_name(b.vb)})});
  }
  report["coprime"] = std::move(jcop);

  std::vector<std::size_t> counts = cell_dimension_counts(p, seq);
  std::vector<int> dims;
  for (const RetractionStep& st : seq.steps) dims.push_back(p.face(st.max_face).dim);
  std::sort(dims.rbegin(), dims.rend());
  std::vector<long long> h = p.h_vector();
  bool h_match = counts.size() == h.size();
  for (std::size_t k = 0; h_match && k < counts.size(); ++k)
    h_match = static_cast<long long>(counts[k]) == h[k];
  json cells;
  cells["dimensions"] = dims;
  cells["counts"] = counts;
  report["cells"] = std::move(cells);
  report["h_vector"] = h;
  report["h_match"] = h_match;

  bool ok = cop.ok && h_match;
  report["ok"] = ok;
  return {std::move(report), ok};
}

namespace {

json edge_witness_json(const SimplePolytope& p, const std::optional<EdgeWitness>& w) {
  if (!w) return nullptr;
  return json::array({p.vertex_name(w->va), p.vertex_name(w->vb)});
}

}  // namespace

CheckRun run_check_section(const CharacteristicPair& pair, Theory theory,
                           const std::string& section_doc) {
  const SimplePolytope& p = pair.polytope;
  Section s = parse_section(section_doc, pair, theory);
  std::vector<GkmEdge> edges = gkm_edges(pair);
  SectionCheck res = check_section(pair, s);
  json report;
  report["theory"] = theory == Theory::K ? "K" : "H";
  json je = json::array();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    json e;
    e["edge"] = json::array({p.vertex_name(edges[i].va), p.vertex_name(edges[i].vb)});
    e["character"] = vec_to_json(edges[i].character);
    e["divides"] = static_cast<bool>(res.edge_ok[i]);
    je.push_back(std::move(e));
  }
  report["edges"] = std::move(je);
  report["ok"] = res.ok;
  report["witness"] = edge_witness_json(p, res.witness);
  return {std::move(report), res.ok};
}

CheckRun run_check_piecewise(const CharacteristicPair& pair, Theory theory,
                             const std::string& element_doc) {
  const SimplePolytope& p = pair.polytope;
  PiecewiseElement pe = parse_piecewise(element_doc, pair, theory);
  PiecewiseCheck res = check_piecewise(pair, pe);
  json report;
  report["theory"] = theory == Theory::K ? "K" : "H";
  report["ok"] = res.ok;
  if (res.witness) {
    json w;
    w["inner"] = p.face_name(res.witness->inner);
    w["outer"] = p.face_name(res.witness->outer);
    report["witness"] = std::move(w);
  } else {
    report["witness"] = nullptr;
  }
  std::size_t pairs = 0;
  for (int id = 0; id < p.face_count(); ++id) pairs += p.children(id).size();
  report["pairs_checked"] = pairs;
  return {std::move(report), res.ok};
}

CheckRun run_equiv_roundtrip(const CharacteristicPair& pair, Theory theory,
                             const std::string& section_doc) {
  const SimplePolytope& p = pair.polytope;
  Section s = parse_section(section_doc, pair, theory);
  json report;
  report["theory"] = theory == Theory::K ? "K" : "H";

  SectionCheck sc = check_section(pair, s);
  report["section_ok"] = sc.ok;
  report["section_witness"] = edge_witness_json(p, sc.witness);

  PiecewiseBuild built = piecewise_from_section(pair, s);
  bool ok = sc.ok;
  report["piecewise_built"] = built.status == PiecewiseBuild::Status::ok;
  if (built.status == PiecewiseBuild::Status::incongruent) {
    json w;
    w["face"] = p.face_name(built.face_witness->face);
    w["vertices"] = json::array(
        {p.vertex_name(built.face_witness->va), p.vertex_name(built.face_witness->vb)});
    report["incongruence"] = std::move(w);
  } else {
    report["incongruence"] = nullptr;
  }

  if (built.status == PiecewiseBuild::Status::ok) {
    PiecewiseCheck pc = check_piecewise(pair, *built.element);
    report["piecewise_ok"] = pc.ok;
    Section back = section_from_piecewise(pair, *built.element);
    bool identity = back.value == s.value;
    report["roundtrip_identity"] = identity;
    json elem;
    for (const auto& [id, rep] : built.element->rep) elem[p.face_name(id)] = poly_to_json(rep);
    report["element"] = std::move(elem);
    ok = ok && pc.ok && identity;
  } else {
    report["piecewise_ok"] = false;
    report["roundtrip_identity"] = false;
    report["element"] = nullptr;
    ok = false;
  }
  report["ok"] = ok;
  return {std::move(report), ok};
}

}  // namespace qtor
