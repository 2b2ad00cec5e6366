#include "qtor/retraction.hpp"

#include <algorithm>
#include <map>

namespace qtor {

Subcomplex full_complex(const SimplePolytope& p) { return Subcomplex{{p.whole_face()}, {}}; }

std::vector<int> free_vertices(const SimplePolytope& p, const Subcomplex& b) {
  std::vector<int> count(p.vertex_count(), 0);
  for (int id : b.maximal)
    for (int v : p.face(id).vertex_set) ++count[v];
  std::vector<int> out;
  for (std::size_t v = 0; v < p.vertex_count(); ++v)
    if (count[v] == 1) out.push_back(static_cast<int>(v));
  return out;
}

std::pair<int, Subcomplex> retraction_step(const SimplePolytope& p, const Subcomplex& b, int v) {
  int home = -1;
  for (int id : b.maximal) {
    const auto& vs = p.face(id).vertex_set;
    if (std::binary_search(vs.begin(), vs.end(), v)) {
      if (home >= 0) fail(errc::not_free_vertex,
                          "vertex '" + p.vertex_name(v) + "' lies in two maximal faces");
      home = id;
    }
  }
  if (home < 0)
    fail(errc::not_free_vertex, "vertex '" + p.vertex_name(v) + "' is not in the subcomplex");

  // Faces of `home` avoiding v are covered by its facets avoiding v, so the
  // new maximal list is the antichain of the kept faces plus those facets.
  std::vector<int> cand;
  for (int id : b.maximal) {
    if (id == home) continue;
    cand.push_back(id);
  }
  for (int child : p.children(home)) {
    const auto& vs = p.face(child).vertex_set;
    if (!std::binary_search(vs.begin(), vs.end(), v)) cand.push_back(child);
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  Subcomplex next;
  next.excluded = b.excluded;
  next.excluded.insert(v);
  for (int a : cand) {
    bool dominated = false;
    for (int o : cand) {
      if (o == a) continue;
      if (p.face_contains(o, a)) {  // distinct faces, so containment is strict
        dominated = true;
        break;
      }
    }
    if (!dominated) next.maximal.push_back(a);
  }
  return {home, std::move(next)};
}

namespace {

void dfs_enumerate(const SimplePolytope& p, const Subcomplex& b,
                   std::vector<RetractionStep>& steps, std::vector<RetractionSequence>& out,
                   std::size_t cap) {
  if (cap && out.size() >= cap) return;
  for (int v : free_vertices(p, b)) {
    auto [home, next] = retraction_step(p, b, v);
    steps.push_back({b, home, v});
    if (next.empty())
      out.push_back(RetractionSequence{steps});
    else
      dfs_enumerate(p, next, steps, out, cap);
    steps.pop_back();
    if (cap && out.size() >= cap) return;
  }
}

}  // namespace

std::vector<RetractionSequence> enumerate_retractions(const SimplePolytope& p, std::size_t cap) {
  std::vector<RetractionSequence> out;
  std::vector<RetractionStep> steps;
  dfs_enumerate(p, full_complex(p), steps, out, cap);
  return out;
}

std::optional<RetractionSequence> sequence_from_order(const SimplePolytope& p,
                                                      const std::vector<int>& order) {
  if (order.size() != p.vertex_count()) return std::nullopt;
  RetractionSequence seq;
  Subcomplex b = full_complex(p);
  for (int v : order) {
    std::vector<int> free = free_vertices(p, b);
    if (!std::binary_search(free.begin(), free.end(), v)) return std::nullopt;
    auto [home, next] = retraction_step(p, b, v);
    seq.steps.push_back({b, home, v});
    b = std::move(next);
  }
  if (!b.empty()) return std::nullopt;
  return seq;
}

namespace {

struct DivisiveSearch {
  const CharacteristicPair& pair;
  std::size_t budget;
  std::size_t nodes = 0;
  bool first_step_admissible = false;
  bool exhausted = false;
  std::map<std::pair<int, int>, bool> trivial_cache;  // (face, vertex) -> trivial

  bool step_trivial(int face_id, int v) {
    auto key = std::make_pair(face_id, v);
    auto it = trivial_cache.find(key);
    if (it != trivial_cache.end()) return it->second;
    bool t = local_group(pair, face_id, v).trivial();
    trivial_cache.emplace(key, t);
    return t;
  }

  std::optional<std::vector<RetractionStep>> dfs(const Subcomplex& b,
                                                 std::vector<RetractionStep>& steps) {
    if (++nodes > budget) {
      exhausted = true;
      return std::nullopt;
    }
    const SimplePolytope& p = pair.polytope;
    for (int v : free_vertices(p, b)) {
      auto [home, next] = retraction_step(p, b, v);
      // the final single-vertex step carries no condition
      if (!next.empty() && !step_trivial(home, v)) continue;
      if (steps.empty()) first_step_admissible = true;
      steps.push_back({b, home, v});
      if (next.empty()) return steps;
      if (auto hit = dfs(next, steps)) return hit;
      steps.pop_back();
      if (exhausted) return std::nullopt;
    }
    return std::nullopt;
  }
};

}  // namespace

DivisiveResult is_divisive(const CharacteristicPair& pair, std::size_t node_budget) {
  DivisiveSearch search{pair, node_budget, 0, false, false, {}};
  std::vector<RetractionStep> steps;
  auto hit = search.dfs(full_complex(pair.polytope), steps);
  DivisiveResult res;
  res.nodes_visited = search.nodes;
  res.first_step_admissible = search.first_step_admissible;
  if (hit) {
    res.kind = DivisiveResult::Kind::certificate;
    res.certificate = RetractionSequence{*hit};
  } else if (search.exhausted) {
    res.kind = DivisiveResult::Kind::undecided;
  } else {
    res.kind = DivisiveResult::Kind::none;
  }
  return res;
}

DirectedSkeleton directed_skeleton(const SimplePolytope& p, const RetractionSequence& seq) {
  if (seq.steps.size() != p.vertex_count())
    fail(errc::size_mismatch, "sequence does not touch every vertex exactly once");
  DirectedSkeleton ds;
  ds.rank.assign(p.vertex_count(), 0);
  std::vector<bool> seen(p.vertex_count(), false);
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    int v = seq.steps[i].vertex;
    if (seen[v]) fail(errc::size_mismatch, "sequence repeats a vertex");
    seen[v] = true;
    ds.order.push_back(v);
    ds.rank[v] = i;
  }
  ds.in_from.assign(p.vertex_count(), {});
  for (const SkeletonEdge& e : p.skeleton()) {
    std::size_t a = ds.rank[e.v0], b = ds.rank[e.v1];
    if (a < b)
      ds.in_from[a].push_back(b);
    else
      ds.in_from[b].push_back(a);
  }
  for (auto& lst : ds.in_from) std::sort(lst.begin(), lst.end());
  return ds;
}

std::vector<std::size_t> cell_dimension_counts(const SimplePolytope& p,
                                               const RetractionSequence& seq) {
  std::vector<std::size_t> c(p.dim() + 1, 0);
  for (const RetractionStep& s : seq.steps) ++c[p.face(s.max_face).dim];
  return c;
}

}  // namespace qtor
