#include "oracles.hpp"
#include "qtor/retraction.hpp"

#include <doctest.h>

using namespace qtor;
using oracles::load_fixture;

TEST_CASE("free vertices") {
  SUBCASE("every vertex of a simplex is free") {
    SimplePolytope t = load_fixture("cp2.json").polytope;
    CHECK(free_vertices(t, full_complex(t)) == std::vector<int>{0, 1, 2});
  }
  SUBCASE("a two-edge path frees only its endpoints") {
    SimplePolytope sq = load_fixture("square.json").polytope;
    // edges v1-v2 and v2-v3
    Subcomplex path;
    path.maximal = {sq.find_face_by_vertices({0, 1}), sq.find_face_by_vertices({1, 2})};
    std::sort(path.maximal.begin(), path.maximal.end());
    CHECK(free_vertices(sq, path) == std::vector<int>{0, 2});
  }
  SUBCASE("after removing v1 from the prism, v2 is free") {
    CharacteristicPair prism = load_fixture("prism.json");
    const SimplePolytope& p = prism.polytope;
    auto [face, b2] = retraction_step(p, full_complex(p), p.vertex_index("v1"));
    CHECK(face == p.whole_face());
    std::vector<int> free = free_vertices(p, b2);
    CHECK(std::binary_search(free.begin(), free.end(), p.vertex_index("v2")));
  }
}

TEST_CASE("retraction steps") {
  SUBCASE("triangle: removing a vertex leaves the opposite edge") {
    SimplePolytope t = load_fixture("cp2.json").polytope;
    auto [face, b2] = retraction_step(t, full_complex(t), 0);
    CHECK(face == t.whole_face());
    REQUIRE(b2.maximal.size() == 1);
    CHECK(t.face(b2.maximal[0]).vertex_set == std::vector<int>{1, 2});
  }
  SUBCASE("prism: removing v1 leaves the two far facets") {
    SimplePolytope p = load_fixture("prism.json").polytope;
    auto [face, b2] = retraction_step(p, full_complex(p), 0);
    REQUIRE(b2.maximal.size() == 2);
    CHECK(p.face_name(b2.maximal[0]) == "F4");
    CHECK(p.face_name(b2.maximal[1]) == "F5");
  }
  SUBCASE("a single vertex retracts to the empty complex") {
    SimplePolytope t = load_fixture("cp2.json").polytope;
    Subcomplex point;
    point.maximal = {t.face_of_vertex(2)};
    auto [face, b2] = retraction_step(t, point, 2);
    CHECK(face == t.face_of_vertex(2));
    CHECK(b2.empty());
  }
  SUBCASE("non-free vertices are rejected") {
    SimplePolytope sq = load_fixture("square.json").polytope;
    Subcomplex path;
    path.maximal = {sq.find_face_by_vertices({0, 1}), sq.find_face_by_vertices({1, 2})};
    std::sort(path.maximal.begin(), path.maximal.end());
    CHECK_THROWS_AS(retraction_step(sq, path, 1), Error);
  }
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_retractions(load_fixture("interval.json").polytope, 0).size() == 2);
  CHECK(enumerate_retractions(load_fixture("cp2.json").polytope, 0).size() == 6);

  SUBCASE("prism and square counts match the permutation oracle") {
    for (const char* name : {"square.json", "prism.json"}) {
      SimplePolytope p = load_fixture(name).polytope;
      auto enumerated = enumerate_retractions(p, 0);
      auto brute = oracles::brute_retraction_orders(p);
      CHECK(enumerated.size() == brute.size());
      // same order sets
      std::set<std::vector<int>> a, b;
      for (const auto& seq : enumerated) {
        std::vector<int> order;
        for (const auto& st : seq.steps) order.push_back(st.vertex);
        a.insert(order);
      }
      for (const auto& o : brute) b.insert(o);
      CHECK(a == b);
    }
  }
  SUBCASE("cap truncates deterministically") {
    SimplePolytope p = load_fixture("prism.json").polytope;
    auto all = enumerate_retractions(p, 0);
    auto capped = enumerate_retractions(p, 5);
    REQUIRE(capped.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t s = 0; s < capped[i].steps.size(); ++s)
        CHECK(capped[i].steps[s].vertex == all[i].steps[s].vertex);
    }
  }
}

TEST_CASE("sequences are sound") {
  for (const char* name : {"interval.json", "square.json", "cp2.json", "prism.json"}) {
    SimplePolytope p = load_fixture(name).polytope;
    for (const RetractionSequence& seq : enumerate_retractions(p, 0)) {
      REQUIRE(seq.steps.size() == p.vertex_count());
      std::set<int> used;
      std::vector<int> order;
      for (const RetractionStep& st : seq.steps) {
        CHECK(used.insert(st.vertex).second);
        order.push_back(st.vertex);
        // the vertex must be free in its own complex and belong to P
        std::vector<int> free = free_vertices(p, st.complex);
        CHECK(std::binary_search(free.begin(), free.end(), st.vertex));
        const auto& vs = p.face(st.max_face).vertex_set;
        CHECK(std::binary_search(vs.begin(), vs.end(), st.vertex));
        // no excluded vertex appears in any member face
        for (int id : st.complex.maximal)
          for (int v : p.face(id).vertex_set) CHECK(!st.complex.excluded.count(v));
      }
      // replays both through the library and through the raw definitions
      CHECK(sequence_from_order(p, order).has_value());
      CHECK(oracles::order_is_retraction(p, order));
      // every prefix extends to this sequence, so each prefix is valid
    }
  }
}

TEST_CASE("divisiveness") {
  SUBCASE("prism pair has a certificate with step groups trivial") {
    CharacteristicPair prism = load_fixture("prism.json");
    DivisiveResult res = is_divisive(prism);
    REQUIRE(res.kind == DivisiveResult::Kind::certificate);
    const auto& steps = res.certificate->steps;
    REQUIRE(steps.size() == 6);
    for (std::size_t i = 0; i + 1 < steps.size(); ++i)
      CHECK(local_group(prism, steps[i].max_face, steps[i].vertex).trivial());
  }
  SUBCASE("simplex pairs are divisive in any vertex order") {
    for (const char* name : {"cp2.json", "simplex3.json"}) {
      CharacteristicPair pair = load_fixture(name);
      CHECK(is_divisive(pair).kind == DivisiveResult::Kind::certificate);
      // all orders work: every enumerated sequence has trivial groups
      for (const RetractionSequence& seq : enumerate_retractions(pair.polytope, 0))
        for (const RetractionStep& st : seq.steps)
          CHECK(local_group(pair, st.max_face, st.vertex).trivial());
    }
  }
  SUBCASE("weighted triangle has no admissible start") {
    CharacteristicPair wp = load_fixture("wp235.json");
    DivisiveResult res = is_divisive(wp);
    CHECK(res.kind == DivisiveResult::Kind::none);
    CHECK(!res.first_step_admissible);
    // determinant oracle: orders 5, 3, 2 at the three vertices
    std::multiset<Int> orders;
    for (std::size_t v = 0; v < 3; ++v) {
      std::vector<Vec> cols;
      for (int i : wp.polytope.vertex_facets(static_cast<int>(v))) cols.push_back(wp.lambda[i]);
      orders.insert(abs_int(oracles::det_cofactor(IntMatrix::from_cols(cols, 2))));
    }
    CHECK(orders == std::multiset<Int>{2, 3, 5});
  }
  SUBCASE("tiny budget reports undecided") {
    CharacteristicPair prism = load_fixture("prism.json");
    DivisiveResult res = is_divisive(prism, 1);
    CHECK(res.kind == DivisiveResult::Kind::undecided);
  }
}

TEST_CASE("directed skeleton in-degrees equal the step dimensions") {
  SUBCASE("pinned examples") {
    SimplePolytope interval = load_fixture("interval.json").polytope;
    auto seqs = enumerate_retractions(interval, 1);
    DirectedSkeleton ds = directed_skeleton(interval, seqs[0]);
    CHECK(ds.in_from[0].size() == 1);
    CHECK(ds.in_from[1].empty());

    CharacteristicPair prism = load_fixture("prism.json");
    DivisiveResult res = is_divisive(prism);
    DirectedSkeleton pds = directed_skeleton(prism.polytope, *res.certificate);
    std::vector<std::size_t> indeg;
    for (const auto& nbrs : pds.in_from) indeg.push_back(nbrs.size());
    CHECK(indeg == std::vector<std::size_t>{3, 2, 1, 2, 1, 0});
  }
  SUBCASE("every enumerated sequence obeys the law") {
    for (const char* name : {"cp2.json", "square.json", "prism.json"}) {
      SimplePolytope p = load_fixture(name).polytope;
      for (const RetractionSequence& seq : enumerate_retractions(p, 0)) {
        DirectedSkeleton ds = directed_skeleton(p, seq);
        for (std::size_t i = 0; i < seq.steps.size(); ++i)
          CHECK(ds.in_from[i].size() ==
                static_cast<std::size_t>(p.face(seq.steps[i].max_face).dim));
      }
    }
  }
}

TEST_CASE("cell dimension counts") {
  SimplePolytope t = load_fixture("cp2.json").polytope;
  auto seq = enumerate_retractions(t, 1)[0];
  CHECK(cell_dimension_counts(t, seq) == std::vector<std::size_t>{1, 1, 1});

  CharacteristicPair prism = load_fixture("prism.json");
  auto cert = is_divisive(prism).certificate;
  CHECK(cell_dimension_counts(prism.polytope, *cert) == std::vector<std::size_t>{1, 2, 2, 1});

  SimplePolytope sq = load_fixture("square.json").polytope;
  CHECK(cell_dimension_counts(sq, enumerate_retractions(sq, 1)[0]) ==
        std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("cell counts reproduce the h-vector on every sequence") {
  for (const char* name :
       {"interval.json", "cp2.json", "square.json", "simplex3.json", "prism.json"}) {
    SimplePolytope p = load_fixture(name).polytope;
    std::vector<long long> h = p.h_vector();
    for (const RetractionSequence& seq : enumerate_retractions(p, 0)) {
      std::vector<std::size_t> c = cell_dimension_counts(p, seq);
      REQUIRE(c.size() == h.size());
      for (std::size_t k = 0; k < c.size(); ++k) CHECK(static_cast<long long>(c[k]) == h[k]);
    }
  }
}
