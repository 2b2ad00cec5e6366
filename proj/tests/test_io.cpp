#include "oracles.hpp"
#include "qtor/io.hpp"

#include <doctest.h>

using namespace qtor;
using oracles::fixture_text;
using oracles::load_fixture;

TEST_CASE("pair document parsing") {
  SUBCASE("fixtures parse") {
    CharacteristicPair pair = parse_pair_document(fixture_text("prism.json"));
    CHECK(pair.polytope.vertex_count() == 6);
    CHECK(pair.lambda[4] == oracles::iv({1, 1, 4}));
  }
  SUBCASE("syntax errors carry line context") {
    try {
      parse_pair_document("{\n  \"dim\": 2,\n  oops\n}");
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.code() == errc::parse_error);
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
  SUBCASE("schema errors carry field context") {
    const char* doc = R"({ "dim": 2, "facets": ["F1","F2","F3"],
      "vertices": [ {"name":"a","facets":["F1","F9"]},
                    {"name":"b","facets":["F1","F3"]},
                    {"name":"c","facets":["F2","F3"]} ],
      "lambda": {"F1":[1,0],"F2":[0,1],"F3":[1,1]} })";
    try {
      parse_pair_document(doc);
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("vertices[0].facets") != std::string::npos);
      CHECK(std::string(e.what()).find("F9") != std::string::npos);
    }
  }
  SUBCASE("lambda must cover every facet with vectors of the right length") {
    std::string base = fixture_text("cp2.json");
    CHECK_THROWS_AS(parse_pair_document(R"({ "dim": 2, "facets": ["F1","F2","F3"],
      "vertices": [ {"name":"a","facets":["F1","F2"]},
                    {"name":"b","facets":["F1","F3"]},
                    {"name":"c","facets":["F2","F3"]} ],
      "lambda": {"F1":[1,0],"F2":[0,1]} })"),
                    Error);
    CHECK_THROWS_AS(parse_pair_document(R"({ "dim": 2, "facets": ["F1","F2","F3"],
      "vertices": [ {"name":"a","facets":["F1","F2"]},
                    {"name":"b","facets":["F1","F3"]},
                    {"name":"c","facets":["F2","F3"]} ],
      "lambda": {"F1":[1,0],"F2":[0,1],"F3":[1,1,1]} })"),
                    Error);
  }
  SUBCASE("big integers arrive via decimal strings") {
    CharacteristicPair pair = parse_pair_document(R"({ "dim": 1, "facets": ["F1","F2"],
      "vertices": [ {"name":"a","facets":["F1"]}, {"name":"b","facets":["F2"]} ],
      "lambda": {"F1":["123456789012345678901234567890"],"F2":[-1]} })");
    CHECK(pair.lambda[0][0] == Int("123456789012345678901234567890"));
  }
}

TEST_CASE("section and element documents") {
  CharacteristicPair interval = load_fixture("interval.json");
  SUBCASE("valid section") {
    Section s = parse_section(fixture_text("sections/interval_k_valid.json"), interval, Theory::K);
    CHECK(s.value.size() == 2);
    CHECK(check_section(interval, s).ok);
  }
  SUBCASE("missing vertex") {
    CHECK_THROWS_AS(
        parse_section(R"({"section": {"v1": []}})", interval, Theory::K), Error);
  }
  SUBCASE("unknown face in an element") {
    CHECK_THROWS_AS(parse_piecewise(R"({"element": {"nope": []}})", interval, Theory::K), Error);
  }
  SUBCASE("element faces by any spelling") {
    PiecewiseElement pe =
        parse_piecewise(fixture_text("elements/interval_k_valid.json"), interval, Theory::K);
    CHECK(pe.rep.size() == 3);
    CHECK(check_piecewise(interval, pe).ok);
  }
}

TEST_CASE("sequence documents replay") {
  CharacteristicPair prism = load_fixture("prism.json");
  RetractionSequence seq =
      parse_sequence(fixture_text("sequences/prism_seq.json"), prism.polytope);
  CHECK(seq.steps.size() == 6);
  CHECK_THROWS_AS(parse_sequence(R"({"order": ["v6","v1","v2","v3","v4","v5"]})", prism.polytope),
                  Error);  // v6 first is fine, but then v1 is blocked by this order
}

TEST_CASE("reports are byte-stable") {
  CharacteristicPair prism = load_fixture("prism.json");
  CHECK(dump_report(run_validate(prism).report) == dump_report(run_validate(prism).report));
  CHECK(dump_report(run_local_groups(prism, std::nullopt)) ==
        dump_report(run_local_groups(prism, std::nullopt)));
  CHECK(dump_report(run_divisive(prism, 1000).report) ==
        dump_report(run_divisive(prism, 1000).report));
  CHECK(dump_report(run_gkm(prism, std::nullopt).report) ==
        dump_report(run_gkm(prism, std::nullopt).report));
  std::string section = fixture_text("sections/prism_constant_k.json");
  CHECK(dump_report(run_check_section(prism, Theory::K, section).report) ==
        dump_report(run_check_section(prism, Theory::K, section).report));
  CHECK(dump_report(run_equiv_roundtrip(prism, Theory::K, section).report) ==
        dump_report(run_equiv_roundtrip(prism, Theory::K, section).report));
}

TEST_CASE("driver verdicts") {
  CharacteristicPair prism = load_fixture("prism.json");
  CharacteristicPair wp = load_fixture("wp235.json");

  CHECK(run_validate(prism).valid);
  CHECK(run_divisive(prism, 100000).verdict == 1);
  CHECK(run_divisive(wp, 100000).verdict == 0);
  CHECK(run_divisive(prism, 1).verdict == 2);
  CHECK(run_gkm(prism, std::nullopt).ok);
  CHECK(run_gkm(prism, fixture_text("sequences/prism_seq.json")).ok);

  CharacteristicPair interval = load_fixture("interval.json");
  CHECK(run_check_section(interval, Theory::K, fixture_text("sections/interval_k_valid.json")).ok);
  CHECK(!run_check_section(interval, Theory::K, fixture_text("sections/interval_k_invalid.json")).ok);
  CHECK(run_check_piecewise(interval, Theory::K, fixture_text("elements/interval_k_valid.json")).ok);
  CHECK(!run_check_piecewise(interval, Theory::K, fixture_text("elements/interval_k_invalid.json")).ok);
  CHECK(run_equiv_roundtrip(interval, Theory::K, fixture_text("sections/interval_k_valid.json")).ok);
  CHECK(run_equiv_roundtrip(interval, Theory::H, fixture_text("sections/interval_h_valid.json")).ok);

  SUBCASE("local groups of a named face") {
    json rep = run_local_groups(prism, std::string("F5"));
    CHECK(rep["face"] == "F5");
    std::map<std::string, long long> orders;
    for (const auto& g : rep["groups"]) orders[g["vertex"]] = g["order"].get<long long>();
    CHECK(orders == std::map<std::string, long long>{{"v4", 1}, {"v5", 3}, {"v6", 5}});
  }
  SUBCASE("retract caps and enumerates") {
    json one = run_retract(prism, false, 0);
    CHECK(one["count"] == 1);
    json all = run_retract(prism, true, 0);
    CHECK(all["count"].get<std::size_t>() > 1);
  }
}
