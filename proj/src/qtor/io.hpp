#pragma once

#include "qtor/gkm.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace qtor {

using json = nlohmann::json;

// Pair document: { "dim": n, "facets": [names], "vertices": [{"name", "facets"}],
//                  "lambda": { facet name: [ints] } }.
// Structural problems (malformed JSON, unknown names, wrong vector lengths,
// non-polytope incidence) throw; mathematical invalidity of lambda does not.
CharacteristicPair parse_pair_document(const std::string& text);

// Section document: { "theory"?: "K"|"H", "section": { vertex: [terms] } }
// with terms as { "exp": [ints], "coef": int-or-decimal-string }.
Section parse_section(const std::string& text, const CharacteristicPair& pair, Theory theory);

// Piecewise document: { "theory"?: "K"|"H", "element": { face name: [terms] } }.
PiecewiseElement parse_piecewise(const std::string& text, const CharacteristicPair& pair,
                                 Theory theory);

// Accepts {"order": [vertex names]} or a certificate {"steps":[{"vertex":...}]}
// and replays it; rejects orders that are not retraction sequences.
RetractionSequence parse_sequence(const std::string& text, const SimplePolytope& p);

std::optional<Theory> theory_of_document(const std::string& text);
Theory parse_theory(const std::string& name);

json int_to_json(const Int& x);  // number when it fits, decimal string otherwise
json vec_to_json(const Vec& v);
json poly_to_json(const LaurentPoly& p);
json group_to_json(const FiniteAbelianGroup& g);
json certificate_to_json(const CharacteristicPair& pair, const RetractionSequence& seq,
                         bool with_groups);

std::string dump_report(const json& report);  // 2-space indent, trailing newline

// Subcommand drivers: each returns the report document plus the verdict the
// caller maps to an exit status.
struct ValidateRun {
  json report;
  bool valid = false;
};
ValidateRun run_validate(const CharacteristicPair& pair);

json run_local_groups(const CharacteristicPair& pair, const std::optional<std::string>& face);

json run_retract(const CharacteristicPair& pair, bool all, std::size_t cap);

struct DivisiveRun {
  json report;
  int verdict = 0;  // 0 none, 1 certificate, 2 undecided
};
DivisiveRun run_divisive(const CharacteristicPair& pair, std::size_t budget);

struct CheckRun {
  json report;
  bool ok = false;
};
CheckRun run_gkm(const CharacteristicPair& pair, const std::optional<std::string>& seq_doc);
CheckRun run_check_section(const CharacteristicPair& pair, Theory theory,
                           const std::string& section_doc);
CheckRun run_check_piecewise(const CharacteristicPair& pair, Theory theory,
                             const std::string& element_doc);
CheckRun run_equiv_roundtrip(const CharacteristicPair& pair, Theory theory,
                             const std::string& section_doc);

}  // namespace qtor
