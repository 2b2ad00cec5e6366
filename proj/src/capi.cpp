#include "qtor/qtor.h"

#include "qtor/io.hpp"
#include "qtor/retraction.hpp"

#include <cstring>
#include <new>
#include <string>

struct qtor_pair {
  qtor::CharacteristicPair pair;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::operator new(s.size() + 1, std::nothrow));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** out_error, const std::string& msg) {
  if (out_error) *out_error = dup_string(msg);
}

qtor_status status_of(const qtor::Error& e) {
  switch (e.code()) {
    case qtor::errc::parse_error:
      return QTOR_ERR_PARSE;
    case qtor::errc::internal:
      return QTOR_ERR_INTERNAL;
    default:
      return QTOR_ERR_INVALID;
  }
}

template <class Fn>
qtor_status guarded(char** out_error, Fn&& fn) {
  try {
    fn();
    return QTOR_OK;
  } catch (const qtor::Error& e) {
    set_error(out_error, e.what());
    return status_of(e);
  } catch (const std::exception& e) {
    set_error(out_error, e.what());
    return QTOR_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* qtor_version(void) { return "0.1.0"; }

void qtor_string_free(char* s) { ::operator delete(s); }

qtor_status qtor_pair_parse(const char* json_text, qtor_pair** out_pair, char** out_error) {
  if (!json_text || !out_pair) return QTOR_ERR_NULL;
  *out_pair = nullptr;
  return guarded(out_error, [&] {
    auto handle = new qtor_pair{qtor::parse_pair_document(json_text)};
    *out_pair = handle;
  });
}

void qtor_pair_free(qtor_pair* pair) { delete pair; }

qtor_status qtor_validate(const qtor_pair* pair, char** out_report, int* out_valid,
                          char** out_error) {
  if (!pair) return QTOR_ERR_NULL;
  return guarded(out_error, [&] {
    qtor::ValidateRun run = qtor::run_validate(pair->pair);
    if (out_report) *out_report = dup_string(qtor::dump_report(run.report));
    if (out_valid) *out_valid = run.valid ? 1 : 0;
  });
}

qtor_status qtor_local_groups(const qtor_pair* pair, const char* face_name, char** out_report,
                              char** out_error) {
  if (!pair) return QTOR_ERR_NULL;
  return guarded(out_error, [&] {
    std::optional<std::string> face;
    if (face_name) face = std::string(face_name);
    qtor::json report = qtor::run_local_groups(pair->pair, face);
    if (out_report) *out_report = dup_string(qtor::dump_report(report));
  });
}

qtor_status qtor_retract(const qtor_pair* pair, int enumerate_all, long cap, char** out_report,
                         char** out_error) {
  if (!pair) return QTOR_ERR_NULL;
  return guarded(out_error, [&] {
    std::size_t limit = cap > 0 ? static_cast<std::size_t>(cap) : 0;
    qtor::json report = qtor::run_retract(pair->pair, enumerate_all != 0, limit);
    if (out_report) *out_report = dup_string(qtor::dump_report(report));
  });
}

qtor_status qtor_divisive(const qtor_pair* pair, long node_budget, char** out_report,
                          int* out_verdict, char** out_error) {
  if (!pair) return QTOR_ERR_NULL;
  return guarded(out_error, [&] {
    std::size_t budget = node_budget > 0 ? static_cast<std::size_t>(node_budget)
                                         : qtor::k_default_divisive_budget;
    qtor::DivisiveRun run = qtor::run_divisive(pair->pair, budget);
    if (out_report) *out_report = dup_string(qtor::dump_report(run.report));
    if (out_verdict)
      *out_verdict = run.verdict == 1 ? QTOR_TRUE : (run.verdict == 2 ? QTOR_UNDECIDED : QTOR_FALSE);
  });
}

qtor_status qtor_gkm(const qtor_pair* pair, const char* sequence_json, char** out_report,
                     int* out_ok, char** out_error) {
  if (!pair) return QTOR_ERR_NULL;
  return guarded(out_error, [&] {
    std::optional<std::string> seq;
    if (sequence_json) seq = std::string(sequence_json);
    qtor::CheckRun run = qtor::run_gkm(pair->pair, seq);
    if (out_report) *out_report = dup_string(qtor::dump_report(run.report));
    if (out_ok) *out_ok = run.ok ? 1 : 0;
  });
}

qtor_status qtor_check_section(const qtor_pair* pair, const char* theory,
                               const char* section_json, char** out_report, int* out_ok,
                               char** out_error) {
  if (!pair || !theory || !section_json) return QTOR_ERR_NULL;
  return guarded(out_error, [&] {
    qtor::CheckRun run =
        qtor::run_check_section(pair->pair, qtor::parse_theory(theory), section_json);
    if (out_report) *out_report = dup_string(qtor::dump_report(run.report));
    if (out_ok) *out_ok = run.ok ? 1 : 0;
  });
}

qtor_status qtor_check_piecewise(const qtor_pair* pair, const char* theory,
                                 const char* element_json, char** out_report, int* out_ok,
                                 char** out_error) {
  if (!pair || !theory || !element_json) return QTOR_ERR_NULL;
  return guarded(out_error, [&] {
    qtor::CheckRun run =
        qtor::run_check_piecewise(pair->pair, qtor::parse_theory(theory), element_json);
    if (out_report) *out_report = dup_string(qtor::dump_report(run.report));
    if (out_ok) *out_ok = run.ok ? 1 : 0;
  });
}

qtor_status qtor_equiv_roundtrip(const qtor_pair* pair, const char* theory,
                                 const char* section_json, char** out_report, int* out_ok,
                                 char** out_error) {
  if (!pair || !section_json) return QTOR_ERR_NULL;
  return guarded(out_error, [&] {
    qtor::Theory th;
    if (theory && *theory) {
      th = qtor::parse_theory(theory);
    } else {
      th = qtor::theory_of_document(section_json).value_or(qtor::Theory::K);
    }
    qtor::CheckRun run = qtor::run_equiv_roundtrip(pair->pair, th, section_json);
    if (out_report) *out_report = dup_string(qtor::dump_report(run.report));
    if (out_ok) *out_ok = run.ok ? 1 : 0;
  });
}

}  // extern "C"
