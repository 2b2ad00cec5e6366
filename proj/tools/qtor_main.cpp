// Command-line front end. Talks to the library exclusively through the C
// API; reports go to stdout, diagnostics to stderr.
//
// Exit codes: 0 pass/true, 1 checked-and-false, 2 input or usage error,
// 3 search budget exhausted.

#include <qtor/qtor.h>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "qtor: cannot open '" << path << "'\n";
    std::exit(kExitInput);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Report {
  char* text = nullptr;
  char* error = nullptr;
  ~Report() {
    qtor_string_free(text);
    qtor_string_free(error);
  }
};

int finish(qtor_status status, const Report& r, int ok_exit) {
  if (status != QTOR_OK) {
    std::cerr << "qtor: " << (r.error ? r.error : "unknown error") << "\n";
    return kExitInput;
  }
  if (r.text) std::cout << r.text;
  return ok_exit;
}

struct PairHandle {
  qtor_pair* pair = nullptr;
  ~PairHandle() { qtor_pair_free(pair); }
};

void load_pair(const std::string& path, PairHandle& h) {
  std::string text = read_file(path);
  Report r;
  qtor_status st = qtor_pair_parse(text.c_str(), &h.pair, &r.error);
  if (st != QTOR_OK) {
    std::cerr << "qtor: " << path << ": " << (r.error ? r.error : "parse failure") << "\n";
    std::exit(kExitInput);
  }
}

long budget_from_env() {
  const char* env = std::getenv("QTOR_DIVISIVE_BUDGET");
  if (!env) return 0;
  char* end = nullptr;
  long value = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || value <= 0) {
    std::cerr << "qtor: QTOR_DIVISIVE_BUDGET must be a positive integer\n";
    std::exit(kExitInput);
  }
  return value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial invariants of characteristic pairs over simple polytopes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qtor_version()));

  std::string input;
  std::string face, theory, section_file, element_file, seq_file;
  bool all = false;
  long cap = 0, budget = 0;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "characteristic pair document (JSON)")->required();
  };

  CLI::App* validate = app.add_subcommand("validate", "check the characteristic function");
  add_input(validate);

  CLI::App* local = app.add_subcommand("local-groups", "local group of each vertex of a face");
  add_input(local);
  local->add_option("--face", face, "face name (default: the whole polytope)");

  CLI::App* retract = app.add_subcommand("retract", "retraction sequences of the polytope");
  add_input(retract);
  retract->add_flag("--all", all, "enumerate every sequence");
  retract->add_option("--cap", cap, "stop after this many sequences");

  CLI::App* divisive = app.add_subcommand("divisive", "search for a divisiveness certificate");
  add_input(divisive);
  divisive->add_option("--budget", budget, "search node budget");

  CLI::App* gkm = app.add_subcommand("gkm", "GKM graph, coprimality and cell profile");
  add_input(gkm);
  gkm->add_option("--seq-from", seq_file, "retraction sequence document to use");

  CLI::App* check_section = app.add_subcommand("check-section", "vertex-section membership check");
  add_input(check_section);
  check_section->add_option("--theory", theory, "K or H")->required();
  check_section->add_option("--section", section_file, "section document")->required();

  CLI::App* check_piecewise =
      app.add_subcommand("check-piecewise", "face-compatibility check of a piecewise element");
  add_input(check_piecewise);
  check_piecewise->add_option("--theory", theory, "K or H")->required();
  check_piecewise->add_option("--element", element_file, "piecewise element document")->required();

  CLI::App* equiv = app.add_subcommand(
      "equiv-roundtrip", "section -> piecewise element -> section, checking every stage");
  add_input(equiv);
  equiv->add_option("--section", section_file, "section document")->required();
  equiv->add_option("--theory", theory, "K or H (default: the document's field, else K)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  PairHandle h;
  load_pair(input, h);
  Report r;

  if (validate->parsed()) {
    int valid = 0;
    qtor_status st = qtor_validate(h.pair, &r.text, &valid, &r.error);
    return finish(st, r, valid ? kExitOk : kExitFalse);
  }
  if (local->parsed()) {
    qtor_status st =
        qtor_local_groups(h.pair, face.empty() ? nullptr : face.c_str(), &r.text, &r.error);
    return finish(st, r, kExitOk);
  }
  if (retract->parsed()) {
    qtor_status st = qtor_retract(h.pair, all ? 1 : 0, cap, &r.text, &r.error);
    return finish(st, r, kExitOk);
  }
  if (divisive->parsed()) {
    if (budget <= 0) budget = budget_from_env();
    int verdict = 0;
    qtor_status st = qtor_divisive(h.pair, budget, &r.text, &verdict, &r.error);
    int exit_code = verdict == QTOR_TRUE    ? kExitOk
                    : verdict == QTOR_FALSE ? kExitFalse
                                            : kExitBudget;
    return finish(st, r, exit_code);
  }
  if (gkm->parsed()) {
    std::optional<std::string> seq_doc;
    if (!seq_file.empty()) seq_doc = read_file(seq_file);
    int ok = 0;
    qtor_status st =
        qtor_gkm(h.pair, seq_doc ? seq_doc->c_str() : nullptr, &r.text, &ok, &r.error);
    return finish(st, r, ok ? kExitOk : kExitFalse);
  }
  if (check_section->parsed()) {
    std::string doc = read_file(section_file);
    int ok = 0;
    qtor_status st = qtor_check_section(h.pair, theory.c_str(), doc.c_str(), &r.text, &ok, &r.error);
    return finish(st, r, ok ? kExitOk : kExitFalse);
  }
  if (check_piecewise->parsed()) {
    std::string doc = read_file(element_file);
    int ok = 0;
    qtor_status st =
        qtor_check_piecewise(h.pair, theory.c_str(), doc.c_str(), &r.text, &ok, &r.error);
    return finish(st, r, ok ? kExitOk : kExitFalse);
  }
  if (equiv->parsed()) {
    std::string doc = read_file(section_file);
    int ok = 0;
    // empty theory: the library takes the document's own field, default K
    qtor_status st =
        qtor_equiv_roundtrip(h.pair, theory.c_str(), doc.c_str(), &r.text, &ok, &r.error);
    return finish(st, r, ok ? kExitOk : kExitFalse);
  }
  return kExitInput;
}
