#pragma once

#include <stdexcept>
#include <string>

namespace qtor {

enum class errc {
  invalid_input,
  parse_error,
  not_simple,
  duplicate_vertex,
  disconnected_skeleton,
  dimension_mismatch,
  zero_vector,
  invalid_face,
  vertex_not_in_face,
  rank_deficient,
  not_free_vertex,
  degenerate_edge,
  size_mismatch,
  missing_face,
  not_in_gamma,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace qtor
