#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace qtor {

// Exact arbitrary-precision integer. Entry growth in normal-form
// computations is unbounded for fixed-width types, so everything in the
// lattice layer runs on this.
using Int = boost::multiprecision::cpp_int;
using Vec = std::vector<Int>;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// quotient rounded toward -inf; b must be nonzero
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline bool is_zero_vec(const Vec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

std::int64_t to_i64(const Int& a);

}  // namespace qtor
