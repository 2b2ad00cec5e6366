#pragma once

#include "qtor/errors.hpp"
#include "qtor/ints.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace qtor {

// Integer Laurent polynomial in a fixed number of variables, stored as
// exponent-vector -> coefficient with no zero coefficients. Doubles as the
// plain polynomial ring when all exponents are nonnegative.
class LaurentPoly {
 public:
  using Exp = std::vector<std::int64_t>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, const Int& c);
  static LaurentPoly monomial(std::size_t nvars, Exp e, const Int& c);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exp, Int>& terms() const { return terms_; }

  // true when every exponent is nonnegative (a graded polynomial)
  bool polynomial() const;

  void add_term(const Exp& e, const Int& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly pow(std::uint64_t e) const;

  bool operator==(const LaurentPoly&) const = default;

 private:
  std::size_t nvars_ = 0;
  std::map<Exp, Int> terms_;
};

}  // namespace qtor
