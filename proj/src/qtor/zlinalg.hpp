#pragma once

#include "qtor/errors.hpp"
#include "qtor/ints.hpp"

#include <cstddef>
#include <vector>

namespace qtor {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static IntMatrix from_cols(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  std::vector<Vec> row_list() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  // row[dst] += c * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);
  // col[dst] += c * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
Vec mul_row(const Vec& x, const IntMatrix& a);  // x * a, x indexed by rows of a

// Bareiss fraction-free elimination; exact.
Int determinant(IntMatrix a);

// u * a * v = d with u, v unimodular, d diagonal, nonnegative, and each
// diagonal entry dividing the next. u_inv, v_inv are the tracked inverses.
struct SmithForm {
  IntMatrix u, d, v;
  IntMatrix u_inv, v_inv;
  std::size_t rank = 0;
  std::vector<Int> invariant_factors() const;  // the nonzero diagonal entries
};

SmithForm smith_normal_form(const IntMatrix& a);

// Invariant-factor presentation of a finite abelian group. Unit factors are
// dropped, so the trivial group is the empty list.
struct FiniteAbelianGroup {
  std::vector<Int> invariant_factors;  // each >= 2, each dividing the next

  bool trivial() const { return invariant_factors.empty(); }
  Int order() const;
  bool operator==(const FiniteAbelianGroup&) const = default;
};

struct LatticeQuotient {
  FiniteAbelianGroup torsion;
  std::size_t free_rank = 0;
};

// Invariants of Z^ambient_rank / span(gens).
LatticeQuotient quotient_invariants(std::size_t ambient_rank, const std::vector<Vec>& gens);

// Canonical basis (row Hermite form: positive pivots, entries above each
// pivot reduced into [0, pivot)) of the lattice spanned by the given rows.
std::vector<Vec> hermite_rows(std::vector<Vec> rows);

// Basis of { x : x * a = 0 }, a saturated sublattice of Z^rows(a);
// rows come out Hermite-reduced, hence primitive with positive leading entry.
std::vector<Vec> kernel_basis(const IntMatrix& a);

// Basis of the smallest direct summand of Z^n containing span(gens).
std::vector<Vec> saturate(const std::vector<Vec>& gens, std::size_t n);

// v / gcd(entries); sign pattern preserved. Rejects the zero vector.
Vec primitive_part(const Vec& v);

std::size_t lattice_rank(const std::vector<Vec>& gens, std::size_t n);

// Coordinates of each vector w.r.t. a full-row-rank basis whose Z-span
// contains them all. Fails if some vector lies outside the span.
std::vector<Vec> coords_in_basis(const std::vector<Vec>& basis, const std::vector<Vec>& vectors,
                                 std::size_t n);

}  // namespace qtor
