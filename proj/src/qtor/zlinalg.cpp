#include "qtor/zlinalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace qtor {

std::int64_t to_i64(const Int& a) {
  if (a < std::numeric_limits<std::int64_t>::min() || a > std::numeric_limits<std::int64_t>::max())
    fail(errc::internal, "integer out of 64-bit range");
  return a.convert_to<std::int64_t>();
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(errc::size_mismatch, "ragged row list");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_cols(const std::vector<Vec>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) fail(errc::size_mismatch, "ragged column list");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec IntMatrix::row(std::size_t i) const {
  Vec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

std::vector<Vec> IntMatrix::row_list() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& c) {
  for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += c * at(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& c) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += c * at(i, src);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) fail(errc::size_mismatch, "matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Vec mul_row(const Vec& x, const IntMatrix& a) {
  if (x.size() != a.rows()) fail(errc::size_mismatch, "row-vector product shape mismatch");
  Vec y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) y[j] += x[i] * a.at(i, j);
  }
  return y;
}

Int determinant(IntMatrix a) {
  if (a.rows() != a.cols()) fail(errc::size_mismatch, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t piv = k;
      while (piv < n && a.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

std::vector<Int> SmithForm::invariant_factors() const {
  std::vector<Int> f;
  for (std::size_t i = 0; i < rank; ++i) f.push_back(d.at(i, i));
  return f;
}

namespace {

// Elementary operations on d with the four transforms kept in sync:
// d = u * a * v, u * u_inv = I, v * v_inv = I.
struct SnfState {
  SmithForm s;

  void row_swap(std::size_t i, std::size_t j) {
    s.d.swap_rows(i, j);
    s.u.swap_rows(i, j);
    s.u_inv.swap_cols(i, j);
  }
  void col_swap(std::size_t i, std::size_t j) {
    s.d.swap_cols(i, j);
    s.v.swap_cols(i, j);
    s.v_inv.swap_rows(i, j);
  }
  void row_add(std::size_t dst, std::size_t src, const Int& c) {
    s.d.add_row_multiple(dst, src, c);
    s.u.add_row_multiple(dst, src, c);
    s.u_inv.add_col_multiple(src, dst, -c);
  }
  void col_add(std::size_t dst, std::size_t src, const Int& c) {
    s.d.add_col_multiple(dst, src, c);
    s.v.add_col_multiple(dst, src, c);
    s.v_inv.add_row_multiple(src, dst, -c);
  }
  void row_negate(std::size_t i) {
    s.d.negate_row(i);
    s.u.negate_row(i);
    s.u_inv.negate_col(i);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SnfState st{SmithForm{IntMatrix::identity(m), a, IntMatrix::identity(n),
                        IntMatrix::identity(m), IntMatrix::identity(n), 0}};
  IntMatrix& d = st.s.d;

  const std::size_t lim = std::min(m, n);
  std::size_t t = 0;
  while (t < lim) {
    // minimal nonzero |entry| in d[t.., t..], row-major scan
    bool found = false;
    std::size_t pi = t, pj = t;
    Int best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (d.at(i, j) == 0) continue;
        Int v = abs_int(d.at(i, j));
        if (!found || v < best) {
          found = true;
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    st.row_swap(t, pi);
    st.col_swap(t, pj);

    bool residue = false;
    for (std::size_t i = t + 1; i < m; ++i) {
      if (d.at(i, t) == 0) continue;
      Int q = d.at(i, t) / d.at(t, t);
      if (q != 0) st.row_add(i, t, -q);
      if (d.at(i, t) != 0) residue = true;
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (d.at(t, j) == 0) continue;
      Int q = d.at(t, j) / d.at(t, t);
      if (q != 0) st.col_add(j, t, -q);
      if (d.at(t, j) != 0) residue = true;
    }
    if (residue) continue;  // remainders smaller than the pivot exist; rescan

    // pivot must divide the rest of the submatrix for the factor chain
    bool fixed = false;
    for (std::size_t i = t + 1; i < m && !fixed; ++i)
      for (std::size_t j = t + 1; j < n && !fixed; ++j)
        if (d.at(i, j) % d.at(t, t) != 0) {
          st.row_add(t, i, 1);
          fixed = true;
        }
    if (fixed) continue;
    ++t;
  }
  st.s.rank = t;
  for (std::size_t i = 0; i < t; ++i)
    if (d.at(i, i) < 0) st.row_negate(i);
  return st.s;
}

Int FiniteAbelianGroup::order() const {
  Int o = 1;
  for (const Int& f : invariant_factors) o *= f;
  return o;
}

LatticeQuotient quotient_invariants(std::size_t ambient_rank, const std::vector<Vec>& gens) {
  SmithForm s = smith_normal_form(IntMatrix::from_rows(gens, ambient_rank));
  LatticeQuotient q;
  q.free_rank = ambient_rank - s.rank;
  for (const Int& f : s.invariant_factors())
    if (f >= 2) q.torsion.invariant_factors.push_back(f);
  return q;
}

std::vector<Vec> hermite_rows(std::vector<Vec> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows[0].size();
  for (const Vec& r : rows)
    if (r.size() != n) fail(errc::size_mismatch, "ragged row list");

  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    for (;;) {
      std::size_t piv = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (piv == rows.size() || abs_int(rows[i][c]) < abs_int(rows[piv][c])) piv = i;
      }
      if (piv == rows.size()) goto next_col;
      std::swap(rows[r], rows[piv]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Int q = rows[i][c] / rows[r][c];
        for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[r][c] < 0)
      for (std::size_t j = 0; j < n; ++j) rows[r][j] = -rows[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(rows[i][c], rows[r][c]);
      if (q != 0)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  next_col:;
  }
  rows.resize(r);
  return rows;
}

std::vector<Vec> kernel_basis(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  std::vector<Vec> rows;
  for (std::size_t i = s.rank; i < a.rows(); ++i) rows.push_back(s.u.row(i));
  return hermite_rows(std::move(rows));
}

std::vector<Vec> saturate(const std::vector<Vec>& gens, std::size_t n) {
  if (gens.empty()) return {};
  SmithForm s = smith_normal_form(IntMatrix::from_rows(gens, n));
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < s.rank; ++i) rows.push_back(s.v_inv.row(i));
  return hermite_rows(std::move(rows));
}

Vec primitive_part(const Vec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd_int(g, x);
  if (g == 0) fail(errc::zero_vector, "primitive part of the zero vector");
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

std::size_t lattice_rank(const std::vector<Vec>& gens, std::size_t n) {
  if (gens.empty()) return 0;
  return smith_normal_form(IntMatrix::from_rows(gens, n)).rank;
}

std::vector<Vec> coords_in_basis(const std::vector<Vec>& basis, const std::vector<Vec>& vectors,
                                 std::size_t n) {
  const std::size_t k = basis.size();
  SmithForm s = smith_normal_form(IntMatrix::from_rows(basis, n));
  if (s.rank != k) fail(errc::rank_deficient, "dependent basis rows");
  // basis = u_inv * [D|0] * v_inv, so x * basis = g  <=>  x * u_inv * [D|0] = g * v.
  std::vector<Vec> out;
  out.reserve(vectors.size());
  for (const Vec& g : vectors) {
    Vec gv = mul_row(g, s.v);
    Vec y(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (gv[i] % s.d.at(i, i) != 0) fail(errc::rank_deficient, "vector outside basis span");
      y[i] = gv[i] / s.d.at(i, i);
    }
    for (std::size_t i = k; i < n; ++i)
      if (gv[i] != 0) fail(errc::rank_deficient, "vector outside basis span");
    Vec x(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) x[j] += y[i] * s.u.at(i, j);
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace qtor
