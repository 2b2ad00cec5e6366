#include "oracles.hpp"
#include "qtor/zlinalg.hpp"

#include <doctest.h>

#include <random>

using namespace qtor;
using oracles::iv;

namespace {

void check_snf_contract(const IntMatrix& a, const SmithForm& s) {
  CHECK(s.u * a * s.v == s.d);
  CHECK(s.u * s.u_inv == IntMatrix::identity(a.rows()));
  CHECK(s.v * s.v_inv == IntMatrix::identity(a.cols()));
  CHECK(abs_int(determinant(s.u)) == 1);
  CHECK(abs_int(determinant(s.v)) == 1);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) CHECK(s.d.at(i, j) == 0);
  for (std::size_t i = 0; i < s.rank; ++i) {
    CHECK(s.d.at(i, i) > 0);
    if (i + 1 < s.rank) CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
  }
}

}  // namespace

TEST_CASE("smith normal form on pinned matrices") {
  SUBCASE("diag(2,3) has factors 1,6") {
    IntMatrix a = IntMatrix::from_rows({iv({2, 0}), iv({0, 3})}, 2);
    SmithForm s = smith_normal_form(a);
    check_snf_contract(a, s);
    REQUIRE(s.rank == 2);
    CHECK(s.d.at(0, 0) == 1);
    CHECK(s.d.at(1, 1) == 6);
  }
  SUBCASE("identity is its own form") {
    IntMatrix a = IntMatrix::identity(3);
    SmithForm s = smith_normal_form(a);
    check_snf_contract(a, s);
    CHECK(s.d == a);
  }
  SUBCASE("column (1,1,4) reduces to a single unit") {
    IntMatrix a = IntMatrix::from_cols({iv({1, 1, 4})}, 3);
    SmithForm s = smith_normal_form(a);
    check_snf_contract(a, s);
    REQUIRE(s.rank == 1);
    CHECK(s.d.at(0, 0) == 1);
  }
  SUBCASE("empty shapes") {
    CHECK(smith_normal_form(IntMatrix(0, 3)).rank == 0);
    CHECK(smith_normal_form(IntMatrix(3, 0)).rank == 0);
  }
}

TEST_CASE("kernel_basis") {
  SUBCASE("single column (0,1)") {
    auto k = kernel_basis(IntMatrix::from_cols({iv({0, 1})}, 2));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == iv({1, 0}));
  }
  SUBCASE("single column (-1,-1)") {
    auto k = kernel_basis(IntMatrix::from_cols({iv({-1, -1})}, 2));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == iv({1, -1}));
  }
  SUBCASE("no columns: full lattice") {
    auto k = kernel_basis(IntMatrix(2, 0));
    REQUIRE(k.size() == 2);
    CHECK(k[0] == iv({1, 0}));
    CHECK(k[1] == iv({0, 1}));
  }
  SUBCASE("kernel vectors annihilate and form a saturated summand") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t n = 1 + rng() % 4, c = rng() % 4;
      IntMatrix a = oracles::random_matrix(rng, n, c, -6, 6);
      auto k = kernel_basis(a);
      for (const Vec& x : k) CHECK(is_zero_vec(mul_row(x, a)));
      if (!k.empty()) {
        SmithForm s = smith_normal_form(IntMatrix::from_rows(k, n));
        REQUIRE(s.rank == k.size());
        for (const Int& f : s.invariant_factors()) CHECK(f == 1);
      }
      CHECK(k.size() + smith_normal_form(a).rank == n);
    }
  }
}

TEST_CASE("saturate") {
  CHECK(saturate({iv({2, 0})}, 2) == std::vector<Vec>{iv({1, 0})});
  CHECK(saturate({iv({1, 1, 4})}, 3) == std::vector<Vec>{iv({1, 1, 4})});
  CHECK(saturate({iv({2, 0}), iv({0, 3})}, 2) == std::vector<Vec>{iv({1, 0}), iv({0, 1})});
  CHECK(saturate({}, 3).empty());

  SUBCASE("idempotent, rank-preserving, and contains the span") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t n = 1 + rng() % 4, k = 1 + rng() % 3;
      std::vector<Vec> gens;
      for (std::size_t i = 0; i < k; ++i) gens.push_back(oracles::random_matrix(rng, 1, n, -5, 5).row(0));
      std::vector<Vec> gens_nz;
      for (const Vec& g : gens)
        if (!is_zero_vec(g)) gens_nz.push_back(g);
      auto sat = saturate(gens_nz, n);
      CHECK(saturate(sat, n) == sat);
      CHECK(sat.size() == lattice_rank(gens_nz, n));
      if (!gens_nz.empty() && !sat.empty()) {
        // every generator has integer coordinates in the saturation
        CHECK_NOTHROW(coords_in_basis(sat, gens_nz, n));
      }
    }
  }
}

TEST_CASE("primitive_part") {
  CHECK(primitive_part(iv({2, 4})) == iv({1, 2}));
  CHECK(primitive_part(iv({-2, 0})) == iv({-1, 0}));
  CHECK(primitive_part(iv({3, 5})) == iv({3, 5}));
  CHECK_THROWS_WITH_AS(static_cast<void>(primitive_part(iv({0, 0}))),
                       "primitive part of the zero vector", Error);
}

TEST_CASE("quotient_invariants") {
  SUBCASE("index-2 sublattice of Z^2") {
    LatticeQuotient q = quotient_invariants(2, {iv({1, 0}), iv({-1, -2})});
    CHECK(q.free_rank == 0);
    CHECK(q.torsion.invariant_factors == std::vector<Int>{2});
  }
  SUBCASE("identity columns give the trivial quotient") {
    LatticeQuotient q = quotient_invariants(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})});
    CHECK(q.free_rank == 0);
    CHECK(q.torsion.trivial());
  }
  SUBCASE("the order-5 vertex of the prism fixture") {
    LatticeQuotient q = quotient_invariants(3, {iv({0, 1, 0}), iv({2, -1, 3}), iv({1, 1, 4})});
    CHECK(q.free_rank == 0);
    CHECK(q.torsion.order() == 5);
  }
  SUBCASE("no generators: free of full rank") {
    LatticeQuotient q = quotient_invariants(3, {});
    CHECK(q.free_rank == 3);
    CHECK(q.torsion.trivial());
  }
}

TEST_CASE("determinant equals the product of quotient invariant factors") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t n = 1 + rng() % 4;
    IntMatrix a = oracles::random_matrix(rng, n, n, -7, 7);
    Int det = oracles::det_cofactor(a);
    LatticeQuotient q = quotient_invariants(n, a.row_list());
    if (det == 0) {
      CHECK(q.free_rank > 0);
    } else {
      CHECK(q.free_rank == 0);
      CHECK(q.torsion.order() == abs_int(det));
    }
    CHECK(determinant(a) == det);
  }
}

TEST_CASE("quotient invariants are unimodular-invariant") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + rng() % 4, k = 1 + rng() % n;
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(oracles::random_matrix(rng, 1, n, -5, 5).row(0));
    IntMatrix u = oracles::random_unimodular(rng, n);
    std::vector<Vec> moved;
    for (const Vec& g : gens) moved.push_back(mul_row(g, u));
    LatticeQuotient a = quotient_invariants(n, gens);
    LatticeQuotient b = quotient_invariants(n, moved);
    CHECK(a.free_rank == b.free_rank);
    CHECK(a.torsion == b.torsion);
  }
}

TEST_CASE("hermite form is canonical for the row lattice") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng() % 4, k = 1 + rng() % 3;
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < k; ++i) rows.push_back(oracles::random_matrix(rng, 1, n, -5, 5).row(0));
    auto h = hermite_rows(rows);
    // shuffling and row-mixing the generators leaves the form unchanged
    std::vector<Vec> mixed = rows;
    if (mixed.size() >= 2) {
      for (std::size_t i = 0; i < mixed.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) mixed[i][j] += 2 * mixed[(i + 1) % mixed.size()][j];
    }
    std::reverse(mixed.begin(), mixed.end());
    // mixing with coefficient 2 keeps the lattice only when we append originals
    for (const Vec& r : rows) mixed.push_back(r);
    CHECK(hermite_rows(mixed) == h);
  }
}
