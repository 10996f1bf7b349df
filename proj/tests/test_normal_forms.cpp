#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcx/normal_forms.hpp"
#include "dcx/random.hpp"

using namespace dcx;

namespace {

MatZ mat22(long a, long b, long c, long d) {
  MatZ m(2, 2);
  m << Int(a), Int(b), Int(c), Int(d);
  return m;
}

bool column_hnf_shape_ok(const MatZ& h) {
  Index prev_pivot_row = -1;
  bool seen_zero_col = false;
  for (Index j = 0; j < h.cols(); ++j) {
    Index p = -1;
    for (Index i = 0; i < h.rows(); ++i)
      if (h(i, j) != 0) {
        p = i;
        break;
      }
    if (p < 0) {
      seen_zero_col = true;
      continue;
    }
    if (seen_zero_col) return false;        // zero columns must trail
    if (p <= prev_pivot_row) return false;  // pivot rows strictly increase
    if (h(p, j) <= 0) return false;         // positive pivots
    for (Index k = 0; k < j; ++k)           // row entries left of pivot reduced
      if (h(p, k) < 0 || h(p, k) >= h(p, j)) return false;
    prev_pivot_row = p;
  }
  return true;
}

Int cofactor_det(const MatZ& m) {
  const Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int acc = 0;
  for (Index i = 0; i < n; ++i) {
    if (m(i, 0) == 0) continue;
    MatZ minor(n - 1, n - 1);
    for (Index r = 0, rr = 0; r < n; ++r) {
      if (r == i) continue;
      for (Index c = 1; c < n; ++c) minor(rr, c - 1) = m(r, c);
      ++rr;
    }
    Int term = m(i, 0) * cofactor_det(minor);
    acc += (i % 2 == 0) ? term : -term;
  }
  return acc;
}

}  // namespace

TEST_CASE("hnf of the identity is the identity") {
  MatZ id = MatZ::Identity(2, 2);
  auto r = hermite_normal_form(id);
  CHECK(r.h == id);
  CHECK(r.u == id);
}

TEST_CASE("hnf keeps an already-reduced single column") {
  MatZ m(2, 1);
  m << Int(2), Int(4);
  auto r = hermite_normal_form(m);
  CHECK(r.h == m);
  CHECK(r.u == MatZ::Identity(1, 1));
}

TEST_CASE("hnf of the index-two lattice {(1,1),(1,-1)}") {
  MatZ m = mat22(1, 1, 1, -1);
  auto r = hermite_normal_form(m);
  CHECK(r.h == mat22(1, 0, 1, 2));
  CHECK(r.h == m * r.u);
  Int du = det_integer(r.u);
  CHECK((du == 1 || du == -1));
}

TEST_CASE("hnf is canonical: invariant under right-multiplication by unimodular matrices") {
  Rng rng(20240801);
  for (int iter = 0; iter < 60; ++iter) {
    Index n = 2 + rng.below(3), c = 1 + rng.below(4);
    MatZ a = random_matrix(rng, n, c, -5, 5);
    auto r = hermite_normal_form(a);
    CHECK(r.h == a * r.u);
    Int du = det_integer(r.u);
    CHECK((du == 1 || du == -1));
    CHECK(column_hnf_shape_ok(r.h));
    MatZ g = random_unimodular(rng, c);
    CHECK(hermite_normal_form(MatZ(a * g)).h == r.h);
  }
}

TEST_CASE("hnf_basis drops trailing zero columns only") {
  MatZ m(2, 3);
  m << Int(1), Int(2), Int(3),  //
      Int(1), Int(2), Int(3);
  MatZ b = hnf_basis(m);
  REQUIRE(b.cols() == 1);
  CHECK(b(0, 0) == 1);
  CHECK(b(1, 0) == 1);
}

TEST_CASE("snf of the identity is all ones") {
  auto r = smith_normal_form(MatZ::Identity(3, 3));
  REQUIRE(r.d.size() == 3);
  for (const Int& d : r.d) CHECK(d == 1);
}

TEST_CASE("snf of {(1,1),(1,-1)} is (1,2): the sum has index two") {
  auto r = smith_normal_form(mat22(1, 1, 1, -1));
  REQUIRE(r.d.size() == 2);
  CHECK(r.d[0] == 1);
  CHECK(r.d[1] == 2);
}

TEST_CASE("snf of a single column is its gcd") {
  MatZ m(2, 1);
  m << Int(2), Int(4);
  auto r = smith_normal_form(m);
  REQUIRE(r.d.size() == 1);
  CHECK(r.d[0] == 2);
}

TEST_CASE("snf transforms are unimodular and diagonalize the input") {
  Rng rng(20240802);
  for (int iter = 0; iter < 60; ++iter) {
    Index n = 1 + rng.below(4), c = 1 + rng.below(4);
    MatZ a = random_matrix(rng, n, c, -6, 6);
    auto r = smith_normal_form(a);
    Int dl = det_integer(r.left), dr = det_integer(r.right);
    CHECK((dl == 1 || dl == -1));
    CHECK((dr == 1 || dr == -1));
    MatZ diag = r.left * a * r.right;
    for (Index i = 0; i < diag.rows(); ++i)
      for (Index j = 0; j < diag.cols(); ++j) {
        if (i == j && static_cast<size_t>(i) < r.d.size())
          CHECK(diag(i, j) == r.d[static_cast<size_t>(i)]);
        else
          CHECK(diag(i, j) == 0);
      }
    for (size_t k = 0; k + 1 < r.d.size(); ++k) {
      CHECK(r.d[k] > 0);
      CHECK(r.d[k + 1] % r.d[k] == 0);
    }
  }
}

TEST_CASE("snf divisors are invariant under unimodular changes of basis") {
  Rng rng(20240803);
  for (int iter = 0; iter < 40; ++iter) {
    Index n = 2 + rng.below(3);
    MatZ a = random_matrix(rng, n, n, -4, 4);
    auto base = smith_normal_form(a).d;
    MatZ g = random_unimodular(rng, n), h = random_unimodular(rng, n);
    CHECK(smith_normal_form(MatZ(g * a * h)).d == base);
  }
}

TEST_CASE("bareiss determinant matches cofactor expansion") {
  Rng rng(20240804);
  for (int iter = 0; iter < 50; ++iter) {
    Index n = 1 + rng.below(4);
    MatZ a = random_matrix(rng, n, n, -7, 7);
    CHECK(det_integer(a) == cofactor_det(a));
  }
  CHECK(det_integer(mat22(2, 4, 1, 2)) == 0);
  CHECK(det_integer(MatZ(0, 0)) == 1);
  CHECK_THROWS_AS(det_integer(MatZ(2, 3)), std::invalid_argument);
}

TEST_CASE("rank via fraction-free elimination") {
  CHECK(rank_of(MatZ(MatZ::Identity(3, 3))) == 3);
  CHECK(rank_of(mat22(2, 4, 1, 2)) == 1);
  CHECK(rank_of(MatZ(MatZ::Zero(2, 2))) == 0);
  MatZ wide(2, 3);
  wide << Int(1), Int(0), Int(5),  //
      Int(0), Int(1), Int(-5);
  CHECK(rank_of(wide) == 2);
}

TEST_CASE("kernel_basis spans the saturated integer kernel") {
  MatZ m(1, 3);
  m << Int(1), Int(1), Int(1);
  MatZ k = kernel_basis(m);
  REQUIRE(k.cols() == 2);
  MatZ prod = m * k;
  CHECK(prod == MatZ::Zero(1, 2));
  CHECK(column_hnf_shape_ok(k));

  // Saturation: (1,-1,0) is in the kernel and must be generated over Z.
  Rng rng(20240805);
  for (int iter = 0; iter < 30; ++iter) {
    Index r = 1 + rng.below(2), n = r + 1 + rng.below(3);
    MatZ a = random_matrix(rng, r, n, -5, 5);
    MatZ ker = kernel_basis(a);
    CHECK(MatZ(a * ker) == MatZ::Zero(r, ker.cols()));
    CHECK(rank_of(ker) == ker.cols());
    CHECK(Index(smith_normal_form(ker).d.size()) == ker.cols());
    for (const Int& d : smith_normal_form(ker).d) CHECK(d == 1);
  }
}

TEST_CASE("inverse_unimodular inverts exactly and rejects non-unimodular input") {
  Rng rng(20240806);
  for (int iter = 0; iter < 25; ++iter) {
    Index n = 1 + rng.below(4);
    MatZ u = random_unimodular(rng, n);
    CHECK(MatZ(u * inverse_unimodular(u)) == MatZ::Identity(n, n));
  }
  CHECK_THROWS_AS(inverse_unimodular(mat22(2, 0, 0, 1)), std::invalid_argument);
}

TEST_CASE("exact rational solve returns a witness or throws on inconsistency") {
  MatQ a = to_rat(mat22(1, 1, 1, -1));
  VecQ b(2);
  b << Rat(3), Rat(1);
  VecQ x = solve(a, b);
  CHECK(VecQ(a * x) == b);

  MatQ sing = to_rat(mat22(1, 1, 2, 2));
  VecQ c(2);
  c << Rat(1), Rat(3);
  CHECK_THROWS_AS(solve(sing, c), std::invalid_argument);
  c << Rat(1), Rat(2);
  VecQ y = solve(sing, c);
  CHECK(VecQ(sing * y) == c);
}
