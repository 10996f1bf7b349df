#pragma once

#include "dcx/types.hpp"

namespace dcx {

// Column-style Hermite normal form h = m * u with u unimodular.
// Canonical convention: zero columns trail; pivot (topmost nonzero entry of a
// column) rows strictly increase left to right; pivots are positive; in each
// pivot row, entries to the LEFT of the pivot lie in [0, pivot); entries above
// a pivot (in earlier rows than its pivot row) are zero by construction.
struct HnfResult {
  MatZ h;
  MatZ u;
};

HnfResult hermite_normal_form(const MatZ& m);

// Nonzero HNF columns only: a canonical basis of the column lattice.
MatZ hnf_basis(const MatZ& m);

// Smith normal form: left * m * right = diag(d) with d_1 | d_2 | ... | d_r > 0.
struct SnfResult {
  std::vector<Int> d;  // nonzero elementary divisors
  MatZ left;
  MatZ right;
};

SnfResult smith_normal_form(const MatZ& m);

// Determinant via fraction-free Bareiss elimination (exact; no division by
// non-divisors, unlike rational LU on promoted entries).
Int det_integer(const MatZ& m);

Index rank_of(const MatZ& m);
Index rank_of(const MatQ& m);

// Basis of the integer kernel {x : m x = 0}, saturated (primitive columns of
// an HNF basis of the rational kernel intersected with Z^n).
MatZ kernel_basis(const MatZ& m);

// Inverse of a matrix with det = +-1. Throws std::invalid_argument otherwise.
MatZ inverse_unimodular(const MatZ& m);

// Exact solve m x = b over Q; returns one solution (free variables set to 0).
// Throws std::invalid_argument if the system is inconsistent.
VecQ solve(const MatQ& m, const VecQ& b);

}  // namespace dcx
