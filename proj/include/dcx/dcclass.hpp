#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dcx/lattice.hpp"
#include "dcx/polytope.hpp"
#include "dcx/types.hpp"
#include "dcx/unimodular.hpp"

namespace dcx {

// True iff x equals the integer points of its own convex hull.
bool is_pseudo_convex(const LatticeSet& x);

// Pointwise Minkowski sum/difference of finite point sets.
LatticeSet pointwise_sum(const LatticeSet& x, const LatticeSet& y);
LatticeSet pointwise_difference(const LatticeSet& x, const LatticeSet& y);
// n-fold pointwise sum of x with itself; n >= 1.
LatticeSet iterated_sum(const LatticeSet& x, int n);

// Group generated by all pairwise differences, in HNF basis. Deliberately
// not saturated: purity of this group is a property callers test.
Sublattice difference_group(const LatticeSet& x);

// Both x+y and x-y pseudo-convex.
bool check_add(const LatticeSet& x, const LatticeSet& y);

struct Separation {
  VecZ functional;  // integer phi with phi(x) > phi(y) for all x in X, y in Y
  Rat margin;       // min over X of phi minus max over Y of phi; positive
};

// Exactly one member is engaged; only separate() constructs these, and it
// re-verifies the certificate exhaustively before returning.
struct SeparationResult {
  std::optional<Separation> separation;
  std::optional<VecQ> overlap_witness;  // a point of co(X) ∩ co(Y)
  bool separated() const { return separation.has_value(); }
};

// Disjoint hulls yield the largest-margin separating facet normal of
// co(X - Y), ties broken lexicographically; overlapping hulls yield the
// lex-least vertex of co(X) ∩ co(Y).
SeparationResult separate(const LatticeSet& x, const LatticeSet& y);

// Disjoint point sets have disjoint hulls (vacuously true when the point
// sets meet).
bool check_int(const LatticeSet& x, const LatticeSet& y);
// co(X) ∩ co(Y) is empty or has integer vertices only.
bool check_edm(const LatticeSet& x, const LatticeSet& y);

// Saturated tangent of each set, deduplicated. Tangents that are not
// mutually pure raise std::invalid_argument naming the violating pair.
PureSystem homogenize(const std::vector<LatticeSet>& sets);

// Every edge of p is parallel to a root. A passing polytope additionally
// has every face tangent verified to be a flat (face tangents are saturated
// spans of edge directions, so this can only fail on an internal bug).
bool is_r_polytope(const RatPolytope& p, const UnimodularSystem& r);

// Every facet normal of p is a root.
bool is_star_r_polytope(const RatPolytope& p, const UnimodularSystem& r);

// Intersection of {x : root·x <= bound}; must be non-empty and bounded.
// Integer bounds on roots cut integer vertices, which is asserted.
RatPolytope star_r_polytope(const UnimodularSystem& r,
                            const std::vector<std::pair<VecZ, Int>>& bounds);

// Every flat of u1 is mutually pure with every flat of u2.
bool are_systems_cross_pure(const PureSystem& u1, const PureSystem& u2);

}  // namespace dcx
