#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dcx/polytope.hpp"
#include "dcx/types.hpp"
#include "dcx/unimodular.hpp"

namespace dcx {

// Rational function on the subsets of a ground set {0, ..., ground-1},
// normalized to value 0 on the empty set. Subsets are bitmasks: bit i set
// means element i belongs to the subset. Ground sizes are capped so that
// exhaustive subset scans stay cheap.
class SetFunction {
 public:
  SetFunction(Index ground, std::vector<Rat> values);

  Index ground_size() const { return ground_; }
  unsigned subset_count() const { return 1u << ground_; }
  const Rat& value(unsigned mask) const;
  const std::vector<Rat>& values() const { return values_; }

  bool operator==(const SetFunction& o) const {
    return ground_ == o.ground_ && values_ == o.values_;
  }
  bool operator!=(const SetFunction& o) const { return !(*this == o); }

 private:
  Index ground_;
  std::vector<Rat> values_;
};

// Exhaustive pair scans; nested pairs hold with equality and are skipped.
bool is_submodular(const SetFunction& b);
bool is_supermodular(const SetFunction& a);

// {x : x(S) <= b(S) for all S, x(N) = b(N)} for submodular b.
RatPolytope base_polytope(const SetFunction& b);

// Vertex of base_polytope(b) selected by a visiting order: the coordinate of
// the k-th visited element is the increment of b along the order's prefixes.
VecQ greedy_vertex(const SetFunction& b, const std::vector<Index>& order);

// Piecewise-linear extension interpolating b on indicator vectors: sort the
// coordinates of p in descending order and weight each prefix set by the
// drop to the next coordinate (ties get zero weight).
Rat choquet_extension(const SetFunction& b, const VecQ& p);

// b submodular, a supermodular, and b(S) - a(T) >= b(S\T) - a(T\S) for all
// pairs; such pairs cut out non-empty generalized-permutohedron slabs.
bool is_strong_pair(const SetFunction& b, const SetFunction& a);

// Validated pair: upper() is the submodular bound, lower() the supermodular
// one. Construction rejects pairs failing is_strong_pair.
class StrongPair {
 public:
  StrongPair(SetFunction b, SetFunction a);
  const SetFunction& upper() const { return b_; }
  const SetFunction& lower() const { return a_; }

 private:
  SetFunction b_;
  SetFunction a_;
};

// {x : lower(S) <= x(S) <= upper(S) for all non-empty S}.
RatPolytope gpm_polytope(const StrongPair& pair);

// Reads b(S) off the support function of a polytope lying in a hyperplane
// x(N) = const: b(S) = max {x(S) : x in p}.
SetFunction support_setfunction(const RatPolytope& p);

// Rational values on the crossings of a full-dimensional system; the key set
// must equal crossings(system) exactly.
class FanFunction {
 public:
  FanFunction(UnimodularSystem system, std::vector<std::pair<VecZ, Rat>> values);

  const UnimodularSystem& system() const { return system_; }
  const std::vector<VecZ>& keys() const { return keys_; }
  const Rat& value(const VecZ& xi) const;

 private:
  UnimodularSystem system_;
  std::vector<VecZ> keys_;
  std::vector<Rat> vals_;
};

// Fan data induced by a set function b through the chart of the difference
// system on b's ground set: the chart identifies that system's fan with the
// fan of A_{n-1}, and the induced values are g(1_T) = b(T) and
// g(-1_T) = b(N\T) - b(N). Compatibility of the result is equivalent to
// submodularity of b.
FanFunction fan_function_from_setfunction(const SetFunction& b);

// Fan data of a bound pair over A_n: g(1_S) = b(S), g(-1_S) = -a(S).
// Compatibility of the result is equivalent to is_strong_pair(b, a).
FanFunction fan_function_from_pair(const SetFunction& b, const SetFunction& a);

struct FanCompatReport {
  bool compatible = true;
  std::string violation;       // failed relation, human-readable
  std::vector<VecZ> involved;  // crossings participating in the failure
};

// Decides whether f extends to a convex function that is linear on every
// chamber of the system's hyperplane arrangement fan. Two relations are
// checked exactly: linear dependencies among crossings inside one chamber
// must be respected with equality, and across every wall the unique positive
// combination of an outside crossing pair that lands in the wall's span must
// be dominated from below. When the system is A_n the verdict is cross-checked
// against is_strong_pair of the induced bound pair; disagreement throws.
FanCompatReport fan_compat_check(const FanFunction& f);

// Whether every chamber of the system's fan lies inside one normal-fan cone
// of p, i.e. the chamber fan refines the normal fan. Decided two independent
// ways (edge directions vs per-chamber constant maximizers) which must agree.
bool sigma_refines_normal_fan(const RatPolytope& p, const UnimodularSystem& r);

struct ZonotopeComplement {
  long k = 0;
  RatPolytope complement;
};

// Least k with minkowski_sum(p, complement) equal to the k-fold dilation of
// the unit zonotope of r (sum of co{-rep, rep} over root lines). Requires
// sigma_refines_normal_fan(p, r); the search is capped and reports failure.
ZonotopeComplement zonotope_complement(const RatPolytope& p,
                                       const UnimodularSystem& r,
                                       long cap = 16);

}  // namespace dcx
