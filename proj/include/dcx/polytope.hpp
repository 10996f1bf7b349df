#pragma once

#include <optional>
#include <vector>

#include "dcx/lattice.hpp"
#include "dcx/types.hpp"

namespace dcx {

// Finite non-empty set of integer points, deduplicated and lex-sorted.
class LatticeSet {
 public:
  explicit LatticeSet(std::vector<VecZ> pts);

  Index ambient_rank() const { return ambient_; }
  const std::vector<VecZ>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(const VecZ& v) const;

  bool operator==(const LatticeSet& o) const {
    return ambient_ == o.ambient_ && points_ == o.points_;
  }
  bool operator!=(const LatticeSet& o) const { return !(*this == o); }

 private:
  Index ambient_;
  std::vector<VecZ> points_;
};

// Inequality normal·x <= rhs with primitive integer normal.
struct Facet {
  VecZ normal;
  Rat rhs;

  bool operator==(const Facet& o) const {
    return normal.size() == o.normal.size() && normal == o.normal && rhs == o.rhs;
  }
};

// Bounded rational polytope carrying synchronized V- and H-representations.
// Vertices are minimal and lex-sorted; facets are the canonical irredundant
// inequalities, with the affine hull of a lower-dimensional polytope stored
// as +- pairs of equality-tight inequalities.
class RatPolytope {
 public:
  static RatPolytope from_points(const std::vector<VecQ>& pts);
  // Empty feasible sets yield nullopt; unbounded ones throw.
  static std::optional<RatPolytope> from_inequalities(Index ambient,
                                                      const std::vector<Facet>& ineqs);

  Index ambient_rank() const { return ambient_; }
  Index dim() const { return dim_; }
  const std::vector<VecQ>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  bool contains(const VecQ& x) const;

  bool operator==(const RatPolytope& o) const {
    return ambient_ == o.ambient_ && vertices_ == o.vertices_;
  }
  bool operator!=(const RatPolytope& o) const { return !(*this == o); }

 private:
  RatPolytope() = default;

  Index ambient_ = 0;
  Index dim_ = 0;
  std::vector<VecQ> vertices_;
  std::vector<Facet> facets_;
};

RatPolytope hull(const std::vector<VecQ>& pts);
RatPolytope hull(const LatticeSet& x);

// Exact bounding-box scan filtered by the facet inequalities: the brute-force
// oracle the rest of the library cross-checks against. Sorted ascending; may
// be empty. Throws when the box exceeds enum_budget().
std::vector<VecZ> integer_points_in(const RatPolytope& p);

// integer_points_in wrapped as a LatticeSet; throws if the polytope contains
// no integer point.
LatticeSet lattice_points(const RatPolytope& p);

bool is_lattice_polytope(const RatPolytope& p);

RatPolytope minkowski_sum(const RatPolytope& p, const RatPolytope& q);
std::optional<RatPolytope> intersect_polytopes(const RatPolytope& p, const RatPolytope& q);

struct Face {
  std::vector<Index> vertex_indices;  // sorted positions into p.vertices()
  Sublattice tangent;                 // saturation of the difference lattice
  Index dim;
};

// Complete face lattice (vertices through the polytope itself; no empty
// face), via closure of vertex-facet incidences under intersection.
std::vector<Face> faces(const RatPolytope& p);

struct Edge {
  Index a, b;      // vertex positions, a < b
  VecZ direction;  // primitive, sign-canonical line representative
};

std::vector<Edge> edges(const RatPolytope& p);

Rat support_value(const RatPolytope& p, const VecZ& phi);

// Volume normalized to the lattice induced on the polytope's affine hull
// (Euclidean volume when full-dimensional). Exact.
Rat lattice_volume(const RatPolytope& p);

// Candidate cap for brute-force scans; DCX_ENUM_BUDGET overrides the default
// of 10^7.
long long enum_budget();

}  // namespace dcx
