#pragma once

#include <vector>

#include "dcx/cone.hpp"
#include "dcx/polytope.hpp"
#include "dcx/types.hpp"

namespace dcx {

// Closed polyhedral cone in canonical form: `lineality` is the column HNF
// basis of the largest linear subspace contained in the cone, `rays` are the
// primitive extreme rays reduced mod lineality, lex-sorted.  `dim` is the
// dimension of the cone as a set.
struct Cone {
  MatZ lineality;
  MatZ rays;
  Index dim = 0;

  bool pointed() const { return lineality.cols() == 0; }
  bool operator==(const Cone& o) const;
  bool operator!=(const Cone& o) const { return !(*this == o); }
  bool operator<(const Cone& o) const;
};

Cone cone_from_inequalities(const MatQ& a);

// Finite collection of cones closed under faces; maximal cones have pairwise
// disjoint interiors.  Cones are stored sorted by (dim, generators).
class Fan {
 public:
  Fan(Index ambient, std::vector<Cone> cones);

  Index ambient_rank() const { return ambient_; }
  const std::vector<Cone>& cones() const { return cones_; }
  std::vector<Cone> maximal_cones() const;

  bool operator==(const Fan& o) const { return ambient_ == o.ambient_ && cones_ == o.cones_; }
  bool operator!=(const Fan& o) const { return !(*this == o); }

 private:
  Index ambient_ = 0;
  std::vector<Cone> cones_;
};

// One cone per face of p, generated by the normals of the facets containing
// the face; the cone of a face is orthogonal to the face's tangent space.
// Requires p full-dimensional.
Fan normal_fan(const RatPolytope& p);

// Cells of the central hyperplane arrangement {x : m·x = 0}, m in `mirrors`.
struct ChamberComplex {
  std::vector<VecZ> mirrors;            // primitive, one per +/- line class
  std::vector<Cone> chambers;           // the full-dimensional cells
  std::vector<std::vector<int>> signs;  // signs[c][m] = sign of m on chamber c

  struct Wall {
    Index mirror;  // wall spans mirror's hyperplane
    Index plus;    // chamber with mirror >= 0
    Index minus;   // chamber with mirror <= 0
    Cone cone;
  };
  std::vector<Wall> walls;
};

ChamberComplex central_chambers(const std::vector<VecZ>& mirrors, Index ambient);

// Complete fan of all cells of the central arrangement, closed under faces.
Fan arrangement_fan(const std::vector<VecZ>& mirrors, Index ambient);

}  // namespace dcx
