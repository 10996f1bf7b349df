#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dcx/fan.hpp"
#include "dcx/lattice.hpp"
#include "dcx/polytope.hpp"
#include "dcx/types.hpp"

namespace dcx {

struct UnimodularFailure;

// Symmetric set of primitive nonzero integer vectors, every subset of which
// spans a pure sublattice.  Both signs of every root are stored, lex-sorted.
class UnimodularSystem {
 public:
  Index ambient_rank() const { return ambient_; }
  const std::vector<VecZ>& roots() const { return roots_; }
  const std::vector<VecZ>& line_reps() const { return reps_; }  // one per +/- pair
  Index rank() const { return rank_; }
  bool contains_root(const VecZ& v) const;

  bool operator==(const UnimodularSystem& o) const;
  bool operator!=(const UnimodularSystem& o) const { return !(*this == o); }

 private:
  UnimodularSystem(Index ambient, std::vector<VecZ> roots, std::vector<VecZ> reps, Index rank);
  // Skips the unimodularity check; callers must hold a proof.
  static UnimodularSystem trusted(Index ambient, const std::vector<VecZ>& vectors);

  friend std::variant<UnimodularSystem, UnimodularFailure> validate_unimodular(
      Index ambient, const std::vector<VecZ>& vectors);
  friend UnimodularSystem direct_sum(const UnimodularSystem&, const UnimodularSystem&);

  Index ambient_ = 0;
  std::vector<VecZ> roots_;
  std::vector<VecZ> reps_;
  Index rank_ = 0;
};

struct UnimodularFailure {
  std::vector<VecZ> violating;  // subset spanning a non-pure sublattice
};

// Accepts iff every linearly independent subset of the input spans a pure
// sublattice.  Zero vectors are dropped; signs are completed.  A valid
// verdict is cross-checked against the total-unimodularity of the coordinate
// matrix in a root basis of the span.
std::variant<UnimodularSystem, UnimodularFailure> validate_unimodular(
    Index ambient, const std::vector<VecZ>& vectors);

// Built-in systems: "A_n" (size n), "A(N)" (size |N|), "E5", "D_K33".
UnimodularSystem builtin(const std::string& name, Index size);

struct Graph {
  Index vertex_count = 0;
  std::vector<std::pair<Index, Index>> edges;  // ordered pairs fix orientations
};

// Cohomology classes of the edges over the lexicographically-first DFS tree;
// coordinates are indexed by the non-tree edges.  Requires a connected graph.
UnimodularSystem cographic(const Graph& g);

// Deduplicated family of pure sublattices, pairwise mutually pure.
class PureSystem {
 public:
  PureSystem(Index ambient, std::vector<Sublattice> flats);

  Index ambient_rank() const { return ambient_; }
  const std::vector<Sublattice>& flats() const { return flats_; }
  bool contains(const Sublattice& s) const;

  bool operator==(const PureSystem& o) const;
  bool operator!=(const PureSystem& o) const { return !(*this == o); }

 private:
  Index ambient_ = 0;
  std::vector<Sublattice> flats_;
};

// Saturated spans of all root subsets, from {0} up to the full span.
PureSystem flats(const UnimodularSystem& r);

// Flat-wise orthogonal system in the dual lattice; an involution.
PureSystem dual_system(const PureSystem& u);

bool is_sum_closed(const PureSystem& u);
bool is_intersection_closed(const PureSystem& u);

// True iff no primitive vector can be added without breaking unimodularity.
// Full-dimensional systems contain a lattice basis among their roots, which
// confines candidates to {-1,0,1} coordinates; lower-dimensional systems are
// never maximal (a basis completion of the span extends them).
bool is_maximal_unimodular(const UnimodularSystem& r);

// Integer functionals p with |p(root)| <= 1 for every root, including 0.
std::vector<VecZ> coroots(const UnimodularSystem& r);

// Primitive +/- generators of the orthogonal lines of the corank-1 flats.
std::vector<VecZ> crossings(const UnimodularSystem& r);

// {p : root(p) <= 1 for every root}; bounded since r is full-dimensional.
RatPolytope star_polytope(const UnimodularSystem& r);

// Full-dimensional cells of {p : p(root) = a, a integer} clipped to the box
// [lo, hi]; the cells tile the box.
std::vector<RatPolytope> dicing_chambers(const UnimodularSystem& r, const VecZ& lo,
                                         const VecZ& hi);

// Complete fan cut by the root hyperplanes {p : p(root) = 0}.
Fan fan_sigma(const UnimodularSystem& r);

UnimodularSystem direct_sum(const UnimodularSystem& a, const UnimodularSystem& b);

// Images of the roots in M / Z*root, in coordinates of a basis completion.
UnimodularSystem project_along_root(const UnimodularSystem& r, const VecZ& root);

struct Decomposition {
  bool closed = false;  // intersection-closed flats; false leaves no blocks
  struct Block {
    std::string type;  // "A1" or "A2"
    std::vector<VecZ> roots;
  };
  std::vector<Block> blocks;
};

// Splits an intersection-closed system into blocks on the line graph whose
// edges are root pairs spanning a rank-2 flat that holds a third root line.
Decomposition decompose_a1_a2(const UnimodularSystem& r);

// +/- indicator vectors of a laminar family over {0,...,ground-1}; singletons
// are added automatically.
UnimodularSystem laminar_system(Index ground, const std::vector<std::vector<Index>>& family);

}  // namespace dcx
