#pragma once

#include "dcx/normal_forms.hpp"
#include "dcx/types.hpp"

namespace dcx {

// Subgroup of Z^n held by its canonical column-HNF basis, so structural
// equality of bases decides lattice equality.
class Sublattice {
 public:
  // Zero sublattice of Z^ambient.
  explicit Sublattice(Index ambient);

  // Lattice generated by the columns of gens (any spanning set; reduced to
  // the canonical independent HNF basis).
  static Sublattice from_generators(const MatZ& gens);
  static Sublattice full(Index ambient);

  Index ambient_rank() const { return ambient_; }
  Index rank() const { return basis_.cols(); }
  const MatZ& basis() const { return basis_; }

  bool contains(const VecZ& v) const;

  bool operator==(const Sublattice& o) const {
    return ambient_ == o.ambient_ && basis_.cols() == o.basis_.cols() && basis_ == o.basis_;
  }
  bool operator!=(const Sublattice& o) const { return !(*this == o); }

  // Strict total order (lexicographic on ambient, rank, basis entries) so
  // sublattices can key ordered containers deterministically.
  bool operator<(const Sublattice& o) const;

 private:
  Index ambient_;
  MatZ basis_;  // ambient_ x rank, canonical HNF, independent columns
};

bool is_pure(const Sublattice& s);

struct SaturationResult {
  Sublattice sat;
  Int index;  // [sat : s] = product of elementary divisors of the basis
};
SaturationResult saturation(const Sublattice& s);

Sublattice sum_lattices(const Sublattice& s1, const Sublattice& s2);
Sublattice intersect_lattices(const Sublattice& s1, const Sublattice& s2);

// True iff S1 + S2 is pure. Demands pure inputs. Internally also evaluates
// the independent image criterion (image of S1 in M/S2 is pure) and throws
// std::logic_error if the two routes ever disagree.
bool are_mutually_pure(const Sublattice& s1, const Sublattice& s2);

// S^perp = {p in the dual : p(s) = 0 for all s in S}. Demands pure input.
// Involution on pure sublattices; rank(S^perp) = ambient - rank(S).
Sublattice orthogonal_lattice(const Sublattice& s);

// Quotient projection Z^n -> Z^(n-rank(s)) with kernel exactly s (s pure):
// full-rank integer matrix whose rows complete a basis. x in s iff proj*x = 0.
MatZ quotient_projection(const Sublattice& s);

}  // namespace dcx
