#include "dcx/lattice.hpp"

#include <stdexcept>

namespace dcx {

namespace {

void require_same_ambient(const Sublattice& a, const Sublattice& b, const char* op) {
  if (a.ambient_rank() != b.ambient_rank())
    throw std::invalid_argument(std::string(op) + ": ambient rank mismatch");
}

void require_pure(const Sublattice& s, const char* op) {
  if (!is_pure(s)) throw std::invalid_argument(std::string(op) + ": sublattice is not pure");
}

}  // namespace

Sublattice::Sublattice(Index ambient) : ambient_(ambient), basis_(ambient, 0) {
  if (ambient <= 0) throw std::invalid_argument("Sublattice: ambient rank must be positive");
}

Sublattice Sublattice::from_generators(const MatZ& gens) {
  if (gens.rows() <= 0) throw std::invalid_argument("Sublattice: ambient rank must be positive");
  Sublattice s(gens.rows());
  s.basis_ = hnf_basis(gens);
  return s;
}

Sublattice Sublattice::full(Index ambient) {
  return from_generators(MatZ::Identity(ambient, ambient));
}

bool Sublattice::contains(const VecZ& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Sublattice::contains: dimension mismatch");
  // Peel pivots top-down: pivot rows are strictly increasing and everything
  // above a pivot is zero, so each coefficient is forced in turn.
  VecZ resid = v;
  for (Index j = 0; j < basis_.cols(); ++j) {
    Index p = 0;
    while (basis_(p, j) == 0) ++p;
    if (resid[p] % basis_(p, j) != 0) return false;
    resid -= VecZ(basis_.col(j) * (resid[p] / basis_(p, j)));
  }
  for (Index i = 0; i < resid.size(); ++i)
    if (resid[i] != 0) return false;
  return true;
}

bool Sublattice::operator<(const Sublattice& o) const {
  if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
  if (basis_.cols() != o.basis_.cols()) return basis_.cols() < o.basis_.cols();
  for (Index j = 0; j < basis_.cols(); ++j)
    for (Index i = 0; i < basis_.rows(); ++i)
      if (basis_(i, j) != o.basis_(i, j)) return basis_(i, j) < o.basis_(i, j);
  return false;
}

bool is_pure(const Sublattice& s) {
  if (s.rank() == 0) return true;  // quotient of Z^n by 0 is free
  for (const Int& d : smith_normal_form(s.basis()).d)
    if (d != 1) return false;
  return true;
}

SaturationResult saturation(const Sublattice& s) {
  Int index = 1;
  for (const Int& d : smith_normal_form(s.basis()).d) index *= d;
  // Saturation = double orthogonal complement; kernel_basis saturates.
  MatZ perp = kernel_basis(MatZ(s.basis().transpose()));
  MatZ sat = kernel_basis(MatZ(perp.transpose()));
  return {Sublattice::from_generators(sat), index};
}

Sublattice sum_lattices(const Sublattice& s1, const Sublattice& s2) {
  require_same_ambient(s1, s2, "sum_lattices");
  MatZ gens(s1.ambient_rank(), s1.rank() + s2.rank());
  gens << s1.basis(), s2.basis();
  return Sublattice::from_generators(gens);
}

Sublattice intersect_lattices(const Sublattice& s1, const Sublattice& s2) {
  require_same_ambient(s1, s2, "intersect_lattices");
  // x = B1 a = B2 b  <=>  (a,b) in ker [B1 | -B2]; then x = B1 a.
  MatZ cat(s1.ambient_rank(), s1.rank() + s2.rank());
  cat << s1.basis(), MatZ(-s2.basis());
  MatZ ker = kernel_basis(cat);
  MatZ gens = s1.basis() * ker.topRows(s1.rank());
  return Sublattice::from_generators(gens);
}

bool are_mutually_pure(const Sublattice& s1, const Sublattice& s2) {
  require_same_ambient(s1, s2, "are_mutually_pure");
  require_pure(s1, "are_mutually_pure");
  require_pure(s2, "are_mutually_pure");
  bool by_sum = is_pure(sum_lattices(s1, s2));
  // Independent criterion: the image of S1 in M/S2 is pure. Trivial quotient
  // (s2 full rank) has only the pure zero image.
  MatZ proj = quotient_projection(s2);
  bool by_image =
      proj.rows() == 0 || is_pure(Sublattice::from_generators(MatZ(proj * s1.basis())));
  if (by_sum != by_image)
    throw std::logic_error("are_mutually_pure: sum and image criteria disagree");
  return by_sum;
}

Sublattice orthogonal_lattice(const Sublattice& s) {
  require_pure(s, "orthogonal_lattice");
  return Sublattice::from_generators(kernel_basis(MatZ(s.basis().transpose())));
}

MatZ quotient_projection(const Sublattice& s) {
  require_pure(s, "quotient_projection");
  const Index n = s.ambient_rank(), r = s.rank();
  if (r == 0) return MatZ::Identity(n, n);
  // left * basis * right = [I_r; 0] for pure s, so the last n-r rows of left
  // kill exactly s and are part of a unimodular transform (surjective on Z^(n-r)).
  SnfResult snf = smith_normal_form(s.basis());
  return snf.left.bottomRows(n - r);
}

}  // namespace dcx
