#include "dcx/random.hpp"

#include <stdexcept>

namespace dcx {

long Rng::below(long n) {
  if (n <= 0) throw std::invalid_argument("Rng::below: non-positive bound");
  using u128 = unsigned __int128;
  return static_cast<long>((u128(next_u64()) * u128(n)) >> 64);
}

long Rng::range(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("Rng::range: empty range");
  return lo + below(hi - lo + 1);
}

MatZ random_matrix(Rng& rng, Index rows, Index cols, long lo, long hi) {
  MatZ m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = Int(rng.range(lo, hi));
  return m;
}

VecZ random_vector(Rng& rng, Index size, long lo, long hi) {
  VecZ v(size);
  for (Index i = 0; i < size; ++i) v[i] = Int(rng.range(lo, hi));
  return v;
}

MatZ random_unimodular(Rng& rng, Index n, int ops) {
  MatZ u = MatZ::Identity(n, n);
  if (n < 2) return u;
  for (int k = 0; k < ops; ++k) {
    Index a = rng.below(n), b = rng.below(n);
    if (a == b) continue;
    switch (rng.below(3)) {
      case 0:
        u.col(a) += Int(rng.range(-2, 2)) * u.col(b);
        break;
      case 1:
        u.col(a).swap(u.col(b));
        break;
      default:
        u.col(a) = -u.col(a);
        break;
    }
  }
  return u;
}

Sublattice random_sublattice(Rng& rng, Index ambient, Index rank, long lo, long hi) {
  return Sublattice::from_generators(random_matrix(rng, ambient, rank, lo, hi));
}

Sublattice random_pure_sublattice(Rng& rng, Index ambient, Index rank) {
  if (rank > ambient) throw std::invalid_argument("random_pure_sublattice: rank exceeds ambient");
  return Sublattice::from_generators(random_unimodular(rng, ambient).leftCols(rank));
}

}  // namespace dcx
