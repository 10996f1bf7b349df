#pragma once

#include <cstdint>
#include <random>

#include "dcx/lattice.hpp"
#include "dcx/types.hpp"

namespace dcx {

// Deterministic RNG: mt19937_64 has a standard-mandated sequence and the
// bounded draws below avoid std::uniform_int_distribution, whose mapping is
// implementation-defined and would break byte-identical reports.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform-enough in [0, n) via multiply-shift; bias is O(n / 2^64).
  long below(long n);
  // Uniform in [lo, hi].
  long range(long lo, long hi);
  bool flip() { return (next_u64() & 1) != 0; }

 private:
  std::mt19937_64 gen_;
};

MatZ random_matrix(Rng& rng, Index rows, Index cols, long lo, long hi);
VecZ random_vector(Rng& rng, Index size, long lo, long hi);

// Product of random elementary column ops on the identity; det = +-1.
MatZ random_unimodular(Rng& rng, Index n, int ops = 24);

Sublattice random_sublattice(Rng& rng, Index ambient, Index rank, long lo, long hi);

// First `rank` columns of a random unimodular matrix: pure by construction.
Sublattice random_pure_sublattice(Rng& rng, Index ambient, Index rank);

}  // namespace dcx
