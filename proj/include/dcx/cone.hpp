#pragma once

#include "dcx/types.hpp"

namespace dcx {

// Generators of the polyhedral cone {x : a·x >= 0 for every row a}: a basis of
// the lineality space plus the extreme rays taken modulo lineality.
struct ConeGenerators {
  MatZ lineality;  // canonical HNF basis columns
  MatZ rays;       // primitive, reduced mod lineality, lex-sorted unique columns

  Index dim() const;  // rank of [lineality | rays]
};

// Incremental double description with exact arithmetic. Rays stay extreme at
// every step via the combinatorial adjacency test on tight-constraint sets.
ConeGenerators cone_generators(const MatZ& a);
ConeGenerators cone_generators(const MatQ& a);

// Representative of v modulo the column space of lin: the orthogonal
// projection onto the complement, rescaled to a primitive integer vector.
VecZ reduce_mod_lineality(const VecQ& v, const MatZ& lin);

}  // namespace dcx
