#pragma once

#include <vector>

#include "crb/numfield.hpp"

namespace crb {

// Basis of the S-unit group of Q or an imaginary quadratic field, where S is
// a finite list of prime ideals: a root of unity of maximal order together
// with elements whose divisors form a basis of the principal divisors
// supported on S.
struct SUnitBasis {
  NumberField field{NumberField::rationals()};
  FieldElement zeta;
  int zeta_order = 2;
  std::vector<PrimeIdealLabel> primes;
  // lattice[i] is the divisor of generators[i] in the coordinates of
  // `primes`; the rows are lower triangular with positive diagonal.
  std::vector<std::vector<long>> lattice;
  std::vector<FieldElement> generators;
};

// Throws UnsupportedField outside Q and imaginary quadratic fields.
SUnitBasis s_unit_basis(const NumberField& f, const std::vector<PrimeIdealLabel>& primes);

struct SUnitCoords {
  long zeta_exp = 0;            // in [0, zeta_order)
  std::vector<long> exponents;  // one per generator
};

// a = zeta^zeta_exp * prod generators[i]^exponents[i]. Throws
// UnfactoredElement when a is not an S-unit.
SUnitCoords s_unit_coords(const SUnitBasis& basis, const FieldElement& a);

}  // namespace crb
