#pragma once

#include <vector>

#include "crb/ball.hpp"
#include "crb/rational.hpp"

namespace crb {

// Certified isolating disc for one root of the minimal polynomial.
struct RootDisc {
  ComplexBall center;  // point ball
  Mpfr radius;
  bool real = false;
};

struct FieldImpl {
  QPoly minpoly;
  int degree = 0;
  int embedding_index = 0;
  std::vector<Rational> sigma_image;
  // x^k mod m for k = degree .. 2*degree - 2.
  std::vector<std::vector<Rational>> reduction;
  // sigma(gen)^k mod m for k = 0 .. degree - 1.
  std::vector<std::vector<Rational>> sigma_powers;
  std::vector<RootDisc> discs;
};

// Root isolation for a squarefree rational polynomial; discs are pairwise
// disjoint and ordered by (imag desc, real asc).
std::vector<RootDisc> isolate_roots(const QPoly& p);
// Refines the root inside `disc` to the requested precision.
ComplexBall refine_root(const QPoly& p, const RootDisc& disc, long prec);
// Horner evaluation of a rational polynomial at a complex ball.
ComplexBall eval_ball(const QPoly& p, const ComplexBall& x);

// Exact test: true iff m is irreducible over Q. m monic, squarefree.
bool certify_irreducible(const QPoly& m, const std::vector<RootDisc>& discs, std::string& diagnostic);

}  // namespace crb
