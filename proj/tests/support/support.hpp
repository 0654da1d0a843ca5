#pragma once

#include <functional>
#include <random>
#include <string>

#include "crb/crgeom.hpp"
#include "crb/dilog.hpp"
#include "crb/prebloch.hpp"
#include "crb/simplicial.hpp"

namespace crbtest {

using namespace crb;

// Tally of a randomized property run.
struct PropertyResult {
  int instances = 0;
  int failures = 0;
  std::string first_failure;
  bool ok() const { return instances > 0 && failures == 0; }
  std::string summary() const;
};

// Runs body(rng, k) for k < n; body returns "" on success or a witness.
// Library errors count as failures.
PropertyResult run_property(int n, unsigned seed, const std::function<std::string(std::mt19937&, int)>& body);

NumberField gaussian();
Rational random_rational(std::mt19937& rng, int num = 12, int den = 6);
// Nonzero Gaussian rational.
FieldElement random_qi(std::mt19937& rng, const NumberField& f);
Point random_point(std::mt19937& rng, const NumberField& f);
// Generic configuration of four random finite points over Q(i).
ConfigFour random_config(std::mt19937& rng, const NumberField& f);
// Five random points in general position.
std::array<Point, 5> random_five(std::mt19937& rng, const NumberField& f);

// True when the ball contains 0 with radius below tol.
bool near_zero(const RealBall& b, double tol);

// The property suites of the acceptance criteria.
PropertyResult prop_opposite_edge(int n, unsigned seed);
PropertyResult prop_similarity_closure(int n, unsigned seed);
PropertyResult prop_symmetric_equivalence(int n, unsigned seed);
PropertyResult prop_five_term_D(int n, unsigned seed, double tol);
PropertyResult prop_cartan_cocycle(int n, unsigned seed, double tol);
PropertyResult prop_face_identity(int n, unsigned seed, double tol);
PropertyResult prop_pachner23(int n, unsigned seed, double tol);
PropertyResult prop_pachner14(int n, unsigned seed, double tol);

}  // namespace crbtest
