#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace crb {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p", "p/q" into a canonical rational. Throws Error(Parse) on
// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical "p/q" (or "p" when q == 1).
std::string format_rational(const Rational& q);

// Dense polynomial over Q, coefficient of x^k at index k, no trailing zeros.
// The zero polynomial is the empty vector.
using QPoly = std::vector<Rational>;

namespace poly {

void trim(QPoly& p);
int degree(const QPoly& p);  // -1 for zero
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rational& c);
QPoly derivative(const QPoly& a);
// Euclidean division; throws on b == 0.
void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
QPoly rem(const QPoly& a, const QPoly& b);
// Monic gcd (zero if both are zero).
QPoly gcd(QPoly a, QPoly b);
// Returns g = gcd(a, b) (monic) and s with s*a == g (mod b).
QPoly inverse_mod(const QPoly& a, const QPoly& modulus);
Rational eval(const QPoly& p, const Rational& x);
bool is_zero(const QPoly& p);
std::string to_string(const QPoly& p, std::string_view var = "x");

}  // namespace poly

}  // namespace crb
