#include <algorithm>

#include "crb/errors.hpp"
#include "crb/numfield.hpp"

namespace crb {

namespace {

Integer pollard_rho(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto f = [&](const Integer& v) -> Integer { return (v * v + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

std::vector<Integer> prime_factors(Integer n) {
  if (n == 0) throw Error(ErrorKind::ZeroElement, "cannot factor 0");
  n = abs(n);
  std::vector<Integer> out;
  for (unsigned long p = 2; p < 1000 && n > 1; ++p) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.push_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
    }
  }
  std::vector<Integer> big;
  factor_into(n, big);
  out.insert(out.end(), big.begin(), big.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long valuation_int(Integer n, const Integer& p) {
  if (n == 0) throw Error(ErrorKind::ZeroElement, "valuation of 0");
  long v = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace crb
