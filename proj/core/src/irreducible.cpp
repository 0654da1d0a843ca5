#include <cstdint>
#include <functional>

#include "crb/errors.hpp"
#include "field_impl.hpp"

namespace crb {

namespace {

using u64 = std::uint64_t;
using PolyP = std::vector<u64>;

void trim_p(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 inv_mod(u64 a, u64 p) {
  u64 result = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return result;
}

PolyP rem_p(PolyP a, const PolyP& f, u64 p) {
  trim_p(a);
  const std::size_t n = f.size() - 1;
  u64 lead_inv = inv_mod(f.back(), p);
  while (a.size() > n) {
    u64 c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - f.size();
    for (std::size_t j = 0; j < f.size(); ++j) a[shift + j] = (a[shift + j] + (p - c) * f[j]) % p;
    trim_p(a);
  }
  return a;
}

PolyP mulmod_p(const PolyP& a, const PolyP& b, const PolyP& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return rem_p(std::move(r), f, p);
}

PolyP powmod_p(PolyP base, u64 e, const PolyP& f, u64 p) {
  PolyP result{1};
  while (e) {
    if (e & 1) result = mulmod_p(result, base, f, p);
    base = mulmod_p(base, base, f, p);
    e >>= 1;
  }
  return result;
}

PolyP gcd_p(PolyP a, PolyP b, u64 p) {
  trim_p(a);
  trim_p(b);
  while (!b.empty()) {
    PolyP r = rem_p(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

PolyP sub_x(PolyP a, u64 p) {
  if (a.size() < 2) a.resize(2, 0);
  a[1] = (a[1] + p - 1) % p;
  trim_p(a);
  return a;
}

// Rabin's test for a monic f of degree n over F_p.
bool irreducible_mod_p(const PolyP& f, u64 p) {
  const u64 n = f.size() - 1;
  std::vector<u64> qs;
  u64 m = n;
  for (u64 q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      qs.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) qs.push_back(m);
  std::vector<PolyP> frob(n + 1);
  frob[0] = PolyP{0, 1};
  for (u64 k = 1; k <= n; ++k) frob[k] = powmod_p(frob[k - 1], p, f, p);
  if (!sub_x(frob[n], p).empty()) return false;
  for (u64 q : qs) {
    PolyP g = gcd_p(f, sub_x(frob[n / q], p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<u64> small_primes(u64 limit) {
  std::vector<bool> sieve(limit, true);
  std::vector<u64> out;
  for (u64 i = 2; i < limit; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j < limit; j += i) sieve[j] = false;
  }
  return out;
}

bool reduce_mod(const QPoly& m, u64 p, PolyP& out) {
  out.assign(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    const mpz_class& den = m[i].get_den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), p)) return false;
    mpz_class num = m[i].get_num() % p;
    if (num < 0) num += p;
    mpz_class d = den % p;
    out[i] = num.get_ui() * inv_mod(d.get_ui(), p) % p;
  }
  return out.back() != 0;
}

enum class SubsetVerdict { Irreducible, Reducible, Undecided };

// Every monic rational factor of m corresponds to a subset of its roots; the
// scaled product must then have integer coefficients.
SubsetVerdict root_subset_test(const QPoly& m, const std::vector<RootDisc>& discs, long prec, std::string& diag) {
  const int n = poly::degree(m);
  Integer D = 1;
  for (const auto& c : m) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), c.get_den().get_mpz_t());
  QPoly scaled(n + 1);
  Integer pw = 1;
  for (int k = n; k >= 0; --k) {
    scaled[k] = m[k] * Rational(pw);
    pw *= D;
  }
  std::vector<ComplexBall> ys;
  RealBall Db = RealBall::exact(Rational(D), prec + kGuardBits);
  for (const auto& d : discs) ys.push_back(refine_root(m, d, prec) * Db);

  bool ambiguous = false;
  std::vector<int> pick;
  std::function<bool(int, int)> rec = [&](int start, int left) -> bool {
    if (left == 0) {
      std::vector<ComplexBall> coeffs{ComplexBall::exact(1, 0, prec + kGuardBits)};
      for (int idx : pick) {
        std::vector<ComplexBall> next(coeffs.size() + 1, ComplexBall(prec + kGuardBits));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
          next[i + 1] += coeffs[i];
          next[i] = next[i] - coeffs[i] * ys[idx];
        }
        coeffs = std::move(next);
      }
      QPoly cand(coeffs.size());
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (!coeffs[i].im.contains_zero()) return false;
        Mpfr lo = coeffs[i].re.lo(), hi = coeffs[i].re.hi();
        Mpfr a(prec), b(prec);
        mpfr_ceil(a.get(), lo.get());
        mpfr_floor(b.get(), hi.get());
        if (mpfr_greater_p(a.get(), b.get())) return false;
        if (!mpfr_equal_p(a.get(), b.get())) {
          ambiguous = true;
          return false;
        }
        mpz_class z;
        mpfr_get_z(z.get_mpz_t(), a.get(), MPFR_RNDN);
        cand[i] = Rational(z);
      }
      if (poly::is_zero(poly::rem(scaled, cand))) {
        diag = "factor " + poly::to_string(cand, "y") + " of the scaled polynomial";
        return true;
      }
      return false;
    }
    for (int i = start; i <= n - left; ++i) {
      pick.push_back(i);
      bool found = rec(i + 1, left - 1);
      pick.pop_back();
      if (found) return true;
    }
    return false;
  };
  for (int k = 1; k <= n / 2; ++k) {
    if (rec(0, k)) return SubsetVerdict::Reducible;
  }
  return ambiguous ? SubsetVerdict::Undecided : SubsetVerdict::Irreducible;
}

}  // namespace

bool certify_irreducible(const QPoly& m, const std::vector<RootDisc>& discs, std::string& diagnostic) {
  const int n = poly::degree(m);
  if (n <= 1) {
    diagnostic = "degree 1";
    return true;
  }
  for (u64 p : small_primes(10000)) {
    PolyP f;
    if (!reduce_mod(m, p, f)) continue;
    if (irreducible_mod_p(f, p)) {
      diagnostic = "irreducible modulo " + std::to_string(p);
      return true;
    }
  }
  if (n > 16) {
    throw Error(ErrorKind::Reducible, "no prime below 10000 certifies irreducibility and the degree is too large for the root-subset test");
  }
  for (long prec = 128; prec <= 4096; prec *= 2) {
    SubsetVerdict v = root_subset_test(m, discs, prec, diagnostic);
    if (v == SubsetVerdict::Reducible) return false;
    if (v == SubsetVerdict::Irreducible) {
      diagnostic = "no rational factor among root subsets";
      return true;
    }
  }
  throw Error(ErrorKind::Reducible, "irreducibility could not be decided");
}

}  // namespace crb
