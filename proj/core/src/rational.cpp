#include "crb/rational.hpp"

#include <cctype>

#include "crb/errors.hpp"

namespace crb {

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  Integer num, den = 1;
  bool ok = slash == std::string_view::npos
                ? parse_integer(text, num)
                : parse_integer(text.substr(0, slash), num) &&
                      parse_integer(text.substr(slash + 1), den);
  if (!ok) throw Error(ErrorKind::Parse, "malformed rational \"" + std::string(text) + "\"");
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in \"" + std::string(text) + "\"");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

namespace poly {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

bool is_zero(const QPoly& p) { return p.empty(); }

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly scale(const QPoly& a, const Rational& c) {
  if (c == 0) return {};
  QPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

QPoly derivative(const QPoly& a) {
  if (a.size() <= 1) return {};
  QPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
  trim(r);
  return r;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
  if (b.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  rem = a;
  trim(rem);
  quot.clear();
  if (rem.size() < b.size()) return;
  quot.assign(rem.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  while (rem.size() >= b.size()) {
    std::size_t shift = rem.size() - b.size();
    Rational c = rem.back() / lead;
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] -= c * b[j];
    rem.pop_back();
    trim(rem);
  }
  trim(quot);
}

QPoly rem(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  divmod(a, b, q, r);
  return r;
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = scale(a, 1 / a.back());
  return a;
}

QPoly inverse_mod(const QPoly& a, const QPoly& modulus) {
  // Extended Euclid tracking only the cofactor of a.
  QPoly r0 = modulus, r1 = a;
  trim(r1);
  r1 = rem(r1, modulus);
  QPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw Error(ErrorKind::DivisionByZero, "element is not invertible modulo the minimal polynomial");
  return scale(s0, 1 / r0[0]);
}

Rational eval(const QPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string to_string(const QPoly& p, std::string_view var) {
  if (p.empty()) return "0";
  std::string out;
  for (int k = degree(p); k >= 0; --k) {
    const Rational& c = p[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    bool unit = mag == 1 && k > 0;
    if (!unit) out += format_rational(mag);
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace poly

}  // namespace crb
