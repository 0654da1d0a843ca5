#include "crb/numfield.hpp"

#include "crb/errors.hpp"
#include "field_impl.hpp"

namespace crb {

namespace {

std::vector<Rational> pad(std::vector<Rational> v, int d) {
  v.resize(d, Rational(0));
  return v;
}

// Reduces a coefficient vector of any length modulo the minimal polynomial.
std::vector<Rational> reduce(const FieldImpl& f, std::vector<Rational> v) {
  const int d = f.degree;
  for (int k = static_cast<int>(v.size()) - 1; k >= d; --k) {
    if (v[k] == 0) continue;
    const auto& red = f.reduction[k - d];
    for (int j = 0; j < d; ++j) v[j] += v[k] * red[j];
  }
  return pad(std::move(v), d);
}

// Reduces polynomials of degree up to 2d-2 (products of two elements).
std::vector<std::vector<Rational>> reduction_table(const QPoly& m) {
  const int d = poly::degree(m);
  std::vector<std::vector<Rational>> table;
  // x^d = -(m_0 + ... + m_{d-1} x^{d-1})
  std::vector<Rational> cur(d);
  for (int j = 0; j < d; ++j) cur[j] = -m[j];
  for (int k = d; k <= 2 * d - 2 || k == d; ++k) {
    table.push_back(cur);
    // multiply by x
    std::vector<Rational> next(d);
    Rational top = cur[d - 1];
    for (int j = d - 1; j >= 1; --j) next[j] = cur[j - 1];
    next[0] = 0;
    for (int j = 0; j < d; ++j) next[j] -= top * m[j];
    cur = std::move(next);
  }
  return table;
}

std::vector<Rational> mul_raw(const FieldImpl& f, const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> r(2 * f.degree - 1);
  for (int i = 0; i < f.degree; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < f.degree; ++j) r[i + j] += a[i] * b[j];
  }
  return reduce(f, std::move(r));
}

// p(s) in the field, for s given by coefficients.
std::vector<Rational> compose(const FieldImpl& f, const QPoly& p, const std::vector<Rational>& s) {
  std::vector<Rational> acc(f.degree);
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = mul_raw(f, acc, s);
    acc[0] += *it;
  }
  return acc;
}

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

const FieldImpl& impl_of(const std::shared_ptr<const FieldImpl>& p) {
  if (!p) throw Error(ErrorKind::FieldMismatch, "element has no field");
  return *p;
}

}  // namespace

bool same_field(const FieldImpl* a, const FieldImpl* b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->minpoly == b->minpoly && a->embedding_index == b->embedding_index && a->sigma_image == b->sigma_image;
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!same_field(a.field_impl().get(), b.field_impl().get())) {
    throw Error(ErrorKind::FieldMismatch, "operands live in different fields");
  }
}

NumberField NumberField::define(const QPoly& minpoly_in, int embedding_index, const std::vector<Rational>& sigma_in) {
  QPoly m = minpoly_in;
  poly::trim(m);
  if (poly::degree(m) < 1 || m.back() != 1) {
    throw Error(ErrorKind::UnsupportedField, "minimal polynomial must be monic of degree >= 1");
  }
  const int d = poly::degree(m);
  if (poly::degree(poly::gcd(m, poly::derivative(m))) > 0) {
    throw Error(ErrorKind::Reducible, poly::to_string(m) + " is not squarefree");
  }
  auto impl = std::make_shared<FieldImpl>();
  impl->minpoly = m;
  impl->degree = d;
  impl->reduction = reduction_table(m);
  impl->discs = isolate_roots(m);
  std::string diag;
  if (!certify_irreducible(m, impl->discs, diag)) {
    throw Error(ErrorKind::Reducible, poly::to_string(m) + " is reducible: " + diag);
  }
  if (embedding_index < 0 || embedding_index >= d) {
    throw Error(ErrorKind::RootIsolation, "embedding index " + std::to_string(embedding_index) + " out of range");
  }
  impl->embedding_index = embedding_index;
  if (static_cast<int>(sigma_in.size()) > d) {
    throw Error(ErrorKind::Sigma, "sigma image has more coordinates than the field degree");
  }
  std::vector<Rational> s = pad(sigma_in, d);
  impl->sigma_image = s;
  if (!all_zero(compose(*impl, m, s))) {
    throw Error(ErrorKind::Sigma, "sigma(gen) is not a root of the minimal polynomial");
  }
  // sigma(sigma(gen)) = sum s_k sigma(gen)^k must equal gen.
  impl->sigma_powers.clear();
  std::vector<Rational> pw(d);
  pw[0] = 1;
  for (int k = 0; k < d; ++k) {
    impl->sigma_powers.push_back(pw);
    pw = mul_raw(*impl, pw, s);
  }
  std::vector<Rational> twice(d);
  for (int k = 0; k < d; ++k) {
    for (int j = 0; j < d; ++j) twice[j] += s[k] * impl->sigma_powers[k][j];
  }
  std::vector<Rational> gen(d);
  if (d == 1) gen[0] = -m[0];
  else gen[1] = 1;
  if (twice != gen) throw Error(ErrorKind::Sigma, "sigma is not an involution");

  // sigma(root) is a root of m; it must be the one in the mirrored disc.
  if (d > 1) {
    const auto& discs = impl->discs;
    int mirror = -1;
    for (long prec = 128; prec <= 2048 && mirror < 0; prec *= 2) {
      ComplexBall r = refine_root(m, discs[embedding_index], prec);
      ComplexBall target = r.conj();
      ComplexBall image = eval_ball(s, r);
      int hits = 0;
      int hit_idx = -1;
      for (int j = 0; j < d; ++j) {
        ComplexBall c = refine_root(m, discs[j], prec);
        if (image.overlaps(c)) {
          ++hits;
          hit_idx = j;
        }
      }
      if (hits == 1) {
        ComplexBall expected = refine_root(m, discs[hit_idx], prec);
        if (!expected.overlaps(target)) {
          throw Error(ErrorKind::Sigma, "sigma does not realize complex conjugation under the chosen embedding");
        }
        mirror = hit_idx;
      }
    }
    if (mirror < 0) throw Error(ErrorKind::Sigma, "could not certify sigma against the embedding");
  }
  return NumberField(std::shared_ptr<const FieldImpl>(std::move(impl)));
}

NumberField NumberField::rationals() {
  static const NumberField q = define({Rational(0), Rational(1)}, 0, {Rational(0)});
  return q;
}

NumberField NumberField::imaginary_quadratic(long d) {
  if (d >= 0) throw Error(ErrorKind::UnsupportedField, "imaginary_quadratic needs d < 0");
  return define({Rational(-d), Rational(0), Rational(1)}, 0, {Rational(0), Rational(-1)});
}

int NumberField::degree() const { return impl_->degree; }
const QPoly& NumberField::minpoly() const { return impl_->minpoly; }
int NumberField::embedding_index() const { return impl_->embedding_index; }
const std::vector<Rational>& NumberField::sigma_image() const { return impl_->sigma_image; }

FieldElement NumberField::zero() const { return FieldElement(impl_, std::vector<Rational>(impl_->degree)); }

FieldElement NumberField::one() const { return from_rational(1); }

FieldElement NumberField::gen() const {
  std::vector<Rational> c(impl_->degree);
  if (impl_->degree == 1) c[0] = -impl_->minpoly[0];
  else c[1] = 1;
  return FieldElement(impl_, std::move(c));
}

FieldElement NumberField::from_rational(const Rational& q) const {
  std::vector<Rational> c(impl_->degree);
  c[0] = q;
  return FieldElement(impl_, std::move(c));
}

FieldElement NumberField::element(const std::vector<Rational>& coeffs) const {
  if (static_cast<int>(coeffs.size()) > impl_->degree) {
    throw Error(ErrorKind::FieldMismatch, "coefficient vector longer than the field degree");
  }
  return FieldElement(impl_, pad(coeffs, impl_->degree));
}

std::optional<FieldElement> NumberField::sqrt_minus_one() const {
  if (impl_->degree != 2) return std::nullopt;
  const QPoly& m = impl_->minpoly;
  Rational disc = m[1] * m[1] - 4 * m[0];
  Rational neg = -disc;
  if (neg <= 0) return std::nullopt;
  Integer num = neg.get_num(), den = neg.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational q(rn, rd);
  FieldElement i = (gen() * Rational(2) + m[1]) / q;
  ComplexBall e = i.embed(64);
  if (e.im.negative()) i = -i;
  if (!(i * i + Rational(1)).is_zero() || i.conj() != -i) return std::nullopt;
  return i;
}

ComplexBall NumberField::root(long prec) const {
  return refine_root(impl_->minpoly, impl_->discs[impl_->embedding_index], prec);
}

std::vector<ComplexBall> NumberField::roots(long prec) const {
  std::vector<ComplexBall> out;
  for (const auto& d : impl_->discs) out.push_back(refine_root(impl_->minpoly, d, prec));
  return out;
}

bool NumberField::same_as(const NumberField& other) const { return same_field(impl_.get(), other.impl_.get()); }

std::string NumberField::describe() const {
  std::string s = "Q[g]/(" + poly::to_string(impl_->minpoly, "g") + "), embedding " +
                  std::to_string(impl_->embedding_index) + ", sigma(g) = ";
  s += FieldElement(impl_, impl_->sigma_image).to_string();
  return s;
}

FieldElement::FieldElement(std::shared_ptr<const FieldImpl> field, std::vector<Rational> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
}

NumberField FieldElement::field() const {
  impl_of(field_);
  return NumberField(field_);
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> c(c_);
  for (auto& x : c) x = -x;
  return FieldElement(field_, std::move(c));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  std::vector<Rational> c(a.c_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  std::vector<Rational> c(a.c_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.field_, mul_raw(*a.field_, a.c_, b.c_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a * b.inv();
}

FieldElement operator+(const FieldElement& a, const Rational& b) {
  std::vector<Rational> c(a.c_);
  impl_of(a.field_);
  c[0] += b;
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const Rational& b) { return a + Rational(-b); }

FieldElement operator-(const Rational& a, const FieldElement& b) { return -b + a; }

FieldElement operator*(const FieldElement& a, const Rational& b) {
  std::vector<Rational> c(a.c_);
  for (auto& x : c) x *= b;
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator/(const FieldElement& a, const Rational& b) {
  if (b == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
  return a * Rational(1 / b);
}

FieldElement operator/(const Rational& a, const FieldElement& b) { return b.inv() * a; }

FieldElement FieldElement::inv() const {
  const FieldImpl& f = impl_of(field_);
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (f.degree == 1) return FieldElement(field_, {1 / c_[0]});
  if (f.degree == 2) {
    // (a0 + a1 x)^-1 for x^2 + c1 x + c0: conjugate over the norm.
    const Rational& c0 = f.minpoly[0];
    const Rational& c1 = f.minpoly[1];
    Rational norm = c_[0] * c_[0] - c1 * c_[0] * c_[1] + c0 * c_[1] * c_[1];
    return FieldElement(field_, {(c_[0] - c1 * c_[1]) / norm, -c_[1] / norm});
  }
  QPoly a(c_);
  poly::trim(a);
  QPoly r = poly::inverse_mod(a, f.minpoly);
  return FieldElement(field_, pad(r, f.degree));
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  FieldElement result = field().one();
  FieldElement base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

FieldElement FieldElement::conj() const {
  const FieldImpl& f = impl_of(field_);
  std::vector<Rational> out(f.degree);
  for (int k = 0; k < f.degree; ++k) {
    if (c_[k] == 0) continue;
    for (int j = 0; j < f.degree; ++j) out[j] += c_[k] * f.sigma_powers[k][j];
  }
  return FieldElement(field_, std::move(out));
}

bool FieldElement::is_zero() const { return all_zero(c_); }

bool FieldElement::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return !c_.empty();
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw Error(ErrorKind::FieldMismatch, "element is not rational");
  return c_[0];
}

ComplexBall FieldElement::embed(long prec) const {
  require_precision(prec);
  return embed_at(field().root(prec));
}

ComplexBall FieldElement::embed_at(const ComplexBall& root) const {
  if (is_rational()) return ComplexBall::exact(c_[0], 0, root.prec());
  return eval_ball(QPoly(c_), root);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return same_field(a.field_.get(), b.field_.get()) && a.c_ == b.c_;
}

bool operator<(const FieldElement& a, const FieldElement& b) {
  if (!same_field(a.field_.get(), b.field_.get())) return a.field_.get() < b.field_.get();
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string FieldElement::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    if (k == 0) {
      out += format_rational(mag);
      continue;
    }
    if (mag != 1) out += format_rational(mag) + "*";
    out += "g";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace crb
