#include "support.hpp"

#include <sstream>

#include "crb/errors.hpp"

namespace crbtest {

std::string PropertyResult::summary() const {
  std::ostringstream os;
  os << instances - failures << "/" << instances << " instances";
  if (failures) os << "; first failure: " << first_failure;
  return os.str();
}

PropertyResult run_property(int n, unsigned seed, const std::function<std::string(std::mt19937&, int)>& body) {
  std::mt19937 rng(seed);
  PropertyResult r;
  for (int k = 0; k < n; ++k) {
    std::string w;
    try {
      w = body(rng, k);
    } catch (const Error& e) {
      w = e.what();
    }
    ++r.instances;
    if (!w.empty()) {
      if (!r.failures) r.first_failure = "#" + std::to_string(k) + ": " + w;
      ++r.failures;
    }
  }
  return r;
}

NumberField gaussian() {
  static const NumberField f = NumberField::imaginary_quadratic(-1);
  return f;
}

Rational random_rational(std::mt19937& rng, int num, int den) {
  std::uniform_int_distribution<int> a(-num, num), b(1, den);
  return Rational(a(rng), b(rng));
}

FieldElement random_qi(std::mt19937& rng, const NumberField& f) {
  while (true) {
    FieldElement x = f.element({random_rational(rng), random_rational(rng)});
    if (!x.is_zero()) return x;
  }
}

Point random_point(std::mt19937& rng, const NumberField& f) {
  FieldElement i = f.gen();
  return Point::from_zh(f.element({random_rational(rng), random_rational(rng)}), i * random_rational(rng));
}

ConfigFour random_config(std::mt19937& rng, const NumberField& f) {
  while (true) {
    std::array<Point, 4> p;
    for (auto& x : p) x = random_point(rng, f);
    if (!is_generic({p.begin(), p.end()}, f)) continue;
    try {
      return ConfigFour::make(p, f);
    } catch (const Error&) {
    }
  }
}

std::array<Point, 5> random_five(std::mt19937& rng, const NumberField& f) {
  while (true) {
    std::array<Point, 5> u;
    for (auto& x : u) x = random_point(rng, f);
    bool ok = true;
    for (int skip = 0; skip < 5 && ok; ++skip) {
      std::vector<Point> sub;
      for (int k = 0; k < 5; ++k) {
        if (k != skip) sub.push_back(u[k]);
      }
      ok = is_generic(sub, f);
      if (ok) {
        try {
          cross_ratios({sub[0], sub[1], sub[2], sub[3]}, f);
        } catch (const Error&) {
          ok = false;
        }
      }
    }
    if (ok) return u;
  }
}

bool near_zero(const RealBall& b, double tol) { return b.contains_zero() && b.rad().to_double() < tol; }

PropertyResult prop_opposite_edge(int n, unsigned seed) {
  return run_property(n, seed, [](std::mt19937& rng, int) -> std::string {
    NumberField f = gaussian();
    ConfigFour c = random_config(rng, f);
    CrossRatioTable x(c.q);
    const int pairs[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& p : pairs) {
      FieldElement lhs = x.z(p[0], p[1]) * x.z(p[1], p[0]);
      FieldElement rhs = (x.z(p[2], p[3]) * x.z(p[3], p[2])).conj();
      if (lhs != rhs) return "z" + std::to_string(p[0]) + std::to_string(p[1]) + " pair: " + lhs.to_string();
    }
    return "";
  });
}

PropertyResult prop_similarity_closure(int n, unsigned seed) {
  return run_property(n, seed, [](std::mt19937& rng, int) -> std::string {
    NumberField f = gaussian();
    ConfigFour c = random_config(rng, f);
    CrossRatioTable x(c.q);
    std::array<Lift, 4> l;
    for (int k = 0; k < 4; ++k) l[k] = lift_point(c.points[k], f);
    std::array<int, 4> p{0, 1, 2, 3};
    do {
      FieldElement table = x.X(p[0], p[1], p[2], p[3]);
      if (table != geometric_cross_ratio(l, p[0], p[1], p[2], p[3])) {
        return "ordering " + std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]) + std::to_string(p[3]);
      }
    } while (std::next_permutation(p.begin(), p.end()));
    // Each row is a 3-cycle of z -> 1/(1 - z); closing it is the alternative
    // path back to the first entry.
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (i == j) continue;
        for (int k = 0; k < 4; ++k) {
          if (k == i || k == j) continue;
          int l = 6 - i - j - k;
          FieldElement a = x.X(i, j, k, l), b = x.X(i, k, l, j);
          if (is_even_ordering(i, j, k, l) && b != (Rational(1) - a).inv()) {
            return "row " + std::to_string(i) + " similarity";
          }
        }
      }
    }
    return "";
  });
}

PropertyResult prop_symmetric_equivalence(int n, unsigned seed) {
  return run_property(n, seed, [](std::mt19937& rng, int k) -> std::string {
    NumberField f = gaussian();
    FieldElement i = f.gen();
    while (true) {
      FieldElement z = random_qi(rng, f);
      Rational s = random_rational(rng), t = random_rational(rng);
      const Rational re = z.coeffs()[0], im = z.coeffs()[1];
      if (k % 3 == 0) t = s;
      if (k % 3 == 1) t = Rational(2) * (s * re + im) - s;
      NormalizedParams p{z, i * s, i * t};
      Quadruple q;
      try {
        q = invariants_from_params(p);
      } catch (const Error&) {
        continue;
      }
      bool cond = is_symmetric(p);
      bool mod = q.z01 * q.z01.conj() == q.z32 * q.z32.conj();
      if (cond != mod) return "(z, s, t) = (" + z.to_string() + ", " + format_rational(s) + ", " + format_rational(t) + ")";
      return "";
    }
  });
}

PropertyResult prop_five_term_D(int n, unsigned seed, double tol) {
  return run_property(n, seed, [tol](std::mt19937& rng, int) -> std::string {
    NumberField f = gaussian();
    FieldElement x, y;
    PreBlochElement v;
    while (true) {
      x = random_qi(rng, f);
      y = random_qi(rng, f);
      try {
        v = relation_value({RelationKind::FiveTerm, 1, {x, y}});
        break;
      } catch (const Error&) {
      }
    }
    RealBall d = D_of_element(v, 128);
    return near_zero(d, tol) ? "" : "x = " + x.to_string() + ", y = " + y.to_string() + ": " + d.to_string();
  });
}

namespace {

RealBall cartan_angle(const Point& a, const Point& b, const Point& c, const NumberField& f, long prec) {
  return cartan_tangent(a, b, c, f).tau.embed(prec).im.atan();
}

}  // namespace

PropertyResult prop_cartan_cocycle(int n, unsigned seed, double tol) {
  return run_property(n, seed, [tol](std::mt19937& rng, int) -> std::string {
    NumberField f = gaussian();
    ConfigFour c = random_config(rng, f);
    const auto& p = c.points;
    RealBall s = cartan_angle(p[1], p[2], p[3], f, 128) - cartan_angle(p[0], p[2], p[3], f, 128) +
                 cartan_angle(p[0], p[1], p[3], f, 128) - cartan_angle(p[0], p[1], p[2], f, 128);
    return near_zero(s, tol) ? "" : "cocycle sum " + s.to_string();
  });
}

PropertyResult prop_face_identity(int n, unsigned seed, double tol) {
  return run_property(n, seed, [tol](std::mt19937& rng, int) -> std::string {
    NumberField f = gaussian();
    ConfigFour c = random_config(rng, f);
    const std::array<std::array<int, 3>, 4> faces{{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}};
    for (const auto& fc : faces) {
      // -e^{2iA} from the numerical angle against the cross-ratio product.
      RealBall a = cartan_angle(c.points[fc[0]], c.points[fc[1]], c.points[fc[2]], f, 128);
      RealBall two_a = a + a;
      ComplexBall lhs{-two_a.cos(), -two_a.sin()};
      ComplexBall rhs = face_invariant(c.q, fc).embed(128);
      if (!near_zero(lhs.re - rhs.re, tol) || !near_zero(lhs.im - rhs.im, tol)) {
        return "face " + std::to_string(fc[0]) + std::to_string(fc[1]) + std::to_string(fc[2]);
      }
      if (!verify_face_identity(c, fc, f, 128)) return "verify_face_identity rejected a face";
    }
    return "";
  });
}

PropertyResult prop_pachner23(int n, unsigned seed, double tol) {
  return run_property(n, seed, [tol](std::mt19937& rng, int) -> std::string {
    NumberField f = gaussian();
    auto u = random_five(rng, f);
    PachnerSides s = pachner_23(u, f);
    if (!move_compatibility(s)) return "edge/face compatibility";
    RealBall d = D_of_element(beta_of(s.before), 128) - D_of_element(beta_of(s.after), 128);
    return near_zero(d, tol) ? "" : "D difference " + d.to_string();
  });
}

PropertyResult prop_pachner14(int n, unsigned seed, double tol) {
  return run_property(n, seed, [tol](std::mt19937& rng, int) -> std::string {
    NumberField f = gaussian();
    auto u = random_five(rng, f);
    PachnerSides s = pachner_14({u[0], u[1], u[2], u[3]}, u[4], f);
    if (!move_compatibility(s)) return "edge/face compatibility";
    RealBall d = D_of_element(beta_of(s.before), 128) - D_of_element(beta_of(s.after), 128);
    return near_zero(d, tol) ? "" : "D difference " + d.to_string();
  });
}

}  // namespace crbtest
