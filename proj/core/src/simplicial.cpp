#include "crb/simplicial.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "crb/errors.hpp"

namespace crb {

namespace {

bool degenerate(const FieldElement& x) { return x.is_zero() || x.is_one(); }

int remaining(const std::array<int, 3>& f) {
  for (int l = 0; l < 4; ++l) {
    if (l != f[0] && l != f[1] && l != f[2]) return l;
  }
  return -1;
}

bool valid_face(const FaceRef& f, std::size_t ntets) {
  if (f.tet < 0 || static_cast<std::size_t>(f.tet) >= ntets) return false;
  for (int v : f.v) {
    if (v < 0 || v > 3) return false;
  }
  return f.v[0] != f.v[1] && f.v[0] != f.v[2] && f.v[1] != f.v[2];
}

std::array<int, 3> sorted(std::array<int, 3> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Parity of the permutation taking the increasing order of v to v.
int parity(const std::array<int, 3>& v) {
  int inv = (v[0] > v[1]) + (v[0] > v[2]) + (v[1] > v[2]);
  return inv % 2 == 0 ? 1 : -1;
}

std::string quad_name(int k) {
  static const char* names[] = {"z01", "z10", "z23", "z32"};
  return names[k];
}

const FieldElement& quad_at(const Quadruple& q, int k) {
  switch (k) {
    case 0: return q.z01;
    case 1: return q.z10;
    case 2: return q.z23;
    default: return q.z32;
  }
}

std::string face_name(const FaceRef& f) {
  std::ostringstream os;
  os << "tet " << f.tet << " (" << f.v[0] << "," << f.v[1] << "," << f.v[2] << ")";
  return os.str();
}

struct FaceIndex {
  // (tet, sorted local triple) -> (pairing index, side)
  std::map<std::pair<int, std::array<int, 3>>, std::vector<std::pair<int, int>>> uses;

  explicit FaceIndex(const std::vector<Pairing>& ps) {
    for (std::size_t i = 0; i < ps.size(); ++i) {
      uses[{ps[i].face.tet, sorted(ps[i].face.v)}].push_back({static_cast<int>(i), 0});
      uses[{ps[i].mate.tet, sorted(ps[i].mate.v)}].push_back({static_cast<int>(i), 1});
    }
  }

  const std::vector<std::pair<int, int>>* find(int tet, const std::array<int, 3>& v) const {
    auto it = uses.find({tet, sorted(v)});
    return it == uses.end() ? nullptr : &it->second;
  }
};

void check_tet(const TetRecord& tet, int s, ValidationReport& r) {
  const std::string pre = "tet " + std::to_string(s) + ": ";
  for (int k = 0; k < 4; ++k) {
    if (quad_at(tet.q, k).field_impl() == nullptr) {
      r.lines.push_back({pre + "values", CheckLine::Status::Fail, quad_name(k) + " missing"});
      return;
    }
  }
  for (int k = 0; k < 4; ++k) {
    if (degenerate(quad_at(tet.q, k))) {
      r.lines.push_back({pre + "values", CheckLine::Status::Fail,
                         "DegenerateArgument: " + quad_name(k) + " = " + quad_at(tet.q, k).to_string()});
      return;
    }
  }
  r.lines.push_back({pre + "values", CheckLine::Status::Pass, "all outside {0, 1}"});
  CrossRatioTable x(tet.q);
  static const int pairs[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  for (const auto& p : pairs) {
    FieldElement lhs = x.z(p[0], p[1]) * x.z(p[1], p[0]);
    FieldElement rhs = (x.z(p[2], p[3]) * x.z(p[3], p[2])).conj();
    std::ostringstream id, w;
    id << pre << "opposite-edge " << p[0] << p[1] << "|" << p[2] << p[3];
    w << "z" << p[0] << p[1] << "*z" << p[1] << p[0] << " = " << lhs.to_string() << ", conj(z" << p[2] << p[3]
      << "*z" << p[3] << p[2] << ") = " << rhs.to_string();
    r.lines.push_back({id.str(), lhs == rhs ? CheckLine::Status::Pass : CheckLine::Status::Fail, w.str()});
  }
  // Each row is a 3-cycle under z -> 1/(1 - z); closing it re-derives the
  // stored value along the other path.
  bool closed = true;
  std::string bad;
  static const int order[4][3] = {{1, 2, 3}, {0, 3, 2}, {3, 0, 1}, {2, 1, 0}};
  for (int i = 0; i < 4; ++i) {
    FieldElement back = (Rational(1) - x.z(i, order[i][2])).inv();
    if (back != x.z(i, order[i][0])) {
      closed = false;
      bad = "row " + std::to_string(i);
    }
  }
  r.lines.push_back({pre + "similarity", closed ? CheckLine::Status::Pass : CheckLine::Status::Fail,
                     closed ? "24 values closed" : "fails at " + bad});
  if (tet.points) {
    try {
      Quadruple g = cross_ratios(*tet.points, tet.q.z01.field());
      r.lines.push_back({pre + "points", g == tet.q ? CheckLine::Status::Pass : CheckLine::Status::Fail,
                         g == tet.q ? "cross-ratios of points match" : "points give z01 = " + g.z01.to_string()});
    } catch (const Error& e) {
      r.lines.push_back({pre + "points", CheckLine::Status::Fail, e.what()});
    }
  }
}

bool tet_usable(const TetRecord& tet) {
  for (int k = 0; k < 4; ++k) {
    const FieldElement& x = quad_at(tet.q, k);
    if (x.field_impl() == nullptr || degenerate(x)) return false;
  }
  return true;
}

// Walk around the edge (a, b) of tet s, entering across the face containing c.
struct EdgeState {
  int tet, a, b, c;
  auto key() const { return std::tuple(tet, a, b, c); }
};

}  // namespace

TetRecord TetRecord::from_points(const std::array<long, 4>& verts, const std::array<Point, 4>& pts,
                                 const NumberField& field, int sign) {
  return TetRecord{verts, cross_ratios(pts, field), pts, sign};
}

bool operator==(const TetRecord& a, const TetRecord& b) {
  return a.verts == b.verts && a.q == b.q && a.points == b.points && a.sign == b.sign;
}

bool operator==(const Triangulation& a, const Triangulation& b) {
  return a.field.same_as(b.field) && a.tets == b.tets && a.pairings == b.pairings;
}

std::string status_name(CheckLine::Status s) {
  switch (s) {
    case CheckLine::Status::Pass: return "PASS";
    case CheckLine::Status::Fail: return "FAIL";
    default: return "OPEN";
  }
}

bool ValidationReport::ok() const {
  return std::none_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.status == CheckLine::Status::Fail; });
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& l : lines) os << l.id << "  " << status_name(l.status) << "  " << l.witness << "\n";
  return os.str();
}

ValidationReport validate_structure(const Triangulation& t) {
  ValidationReport r;
  for (std::size_t s = 0; s < t.tets.size(); ++s) check_tet(t.tets[s], static_cast<int>(s), r);

  const std::vector<Pairing> ps = t.pairings.value_or(std::vector<Pairing>{});
  std::map<std::pair<int, std::array<int, 3>>, int> seen;
  std::vector<bool> good(ps.size(), true);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const std::string id = "pairing " + std::to_string(i) + ": ";
    const Pairing& p = ps[i];
    if (!valid_face(p.face, t.tets.size()) || !valid_face(p.mate, t.tets.size())) {
      r.lines.push_back({id + "faces", CheckLine::Status::Fail, "face index out of range or repeated vertex"});
      good[i] = false;
      continue;
    }
    std::string dup;
    for (const FaceRef* f : {&p.face, &p.mate}) {
      auto key = std::pair(f->tet, sorted(f->v));
      if (seen.count(key) != 0) dup = face_name(*f) + " already paired by pairing " + std::to_string(seen[key]);
      seen[key] = static_cast<int>(i);
    }
    if (p.face.tet == p.mate.tet && sorted(p.face.v) == sorted(p.mate.v)) dup = "face glued to itself";
    if (!dup.empty()) {
      r.lines.push_back({id + "faces", CheckLine::Status::Fail, dup});
      good[i] = false;
      continue;
    }
    r.lines.push_back({id + "faces", CheckLine::Status::Pass, face_name(p.face) + " <-> " + face_name(p.mate)});
    if (!tet_usable(t.tets[p.face.tet]) || !tet_usable(t.tets[p.mate.tet])) {
      good[i] = false;
      continue;
    }
    FieldElement x = face_invariant(t.tets[p.face.tet].q, p.face.v);
    FieldElement y = face_invariant(t.tets[p.mate.tet].q, p.mate.v);
    r.lines.push_back({id + "face compatibility", x == y ? CheckLine::Status::Pass : CheckLine::Status::Fail,
                       "triple products " + x.to_string() + " and " + y.to_string()});
  }

  std::vector<Pairing> usable;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (good[i]) usable.push_back(ps[i]);
  }
  FaceIndex index(usable);
  auto cross = [&](const EdgeState& e, std::optional<EdgeState>& next) {
    int d = 6 - e.a - e.b - e.c;
    next.reset();
    const auto* u = index.find(e.tet, {e.a, e.b, d});
    if (u == nullptr || u->size() != 1) return;
    const Pairing& p = usable[(*u)[0].first];
    const FaceRef& from = (*u)[0].second == 0 ? p.face : p.mate;
    const FaceRef& to = (*u)[0].second == 0 ? p.mate : p.face;
    auto image = [&](int v) {
      for (int k = 0; k < 3; ++k) {
        if (from.v[k] == v) return to.v[k];
      }
      return -1;
    };
    next = EdgeState{to.tet, image(e.a), image(e.b), image(d)};
  };

  std::set<std::tuple<int, int, int>> done;
  int cls = 0;
  for (std::size_t s = 0; s < t.tets.size(); ++s) {
    if (!tet_usable(t.tets[s])) continue;
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        if (done.count({static_cast<int>(s), a, b}) != 0) continue;
        int c = 0;
        while (c == a || c == b) ++c;
        EdgeState start{static_cast<int>(s), a, b, c};
        std::vector<EdgeState> cycle{start};
        std::set<std::tuple<int, int, int, int>> visited{start.key()};
        bool closed = false, broken = false;
        std::optional<EdgeState> next;
        EdgeState cur = start;
        while (true) {
          cross(cur, next);
          if (!next) break;
          if (!tet_usable(t.tets[next->tet])) {
            broken = true;
            break;
          }
          if (next->key() == start.key()) {
            closed = true;
            break;
          }
          if (visited.count(next->key()) != 0) {
            broken = true;
            break;
          }
          visited.insert(next->key());
          cycle.push_back(*next);
          cur = *next;
        }
        if (!closed && !broken) {
          // Also walk backwards so the whole open class is marked.
          EdgeState back{start.tet, start.b, start.a, 6 - start.a - start.b - start.c};
          cur = back;
          while (true) {
            cross(cur, next);
            if (!next || !tet_usable(t.tets[next->tet]) || visited.count(next->key()) != 0) break;
            visited.insert(next->key());
            cycle.push_back(*next);
            cur = *next;
          }
        }
        std::ostringstream id, w;
        id << "edge class " << cls++ << ":";
        for (const auto& e : cycle) {
          int lo = std::min(e.a, e.b), hi = std::max(e.a, e.b);
          done.insert({e.tet, lo, hi});
          id << " " << e.tet << ":" << e.a << e.b;
        }
        if (!closed) {
          r.lines.push_back({id.str(), CheckLine::Status::Open, broken ? "cycle not closable" : "reaches an unpaired face"});
          continue;
        }
        FieldElement prod = t.field.one();
        for (const auto& e : cycle) {
          CrossRatioTable x(t.tets[e.tet].q);
          prod *= x.X(e.a, e.b, e.c, 6 - e.a - e.b - e.c);
        }
        r.lines.push_back({id.str(), prod.is_one() ? CheckLine::Status::Pass : CheckLine::Status::Fail,
                           "product " + prod.to_string()});
      }
    }
  }
  return r;
}

PreBlochElement beta_of(const std::vector<TetRecord>& tets) {
  PreBlochElement b;
  for (const auto& t : tets) b += static_cast<long>(t.sign) * beta_config(t.q);
  return b;
}

PreBlochElement beta_triangulation(const Triangulation& t) { return beta_of(t.tets); }

bool boundary_check(const Triangulation& t) {
  if (!t.pairings) throw Error(ErrorKind::MissingPairings, "boundary check needs face pairings");
  const auto& ps = *t.pairings;
  for (const auto& p : ps) {
    if (!valid_face(p.face, t.tets.size()) || !valid_face(p.mate, t.tets.size())) return false;
  }
  FaceIndex index(ps);
  for (std::size_t s = 0; s < t.tets.size(); ++s) {
    for (int k = 0; k < 4; ++k) {
      std::array<int, 3> f;
      int n = 0;
      for (int i = 0; i < 4; ++i) {
        if (i != k) f[n++] = i;
      }
      const auto* u = index.find(static_cast<int>(s), f);
      if (u == nullptr || u->size() != 1) return false;
    }
  }
  // Coefficient of the face in d(sign [p0 p1 p2 p3]), read in the pairing's
  // vertex order.
  auto coeff = [&](const FaceRef& f) {
    int k = remaining(f.v);
    int omit_sign = k % 2 == 0 ? 1 : -1;
    return t.tets[f.tet].sign * omit_sign * parity(f.v);
  };
  for (const auto& p : ps) {
    if (coeff(p.face) + coeff(p.mate) != 0) return false;
    FieldElement a = tau_from_minus_exp(face_invariant(t.tets[p.face.tet].q, p.face.v));
    FieldElement b = tau_from_minus_exp(face_invariant(t.tets[p.mate.tet].q, p.mate.v));
    if (a != b) return false;
  }
  return true;
}

std::vector<Pairing> pair_by_vertex_ids(const std::vector<TetRecord>& tets) {
  std::map<std::array<long, 3>, std::vector<FaceRef>> byid;
  for (std::size_t s = 0; s < tets.size(); ++s) {
    for (int k = 0; k < 4; ++k) {
      std::vector<std::pair<long, int>> f;
      for (int i = 0; i < 4; ++i) {
        if (i != k) f.push_back({tets[s].verts[i], i});
      }
      std::sort(f.begin(), f.end());
      byid[{f[0].first, f[1].first, f[2].first}].push_back(
          FaceRef{static_cast<int>(s), {f[0].second, f[1].second, f[2].second}});
    }
  }
  std::vector<Pairing> out;
  for (const auto& [ids, faces] : byid) {
    if (faces.size() == 2) out.push_back({faces[0], faces[1]});
  }
  return out;
}

NormalizedParams params_from_quadruple(const Quadruple& q, const std::optional<FieldElement>& seed_tau_t) {
  const FieldElement& z = q.z01;
  FieldElement zb = z.conj();
  if (degenerate(z) || degenerate(q.z10) || degenerate(q.z23) || degenerate(q.z32)) {
    throw Error(ErrorKind::DegenerateArgument, "quadruple value in {0, 1}");
  }
  // z23 = z (1 - z10)(tau_t - 1) / ((z - 1)(tau_t + 1))
  FieldElement R = q.z23 * (z - Rational(1)) / (z * (Rational(1) - q.z10));
  if (R.is_one()) throw Error(ErrorKind::InconsistentStructure, "quadruple forces an infinite height");
  FieldElement tau_t = (R + Rational(1)) / (Rational(1) - R);
  if (seed_tau_t && *seed_tau_t != tau_t) {
    throw Error(ErrorKind::InconsistentStructure, "seed height disagrees with the quadruple");
  }
  FieldElement tau_s = Rational(1) + q.z10 * (tau_t - Rational(1)) / zb;
  NormalizedParams p{z, tau_s, tau_t};
  if (!tau_s.is_sigma_antifixed() || !tau_t.is_sigma_antifixed()) {
    throw Error(ErrorKind::InconsistentStructure, "quadruple gives non-real heights");
  }
  if (invariants_from_params(p) != q) {
    throw Error(ErrorKind::InconsistentStructure, "quadruple is not realized by a configuration");
  }
  return p;
}

Lift PairingMap::apply(const Lift& v) const {
  Lift r;
  for (int i = 0; i < 3; ++i) r.v[i] = m[i][0] * v.v[0] + m[i][1] * v.v[1] + m[i][2] * v.v[2];
  return r;
}

namespace {

using Mat = std::array<std::array<FieldElement, 3>, 3>;

Mat mat_mul(const Mat& a, const Mat& b) {
  Mat r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  }
  return r;
}

// Inverse via the adjugate; NotGeneric when singular.
Mat mat_inv(const Mat& a) {
  Mat adj;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj[i][j] = a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
    }
  }
  FieldElement det = a[0][0] * adj[0][0] + a[0][1] * adj[1][0] + a[0][2] * adj[2][0];
  if (det.is_zero()) throw Error(ErrorKind::NotGeneric, "lifts are linearly dependent");
  for (auto& row : adj) {
    for (auto& x : row) x = x / det;
  }
  return adj;
}

}  // namespace

PairingMap PairingMap::inverse() const { return PairingMap{mat_inv(m)}; }

PairingMap operator*(const PairingMap& a, const PairingMap& b) { return PairingMap{mat_mul(a.m, b.m)}; }

PairingMap side_pairing(const std::array<Point, 3>& src, const std::array<Point, 3>& dst, const NumberField& field) {
  std::array<Lift, 3> s, d;
  for (int k = 0; k < 3; ++k) {
    s[k] = lift_point(src[k], field);
    d[k] = lift_point(dst[k], field);
  }
  auto ratio = [&](int i, int j) {
    FieldElement num = herm(s[i], s[j]), den = herm(d[i], d[j]);
    if (num.is_zero() || den.is_zero()) throw Error(ErrorKind::NotGeneric, "repeated point in face");
    return num / den;
  };
  FieldElement r01 = ratio(0, 1), r12 = ratio(1, 2), r20 = ratio(2, 0);
  // M d-lifts scaled by lambda; <M s_i, M s_j> = mu <s_i, s_j> forces
  // lambda_1 = mu conj(r01), lambda_2 = mu r20, mu = r12 / conj(r01 r20).
  FieldElement mu = r12 / (r01 * r20).conj();
  if (!mu.is_sigma_fixed()) throw Error(ErrorKind::CartanMismatch, "faces have different Cartan invariants");
  std::array<FieldElement, 3> lambda{field.one(), mu * r01.conj(), mu * r20};
  Mat S, D;
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) {
      S[i][k] = s[k].v[i];
      D[i][k] = d[k].v[i] * lambda[k];
    }
  }
  return PairingMap{mat_mul(D, mat_inv(S))};
}

bool preserves_form(const PairingMap& m) {
  std::array<Lift, 3> cols;
  for (int k = 0; k < 3; ++k) cols[k] = Lift{{m.m[0][k], m.m[1][k], m.m[2][k]}};
  FieldElement mu = herm(cols[0], cols[2]);
  if (mu.is_zero() || !mu.is_sigma_fixed()) return false;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      FieldElement expect = (i + j == 2) ? mu : mu.field().zero();
      if (herm(cols[i], cols[j]) != expect) return false;
    }
  }
  return true;
}

Point point_from_lift(const Lift& v) {
  if (!herm(v, v).is_zero()) throw Error(ErrorKind::InconsistentStructure, "vector is not null");
  if (v.v[2].is_zero()) {
    if (v.v[0].is_zero()) throw Error(ErrorKind::InconsistentStructure, "zero vector");
    return Point::at_infinity();
  }
  FieldElement z = v.v[1] / v.v[2];
  FieldElement h = Rational(2) * (v.v[0] / v.v[2]) + z * z.conj();
  return Point::from_zh(z, h);
}

Triangulation develop(const Triangulation& t, const std::optional<FieldElement>& seed_t) {
  Triangulation out = t;
  const std::size_t n = t.tets.size();
  std::vector<std::optional<std::array<Point, 4>>> own(n);
  auto own_points = [&](std::size_t s) -> const std::array<Point, 4>& {
    if (!own[s]) own[s] = normalized_points(params_from_quadruple(t.tets[s].q));
    return *own[s];
  };
  std::vector<bool> placed(n, false);
  const std::vector<Pairing> ps = t.pairings.value_or(std::vector<Pairing>{});
  std::optional<FieldElement> seed_tau;
  if (seed_t) {
    auto i = t.field.sqrt_minus_one();
    if (!i) throw Error(ErrorKind::FieldLacksI, "seed height needs i in the field");
    seed_tau = *i * *seed_t;
  }
  for (std::size_t root = 0; root < n; ++root) {
    if (placed[root]) continue;
    out.tets[root].points = normalized_points(params_from_quadruple(t.tets[root].q, root == 0 ? seed_tau : std::nullopt));
    placed[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t s = queue.front();
      queue.pop_front();
      for (const auto& p : ps) {
        for (int side = 0; side < 2; ++side) {
          const FaceRef& from = side == 0 ? p.face : p.mate;
          const FaceRef& to = side == 0 ? p.mate : p.face;
          if (static_cast<std::size_t>(from.tet) != s || !valid_face(to, n) || placed[to.tet]) continue;
          const auto& mine = own_points(to.tet);
          const auto& known = *out.tets[s].points;
          std::array<Point, 3> src, dst;
          for (int k = 0; k < 3; ++k) {
            src[k] = mine[to.v[k]];
            dst[k] = known[from.v[k]];
          }
          PairingMap m;
          try {
            m = side_pairing(src, dst, t.field);
          } catch (const Error& e) {
            if (e.kind() == ErrorKind::CartanMismatch) {
              throw Error(ErrorKind::InconsistentStructure, "glued faces of tets " + std::to_string(s) + " and " +
                                                                std::to_string(to.tet) + " have different shapes");
            }
            throw;
          }
          std::array<Point, 4> pts;
          for (int k = 0; k < 3; ++k) pts[to.v[k]] = dst[k];
          int r = remaining(to.v);
          pts[r] = point_from_lift(m.apply(lift_point(mine[r], t.field)));
          if (cross_ratios(pts, t.field) != t.tets[to.tet].q) {
            throw Error(ErrorKind::InconsistentStructure, "development contradicts tet " + std::to_string(to.tet));
          }
          out.tets[to.tet].points = pts;
          placed[to.tet] = true;
          queue.push_back(to.tet);
        }
      }
    }
  }
  return out;
}

namespace {

void require_generic_subsets(const std::vector<Point>& u, const NumberField& field) {
  for (std::size_t skip = 0; skip < u.size(); ++skip) {
    std::vector<Point> sub;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (i != skip) sub.push_back(u[i]);
    }
    if (!is_generic(sub, field)) throw Error(ErrorKind::NotGeneric, "points are not in general position");
  }
}

TetRecord sub_tet(const std::array<Point, 5>& u, std::array<long, 4> ids, int sign, const NumberField& field) {
  std::array<Point, 4> pts;
  for (int k = 0; k < 4; ++k) pts[k] = u[ids[k]];
  return TetRecord::from_points(ids, pts, field, sign);
}

}  // namespace

PachnerSides pachner_23(const std::array<Point, 5>& u, const NumberField& field) {
  require_generic_subsets({u.begin(), u.end()}, field);
  PachnerSides s;
  s.before = {sub_tet(u, {0, 1, 2, 3}, 1, field), sub_tet(u, {0, 1, 2, 4}, -1, field)};
  s.after = {sub_tet(u, {0, 1, 3, 4}, -1, field), sub_tet(u, {0, 2, 3, 4}, 1, field),
             sub_tet(u, {1, 2, 3, 4}, -1, field)};
  return s;
}

PachnerSides pachner_32(const std::array<Point, 5>& u, const NumberField& field) {
  PachnerSides s = pachner_23(u, field);
  std::swap(s.before, s.after);
  return s;
}

PachnerSides pachner_14(const std::array<Point, 4>& base, const Point& new_point, const NumberField& field) {
  std::array<Point, 5> u{base[0], base[1], base[2], base[3], new_point};
  require_generic_subsets({u.begin(), u.end()}, field);
  PachnerSides s;
  s.before = {sub_tet(u, {0, 1, 2, 3}, 1, field)};
  s.after = {sub_tet(u, {0, 1, 2, 4}, 1, field), sub_tet(u, {0, 1, 3, 4}, -1, field),
             sub_tet(u, {0, 2, 3, 4}, 1, field), sub_tet(u, {1, 2, 3, 4}, -1, field)};
  return s;
}

bool move_compatibility(const PachnerSides& s) {
  std::map<std::set<long>, std::pair<const TetRecord*, CrossRatioTable>> bysub;
  for (const auto* side : {&s.before, &s.after}) {
    for (const auto& t : *side) bysub.insert_or_assign({t.verts.begin(), t.verts.end()}, std::pair(&t, CrossRatioTable(t.q)));
  }
  if (bysub.size() != 5) return false;
  auto X = [&](long i, long j, long k, long l) {
    const auto& [t, table] = bysub.at({i, j, k, l});
    auto loc = [&](long id) {
      return static_cast<int>(std::find(t->verts.begin(), t->verts.end(), id) - t->verts.begin());
    };
    return table.X(loc(i), loc(j), loc(k), loc(l));
  };
  std::array<long, 5> p{0, 1, 2, 3, 4};
  do {
    long i = p[0], j = p[1], k = p[2], l = p[3], m = p[4];
    if (X(i, j, k, l) != X(i, j, k, m) * X(i, j, m, l)) return false;
    if (X(i, j, k, l) * X(l, j, i, k) * X(k, j, l, i) != X(i, m, k, l) * X(l, m, i, k) * X(k, m, l, i)) return false;
  } while (std::next_permutation(p.begin(), p.end()));
  return true;
}

}  // namespace crb
