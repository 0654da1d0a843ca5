#include "crbcli/moves.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "crb/errors.hpp"

namespace crb::cli {

namespace {

using Ids = std::array<long, 4>;

int remaining(const std::array<int, 3>& f) { return 6 - f[0] - f[1] - f[2]; }

// Sign of the permutation taking the rank order to v.
int rank_parity(const Ids& v, const std::vector<long>& order) {
  std::array<long, 4> r;
  for (int k = 0; k < 4; ++k) r[k] = std::find(order.begin(), order.end(), v[k]) - order.begin();
  int inv = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) inv += r[i] > r[j];
  }
  return inv % 2 ? -1 : 1;
}

long fresh_id(const Triangulation& t) {
  long m = -1;
  for (const auto& s : t.tets) m = std::max(m, *std::max_element(s.verts.begin(), s.verts.end()));
  return m + 1;
}

// Local move output relabeled: index k of the 5-point formula becomes ids[k].
std::vector<TetRecord> relabel(const std::vector<TetRecord>& side, const std::array<long, 5>& ids, int eps) {
  std::vector<TetRecord> out = side;
  for (auto& s : out) {
    for (auto& v : s.verts) v = ids[v];
    s.sign *= eps;
  }
  return out;
}

// Face of one of `tets` (indices offset + k) carrying ids f in this order.
std::optional<FaceRef> locate(const std::vector<TetRecord>& tets, std::size_t offset, const std::array<long, 3>& f,
                              std::size_t skip = SIZE_MAX) {
  for (std::size_t k = 0; k < tets.size(); ++k) {
    if (k == skip) continue;
    FaceRef r{static_cast<int>(offset + k), {0, 0, 0}};
    bool ok = true;
    for (int j = 0; j < 3 && ok; ++j) {
      auto it = std::find(tets[k].verts.begin(), tets[k].verts.end(), f[j]);
      ok = it != tets[k].verts.end();
      if (ok) r.v[j] = static_cast<int>(it - tets[k].verts.begin());
    }
    if (ok) return r;
  }
  return std::nullopt;
}

// Rebuilds the triangulation with `removed` replaced by `added`. ids_of maps
// a removed tet's local vertex to its id in the new labeling; pairings for
// which drop() holds are discarded.
template <class IdsOf, class Drop>
Triangulation splice(const Triangulation& t, const std::set<int>& removed, const std::vector<TetRecord>& added,
                     IdsOf ids_of, Drop drop) {
  Triangulation out;
  out.field = t.field;
  std::map<int, int> index;
  for (std::size_t s = 0; s < t.tets.size(); ++s) {
    if (removed.count(static_cast<int>(s))) continue;
    index[static_cast<int>(s)] = static_cast<int>(out.tets.size());
    out.tets.push_back(t.tets[s]);
  }
  const std::size_t offset = out.tets.size();
  out.tets.insert(out.tets.end(), added.begin(), added.end());

  auto map_face = [&](const FaceRef& f) -> FaceRef {
    if (!removed.count(f.tet)) return FaceRef{index.at(f.tet), f.v};
    std::array<long, 3> ids;
    for (int k = 0; k < 3; ++k) ids[k] = ids_of(f.tet, f.v[k]);
    auto r = locate(added, offset, ids);
    if (!r) throw Error(ErrorKind::InconsistentStructure, "outer face lost by the move");
    return *r;
  };
  std::vector<Pairing> ps;
  for (std::size_t i = 0; i < t.pairings->size(); ++i) {
    const Pairing& p = (*t.pairings)[i];
    if (drop(i, p)) continue;
    ps.push_back({map_face(p.face), map_face(p.mate)});
  }
  // Interior faces of the new star, glued by ids.
  for (std::size_t a = 0; a < added.size(); ++a) {
    for (int omit = 3; omit >= 0; --omit) {
      std::array<int, 3> v;
      for (int k = 0, j = 0; k < 4; ++k) {
        if (k != omit) v[j++] = k;
      }
      std::array<long, 3> ids{added[a].verts[v[0]], added[a].verts[v[1]], added[a].verts[v[2]]};
      auto mate = locate(added, offset, ids, a);
      if (mate && static_cast<std::size_t>(mate->tet) > offset + a) {
        ps.push_back({FaceRef{static_cast<int>(offset + a), v}, *mate});
      }
    }
  }
  out.pairings = ps;
  return out;
}

Point map_point(const PairingMap& m, const Point& p, const NumberField& f) {
  return point_from_lift(m.apply(lift_point(p, f)));
}

}  // namespace

Triangulation with_points(const Triangulation& t) {
  bool complete = std::all_of(t.tets.begin(), t.tets.end(), [](const TetRecord& s) { return s.points.has_value(); });
  if (complete) return t;
  Triangulation d;
  try {
    d = develop(t);
  } catch (const Error& e) {
    throw Error(ErrorKind::MissingGeometry, std::string("cannot develop the triangulation: ") + e.what());
  }
  Triangulation out = t;
  for (std::size_t s = 0; s < t.tets.size(); ++s) {
    if (!out.tets[s].points) out.tets[s].points = d.tets[s].points;
  }
  return out;
}

Triangulation apply_move_23(const Triangulation& t0, std::size_t pairing) {
  if (!t0.pairings) throw Error(ErrorKind::MissingGeometry, "2-3 move needs pairings");
  if (pairing >= t0.pairings->size()) {
    throw Error(ErrorKind::Parse, "no pairing " + std::to_string(pairing));
  }
  const Triangulation t = with_points(t0);
  const Pairing& p = (*t.pairings)[pairing];
  const int a = p.face.tet, b = p.mate.tet;
  if (a == b) throw Error(ErrorKind::InconsistentStructure, "2-3 move needs two distinct tetrahedra");
  const TetRecord& A = t.tets[a];
  const TetRecord& B = t.tets[b];
  const int ra = remaining(p.face.v), rb = remaining(p.mate.v);

  // New labeling of B: the shared face takes A's ids.
  std::array<long, 3> shared;
  for (int k = 0; k < 3; ++k) shared[k] = A.verts[p.face.v[k]];
  long apex_a = A.verts[ra], apex_b = B.verts[rb];
  if (apex_b == apex_a || std::find(shared.begin(), shared.end(), apex_b) != shared.end()) apex_b = fresh_id(t);
  Ids b_ids;
  for (int k = 0; k < 3; ++k) b_ids[p.mate.v[k]] = shared[k];
  b_ids[rb] = apex_b;

  std::vector<long> order(shared.begin(), shared.end());
  std::sort(order.begin(), order.end());
  order.push_back(std::min(apex_a, apex_b));
  order.push_back(std::max(apex_a, apex_b));
  const int ea = A.sign * rank_parity(A.verts, order), eb = B.sign * rank_parity(b_ids, order);
  if (ea != -eb) throw Error(ErrorKind::InconsistentStructure, "glued tetrahedra induce the same orientation");
  const int eps = apex_a < apex_b ? ea : eb;

  std::array<Point, 3> src, dst;
  for (int k = 0; k < 3; ++k) {
    src[k] = (*B.points)[p.mate.v[k]];
    dst[k] = (*A.points)[p.face.v[k]];
  }
  PairingMap m = side_pairing(src, dst, t.field);
  std::array<Point, 5> u;
  auto put = [&](long id, const Point& x) { u[std::find(order.begin(), order.end(), id) - order.begin()] = x; };
  for (int k = 0; k < 4; ++k) put(A.verts[k], (*A.points)[k]);
  put(apex_b, map_point(m, (*B.points)[rb], t.field));

  std::array<long, 5> ids;
  std::copy(order.begin(), order.end(), ids.begin());
  auto added = relabel(pachner_23(u, t.field).after, ids, eps);
  return splice(
      t, {a, b}, added, [&](int s, int v) { return s == a ? A.verts[v] : b_ids[v]; },
      [&](std::size_t i, const Pairing&) { return i == pairing; });
}

Triangulation apply_move_32(const Triangulation& t0, std::size_t simplex) {
  if (!t0.pairings) throw Error(ErrorKind::MissingGeometry, "3-2 move needs pairings");
  if (simplex >= t0.tets.size()) throw Error(ErrorKind::Parse, "no tetrahedron " + std::to_string(simplex));
  const Triangulation t = with_points(t0);
  const auto& ps = *t.pairings;
  const int s1 = static_cast<int>(simplex);
  const TetRecord& T1 = t.tets[s1];

  // Partner across face f of tet s with matching ids, if any.
  auto across = [&](int s, const std::array<int, 3>& f) -> std::optional<std::pair<FaceRef, FaceRef>> {
    for (const auto& p : ps) {
      for (int side = 0; side < 2; ++side) {
        const FaceRef& from = side ? p.mate : p.face;
        const FaceRef& to = side ? p.face : p.mate;
        if (from.tet != s || std::set<int>(from.v.begin(), from.v.end()) != std::set<int>(f.begin(), f.end())) continue;
        for (int k = 0; k < 3; ++k) {
          if (t.tets[from.tet].verts[from.v[k]] != t.tets[to.tet].verts[to.v[k]]) return std::nullopt;
        }
        return std::pair{from, to};
      }
    }
    return std::nullopt;
  };

  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      std::array<int, 2> rest;
      for (int k = 0, n = 0; k < 4; ++k) {
        if (k != i && k != j) rest[n++] = k;
      }
      auto g2 = across(s1, {i, j, rest[0]});
      auto g3 = across(s1, {i, j, rest[1]});
      if (!g2 || !g3) continue;
      const int s2 = g2->second.tet, s3 = g3->second.tet;
      if (s2 == s1 || s3 == s1 || s2 == s3) continue;
      const long x = T1.verts[i], y = T1.verts[j];
      std::set<long> all;
      for (int s : {s1, s2, s3}) all.insert(t.tets[s].verts.begin(), t.tets[s].verts.end());
      if (all.size() != 5) continue;
      // T2 and T3 must meet along their faces through x, y.
      const TetRecord& T2 = t.tets[s2];
      std::array<int, 3> f23{};
      int n = 0;
      for (int k = 0; k < 4; ++k) {
        long id = T2.verts[k];
        if (id == x || id == y || !std::count(T1.verts.begin(), T1.verts.end(), id)) f23[n++] = k;
      }
      auto g23 = n == 3 ? across(s2, f23) : std::nullopt;
      if (!g23 || g23->second.tet != s3) continue;

      std::vector<long> order;
      for (long id : all) {
        if (id != x && id != y) order.push_back(id);
      }
      order.push_back(std::min(x, y));
      order.push_back(std::max(x, y));
      // Expected coefficients -e, +e, -e for the stars missing u2, u1, u0.
      int eps = 0;
      for (int s : {s1, s2, s3}) {
        const auto& v = t.tets[s].verts;
        int missing = 0;
        for (int k = 0; k < 3; ++k) {
          if (!std::count(v.begin(), v.end(), order[k])) missing = k;
        }
        int e = t.tets[s].sign * rank_parity(v, order) * (missing == 1 ? 1 : -1);
        if (eps != 0 && e != eps) throw Error(ErrorKind::InconsistentStructure, "ring around the edge is not oriented");
        eps = e;
      }

      std::map<long, Point> pts;
      auto add = [&](long id, const Point& q) {
        auto [it, fresh] = pts.emplace(id, q);
        if (!fresh && it->second != q) {
          throw Error(ErrorKind::InconsistentStructure, "edge ring does not close up geometrically");
        }
      };
      for (int k = 0; k < 4; ++k) add(T1.verts[k], (*T1.points)[k]);
      for (const auto& g : {*g2, *g3}) {
        const TetRecord& T = t.tets[g.second.tet];
        std::array<Point, 3> src, dst;
        for (int k = 0; k < 3; ++k) {
          src[k] = (*T.points)[g.second.v[k]];
          dst[k] = (*T1.points)[g.first.v[k]];
        }
        PairingMap m = side_pairing(src, dst, t.field);
        for (int k = 0; k < 4; ++k) add(T.verts[k], map_point(m, (*T.points)[k], t.field));
      }
      std::array<Point, 5> u;
      std::array<long, 5> ids;
      for (int k = 0; k < 5; ++k) {
        ids[k] = order[k];
        u[k] = pts.at(order[k]);
      }
      auto added = relabel(pachner_32(u, t.field).after, ids, eps);
      auto inner = [&](const FaceRef& f) {
        const auto& v = t.tets[f.tet].verts;
        int hits = 0;
        for (int k = 0; k < 3; ++k) hits += v[f.v[k]] == x || v[f.v[k]] == y;
        return hits == 2;
      };
      std::set<int> removed{s1, s2, s3};
      return splice(
          t, removed, added, [&](int s, int v) { return t.tets[s].verts[v]; },
          [&](std::size_t, const Pairing& p) {
            return removed.count(p.face.tet) && removed.count(p.mate.tet) && inner(p.face) && inner(p.mate);
          });
    }
  }
  throw Error(ErrorKind::InconsistentStructure,
              "tet " + std::to_string(simplex) + " has no edge shared by exactly three glued tetrahedra");
}

Triangulation apply_move_14(const Triangulation& t0, std::size_t simplex, const Point& new_point) {
  if (simplex >= t0.tets.size()) throw Error(ErrorKind::Parse, "no tetrahedron " + std::to_string(simplex));
  Triangulation t = t0.tets[simplex].points ? t0 : with_points(t0);
  const TetRecord& T = t.tets[simplex];
  std::vector<long> order(T.verts.begin(), T.verts.end());
  std::sort(order.begin(), order.end());
  const long apex = fresh_id(t);
  order.push_back(apex);
  const int eps = T.sign * rank_parity(T.verts, order);

  std::array<Point, 4> base;
  for (int k = 0; k < 4; ++k) base[std::find(order.begin(), order.end(), T.verts[k]) - order.begin()] = (*T.points)[k];
  std::array<long, 5> ids;
  std::copy(order.begin(), order.end(), ids.begin());
  auto added = relabel(pachner_14(base, new_point, t.field).after, ids, eps);
  if (!t.pairings) t.pairings = std::vector<Pairing>{};
  return splice(
      t, {static_cast<int>(simplex)}, added, [&](int s, int v) { return t.tets[s].verts[v]; },
      [](std::size_t, const Pairing&) { return false; });
}

}  // namespace crb::cli
