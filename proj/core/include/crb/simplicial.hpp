#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "crb/crgeom.hpp"
#include "crb/prebloch.hpp"

namespace crb {

// Ordered tetrahedron of a (signed) chain. Local vertex k carries the global
// id verts[k]; when points are present, points[k] realizes it.
struct TetRecord {
  std::array<long, 4> verts{0, 1, 2, 3};
  Quadruple q;
  std::optional<std::array<Point, 4>> points;
  int sign = 1;

  // Geometric record; cross-ratios computed from the points.
  static TetRecord from_points(const std::array<long, 4>& verts, const std::array<Point, 4>& pts,
                               const NumberField& field, int sign = 1);
  friend bool operator==(const TetRecord& a, const TetRecord& b);
};

// Triangle of tetrahedron `tet` with local vertices v, in this order.
struct FaceRef {
  int tet = 0;
  std::array<int, 3> v{0, 1, 2};
  friend bool operator==(const FaceRef& a, const FaceRef& b) { return a.tet == b.tet && a.v == b.v; }
};

// face.v[k] is glued to mate.v[k].
struct Pairing {
  FaceRef face, mate;
  friend bool operator==(const Pairing& a, const Pairing& b) { return a.face == b.face && a.mate == b.mate; }
};

struct Triangulation {
  NumberField field{NumberField::rationals()};
  std::vector<TetRecord> tets;
  // Absent when the source gives no gluing data at all.
  std::optional<std::vector<Pairing>> pairings;

  friend bool operator==(const Triangulation& a, const Triangulation& b);
};

struct CheckLine {
  enum class Status { Pass, Fail, Open };
  std::string id;
  Status status = Status::Pass;
  std::string witness;
};

std::string status_name(CheckLine::Status s);

struct ValidationReport {
  std::vector<CheckLine> lines;
  // No line failed; open lines do not count.
  bool ok() const;
  std::string to_string() const;
};

// Per tetrahedron: values avoid {0, 1}, the three opposite-edge relations
// z_ij z_ji = conj(z_kl z_lk), similarity closure, and agreement with the
// points when present. Per pairing: well-formed, involutive use of faces and
// equal face invariants. Per edge class: product of cross-ratios around the
// edge, or "open" when the cycle reaches an unpaired face.
ValidationReport validate_structure(const Triangulation& t);

// sum_s sign_s ([z01] + [z10] + [z23] + [z32]).
PreBlochElement beta_triangulation(const Triangulation& t);

// Every face of the signed chain is paired exactly once, and each pair
// cancels: opposite signs in the boundary, equal Cartan tangents.
// MissingPairings when the triangulation carries no gluing data.
bool boundary_check(const Triangulation& t);

// Faces with the same set of vertex ids are paired when exactly two carry
// that set.
std::vector<Pairing> pair_by_vertex_ids(const std::vector<TetRecord>& tets);

// Points for every tetrahedron, first tetrahedron of each component in the
// normalized position (infinity, 0, (1, t), (z, s|z|^2)), the rest developed
// across pairings. seed_t places vertex 2 only when the data leave t free;
// otherwise it must agree. InconsistentStructure when propagation
// contradicts a stored quadruple.
Triangulation develop(const Triangulation& t, const std::optional<FieldElement>& seed_t = std::nullopt);

// (z, tau_s, tau_t) recovered from a quadruple.
NormalizedParams params_from_quadruple(const Quadruple& q, const std::optional<FieldElement>& seed_tau_t = std::nullopt);

// Projective unitary map (up to scalar) sending src[k] to dst[k].
struct PairingMap {
  std::array<std::array<FieldElement, 3>, 3> m;
  Lift apply(const Lift& v) const;
  PairingMap inverse() const;
  friend PairingMap operator*(const PairingMap& a, const PairingMap& b);
};

// CartanMismatch when the Cartan tangents differ, NotGeneric for degenerate
// triples.
PairingMap side_pairing(const std::array<Point, 3>& src, const std::array<Point, 3>& dst, const NumberField& field);
// M^* J M = mu J for a sigma-fixed mu.
bool preserves_form(const PairingMap& m);
// Point of the null line through v; InconsistentStructure off the null cone.
Point point_from_lift(const Lift& v);

// The two sides of a 2-3 move on u0..u4 (u0u1u2 the shared face):
//   before: [u0u1u2u3] - [u0u1u2u4]
//   after: -[u0u1u3u4] + [u0u2u3u4] - [u1u2u3u4]
// Vertex ids are 0..4. NotGeneric unless every 4-subset is generic.
struct PachnerSides {
  std::vector<TetRecord> before, after;
};
PachnerSides pachner_23(const std::array<Point, 5>& u, const NumberField& field);
// Inverse of pachner_23: before/after swapped.
PachnerSides pachner_32(const std::array<Point, 5>& u, const NumberField& field);
// [u0u1u2u3] = [u0u1u2u4] - [u0u1u3u4] + [u0u2u3u4] - [u1u2u3u4].
PachnerSides pachner_14(const std::array<Point, 4>& u, const Point& new_point, const NumberField& field);

// For the tetrahedra of a move on five points (all 4-subsets present across
// both sides): X(ijkl) = X(ijkm) X(ijml) and
// X(ijkl) X(ljik) X(kjli) = X(imkl) X(lmik) X(kmli), exactly, for all
// distinct i, j, k, l, m.
bool move_compatibility(const PachnerSides& s);

// Sum of sign * beta over a list of records.
PreBlochElement beta_of(const std::vector<TetRecord>& tets);

}  // namespace crb
