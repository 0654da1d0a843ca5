#pragma once

#include "crb/simplicial.hpp"

namespace crb::cli {

// Pachner moves on a glued triangulation. New tetrahedra are appended after
// the untouched ones, listed in the order of the local move formulas, and
// pairings are carried over face by face. Missing points are filled in by
// develop (MissingGeometry if that is impossible).

// 2-3 across pairings[pairing]. The apex of the mate gets a fresh id when it
// collides with an id already used in the star. InconsistentStructure when
// the two tetrahedra induce the same orientation on the face.
Triangulation apply_move_23(const Triangulation& t, std::size_t pairing);

// 3-2 around an edge of tets[simplex] shared by exactly three tetrahedra
// glued in a ring with matching vertex ids.
Triangulation apply_move_32(const Triangulation& t, std::size_t simplex);

// 1-4 placing new_point (in the frame of tets[simplex].points) as a fresh
// vertex. NotGeneric when it breaks general position.
Triangulation apply_move_14(const Triangulation& t, std::size_t simplex, const Point& new_point);

// Points for every tetrahedron: kept where present, developed otherwise.
Triangulation with_points(const Triangulation& t);

}  // namespace crb::cli
