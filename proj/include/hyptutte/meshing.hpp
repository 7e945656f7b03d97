#pragma once

// Builtin quotient triangulation of the fundamental polygon and midpoint
// subdivision with deck-label propagation.

#include "hyptutte/gmap.hpp"

namespace hyptutte {

// Triangulates the quotient of the fundamental 4g-gon: cone to the center
// with side midpoints inserted, then one barycentric round, then boundary
// gluing by the side pairings. Result is simplicial with identity face
// cocycles; 48g faces (96 at genus 2).
GeodesicMapping builtin_mesh(std::shared_ptr<const SurfaceGroup> group);

// 1->4 midpoint subdivision. New vertex on an edge lifts to the geodesic
// midpoint; labels propagate so every face cocycle stays the identity.
// Throws DegenerateEdgeError if some edge length < 1e-14.
GeodesicMapping subdivide(const GeodesicMapping& m);

}  // namespace hyptutte
