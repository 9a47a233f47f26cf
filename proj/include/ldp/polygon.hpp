#pragma once

#include "ldp/point.hpp"

#include <vector>

namespace ldp {

// Convex lattice polygon. Vertices are strictly convex, counterclockwise,
// starting at the lexicographically smallest vertex, so equality of
// polygons is equality of vertex lists. Build through polygon_from_points.
struct LatticePolygon {
    std::vector<LatticePoint> vertices;

    friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;
};

// Convex rational polygon with the same conventions (duals live here).
struct RationalPolygon {
    std::vector<RationalPoint> vertices;

    friend bool operator==(const RationalPolygon&, const RationalPolygon&) = default;
};

enum class Position { Outside, Boundary, Interior };

// Strict convex hull (collinear points dropped), CCW, starting at the
// lexicographically smallest point. Fewer than three extreme points yield a
// list of size < 3.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> points);

// Convex hull of the input, deduplicated and canonicalized; interior and
// edge-interior points are dropped. Throws std::invalid_argument if the
// points do not span a 2-dimensional polygon.
LatticePolygon polygon_from_points(const std::vector<LatticePoint>& points);

// Validates convexity/orientation of an already-built rational vertex cycle
// and rotates it into canonical position.
RationalPolygon rational_polygon_from_cycle(std::vector<RationalPoint> vertices);

Position locate(const LatticePolygon& p, const LatticePoint& n);

bool contains_origin_interior(const LatticePolygon& p);
bool contains_origin_interior(const RationalPolygon& p);

// Origin strictly interior and every vertex primitive.
bool is_ldp(const LatticePolygon& p);

// The polygon { y : <y, x> >= -1 for all x in p }. Its vertices are the
// edge functionals of p. Requires the origin strictly interior.
RationalPolygon dual(const LatticePolygon& p);
RationalPolygon dual(const RationalPolygon& p);

// Twice the Euclidean area, exact (shoelace).
Int normalized_volume(const LatticePolygon& p);
Rat normalized_volume(const RationalPolygon& p);

// All lattice points of p including the boundary, sorted lexicographically.
std::vector<LatticePoint> lattice_points(const LatticePolygon& p);

// Piecewise linear on the spanning fan of p: 0 at the origin, -1 on the
// boundary of p, linear on each cone. Defined on all of Z^2 by linear
// extension. Requires the origin strictly interior.
Rat kappa(const LatticePolygon& p, const LatticePoint& n);

// Lattice polygon whose dual is again a lattice polygon.
bool is_reflexive(const LatticePolygon& p);

RationalPolygon to_rational(const LatticePolygon& p);
bool is_lattice(const RationalPolygon& p);
LatticePolygon to_lattice(const RationalPolygon& p);

LatticePolygon apply_unimodular(const Mat2& m, const LatticePolygon& p);

}  // namespace ldp
