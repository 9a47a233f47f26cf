#pragma once

#include "ldp/polygon.hpp"

#include <vector>

namespace ldp {

// Two-dimensional cone spanned by primitive generators with det2(u1, u2) =
// V > 0 (u2 counterclockwise of u1). w is the lattice point with
// V*w = a*u1 + u2, a in [0, V); it generates the lattice points of the
// fundamental parallelogram. Unimodular cones carry (a, w) = (0, u2).
struct Cone {
    LatticePoint u1, u2;
    Int V{1}, a{0};
    LatticePoint w;

    friend bool operator==(const Cone&, const Cone&) = default;
};

// Boundary lattice points of the sail of a cone, walked from u2 to u1
// (b_0 = u2, ..., b_k = u1, consecutive pairs unimodular), together with
// the edge functional m_sigma of the cone and the functionals m*_1..m*_k of
// the sail edges (integral, since the refined cones are unimodular).
struct Sail {
    std::vector<LatticePoint> boundary;
    RationalPoint m_sigma;
    std::vector<LatticePoint> functionals;

    std::size_t k() const { return functionals.size(); }
};

// Complete unimodular fan: CCW-ordered primitive rays, consecutive pairs
// spanning unimodular cones that cover the plane, with the integer a_tau
// defined per ray by v_left + v_right = a_tau * v.
struct CompleteUnimodularFan {
    std::vector<LatticePoint> rays;
    std::vector<Int> a_values;
};

// Derives (V, a, w) from primitive generators with det2(u1, u2) >= 1.
Cone cone_params(const LatticePoint& u1, const LatticePoint& u2);

// One cone per edge of the polygon, in edge order: the edge from v_i to
// v_{i+1} (CCW) gives the cone with (u1, u2) = (v_i, v_{i+1}).
std::vector<Cone> spanning_fan(const LatticePolygon& p);

// The V lattice points of the half-open fundamental parallelogram,
// floor(i*w) = ((i*a mod V)*u1 + i*u2) / V for i = 0..V-1.
std::vector<LatticePoint> parallelogram_points(const Cone& c);

Sail sail_of(const Cone& c);

// nvol of the region of conv(0, u1, u2) cut off by the sail chain, i.e. the
// shoelace sum of the cycle b_0, ..., b_k. Zero for unimodular cones and
// for collinear chains.
Int sail_complement_volume(const Cone& c);
Int sail_complement_volume(const Cone& c, const Sail& s);

// Concatenates the sail chains of the spanning fan in CCW order into a
// complete unimodular fan and computes every a_tau.
CompleteUnimodularFan refined_fan(const LatticePolygon& p);

namespace detail {

// The two production routes for the sail chain; sail_of picks by volume.
// The hull route realizes the definition directly, the recursive route
// rebuilds the chain along the volume-reducing cone operations.
std::vector<LatticePoint> sail_chain_hull(const Cone& c);
std::vector<LatticePoint> sail_chain_recursive(const Cone& c);

}  // namespace detail

}  // namespace ldp
